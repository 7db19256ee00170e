#ifndef ORESLICE_BACKEND_HPP_
#define ORESLICE_BACKEND_HPP_

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "element.hpp"
#include "words.hpp"

namespace oreslice {

  // Common contract for the monoid and group backends. Elements are compared
  // through their canonical keys, which are also the strings written into
  // certificates.
  class Backend {
   public:
    virtual ~Backend() = default;

    // Selector string, e.g. "zm:2", "mb:2", "f", "posmon".
    virtual std::string     name() const     = 0;
    virtual Alphabet const& alphabet() const = 0;
    virtual bool            is_group() const = 0;

    virtual Element from_word(Word const& w) const = 0;
    virtual Element multiply(Element const& x, Element const& y) const = 0;
    virtual Element identity() const                                   = 0;
    virtual std::string key(Element const& x) const                    = 0;
    // Inverse of key(); rejects strings that are not canonical.
    virtual Element from_key(std::string_view key) const = 0;

    // Throws for monoid backends.
    virtual Element inverse(Element const& x) const;

    // The element y with by * y == x, if it exists in the backend.
    virtual std::optional<Element> left_divide(Element const& by,
                                               Element const& x) const;

    // Evaluates a word over {a, b} (letters of Alphabet::named(2)) with
    // a -> `a`, b -> `b` in the ambient group and tests for the identity.
    virtual bool relation_holds(Element const& a,
                                Element const& b,
                                Word const&    relation) const;

    // Default generating set: all letters for named alphabets, x0..x_max
    // for indexed ones.
    virtual std::vector<Generator> generators(std::size_t max_index) const;

    bool is_identity(Element const& x) const {
      return key(x) == identity_key();
    }
    bool equals(Element const& x, Element const& y) const {
      return key(x) == key(y);
    }
    std::string const& identity_key() const;

    // Canonical order on keys: identity first, then lexicographic.
    bool key_less(std::string_view lhs, std::string_view rhs) const;

   private:
    mutable std::once_flag _identity_once;
    mutable std::string    _identity_key;
  };

  using BackendPtr = std::shared_ptr<Backend const>;

  // Parses "zm:<m>", "mb:<m>", "f" or "posmon".
  BackendPtr make_backend(std::string_view selector);

  struct KeyOrder {
    Backend const* backend;
    bool           operator()(std::string const& lhs,
                    std::string const& rhs) const {
      return backend->key_less(lhs, rhs);
    }
  };

}  // namespace oreslice

#endif  // ORESLICE_BACKEND_HPP_
