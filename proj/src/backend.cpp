#include "oreslice/backend.hpp"

#include <charconv>

#include "oreslice/abelian.hpp"
#include "oreslice/error.hpp"
#include "oreslice/metabelian.hpp"
#include "oreslice/positive.hpp"
#include "oreslice/thompson.hpp"

namespace oreslice {

  Element Backend::inverse(Element const&) const {
    throw Error("backend " + name() + " is a monoid and has no inverses");
  }

  std::optional<Element> Backend::left_divide(Element const& by,
                                              Element const& x) const {
    return multiply(inverse(by), x);
  }

  bool Backend::relation_holds(Element const& a,
                               Element const& b,
                               Word const&    relation) const {
    Element const a_inv = inverse(a);
    Element const b_inv = inverse(b);
    Element       acc   = identity();
    for (auto const& l : relation.letters) {
      bool const is_a = l.gen.name == "a";
      if (!is_a && l.gen.name != "b") {
        throw Error("relation letters must be a or b");
      }
      Element const& factor
          = is_a ? (l.exponent > 0 ? a : a_inv) : (l.exponent > 0 ? b : b_inv);
      acc = multiply(acc, factor);
    }
    return is_identity(acc);
  }

  std::vector<Generator> Backend::generators(std::size_t max_index) const {
    std::vector<Generator> gens;
    auto const&            alph = alphabet();
    std::size_t const      count
        = alph.style() == Alphabet::Style::named ? alph.rank() : max_index + 1;
    for (std::size_t i = 0; i < count; ++i) {
      gens.push_back(alph.generator(i));
    }
    return gens;
  }

  std::string const& Backend::identity_key() const {
    std::call_once(_identity_once,
                   [this] { _identity_key = key(identity()); });
    return _identity_key;
  }

  bool Backend::key_less(std::string_view lhs, std::string_view rhs) const {
    if (lhs == rhs) {
      return false;
    }
    auto const& id = identity_key();
    if (lhs == id) {
      return true;
    }
    if (rhs == id) {
      return false;
    }
    return lhs < rhs;
  }

  BackendPtr make_backend(std::string_view selector) {
    auto rank_of = [&](std::string_view prefix) -> std::size_t {
      if (selector == prefix) {
        return 2;
      }
      auto const  digits = selector.substr(prefix.size() + 1);
      std::size_t m      = 0;
      auto [ptr, ec]
          = std::from_chars(digits.data(), digits.data() + digits.size(), m);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || m == 0
          || m > 26) {
        throw Error("bad rank in backend selector '" + std::string(selector)
                    + "'");
      }
      return m;
    };
    if (selector == "f") {
      return std::make_shared<ThompsonBackend>();
    }
    if (selector == "posmon") {
      return std::make_shared<PositiveBackend>();
    }
    if (selector == "zm" || selector.starts_with("zm:")) {
      return std::make_shared<AbelianBackend>(rank_of("zm"));
    }
    if (selector == "mb" || selector.starts_with("mb:")) {
      return std::make_shared<MetabelianBackend>(rank_of("mb"));
    }
    throw Error("unknown backend '" + std::string(selector)
                + "' (expected zm:<m>, mb:<m>, f or posmon)");
  }

}  // namespace oreslice
