#ifndef ORESLICE_ABELIAN_HPP_
#define ORESLICE_ABELIAN_HPP_

#include <string>

#include "backend.hpp"

namespace oreslice {

  VectorElement zm_from_word(Word const& w, std::size_t m);
  std::string   print_vector(IntVector const& v);
  // Parses "(t1,...,tm)" starting at `pos`, advancing it.
  IntVector parse_vector(std::string_view text, std::size_t& pos);

  class AbelianBackend final : public Backend {
   public:
    explicit AbelianBackend(std::size_t rank);

    std::string     name() const override;
    Alphabet const& alphabet() const override {
      return _alphabet;
    }
    bool is_group() const override {
      return true;
    }
    Element     from_word(Word const& w) const override;
    Element     multiply(Element const& x, Element const& y) const override;
    Element     identity() const override;
    std::string key(Element const& x) const override;
    Element     from_key(std::string_view key) const override;
    Element     inverse(Element const& x) const override;

   private:
    std::size_t _rank;
    Alphabet    _alphabet;
  };

}  // namespace oreslice

#endif  // ORESLICE_ABELIAN_HPP_
