#ifndef ORESLICE_POSITIVE_HPP_
#define ORESLICE_POSITIVE_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "backend.hpp"

namespace oreslice {

  enum class RewriteStrategy { leftmost, rightmost, random };

  // Rewrites x_j x_i -> x_i x_{j+1} (i < j) until no descent remains.
  // `rng` is only consulted by RewriteStrategy::random.
  PositiveNormalForm pos_normalize(Word const&      w,
                                   RewriteStrategy  strategy = RewriteStrategy::leftmost,
                                   std::mt19937_64* rng      = nullptr);

  PositiveNormalForm pos_multiply(PositiveNormalForm const& x,
                                  PositiveNormalForm const& y);
  // y with x_j y == x, if x is left divisible by x_j.
  std::optional<PositiveNormalForm>
       pos_left_divide(std::size_t j, PositiveNormalForm const& x);
  Word pos_to_word(PositiveNormalForm const& x);

  std::string        print_positive(PositiveNormalForm const& x);
  PositiveNormalForm parse_positive(std::string_view text);

  // The positive monoid M inside F. Words with inverse letters are rejected;
  // relations are checked in F.
  class PositiveBackend final : public Backend {
   public:
    PositiveBackend();

    std::string name() const override {
      return "posmon";
    }
    Alphabet const& alphabet() const override {
      return _alphabet;
    }
    bool is_group() const override {
      return false;
    }
    Element     from_word(Word const& w) const override;
    Element     multiply(Element const& x, Element const& y) const override;
    Element     identity() const override;
    std::string key(Element const& x) const override;
    Element     from_key(std::string_view key) const override;

    std::optional<Element> left_divide(Element const& by,
                                       Element const& x) const override;
    bool                   relation_holds(Element const& a,
                                          Element const& b,
                                          Word const&    relation) const override;

   private:
    Alphabet _alphabet;
  };

}  // namespace oreslice

#endif  // ORESLICE_POSITIVE_HPP_
