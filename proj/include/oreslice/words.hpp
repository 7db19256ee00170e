#ifndef ORESLICE_WORDS_HPP_
#define ORESLICE_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace oreslice {

  // A generator is either a named letter ("a", index 0) or a member of the
  // indexed family ("x", index i).
  struct Generator {
    std::string name;
    std::size_t index = 0;

    auto operator<=>(Generator const&) const = default;
  };

  struct Letter {
    Generator gen;
    int       exponent = 1;  // +1 or -1

    auto operator<=>(Letter const&) const = default;
  };

  // Words only ever hold +-1 exponents; powers are expanded on parse.
  struct Word {
    std::vector<Letter> letters;

    std::size_t size() const noexcept {
      return letters.size();
    }
    bool empty() const noexcept {
      return letters.empty();
    }
    Letter const& operator[](std::size_t i) const {
      return letters[i];
    }

    auto operator<=>(Word const&) const = default;
  };

  Word operator*(Word const& lhs, Word const& rhs);

  class Alphabet {
   public:
    enum class Style { named, indexed };

    // First `rank` lowercase letters a, b, c, ...
    static Alphabet named(std::size_t rank);
    // x0, x1, ... ; `bound` == 0 means unbounded.
    static Alphabet indexed(std::size_t bound = 0);

    Style style() const noexcept {
      return _style;
    }
    std::size_t rank() const noexcept {
      return _rank;
    }

    bool        contains(Generator const& g) const;
    std::size_t ordinal(Generator const& g) const;
    Generator   generator(std::size_t ordinal) const;

   private:
    Alphabet(Style style, std::size_t rank) : _style(style), _rank(rank) {}

    Style       _style;
    std::size_t _rank;
  };

  Word        parse_word(std::string_view text, Alphabet const& alphabet);
  std::string print_word(Word const& w);

  Word letter_word(Generator const& g, int exponent = 1);
  Word free_reduce(Word const& w);
  Word invert_word(Word const& w);
  // Rotation to the left: cyclic_shift(abc, 1) == bca. Offsets wrap and may
  // be negative.
  Word cyclic_shift(Word const& w, std::int64_t offset);

  // Even length >= 2 with subscripts even, odd, even, odd, ... (linear), or
  // parities alternating around the cyclic word (cyclic).
  bool is_alternating(Word const& w, bool cyclic = false);

  // Adds `alpha` to every subscript of an indexed word.
  Word shift_endomorphism(Word const& w, std::int64_t alpha);

  // Sum of exponents of each generator, in generator order.
  std::vector<std::pair<Generator, std::int64_t>>
  exponent_sums(Word const& w);

}  // namespace oreslice

#endif  // ORESLICE_WORDS_HPP_
