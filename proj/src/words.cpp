#include "oreslice/words.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "oreslice/error.hpp"

namespace oreslice {

  namespace {
    bool is_digit(char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    }

    bool is_sep(char c) {
      return c == '*' || std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    std::size_t read_digits(std::string_view text,
                            std::size_t&     pos,
                            std::size_t      start) {
      if (pos >= text.size() || !is_digit(text[pos])) {
        throw ParseError("expected digits", pos);
      }
      std::size_t value = 0;
      while (pos < text.size() && is_digit(text[pos])) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > 1'000'000) {
          throw ParseError("number too large", start);
        }
        ++pos;
      }
      return value;
    }
  }  // namespace

  Word operator*(Word const& lhs, Word const& rhs) {
    Word result = lhs;
    result.letters.insert(
        result.letters.end(), rhs.letters.begin(), rhs.letters.end());
    return result;
  }

  Alphabet Alphabet::named(std::size_t rank) {
    if (rank == 0 || rank > 26) {
      throw Error("named alphabet rank must lie in 1..26");
    }
    return Alphabet(Style::named, rank);
  }

  Alphabet Alphabet::indexed(std::size_t bound) {
    return Alphabet(Style::indexed, bound);
  }

  bool Alphabet::contains(Generator const& g) const {
    if (_style == Style::named) {
      return g.name.size() == 1 && g.index == 0 && g.name[0] >= 'a'
             && static_cast<std::size_t>(g.name[0] - 'a') < _rank;
    }
    return g.name == "x" && (_rank == 0 || g.index < _rank);
  }

  std::size_t Alphabet::ordinal(Generator const& g) const {
    if (!contains(g)) {
      throw Error("generator " + print_word(letter_word(g))
                  + " is not in the alphabet");
    }
    return _style == Style::named ? static_cast<std::size_t>(g.name[0] - 'a')
                                  : g.index;
  }

  Generator Alphabet::generator(std::size_t ordinal) const {
    if (_style == Style::named) {
      if (ordinal >= _rank) {
        throw Error("generator ordinal out of range");
      }
      return Generator{std::string(1, static_cast<char>('a' + ordinal)), 0};
    }
    if (_rank != 0 && ordinal >= _rank) {
      throw Error("generator ordinal out of range");
    }
    return Generator{"x", ordinal};
  }

  Word parse_word(std::string_view text, Alphabet const& alphabet) {
    Word        w;
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (is_sep(text[pos])) {
        ++pos;
        continue;
      }
      std::size_t const start = pos;
      char const        c     = text[pos];
      Generator         gen;
      int               sign    = 1;
      bool              indexed = false;
      if (c == 'x' && pos + 1 < text.size() && is_digit(text[pos + 1])) {
        ++pos;
        gen     = Generator{"x", read_digits(text, pos, start)};
        indexed = true;
      } else if (c >= 'a' && c <= 'z') {
        gen = Generator{std::string(1, c), 0};
        ++pos;
      } else if (c >= 'A' && c <= 'Z') {
        gen  = Generator{std::string(1, static_cast<char>(c - 'A' + 'a')), 0};
        sign = -1;
        ++pos;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
      }
      if (indexed != (alphabet.style() == Alphabet::Style::indexed)
          || !alphabet.contains(gen)) {
        throw ParseError("unknown generator '"
                             + std::string(text.substr(start, pos - start))
                             + "'",
                         start);
      }
      long power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        int power_sign = 1;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
          power_sign = text[pos] == '-' ? -1 : 1;
          ++pos;
        }
        power = power_sign * static_cast<long>(read_digits(text, pos, start));
      }
      if (pos < text.size() && !is_sep(text[pos])
          && !std::isalpha(static_cast<unsigned char>(text[pos]))) {
        throw ParseError(
            std::string("unexpected character '") + text[pos] + "'", pos);
      }
      int const exponent = power < 0 ? -sign : sign;
      for (long i = 0; i < std::labs(power); ++i) {
        w.letters.push_back(Letter{gen, exponent});
      }
    }
    return w;
  }

  std::string print_word(Word const& w) {
    std::string out;
    for (auto const& l : w.letters) {
      if (!out.empty()) {
        out += ' ';
      }
      out += l.gen.name;
      if (l.gen.name == "x") {
        out += std::to_string(l.gen.index);
      }
      if (l.exponent < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  Word letter_word(Generator const& g, int exponent) {
    return Word{{Letter{g, exponent}}};
  }

  Word free_reduce(Word const& w) {
    Word out;
    for (auto const& l : w.letters) {
      if (!out.letters.empty() && out.letters.back().gen == l.gen
          && out.letters.back().exponent == -l.exponent) {
        out.letters.pop_back();
      } else {
        out.letters.push_back(l);
      }
    }
    return out;
  }

  Word invert_word(Word const& w) {
    Word out;
    out.letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      out.letters.push_back(Letter{it->gen, -it->exponent});
    }
    return out;
  }

  Word cyclic_shift(Word const& w, std::int64_t offset) {
    if (w.empty()) {
      return w;
    }
    auto const n     = static_cast<std::int64_t>(w.size());
    auto const shift = ((offset % n) + n) % n;
    Word       out   = w;
    std::rotate(out.letters.begin(),
                out.letters.begin() + shift,
                out.letters.end());
    return out;
  }

  bool is_alternating(Word const& w, bool cyclic) {
    if (w.size() < 2 || w.size() % 2 != 0) {
      return false;
    }
    for (auto const& l : w.letters) {
      if (l.gen.name != "x") {
        return false;
      }
    }
    if (cyclic) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        auto const next = (i + 1) % w.size();
        if (w[i].gen.index % 2 == w[next].gen.index % 2) {
          return false;
        }
      }
      return true;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].gen.index % 2 != i % 2) {
        return false;
      }
    }
    return true;
  }

  Word shift_endomorphism(Word const& w, std::int64_t alpha) {
    Word out = w;
    for (auto& l : out.letters) {
      if (l.gen.name != "x") {
        throw Error("shift_endomorphism needs an indexed word");
      }
      auto const shifted = static_cast<std::int64_t>(l.gen.index) + alpha;
      if (shifted < 0) {
        throw Error("shift would make subscript of x"
                    + std::to_string(l.gen.index) + " negative");
      }
      l.gen.index = static_cast<std::size_t>(shifted);
    }
    return out;
  }

  std::vector<std::pair<Generator, std::int64_t>>
  exponent_sums(Word const& w) {
    std::map<Generator, std::int64_t> sums;
    for (auto const& l : w.letters) {
      sums[l.gen] += l.exponent;
    }
    return {sums.begin(), sums.end()};
  }

}  // namespace oreslice
