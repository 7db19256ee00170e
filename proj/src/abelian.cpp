#include "oreslice/abelian.hpp"

#include <charconv>

#include "oreslice/error.hpp"

namespace oreslice {

  VectorElement zm_from_word(Word const& w, std::size_t m) {
    auto const    alph = Alphabet::named(m);
    VectorElement v{IntVector(m, 0)};
    for (auto const& l : w.letters) {
      v.t[alph.ordinal(l.gen)] += l.exponent;
    }
    return v;
  }

  std::string print_vector(IntVector const& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(v[i]);
    }
    return out + ")";
  }

  IntVector parse_vector(std::string_view text, std::size_t& pos) {
    if (pos >= text.size() || text[pos] != '(') {
      throw ParseError("expected '('", pos);
    }
    ++pos;
    IntVector v;
    while (true) {
      std::int64_t value = 0;
      auto [ptr, ec]     = std::from_chars(
          text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc()) {
        throw ParseError("expected integer", pos);
      }
      pos = static_cast<std::size_t>(ptr - text.data());
      v.push_back(value);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        return v;
      }
      throw ParseError("expected ',' or ')'", pos);
    }
  }

  AbelianBackend::AbelianBackend(std::size_t rank)
      : _rank(rank), _alphabet(Alphabet::named(rank)) {}

  std::string AbelianBackend::name() const {
    return "zm:" + std::to_string(_rank);
  }

  Element AbelianBackend::from_word(Word const& w) const {
    return zm_from_word(w, _rank);
  }

  Element AbelianBackend::multiply(Element const& x, Element const& y) const {
    auto r = std::get<VectorElement>(x);
    auto const& t = std::get<VectorElement>(y).t;
    for (std::size_t i = 0; i < _rank; ++i) {
      r.t[i] += t[i];
    }
    return r;
  }

  Element AbelianBackend::identity() const {
    return VectorElement{IntVector(_rank, 0)};
  }

  std::string AbelianBackend::key(Element const& x) const {
    return print_vector(std::get<VectorElement>(x).t);
  }

  Element AbelianBackend::from_key(std::string_view key) const {
    std::size_t pos = 0;
    auto        v   = parse_vector(key, pos);
    if (pos != key.size() || v.size() != _rank) {
      throw ParseError("malformed " + name() + " key", pos);
    }
    if (print_vector(v) != key) {
      throw Error("non-canonical " + name() + " key '" + std::string(key)
                  + "'");
    }
    return VectorElement{std::move(v)};
  }

  Element AbelianBackend::inverse(Element const& x) const {
    auto r = std::get<VectorElement>(x);
    for (auto& c : r.t) {
      c = -c;
    }
    return r;
  }

}  // namespace oreslice
