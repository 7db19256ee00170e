#include "oreslice/positive.hpp"

#include "oreslice/error.hpp"
#include "oreslice/thompson.hpp"

namespace oreslice {

  namespace {
    std::vector<std::size_t> positive_indices(Word const& w) {
      std::vector<std::size_t> out;
      out.reserve(w.size());
      for (auto const& l : w.letters) {
        if (l.gen.name != "x") {
          throw Error("positive monoid words use the generators x0, x1, ...");
        }
        if (l.exponent < 0) {
          throw Error("negative exponent on x" + std::to_string(l.gen.index)
                      + " in a positive monoid word");
        }
        out.push_back(l.gen.index);
      }
      return out;
    }
  }  // namespace

  PositiveNormalForm pos_normalize(Word const&      w,
                                   RewriteStrategy  strategy,
                                   std::mt19937_64* rng) {
    auto                     idx = positive_indices(w);
    std::vector<std::size_t> descents;
    while (true) {
      descents.clear();
      for (std::size_t p = 0; p + 1 < idx.size(); ++p) {
        if (idx[p] > idx[p + 1]) {
          descents.push_back(p);
        }
      }
      if (descents.empty()) {
        return PositiveNormalForm{std::move(idx)};
      }
      std::size_t p = 0;
      switch (strategy) {
        case RewriteStrategy::leftmost:
          p = descents.front();
          break;
        case RewriteStrategy::rightmost:
          p = descents.back();
          break;
        case RewriteStrategy::random: {
          if (rng == nullptr) {
            throw Error("random rewrite strategy needs a generator");
          }
          std::uniform_int_distribution<std::size_t> pick(
              0, descents.size() - 1);
          p = descents[pick(*rng)];
          break;
        }
      }
      // x_j x_i -> x_i x_{j+1}
      auto const j = idx[p];
      idx[p]       = idx[p + 1];
      idx[p + 1]   = j + 1;
    }
  }

  PositiveNormalForm pos_multiply(PositiveNormalForm const& x,
                                  PositiveNormalForm const& y) {
    auto r = y.indices;
    for (auto it = x.indices.rbegin(); it != x.indices.rend(); ++it) {
      auto        j = *it;
      std::size_t p = 0;
      while (p < r.size() && r[p] < j) {
        ++j;
        ++p;
      }
      r.insert(r.begin() + static_cast<std::ptrdiff_t>(p), j);
    }
    return PositiveNormalForm{std::move(r)};
  }

  std::optional<PositiveNormalForm>
  pos_left_divide(std::size_t j, PositiveNormalForm const& x) {
    for (std::size_t p = 0; p < x.indices.size(); ++p) {
      if (x.indices[p] == j) {
        auto r = x.indices;
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(p));
        return PositiveNormalForm{std::move(r)};
      }
      if (x.indices[p] > j) {
        return std::nullopt;
      }
      ++j;
    }
    return std::nullopt;
  }

  Word pos_to_word(PositiveNormalForm const& x) {
    Word w;
    for (auto i : x.indices) {
      w.letters.push_back(Letter{Generator{"x", i}, 1});
    }
    return w;
  }

  std::string print_positive(PositiveNormalForm const& x) {
    return x.indices.empty() ? "1" : print_word(pos_to_word(x));
  }

  PositiveNormalForm parse_positive(std::string_view text) {
    if (text == "1") {
      return {};
    }
    auto const w = parse_word(text, Alphabet::indexed());
    auto       x = PositiveNormalForm{positive_indices(w)};
    if (w.empty() || print_positive(x) != text
        || pos_normalize(w) != x) {
      throw Error("non-canonical positive monoid key '" + std::string(text)
                  + "'");
    }
    return x;
  }

  PositiveBackend::PositiveBackend() : _alphabet(Alphabet::indexed()) {}

  Element PositiveBackend::from_word(Word const& w) const {
    return pos_normalize(w);
  }

  Element PositiveBackend::multiply(Element const& x, Element const& y) const {
    return pos_multiply(std::get<PositiveNormalForm>(x),
                        std::get<PositiveNormalForm>(y));
  }

  Element PositiveBackend::identity() const {
    return PositiveNormalForm{};
  }

  std::string PositiveBackend::key(Element const& x) const {
    return print_positive(std::get<PositiveNormalForm>(x));
  }

  Element PositiveBackend::from_key(std::string_view key) const {
    return parse_positive(key);
  }

  std::optional<Element> PositiveBackend::left_divide(Element const& by,
                                                      Element const& x) const {
    auto r = std::get<PositiveNormalForm>(x);
    for (auto j : std::get<PositiveNormalForm>(by).indices) {
      auto next = pos_left_divide(j, r);
      if (!next) {
        return std::nullopt;
      }
      r = std::move(*next);
    }
    return r;
  }

  bool PositiveBackend::relation_holds(Element const& a,
                                       Element const& b,
                                       Word const&    relation) const {
    auto const a_word = pos_to_word(std::get<PositiveNormalForm>(a));
    auto const b_word = pos_to_word(std::get<PositiveNormalForm>(b));
    Word       expanded;
    for (auto const& l : relation.letters) {
      bool const is_a = l.gen.name == "a";
      if (!is_a && l.gen.name != "b") {
        throw Error("relation letters must be a or b");
      }
      auto const& base = is_a ? a_word : b_word;
      expanded         = expanded * (l.exponent > 0 ? base : invert_word(base));
    }
    return f_is_identity(f_from_word(expanded));
  }

}  // namespace oreslice
