#include "oreslice/folner.hpp"

#include <charconv>
#include <map>
#include <set>
#include <unordered_set>

#include "oreslice/error.hpp"

namespace oreslice {

  namespace {
    Rational ratio(std::size_t num, std::size_t den) {
      return Rational(static_cast<std::int64_t>(num),
                      static_cast<std::int64_t>(den));
    }

    FolnerReport summarize(std::size_t                  set_size,
                           std::vector<GeneratorCounts> per) {
      FolnerReport r{set_size, std::move(per), Rational(1), Rational(0)};
      for (auto const& g : r.per_generator) {
        r.min_intersection_ratio
            = std::min(r.min_intersection_ratio, g.intersection_ratio);
        r.max_symmetric_difference_ratio = std::max(
            r.max_symmetric_difference_ratio, g.symmetric_difference_ratio);
      }
      return r;
    }

    GeneratorCounts counts(std::string generator,
                           std::size_t set_size,
                           std::size_t translate_size,
                           std::size_t intersection) {
      GeneratorCounts c;
      c.generator            = std::move(generator);
      c.translate_size       = translate_size;
      c.intersection         = intersection;
      c.symmetric_difference = translate_size + set_size - 2 * intersection;
      c.intersection_ratio   = ratio(intersection, set_size);
      c.symmetric_difference_ratio = ratio(c.symmetric_difference, set_size);
      return c;
    }
  }  // namespace

  std::string print_rational(Rational const& r) {
    if (r.denominator() == 1) {
      return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/"
           + std::to_string(r.denominator());
  }

  Rational parse_rational(std::string_view text) {
    auto bad = [&] {
      return Error("cannot read '" + std::string(text) + "' as a number");
    };
    auto read_int = [&](std::string_view s) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw bad();
      }
      return v;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      auto const den = read_int(text.substr(slash + 1));
      if (den == 0) {
        throw bad();
      }
      return Rational(read_int(text.substr(0, slash)), den);
    }
    auto const dot = text.find('.');
    if (dot == std::string_view::npos) {
      return Rational(read_int(text));
    }
    auto const frac = text.substr(dot + 1);
    if (frac.size() > 15 || frac.find_first_not_of("0123456789") != std::string_view::npos) {
      throw bad();
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) {
      scale *= 10;
    }
    auto const whole_text = text.substr(0, dot);
    bool const negative   = !whole_text.empty() && whole_text[0] == '-';
    auto const whole      = whole_text.empty() || whole_text == "-"
                                ? 0
                                : read_int(whole_text);
    auto const part       = frac.empty() ? 0 : read_int(frac);
    auto const magnitude  = (negative ? -whole : whole) * scale + part;
    return Rational(negative ? -magnitude : magnitude, scale);
  }

  FolnerReport folner_ratios(Backend const&              backend,
                             std::vector<Element> const& E,
                             std::vector<Element> const& A) {
    if (E.empty()) {
      throw Error("Folner ratios need a nonempty set");
    }
    std::unordered_set<std::string> keys;
    for (auto const& e : E) {
      if (!keys.insert(backend.key(e)).second) {
        throw Error("Folner set has a repeated element " + backend.key(e));
      }
    }
    std::vector<GeneratorCounts> per;
    for (auto const& a : A) {
      std::unordered_set<std::string> translate;
      std::size_t                     hits = 0;
      for (auto const& e : E) {
        auto k = backend.key(backend.multiply(a, e));
        if (keys.count(k) != 0) {
          ++hits;
        }
        translate.insert(std::move(k));
      }
      if (translate.size() != E.size()) {
        throw VerificationError("left translation by " + backend.key(a)
                                + " is not injective");
      }
      per.push_back(counts(backend.key(a), E.size(), translate.size(), hits));
    }
    return summarize(E.size(), std::move(per));
  }

  bool check_delta(FolnerReport const& report, Rational const& delta) {
    return report.min_intersection_ratio > delta;
  }

  bool check_epsilon(FolnerReport const& report, Rational const& epsilon) {
    return report.max_symmetric_difference_ratio < epsilon;
  }

  GreedyResult greedy_folner_search(Backend const&              backend,
                                    std::vector<Element> const& A,
                                    Rational const&             epsilon,
                                    GreedyBudget                budget) {
    if (budget.max_size == 0 || budget.max_steps == 0) {
      throw Error("greedy search budget must be positive");
    }
    std::vector<std::string> a_keys;
    for (auto const& a : A) {
      a_keys.push_back(backend.key(a));
    }
    std::vector<Element>                         set{backend.identity()};
    std::unordered_set<std::string>              in_set{backend.identity_key()};
    std::vector<std::unordered_set<std::string>> translates(A.size());
    std::vector<std::size_t>                     inter(A.size(), 0);
    for (std::size_t i = 0; i < A.size(); ++i) {
      auto k = backend.key(backend.multiply(A[i], set[0]));
      inter[i] += in_set.count(k);
      translates[i].insert(std::move(k));
    }
    // Frontier elements with their translates, in canonical key order.
    std::map<std::string, Element, KeyOrder> frontier(KeyOrder{&backend});
    auto extend_frontier = [&](Element const& e) {
      for (auto const& a : A) {
        auto x = backend.multiply(a, e);
        auto k = backend.key(x);
        if (in_set.count(k) == 0) {
          frontier.emplace(std::move(k), std::move(x));
        }
      }
    };
    extend_frontier(set[0]);

    auto report_of = [&] {
      std::vector<GeneratorCounts> per;
      for (std::size_t i = 0; i < A.size(); ++i) {
        per.push_back(counts(a_keys[i], set.size(), set.size(), inter[i]));
      }
      return summarize(set.size(), std::move(per));
    };

    GreedyResult result;
    result.report = report_of();
    result.set    = set;
    result.history.emplace_back(set.size(),
                                result.report.max_symmetric_difference_ratio);
    while (true) {
      auto current = report_of();
      if (check_epsilon(current, epsilon)) {
        result.success = true;
        result.set     = set;
        result.report  = current;
        break;
      }
      if (set.size() >= budget.max_size || result.steps >= budget.max_steps
          || frontier.empty()) {
        break;
      }
      // Adding z raises |aE ∩ E| by [z ∈ aE] + [az ∈ E ∪ {z}].
      std::string              best_key;
      std::vector<std::string> best_images;
      std::size_t              best_worst = 0;
      bool                     have_best  = false;
      for (auto const& [k, z] : frontier) {
        std::size_t              worst = set.size() + 1;
        std::vector<std::string> images;
        for (std::size_t i = 0; i < A.size(); ++i) {
          auto       image = backend.key(backend.multiply(A[i], z));
          auto const gain  = translates[i].count(k)
                            + (in_set.count(image) != 0 || image == k ? 1 : 0);
          worst = std::min(worst, inter[i] + gain);
          images.push_back(std::move(image));
        }
        if (!have_best || worst > best_worst) {
          have_best   = true;
          best_worst  = worst;
          best_key    = k;
          best_images = std::move(images);
        }
      }
      auto node = frontier.extract(best_key);
      for (std::size_t i = 0; i < A.size(); ++i) {
        inter[i] += translates[i].count(best_key)
                    + (in_set.count(best_images[i]) != 0
                               || best_images[i] == best_key
                           ? 1
                           : 0);
        translates[i].insert(best_images[i]);
      }
      in_set.insert(best_key);
      set.push_back(node.mapped());
      extend_frontier(set.back());
      ++result.steps;

      auto const after = report_of();
      result.history.emplace_back(set.size(),
                                  after.max_symmetric_difference_ratio);
      if (after.max_symmetric_difference_ratio
          < result.report.max_symmetric_difference_ratio) {
        result.report = after;
        result.set    = set;
      }
    }
    auto const check = folner_ratios(backend, result.set, A);
    if (check.max_symmetric_difference_ratio
            != result.report.max_symmetric_difference_ratio
        || (result.success && !check_epsilon(check, epsilon))) {
      throw VerificationError("incremental Folner counts disagree with a "
                              "direct recount");
    }
    result.report = check;
    return result;
  }

}  // namespace oreslice
