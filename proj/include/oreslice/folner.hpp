#ifndef ORESLICE_FOLNER_HPP_
#define ORESLICE_FOLNER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "backend.hpp"

namespace oreslice {

  using Rational = boost::rational<std::int64_t>;

  // "p/q" in lowest terms ("p" when q == 1).
  std::string print_rational(Rational const& r);
  // Exact value of a decimal or fraction string such as "0.25" or "1/3".
  Rational parse_rational(std::string_view text);

  struct GeneratorCounts {
    std::string  generator;  // canonical key
    std::size_t  translate_size    = 0;  // |aE|
    std::size_t  intersection      = 0;  // |aE ∩ E|
    std::size_t  symmetric_difference = 0;  // |aE Δ E|
    Rational     intersection_ratio;
    Rational     symmetric_difference_ratio;
  };

  struct FolnerReport {
    std::size_t                  set_size = 0;
    std::vector<GeneratorCounts> per_generator;
    Rational                     min_intersection_ratio;
    Rational                     max_symmetric_difference_ratio;
  };

  // Exact left-translation counts for a finite set E (deduplicated by key).
  FolnerReport folner_ratios(Backend const&              backend,
                             std::vector<Element> const& E,
                             std::vector<Element> const& A);

  // min |aE ∩ E| / |E| > delta
  bool check_delta(FolnerReport const& report, Rational const& delta);
  // max |aE Δ E| / |E| < epsilon
  bool check_epsilon(FolnerReport const& report, Rational const& epsilon);

  struct GreedyBudget {
    std::size_t max_size  = 200;
    std::size_t max_steps = 200;
  };

  struct GreedyResult {
    bool                 success = false;
    std::vector<Element> set;  // the accepted set, or the best one seen
    FolnerReport         report;
    std::size_t          steps = 0;
    // (|E|, max symmetric-difference ratio) after every step.
    std::vector<std::pair<std::size_t, Rational>> history;
  };

  // Grows E from {1}, each step adding the element of (A E) \ E that
  // minimizes the worst symmetric-difference ratio (ties to the smaller key).
  GreedyResult greedy_folner_search(Backend const&              backend,
                                    std::vector<Element> const& A,
                                    Rational const&             epsilon,
                                    GreedyBudget                budget);

}  // namespace oreslice

#endif  // ORESLICE_FOLNER_HPP_
