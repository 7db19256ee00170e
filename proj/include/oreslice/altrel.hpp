#ifndef ORESLICE_ALTREL_HPP_
#define ORESLICE_ALTREL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "words.hpp"

namespace oreslice {

  enum class TraceRule { shift, conjugate_x0, witness };

  std::string rule_name(TraceRule rule);

  struct TraceStep {
    TraceRule    rule = TraceRule::witness;
    std::int64_t alpha = 0;  // subtracted subscript, shift steps only
    Word         input;
    Word         output;
    // conjugate_x0 steps: s with s^-1 * input * s == output in F.
    Word conjugator;

    bool operator==(TraceStep const&) const = default;
  };

  enum class Verdict { nontrivial, trivial };

  struct ProofTrace {
    Word                   input;
    std::vector<TraceStep> steps;
    Verdict                verdict = Verdict::nontrivial;
    std::string            witness;

    bool operator==(ProofTrace const&) const = default;
  };

  // Runs the nontriviality induction for an alternating word in F:
  // abelianization witness, else shift the minimal subscript to 0, else
  // replace the leftmost cyclic subword x0^-1 v x0 by v with every subscript
  // raised by one. Every step is checked against the tree-pair backend as it
  // is produced; a failed check throws VerificationError.
  ProofTrace altrel_trace(Word const& w);

  // Re-checks a trace produced elsewhere. Throws VerificationError.
  void verify_trace(ProofTrace const& trace);

}  // namespace oreslice

#endif  // ORESLICE_ALTREL_HPP_
