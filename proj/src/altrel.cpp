#include "oreslice/altrel.hpp"

#include <algorithm>

#include "oreslice/error.hpp"
#include "oreslice/thompson.hpp"

namespace oreslice {

  namespace {
    std::string signed_string(std::int64_t v) {
      return (v > 0 ? "+" : "") + std::to_string(v);
    }

    std::size_t min_subscript(Word const& w) {
      std::size_t m = w[0].gen.index;
      for (auto const& l : w.letters) {
        m = std::min(m, l.gen.index);
      }
      return m;
    }

    void check_step(TraceStep const& step) {
      auto fail = [&](std::string const& why) {
        throw VerificationError(rule_name(step.rule) + " step on '"
                                + print_word(step.input) + "': " + why);
      };
      switch (step.rule) {
        case TraceRule::shift:
          if (shift_endomorphism(step.output, step.alpha) != step.input) {
            fail("output is not the shifted input");
          }
          if (f_is_identity(f_from_word(step.input))
              != f_is_identity(f_from_word(step.output))) {
            fail("shift changed triviality");
          }
          break;
        case TraceRule::conjugate_x0: {
          auto const lhs = f_from_word(invert_word(step.conjugator)
                                       * step.input * step.conjugator);
          if (lhs != f_from_word(step.output)) {
            fail("conjugate is not equal to the output in F");
          }
          if (step.output.size() + 2 != step.input.size()) {
            fail("length did not drop by two");
          }
          if (!is_alternating(step.output, true)) {
            fail("output is not cyclically alternating");
          }
          break;
        }
        case TraceRule::witness:
          if (step.output != step.input) {
            fail("witness steps do not rewrite");
          }
          break;
      }
    }
  }  // namespace

  std::string rule_name(TraceRule rule) {
    switch (rule) {
      case TraceRule::shift:
        return "shift";
      case TraceRule::conjugate_x0:
        return "conjugate_x0";
      case TraceRule::witness:
        return "witness";
    }
    return "?";
  }

  ProofTrace altrel_trace(Word const& w) {
    if (!is_alternating(w, true)) {
      throw Error("'" + print_word(w) + "' is not an alternating word");
    }
    ProofTrace trace{w, {}, Verdict::nontrivial, {}};
    Word       current = w;
    while (true) {
      if (current.empty()) {
        trace.verdict = Verdict::trivial;
        trace.witness = "empty word";
        return trace;
      }
      for (auto const& [gen, sum] : exponent_sums(current)) {
        if (sum != 0) {
          trace.witness = "exponent sum x" + std::to_string(gen.index) + " = "
                          + signed_string(sum);
          TraceStep step{TraceRule::witness, 0, current, current, {}};
          check_step(step);
          trace.steps.push_back(std::move(step));
          if (f_is_identity(f_from_word(w))) {
            throw VerificationError("witness found for a word trivial in F");
          }
          return trace;
        }
      }

      auto const alpha = static_cast<std::int64_t>(min_subscript(current));
      if (alpha > 0) {
        TraceStep step{TraceRule::shift,
                       alpha,
                       current,
                       shift_endomorphism(current, -alpha),
                       {}};
        check_step(step);
        current = step.output;
        trace.steps.push_back(std::move(step));
      }

      // Leftmost x0^-1 whose next cyclic x0-letter is x0^+1.
      auto const  n     = current.size();
      std::size_t start = n;
      std::size_t close = n;
      for (std::size_t p = 0; p < n && start == n; ++p) {
        if (current[p].gen.index != 0 || current[p].exponent > 0) {
          continue;
        }
        for (std::size_t k = 1; k < n; ++k) {
          auto const& l = current[(p + k) % n];
          if (l.gen.index == 0) {
            if (l.exponent > 0) {
              start = p;
              close = k;
            }
            break;
          }
        }
      }
      if (start == n) {
        throw VerificationError("no cyclic subword x0^-1 v x0 in '"
                                + print_word(current) + "'");
      }
      auto const rotated = cyclic_shift(current, static_cast<std::int64_t>(start));
      Word       inner{{rotated.letters.begin() + 1,
                  rotated.letters.begin() + static_cast<std::ptrdiff_t>(close)}};
      Word       rest{{rotated.letters.begin() + static_cast<std::ptrdiff_t>(close) + 1,
                 rotated.letters.end()}};
      TraceStep  step{TraceRule::conjugate_x0,
                     0,
                     current,
                     shift_endomorphism(inner, 1) * rest,
                     Word{{current.letters.begin(),
                           current.letters.begin()
                               + static_cast<std::ptrdiff_t>(start)}}};
      check_step(step);
      current = step.output;
      trace.steps.push_back(std::move(step));
    }
  }

  void verify_trace(ProofTrace const& trace) {
    if (!is_alternating(trace.input, true)) {
      throw VerificationError("trace input is not alternating");
    }
    Word current = trace.input;
    for (auto const& step : trace.steps) {
      if (step.input != current) {
        throw VerificationError("trace steps do not chain");
      }
      check_step(step);
      current = step.output;
    }
    if (trace.verdict == Verdict::nontrivial) {
      if (trace.steps.empty() || trace.steps.back().rule != TraceRule::witness) {
        throw VerificationError("nontrivial verdict without a witness step");
      }
      bool has_nonzero = false;
      for (auto const& [gen, sum] : exponent_sums(current)) {
        has_nonzero = has_nonzero || sum != 0;
      }
      if (!has_nonzero) {
        throw VerificationError("witness word has zero abelianization");
      }
    } else if (!current.empty()) {
      throw VerificationError("trivial verdict on a nonempty word");
    }
    if (altrel_trace(trace.input) != trace) {
      throw VerificationError("trace differs from a fresh run");
    }
  }

}  // namespace oreslice
