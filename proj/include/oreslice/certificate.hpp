#ifndef ORESLICE_CERTIFICATE_HPP_
#define ORESLICE_CERTIFICATE_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "altrel.hpp"
#include "folner.hpp"
#include "ore.hpp"

namespace oreslice {

  using Json = nlohmann::json;

  // Search bounds as recorded in certificates. The pool is rebuilt from
  // them on verification: words of length <= pool_len over the backend's
  // generators, with x0..x_{pool_idx} on indexed backends.
  struct SearchBounds {
    std::size_t                max_support = 1;
    std::size_t                pool_len    = 1;
    std::optional<std::size_t> pool_idx;
    std::optional<int>         coeff_bound;
  };

  std::vector<Element> pool_for(Backend const& backend, SearchBounds const& bounds);

  Json solution_certificate(Backend const&      backend,
                            Element const&      a,
                            Element const&      b,
                            SearchBounds const& bounds,
                            Solution const&     solution);

  Json exhausted_certificate(Backend const&      backend,
                             Element const&      a,
                             Element const&      b,
                             SearchBounds const& bounds,
                             SearchReport const& report);

  Json relations_certificate(Backend const&                          backend,
                             Element const&                          a,
                             Element const&                          b,
                             Solution const&                         solution,
                             RelationGraph const&                    graph,
                             std::vector<AlternatingRelation> const& relations);

  Json signed_certificate(Backend const&      backend,
                          Element const&      a,
                          Element const&      b,
                          SearchBounds const& bounds,
                          int                 sign_a,
                          int                 sign_b,
                          SignedReport const& report);

  Json trace_certificate(ProofTrace const& trace);

  struct FolnerRun {
    std::string             status;  // "evaluated", "success" or "failure"
    std::optional<Rational> epsilon;
    std::optional<Rational> delta;
    std::vector<Element>    generators;
    std::vector<Element>    set;
    FolnerReport            report;
    std::vector<std::pair<std::size_t, Rational>> history;
  };

  Json folner_certificate(Backend const& backend, FolnerRun const& run);
  Json folner_report_json(FolnerReport const& report);

  struct VerifyOutcome {
    bool        ok = false;
    std::string message;
  };

  // Re-checks every claim of a certificate from its own contents.
  VerifyOutcome verify_certificate(Json const& certificate);

  // Reads back a "solution" certificate.
  struct LoadedSolution {
    BackendPtr   backend;
    Element      a;
    Element      b;
    SearchBounds bounds;
    Solution     solution;
  };
  LoadedSolution load_solution(Json const& certificate);

}  // namespace oreslice

#endif  // ORESLICE_CERTIFICATE_HPP_
