#include <doctest.h>

#include "oreslice/certificate.hpp"

using namespace oreslice;

namespace {
  Element el(BackendPtr const& backend, std::string_view text) {
    return backend->from_word(parse_word(text, backend->alphabet()));
  }

  void round_trip(Json const& cert) {
    auto const text = cert.dump(2);
    auto const again = Json::parse(text);
    CHECK(again.dump(2) == text);
    auto const outcome = verify_certificate(again);
    CAPTURE(outcome.message);
    CHECK(outcome.ok);
  }
}  // namespace

TEST_CASE("solution certificates") {
  auto const z = make_backend("zm:2");
  auto const a = el(z, "a");
  auto const b = el(z, "b");
  SearchBounds bounds{2, 1, std::nullopt, std::nullopt};
  auto const inst = OreInstance::make(z, a, b, 2, pool_for(*z, bounds));
  auto const r = search_common_multiple(inst);
  REQUIRE(r.solution);
  auto const cert = solution_certificate(*z, a, b, bounds, *r.solution);
  CHECK(cert.at("kind") == "solution");
  CHECK(cert.at("U") == Json::array({"(0,0)", "(0,1)"}));
  CHECK(cert.at("V") == Json::array({"(0,0)", "(1,0)"}));
  CHECK(cert.at("bounds") == Json{{"n", 2}, {"L", 1}, {"K", nullptr}, {"c", nullptr}});
  CHECK(cert.at("verified") == true);
  round_trip(cert);

  auto const loaded = load_solution(cert);
  CHECK(loaded.backend->name() == "zm:2");
  CHECK(loaded.solution.lhs == r.solution->lhs);

  auto forged = cert;
  forged["V"] = Json::array({"(0,0)", "(0,1)"});
  CHECK_FALSE(verify_certificate(forged).ok);

  auto const g = build_relation_graph(*z, a, b, *r.solution);
  auto const rels = extract_cycles(g, *z, a, b);
  auto const rc = relations_certificate(*z, a, b, *r.solution, g, rels);
  CHECK(rc.at("kind") == "relations");
  round_trip(rc);
  auto bad = rc;
  bad["relations"][0]["word"] = "a b a^-1 b^-1";
  CHECK_FALSE(verify_certificate(bad).ok);
}

TEST_CASE("exhausted certificates") {
  auto const m = make_backend("posmon");
  auto const a = el(m, "x0");
  auto const b = el(m, "x1");
  SearchBounds bounds{3, 3, 4, std::nullopt};
  auto const r = search_common_multiple(OreInstance::make(m, a, b, 3, pool_for(*m, bounds)));
  REQUIRE_FALSE(r.solution);
  auto const cert = exhausted_certificate(*m, a, b, bounds, r);
  CHECK(cert.at("kind") == "exhausted");
  CHECK(cert.at("bounds").at("K") == 4);
  round_trip(cert);
  auto bad = cert;
  bad["nodes"] = r.nodes + 1;
  CHECK_FALSE(verify_certificate(bad).ok);
}

TEST_CASE("signed certificates") {
  auto const z = make_backend("zm:2");
  auto const a = el(z, "a");
  auto const b = el(z, "b");
  SearchBounds bounds{2, 1, std::nullopt, 1};
  auto const r = search_signed(OreInstance::make(z, a, b, 2, pool_for(*z, bounds)), -1, -1, 1);
  auto const cert = signed_certificate(*z, a, b, bounds, -1, -1, r);
  CHECK(cert.at("kind") == "signed");
  CHECK(cert.at("signs") == Json::array({"-", "-"}));
  round_trip(cert);

  auto const m = make_backend("posmon");
  SearchBounds mb{1, 1, 1, 1};
  auto const mr = search_signed(
      OreInstance::make(m, el(m, "x0"), el(m, "x1"), 1, pool_for(*m, mb)), 1, 1, 1);
  auto const mc = signed_certificate(*m, el(m, "x0"), el(m, "x1"), mb, 1, 1, mr);
  round_trip(mc);
}

TEST_CASE("trace and folner certificates") {
  auto const trace = altrel_trace(parse_word("x0 x1 x0^-1 x1^-1", Alphabet::indexed()));
  auto const tc = trace_certificate(trace);
  CHECK(tc.at("witness") == "exponent sum x1 = +1");
  round_trip(tc);
  auto bad = tc;
  bad["steps"][0]["output"] = "x1^-1 x2";
  CHECK_FALSE(verify_certificate(bad).ok);

  auto const z = make_backend("zm:2");
  FolnerRun run;
  run.status     = "evaluated";
  run.generators = {el(z, "a"), el(z, "b")};
  run.set        = {z->identity(), el(z, "a"), el(z, "b"), el(z, "a b")};
  run.epsilon    = Rational(3, 2);
  run.report     = folner_ratios(*z, run.set, run.generators);
  auto const fc = folner_certificate(*z, run);
  CHECK(fc.at("report").at("max_symmetric_difference_ratio").at("exact") == "1");
  round_trip(fc);
}

TEST_CASE("malformed certificates") {
  CHECK_FALSE(verify_certificate(Json{{"kind", "nonsense"}}).ok);
  CHECK_FALSE(verify_certificate(Json::array()).ok);
  CHECK_FALSE(verify_certificate(Json{{"kind", "solution"}}).ok);
}
