#include "oreslice/certificate.hpp"

#include "oreslice/error.hpp"

namespace oreslice {

  namespace {
    Json keys_of(Backend const& backend, std::vector<Element> const& xs) {
      Json out = Json::array();
      for (auto const& x : xs) {
        out.push_back(backend.key(x));
      }
      return out;
    }

    std::vector<Element> elements_of(Backend const& backend, Json const& keys) {
      std::vector<Element> out;
      for (auto const& k : keys) {
        out.push_back(backend.from_key(k.get<std::string>()));
      }
      return out;
    }

    Json bounds_json(SearchBounds const& b) {
      Json j;
      j["n"] = b.max_support;
      j["L"] = b.pool_len;
      j["K"] = b.pool_idx ? Json(*b.pool_idx) : Json(nullptr);
      j["c"] = b.coeff_bound ? Json(*b.coeff_bound) : Json(nullptr);
      return j;
    }

    SearchBounds bounds_from(Json const& j) {
      SearchBounds b;
      b.max_support = j.at("n").get<std::size_t>();
      b.pool_len    = j.at("L").get<std::size_t>();
      if (!j.at("K").is_null()) {
        b.pool_idx = j.at("K").get<std::size_t>();
      }
      if (!j.at("c").is_null()) {
        b.coeff_bound = j.at("c").get<int>();
      }
      return b;
    }

    Json header(std::string const& kind,
                Backend const&     backend,
                Element const&     a,
                Element const&     b) {
      Json j;
      j["kind"]    = kind;
      j["backend"] = backend.name();
      j["a"]       = backend.key(a);
      j["b"]       = backend.key(b);
      return j;
    }

    std::string sign_text(int s) {
      return s > 0 ? "+" : "-";
    }

    int sign_from(Json const& j) {
      auto const s = j.get<std::string>();
      if (s != "+" && s != "-") {
        throw Error("bad sign '" + s + "'");
      }
      return s == "+" ? 1 : -1;
    }

    Json terms_json(SemiringElement const& x) {
      Json out = Json::array();
      for (auto const& [k, t] : x.terms()) {
        out.push_back(Json{{"element", k}, {"coefficient", t.coefficient.str()}});
      }
      return out;
    }

    SemiringElement terms_from(BackendPtr const& backend, Json const& j) {
      auto x = SemiringElement::zero(backend, Coefficients::integer);
      for (auto const& term : j) {
        x.add_term(backend->from_key(term.at("element").get<std::string>()),
                   Coefficient(term.at("coefficient").get<std::string>()));
      }
      return x;
    }

    Json graph_json(RelationGraph const& g) {
      Json vertices = Json::array();
      for (auto const& v : g.vertices) {
        vertices.push_back(Json{{"element", v.key}, {"occurrence", v.occurrence}});
      }
      auto edges = [](std::vector<RelationGraph::Edge> const& es) {
        Json out = Json::array();
        for (auto const& e : es) {
          out.push_back(Json::array({e.source, e.target}));
        }
        return out;
      };
      return Json{{"vertices", vertices},
                  {"a_edges", edges(g.a_edges)},
                  {"b_edges", edges(g.b_edges)}};
    }

    Json relations_json(std::vector<AlternatingRelation> const& rels) {
      Json out = Json::array();
      for (auto const& r : rels) {
        out.push_back(Json{{"word", print_word(r.word)},
                           {"cycle", r.cycle},
                           {"verified", r.verified}});
      }
      return out;
    }

    Json step_json(TraceStep const& s) {
      Json j{{"rule", rule_name(s.rule)},
             {"input", print_word(s.input)},
             {"output", print_word(s.output)}};
      if (s.rule == TraceRule::shift) {
        j["alpha"] = s.alpha;
      }
      if (s.rule == TraceRule::conjugate_x0) {
        j["conjugator"] = print_word(s.conjugator);
      }
      return j;
    }

    ProofTrace trace_from(Json const& j) {
      auto const alph = Alphabet::indexed();
      ProofTrace t;
      t.input = parse_word(j.at("input").get<std::string>(), alph);
      for (auto const& s : j.at("steps")) {
        TraceStep step;
        auto const rule = s.at("rule").get<std::string>();
        if (rule == "shift") {
          step.rule  = TraceRule::shift;
          step.alpha = s.at("alpha").get<std::int64_t>();
        } else if (rule == "conjugate_x0") {
          step.rule       = TraceRule::conjugate_x0;
          step.conjugator = parse_word(s.at("conjugator").get<std::string>(), alph);
        } else if (rule == "witness") {
          step.rule = TraceRule::witness;
        } else {
          throw Error("unknown trace rule '" + rule + "'");
        }
        step.input  = parse_word(s.at("input").get<std::string>(), alph);
        step.output = parse_word(s.at("output").get<std::string>(), alph);
        t.steps.push_back(std::move(step));
      }
      auto const verdict = j.at("verdict").get<std::string>();
      t.verdict = verdict == "trivial" ? Verdict::trivial : Verdict::nontrivial;
      t.witness = j.at("witness").get<std::string>();
      return t;
    }

    OreInstance instance_from(Json const& cert, SearchBounds const& bounds) {
      auto backend = make_backend(cert.at("backend").get<std::string>());
      auto a       = backend->from_key(cert.at("a").get<std::string>());
      auto b       = backend->from_key(cert.at("b").get<std::string>());
      auto pool    = pool_for(*backend, bounds);
      return OreInstance::make(
          backend, std::move(a), std::move(b), bounds.max_support, std::move(pool));
    }

    VerifyOutcome fail(std::string message) {
      return VerifyOutcome{false, std::move(message)};
    }

    VerifyOutcome verify_solution(Json const& cert) {
      auto const loaded = load_solution(cert);
      auto const& sol   = loaded.solution;
      if (cert.at("lhs").get<std::string>() != sr_to_text(sol.lhs)
          || cert.at("rhs").get<std::string>() != sr_to_text(sol.rhs)) {
        return fail("recorded expansions differ from recomputed ones");
      }
      if (cert.contains("relations")) {
        auto const named = Alphabet::named(2);
        for (auto const& r : cert.at("relations")) {
          auto const w = parse_word(r.at("word").get<std::string>(), named);
          if (!is_ab_alternating(w)
              || !loaded.backend->relation_holds(loaded.a, loaded.b, w)) {
            return fail("relation " + print_word(w) + " does not hold");
          }
        }
      }
      return {true, "solution verified"};
    }

    VerifyOutcome verify_exhausted(Json const& cert) {
      auto const bounds = bounds_from(cert.at("bounds"));
      auto const inst   = instance_from(cert, bounds);
      bool const is_signed = cert.value("mode", "unsigned") == "signed";
      std::size_t   pool_size = 0;
      std::uint64_t nodes     = 0;
      bool          found     = false;
      if (is_signed) {
        auto const& signs = cert.at("signs");
        if (!bounds.coeff_bound) {
          return fail("signed search without a coefficient bound");
        }
        auto r    = search_signed(inst, sign_from(signs.at(0)),
                               sign_from(signs.at(1)), *bounds.coeff_bound);
        pool_size = r.pool_size;
        nodes     = r.nodes;
        found     = r.solution.has_value();
      } else {
        auto r    = search_common_multiple(inst);
        pool_size = r.pool_size;
        nodes     = r.nodes;
        found     = r.solution.has_value();
      }
      if (found) {
        return fail("re-running the search finds a solution");
      }
      if (cert.at("pool_size").get<std::size_t>() != pool_size
          || cert.at("nodes").get<std::uint64_t>() != nodes) {
        return fail("pool size or node count differ on re-run");
      }
      return {true, "exhaustion re-confirmed"};
    }

    VerifyOutcome verify_relations(Json const& cert) {
      auto const loaded = load_solution(cert);
      auto const graph  = build_relation_graph(
          *loaded.backend, loaded.a, loaded.b, loaded.solution);
      auto const rels
          = extract_cycles(graph, *loaded.backend, loaded.a, loaded.b);
      if (cert.at("graph") != graph_json(graph)) {
        return fail("relation graph differs from the rebuilt one");
      }
      if (cert.at("relations") != relations_json(rels)) {
        return fail("cycle labels differ from the re-extracted ones");
      }
      return {true, "relations verified"};
    }

    VerifyOutcome verify_signed(Json const& cert) {
      auto backend = make_backend(cert.at("backend").get<std::string>());
      auto a       = backend->from_key(cert.at("a").get<std::string>());
      auto b       = backend->from_key(cert.at("b").get<std::string>());
      auto bounds  = bounds_from(cert.at("bounds"));
      auto sa      = sign_from(cert.at("signs").at(0));
      auto sb      = sign_from(cert.at("signs").at(1));
      auto u       = terms_from(backend, cert.at("u"));
      auto v       = terms_from(backend, cert.at("v"));
      if (u.is_zero() && v.is_zero()) {
        return fail("u = v = 0");
      }
      for (auto const* x : {&u, &v}) {
        if (x->terms().size() > bounds.max_support) {
          return fail("support exceeds the bound");
        }
        for (auto const& [k, t] : x->terms()) {
          if (bounds.coeff_bound && abs(t.coefficient) > *bounds.coeff_bound) {
            return fail("coefficient exceeds the bound");
          }
        }
      }
      if (!sr_equals(sr_left_factor(a, sa, u), sr_left_factor(b, sb, v))) {
        return fail("(1 +- a) u != (1 +- b) v");
      }
      return {true, "signed solution verified"};
    }

    VerifyOutcome verify_trace_cert(Json const& cert) {
      auto const trace = trace_from(cert);
      verify_trace(trace);
      if (trace.verdict != Verdict::nontrivial) {
        return fail("trace ends with a trivial verdict");
      }
      return {true, "trace verified"};
    }

    VerifyOutcome verify_folner(Json const& cert) {
      auto backend = make_backend(cert.at("backend").get<std::string>());
      auto gens    = elements_of(*backend, cert.at("generators"));
      auto set     = elements_of(*backend, cert.at("set"));
      auto report  = folner_ratios(*backend, set, gens);
      if (cert.at("report") != folner_report_json(report)) {
        return fail("Folner counts differ from a recount");
      }
      auto const status = cert.at("status").get<std::string>();
      if (status != "evaluated") {
        auto const eps = parse_rational(cert.at("epsilon").get<std::string>());
        if (check_epsilon(report, eps) != (status == "success")) {
          return fail("epsilon check does not match the recorded status");
        }
      }
      if (cert.contains("checks")) {
        auto const& checks = cert.at("checks");
        if (checks.contains("epsilon")
            && checks.at("epsilon").get<bool>()
                   != check_epsilon(report, parse_rational(
                                                cert.at("epsilon").get<std::string>()))) {
          return fail("epsilon check differs");
        }
        if (checks.contains("delta")
            && checks.at("delta").get<bool>()
                   != check_delta(report, parse_rational(
                                              cert.at("delta").get<std::string>()))) {
          return fail("delta check differs");
        }
      }
      return {true, "Folner report verified"};
    }
  }  // namespace

  std::vector<Element> pool_for(Backend const& backend, SearchBounds const& bounds) {
    return enumerate_pool(
        backend, backend.generators(bounds.pool_idx.value_or(1)), bounds.pool_len);
  }

  Json solution_certificate(Backend const&      backend,
                            Element const&      a,
                            Element const&      b,
                            SearchBounds const& bounds,
                            Solution const&     solution) {
    auto j      = header("solution", backend, a, b);
    j["bounds"] = bounds_json(bounds);
    j["U"]      = keys_of(backend, solution.U);
    j["V"]      = keys_of(backend, solution.V);
    j["lhs"]    = sr_to_text(solution.lhs);
    j["rhs"]    = sr_to_text(solution.rhs);
    j["verified"] = true;
    return j;
  }

  Json exhausted_certificate(Backend const&      backend,
                             Element const&      a,
                             Element const&      b,
                             SearchBounds const& bounds,
                             SearchReport const& report) {
    auto j         = header("exhausted", backend, a, b);
    j["mode"]      = "unsigned";
    j["bounds"]    = bounds_json(bounds);
    j["pool_size"] = report.pool_size;
    j["nodes"]     = report.nodes;
    j["verified"]  = true;
    return j;
  }

  Json relations_certificate(Backend const&                          backend,
                             Element const&                          a,
                             Element const&                          b,
                             Solution const&                         solution,
                             RelationGraph const&                    graph,
                             std::vector<AlternatingRelation> const& relations) {
    auto j         = header("relations", backend, a, b);
    j["U"]         = keys_of(backend, solution.U);
    j["V"]         = keys_of(backend, solution.V);
    j["lhs"]       = sr_to_text(solution.lhs);
    j["rhs"]       = sr_to_text(solution.rhs);
    j["graph"]     = graph_json(graph);
    j["relations"] = relations_json(relations);
    bool verified  = true;
    for (auto const& r : relations) {
      verified = verified && r.verified;
    }
    j["verified"] = verified;
    return j;
  }

  Json signed_certificate(Backend const&      backend,
                          Element const&      a,
                          Element const&      b,
                          SearchBounds const& bounds,
                          int                 sign_a,
                          int                 sign_b,
                          SignedReport const& report) {
    Json j;
    if (report.solution) {
      j        = header("signed", backend, a, b);
      j["u"]   = terms_json(report.solution->u);
      j["v"]   = terms_json(report.solution->v);
      j["lhs"] = sr_to_text(report.solution->lhs);
      j["rhs"] = sr_to_text(report.solution->rhs);
    } else {
      j              = header("exhausted", backend, a, b);
      j["mode"]      = "signed";
      j["pool_size"] = report.pool_size;
      j["nodes"]     = report.nodes;
    }
    j["bounds"]   = bounds_json(bounds);
    j["signs"]    = Json::array({sign_text(sign_a), sign_text(sign_b)});
    j["verified"] = true;
    return j;
  }

  Json trace_certificate(ProofTrace const& trace) {
    Json steps = Json::array();
    for (auto const& s : trace.steps) {
      steps.push_back(step_json(s));
    }
    return Json{{"kind", "trace"},
                {"backend", "f"},
                {"input", print_word(trace.input)},
                {"steps", steps},
                {"verdict",
                 trace.verdict == Verdict::nontrivial ? "nontrivial" : "trivial"},
                {"witness", trace.witness},
                {"verified", trace.verdict == Verdict::nontrivial}};
  }

  Json folner_report_json(FolnerReport const& report) {
    auto ratio = [](Rational const& r) {
      return Json{{"exact", print_rational(r)},
                  {"decimal",
                   static_cast<double>(r.numerator())
                       / static_cast<double>(r.denominator())}};
    };
    Json per = Json::array();
    for (auto const& g : report.per_generator) {
      per.push_back(Json{{"generator", g.generator},
                         {"translate_size", g.translate_size},
                         {"intersection", g.intersection},
                         {"symmetric_difference", g.symmetric_difference},
                         {"intersection_ratio", ratio(g.intersection_ratio)},
                         {"symmetric_difference_ratio",
                          ratio(g.symmetric_difference_ratio)}});
    }
    return Json{{"set_size", report.set_size},
                {"per_generator", per},
                {"min_intersection_ratio", ratio(report.min_intersection_ratio)},
                {"max_symmetric_difference_ratio",
                 ratio(report.max_symmetric_difference_ratio)}};
  }

  Json folner_certificate(Backend const& backend, FolnerRun const& run) {
    Json j{{"kind", "folner"},
           {"backend", backend.name()},
           {"status", run.status},
           {"generators", keys_of(backend, run.generators)},
           {"set", keys_of(backend, run.set)},
           {"report", folner_report_json(run.report)}};
    Json checks = Json::object();
    if (run.epsilon) {
      j["epsilon"]      = print_rational(*run.epsilon);
      checks["epsilon"] = check_epsilon(run.report, *run.epsilon);
    }
    if (run.delta) {
      j["delta"]      = print_rational(*run.delta);
      checks["delta"] = check_delta(run.report, *run.delta);
    }
    if (!checks.empty()) {
      j["checks"] = checks;
    }
    if (!run.history.empty()) {
      Json history = Json::array();
      for (auto const& [size, r] : run.history) {
        history.push_back(Json::array({size, print_rational(r)}));
      }
      j["history"] = history;
    }
    j["verified"] = true;
    return j;
  }

  LoadedSolution load_solution(Json const& cert) {
    auto backend = make_backend(cert.at("backend").get<std::string>());
    auto a       = backend->from_key(cert.at("a").get<std::string>());
    auto b       = backend->from_key(cert.at("b").get<std::string>());
    SearchBounds bounds;
    if (cert.contains("bounds")) {
      bounds = bounds_from(cert.at("bounds"));
    }
    auto U   = elements_of(*backend, cert.at("U"));
    auto V   = elements_of(*backend, cert.at("V"));
    auto sol = make_verified_solution(*backend, backend, a, b, std::move(U), std::move(V));
    return LoadedSolution{
        std::move(backend), std::move(a), std::move(b), bounds, std::move(sol)};
  }

  VerifyOutcome verify_certificate(Json const& cert) {
    try {
      if (!cert.value("verified", false)) {
        return fail("certificate does not claim verification");
      }
      auto const kind = cert.at("kind").get<std::string>();
      if (kind == "solution") {
        return verify_solution(cert);
      }
      if (kind == "exhausted") {
        return verify_exhausted(cert);
      }
      if (kind == "relations") {
        return verify_relations(cert);
      }
      if (kind == "signed") {
        return verify_signed(cert);
      }
      if (kind == "trace") {
        return verify_trace_cert(cert);
      }
      if (kind == "folner") {
        return verify_folner(cert);
      }
      return fail("unknown certificate kind '" + kind + "'");
    } catch (std::exception const& e) {
      return fail(e.what());
    }
  }

}  // namespace oreslice
