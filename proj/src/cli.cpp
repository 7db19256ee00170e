#include "oreslice/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "oreslice/certificate.hpp"
#include "oreslice/error.hpp"

namespace oreslice {

  namespace {
    struct Options {
      std::string              backend = "mb:2";
      std::string              a;
      std::string              b;
      std::size_t              max_support = 2;
      std::size_t              pool_len    = 1;
      std::size_t              pool_idx    = 1;
      int                      coeff_bound = 1;
      std::string              signs       = "-,-";
      std::string              epsilon;
      std::string              delta;
      std::size_t              budget = 200;
      std::string              format = "table";
      unsigned                 jobs   = 1;
      std::uint64_t            seed   = 0;
      bool                     cyclic = false;
      std::vector<std::string> positional;
    };

    class Command {
     public:
      Command(Options const& opt, std::ostream& out)
          : _opt(opt), _out(out) {}

      int wp() {
        auto const backend = make_backend(_opt.backend);
        auto const w       = parse_word(single(), backend->alphabet());
        auto const x       = backend->from_word(w);
        bool const trivial = backend->is_identity(x);
        if (json()) {
          emit(Json{{"kind", "wp"},
                    {"backend", backend->name()},
                    {"word", print_word(w)},
                    {"element", backend->key(x)},
                    {"trivial", trivial}});
        } else {
          _out << (trivial ? "trivial" : "nontrivial") << '\n';
        }
        return exit_ok;
      }

      int canon() {
        auto const backend = make_backend(_opt.backend);
        auto const w       = parse_word(single(), backend->alphabet());
        auto const k       = backend->key(backend->from_word(w));
        if (json()) {
          emit(Json{{"kind", "canon"},
                    {"backend", backend->name()},
                    {"word", print_word(w)},
                    {"element", k}});
        } else {
          _out << k << '\n';
        }
        return exit_ok;
      }

      int alt_check() {
        auto const w  = parse_word(single(), Alphabet::indexed());
        bool const ok = is_alternating(w, _opt.cyclic);
        if (json()) {
          emit(Json{{"kind", "alt-check"},
                    {"word", print_word(w)},
                    {"cyclic", _opt.cyclic},
                    {"alternating", ok}});
        } else {
          _out << (ok ? "alternating" : "not alternating") << '\n';
        }
        return exit_ok;
      }

      int alt_trace() {
        auto const w = parse_word(single(), Alphabet::indexed());
        if (!is_alternating(w, true)) {
          throw Error("'" + print_word(w) + "' is not alternating");
        }
        auto const trace = altrel_trace(w);
        if (json()) {
          emit(trace_certificate(trace));
        } else {
          for (auto const& s : trace.steps) {
            _out << rule_name(s.rule);
            if (s.rule == TraceRule::shift) {
              _out << '(' << s.alpha << ')';
            }
            _out << ": " << print_word(s.input) << " -> "
                 << print_word(s.output);
            if (s.rule == TraceRule::conjugate_x0) {
              _out << "  [conjugator: "
                   << (s.conjugator.empty() ? "1" : print_word(s.conjugator))
                   << ']';
            }
            _out << '\n';
          }
          _out << "verdict: "
               << (trace.verdict == Verdict::nontrivial ? "nontrivial"
                                                        : "trivial")
               << "\nwitness: " << trace.witness << '\n';
        }
        return trace.verdict == Verdict::nontrivial ? exit_ok
                                                    : exit_verification;
      }

      int ore_search() {
        auto [backend, a, b] = factors();
        auto const bounds    = search_bounds(*backend, false);
        auto const inst      = OreInstance::make(
            backend, a, b, bounds.max_support, pool_for(*backend, bounds));
        auto const report = search_common_multiple(inst, _opt.jobs);
        if (report.solution) {
          auto const cert
              = solution_certificate(*backend, a, b, bounds, *report.solution);
          if (json()) {
            emit(cert);
          } else {
            _out << "found\n"
                 << "U = " << set_text(cert.at("U")) << '\n'
                 << "V = " << set_text(cert.at("V")) << '\n'
                 << "(1+a)U = " << cert.at("lhs").get<std::string>() << '\n'
                 << "(1+b)V = " << cert.at("rhs").get<std::string>() << '\n';
          }
          return exit_ok;
        }
        if (json()) {
          emit(exhausted_certificate(*backend, a, b, bounds, report));
        } else {
          _out << "exhausted\n"
               << "bounds: " << bounds_text(bounds) << '\n'
               << "pool size: " << report.pool_size << '\n'
               << "nodes: " << report.nodes << '\n';
        }
        return exit_exhausted;
      }

      int ore_signed() {
        auto [backend, a, b] = factors();
        auto const bounds    = search_bounds(*backend, true);
        auto const [sa, sb]  = signs();
        auto const inst      = OreInstance::make(
            backend, a, b, bounds.max_support, pool_for(*backend, bounds));
        auto const report
            = search_signed(inst, sa, sb, _opt.coeff_bound, _opt.jobs);
        auto const cert
            = signed_certificate(*backend, a, b, bounds, sa, sb, report);
        if (json()) {
          emit(cert);
        } else if (report.solution) {
          _out << "found\n"
               << "u = " << sr_to_text(report.solution->u) << '\n'
               << "v = " << sr_to_text(report.solution->v) << '\n'
               << "lhs = " << sr_to_text(report.solution->lhs) << '\n'
               << "rhs = " << sr_to_text(report.solution->rhs) << '\n';
        } else {
          _out << "exhausted\n"
               << "bounds: " << bounds_text(bounds) << '\n'
               << "pool size: " << report.pool_size << '\n'
               << "nodes: " << report.nodes << '\n';
        }
        return report.solution ? exit_ok : exit_exhausted;
      }

      int extract() {
        auto const cert = read_json(single());
        if (cert.value("kind", "") != "solution") {
          throw Error("extract needs a solution certificate");
        }
        auto const loaded = load_solution(cert);
        auto const graph  = build_relation_graph(
            *loaded.backend, loaded.a, loaded.b, loaded.solution);
        auto const rels
            = extract_cycles(graph, *loaded.backend, loaded.a, loaded.b);
        auto const out = relations_certificate(
            *loaded.backend, loaded.a, loaded.b, loaded.solution, graph, rels);
        if (json()) {
          emit(out);
        } else {
          _out << "vertices: " << graph.vertices.size() << '\n'
               << "cycles: " << rels.size() << '\n';
          for (auto const& r : rels) {
            _out << print_word(r.word) << " = 1"
                 << (r.verified ? "  (verified)" : "") << '\n';
          }
        }
        return exit_ok;
      }

      int rel2sol() {
        auto [backend, a, b] = factors();
        auto const w         = parse_word(single(), Alphabet::named(2));
        if (!is_ab_alternating(w)) {
          throw Error("'" + print_word(w) + "' is not alternating in a, b");
        }
        if (!backend->relation_holds(a, b, w)) {
          _out << "not a relation: " << print_word(w)
               << " does not evaluate to the identity\n";
          return exit_verification;
        }
        auto const bounds = search_bounds(*backend, false);
        auto const sol
            = relation_to_solution(backend, a, b, w, pool_for(*backend, bounds));
        if (!sol) {
          _out << "no solution: vertices not embeddable in the monoid after "
                  "translating by every pool element\n";
          return exit_exhausted;
        }
        auto cert = solution_certificate(*backend, a, b, bounds, *sol);
        cert["relations"]
            = Json::array({Json{{"word", print_word(w)}, {"verified", true}}});
        if (json()) {
          emit(cert);
        } else {
          _out << "U = " << set_text(cert.at("U")) << '\n'
               << "V = " << set_text(cert.at("V")) << '\n';
        }
        return exit_ok;
      }

      int folner() {
        auto const backend = make_backend(_opt.backend);
        std::vector<Element> gens;
        for (auto const& g : backend->generators(_opt.pool_idx)) {
          gens.push_back(backend->from_word(letter_word(g)));
        }
        FolnerRun run;
        run.generators = gens;
        if (!_opt.epsilon.empty()) {
          run.epsilon = parse_rational(_opt.epsilon);
        }
        if (!_opt.delta.empty()) {
          run.delta = parse_rational(_opt.delta);
        }
        int code = exit_ok;
        if (!_opt.positional.empty()) {
          run.status = "evaluated";
          for (auto const& text : _opt.positional) {
            run.set.push_back(
                backend->from_word(parse_word(text, backend->alphabet())));
          }
          run.report = folner_ratios(*backend, run.set, gens);
        } else {
          if (!run.epsilon) {
            throw Error("greedy Folner search needs --epsilon");
          }
          auto result = greedy_folner_search(
              *backend, gens, *run.epsilon,
              GreedyBudget{_opt.budget, _opt.budget});
          run.status  = result.success ? "success" : "failure";
          run.set     = std::move(result.set);
          run.report  = result.report;
          run.history = std::move(result.history);
          code        = result.success ? exit_ok : exit_exhausted;
        }
        auto const cert = folner_certificate(*backend, run);
        if (json()) {
          emit(cert);
          return code;
        }
        _out << "status: " << run.status << '\n'
             << "|E| = " << run.report.set_size << '\n'
             << "generator  intersection  symdiff  intersection/|E|  symdiff/|E|\n";
        for (auto const& g : run.report.per_generator) {
          _out << g.generator << "  " << g.intersection << "  "
               << g.symmetric_difference << "  "
               << print_rational(g.intersection_ratio) << "  "
               << print_rational(g.symmetric_difference_ratio) << '\n';
        }
        _out << "min intersection ratio: "
             << print_rational(run.report.min_intersection_ratio) << '\n'
             << "max symmetric-difference ratio: "
             << print_rational(run.report.max_symmetric_difference_ratio)
             << '\n';
        if (cert.contains("checks")) {
          for (auto const& [name, value] : cert.at("checks").items()) {
            _out << name << " check: " << (value.get<bool>() ? "pass" : "fail")
                 << '\n';
          }
        }
        if (!run.history.empty()) {
          _out << "size  max-ratio\n";
          for (auto const& [size, r] : run.history) {
            _out << size << "  " << print_rational(r) << '\n';
          }
        }
        return code;
      }

      int pool() {
        auto const backend = make_backend(_opt.backend);
        SearchBounds bounds;
        bounds.pool_len = _opt.pool_len;
        bounds.pool_idx = _opt.pool_idx;
        auto const elems = pool_for(*backend, bounds);
        if (json()) {
          Json keys = Json::array();
          for (auto const& e : elems) {
            keys.push_back(backend->key(e));
          }
          emit(Json{{"kind", "pool"},
                    {"backend", backend->name()},
                    {"L", _opt.pool_len},
                    {"K", indexed(*backend) ? Json(_opt.pool_idx)
                                            : Json(nullptr)},
                    {"elements", keys}});
        } else {
          for (auto const& e : elems) {
            _out << backend->key(e) << '\n';
          }
        }
        return exit_ok;
      }

      int verify() {
        auto const cert    = read_json(single());
        auto const outcome = verify_certificate(cert);
        if (json()) {
          emit(Json{{"kind", "verify"},
                    {"ok", outcome.ok},
                    {"message", outcome.message}});
        } else {
          _out << (outcome.ok ? "verified: " : "FAILED: ") << outcome.message
               << '\n';
        }
        return outcome.ok ? exit_ok : exit_verification;
      }

     private:
      bool json() const {
        return _opt.format == "json";
      }

      void emit(Json const& j) {
        _out << j.dump(2) << '\n';
      }

      std::string const& single() const {
        if (_opt.positional.size() != 1) {
          throw Error("expected exactly one positional argument");
        }
        return _opt.positional.front();
      }

      static bool indexed(Backend const& backend) {
        return backend.alphabet().style() == Alphabet::Style::indexed;
      }

      std::tuple<BackendPtr, Element, Element> factors() const {
        auto       backend = make_backend(_opt.backend);
        auto const gens    = backend->generators(1);
        if (gens.size() < 2) {
          throw Error("backend needs at least two generators");
        }
        auto read = [&](std::string const& text, Generator const& fallback) {
          auto const w = text.empty() ? letter_word(fallback)
                                      : parse_word(text, backend->alphabet());
          return backend->from_word(w);
        };
        auto a = read(_opt.a, gens[0]);
        auto b = read(_opt.b, gens[1]);
        return {backend, std::move(a), std::move(b)};
      }

      SearchBounds search_bounds(Backend const& backend, bool is_signed) const {
        SearchBounds bounds;
        bounds.max_support = _opt.max_support;
        bounds.pool_len    = _opt.pool_len;
        if (indexed(backend)) {
          bounds.pool_idx = _opt.pool_idx;
        }
        if (is_signed) {
          bounds.coeff_bound = _opt.coeff_bound;
        }
        return bounds;
      }

      std::pair<int, int> signs() const {
        std::string s;
        for (char c : _opt.signs) {
          if (c == '+' || c == '-') {
            s += c;
          } else if (c != ',' && c != ' ') {
            throw Error("--signs takes two of '+'/'-', e.g. \"-,-\"");
          }
        }
        if (s.size() != 2) {
          throw Error("--signs takes two of '+'/'-', e.g. \"-,-\"");
        }
        return {s[0] == '+' ? 1 : -1, s[1] == '+' ? 1 : -1};
      }

      static std::string set_text(Json const& keys) {
        std::string out = "{";
        for (std::size_t i = 0; i < keys.size(); ++i) {
          out += (i == 0 ? "" : ", ") + keys[i].get<std::string>();
        }
        return out + "}";
      }

      static std::string bounds_text(SearchBounds const& b) {
        std::ostringstream s;
        s << "n=" << b.max_support << " L=" << b.pool_len;
        if (b.pool_idx) {
          s << " K=" << *b.pool_idx;
        }
        if (b.coeff_bound) {
          s << " c=" << *b.coeff_bound;
        }
        return s.str();
      }

      static Json read_json(std::string const& path) {
        std::ifstream in(path);
        if (!in) {
          throw Error("cannot open '" + path + "'");
        }
        try {
          return Json::parse(in);
        } catch (Json::exception const& e) {
          throw Error("'" + path + "' is not valid JSON: " + e.what());
        }
      }

      Options const& _opt;
      std::ostream&  _out;
    };

    struct Subcommand {
      char const*                  name;
      char const*                  help;
      int (Command::*run)();
    };
  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    CLI::App app{"Word problems, Ore-condition searches and Folner ratios", "oreslice"};
    app.require_subcommand(1);
    Options opt;

    Subcommand const subcommands[] = {
        {"wp", "Decide whether a word is trivial", &Command::wp},
        {"canon", "Print the canonical key of a word", &Command::canon},
        {"alt-check", "Test the even/odd alternating shape", &Command::alt_check},
        {"alt-trace", "Trace the nontriviality induction in F", &Command::alt_trace},
        {"ore-search", "Search (1+a)U = (1+b)V in Z+[M]", &Command::ore_search},
        {"ore-signed", "Search (1+-a)u = (1+-b)v in Z[M]", &Command::ore_signed},
        {"extract", "Relation graph and cycles of a solution certificate",
         &Command::extract},
        {"rel2sol", "Build a solution from an alternating relation",
         &Command::rel2sol},
        {"folner", "Folner ratios of a set, or a greedy Folner search",
         &Command::folner},
        {"pool", "List the candidate pool", &Command::pool},
        {"verify", "Re-check a certificate", &Command::verify},
    };

    std::function<int()> action;
    for (auto const& sc : subcommands) {
      auto* sub = app.add_subcommand(sc.name, sc.help);
      sub->add_option("--backend", opt.backend, "zm:<m>, mb:<m>, f or posmon");
      sub->add_option("--a", opt.a, "first factor (word)");
      sub->add_option("--b", opt.b, "second factor (word)");
      sub->add_option("--max-support", opt.max_support, "bound on |U| = |V|")
          ->check(CLI::PositiveNumber);
      sub->add_option("--pool-len", opt.pool_len, "word length of the pool");
      sub->add_option("--pool-idx", opt.pool_idx,
                      "largest generator index in the pool (x-alphabets)");
      sub->add_option("--coeff-bound", opt.coeff_bound, "signed coefficient bound")
          ->check(CLI::PositiveNumber);
      sub->add_option("--signs", opt.signs, "signs of a and b, e.g. \"-,-\"");
      sub->add_option("--epsilon", opt.epsilon, "symmetric-difference threshold");
      sub->add_option("--delta", opt.delta, "intersection threshold");
      sub->add_option("--budget", opt.budget, "greedy Folner size/step budget")
          ->check(CLI::PositiveNumber);
      sub->add_option("--format", opt.format, "table or json")
          ->check(CLI::IsMember({"table", "json"}));
      sub->add_option("--jobs", opt.jobs, "search workers")
          ->check(CLI::PositiveNumber);
      sub->add_option("--seed", opt.seed,
                      "seed for randomized drivers; never affects search order");
      sub->add_flag("--cyclic", opt.cyclic, "alternation of the cyclic word");
      sub->add_option("args", opt.positional, "word(s) or certificate file");
      sub->callback([&action, &opt, &out, run = sc.run] {
        action = [&opt, &out, run] {
          Command cmd(opt, out);
          return (cmd.*run)();
        };
      });
    }

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << e.what() << '\n';
      return exit_usage;
    }

    try {
      return action();
    } catch (VerificationError const& e) {
      err << "verification failure: " << e.what() << '\n';
      return exit_verification;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    }
  }

}  // namespace oreslice
