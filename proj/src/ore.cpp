#include "oreslice/ore.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <set>
#include <thread>
#include <unordered_set>

#include "oreslice/error.hpp"

namespace oreslice {

  namespace {
    // Integer ids for every key the search can touch, in canonical order,
    // and for each id the pool members whose translates land on it.
    struct KeySpace {
      std::vector<std::size_t>              id, id_a, id_b;
      std::vector<std::vector<std::size_t>> u_cands, v_cands;
      std::size_t                           size = 0;

      explicit KeySpace(OreInstance const& inst) {
        auto const&              backend = *inst.backend;
        std::vector<std::string> k, ka, kb;
        for (auto const& p : inst.pool) {
          k.push_back(backend.key(p));
          ka.push_back(backend.key(backend.multiply(inst.a, p)));
          kb.push_back(backend.key(backend.multiply(inst.b, p)));
        }
        std::map<std::string, std::size_t, KeyOrder> ids(KeyOrder{&backend});
        for (auto const* keys : {&k, &ka, &kb}) {
          for (auto const& s : *keys) {
            ids.emplace(s, 0);
          }
        }
        for (auto& [s, i] : ids) {
          i = size++;
        }
        u_cands.resize(size);
        v_cands.resize(size);
        for (std::size_t p = 0; p < inst.pool.size(); ++p) {
          id.push_back(ids.at(k[p]));
          id_a.push_back(ids.at(ka[p]));
          id_b.push_back(ids.at(kb[p]));
          u_cands[id[p]].push_back(p);
          if (id_a[p] != id[p]) {
            u_cands[id_a[p]].push_back(p);
          }
          v_cands[id[p]].push_back(p);
          if (id_b[p] != id[p]) {
            v_cands[id_b[p]].push_back(p);
          }
        }
        for (auto* lists : {&u_cands, &v_cands}) {
          for (auto& l : *lists) {
            std::sort(l.begin(), l.end());
          }
        }
      }
    };

    // Signed per-key balance with its set of nonzero keys and the masses of
    // its positive and negative parts.
    class Deficit {
     public:
      explicit Deficit(std::size_t size) : _d(size, 0) {}

      void bump(std::size_t k, std::int64_t delta) {
        auto const old = _d[k];
        auto const now = old + delta;
        _d[k]          = now;
        _pos += std::max<std::int64_t>(now, 0) - std::max<std::int64_t>(old, 0);
        _neg += std::max<std::int64_t>(-now, 0)
                - std::max<std::int64_t>(-old, 0);
        if (now == 0) {
          _nonzero.erase(k);
        } else if (old == 0) {
          _nonzero.insert(k);
        }
      }
      std::int64_t operator[](std::size_t k) const {
        return _d[k];
      }
      std::set<std::size_t> const& nonzero() const {
        return _nonzero;
      }
      std::int64_t positive_mass() const {
        return _pos;
      }
      std::int64_t negative_mass() const {
        return _neg;
      }

     private:
      std::vector<std::int64_t> _d;
      std::set<std::size_t>     _nonzero;
      std::int64_t              _pos = 0;
      std::int64_t              _neg = 0;
    };

    template <typename Result>
    struct RootOutcome {
      std::optional<Result> result;
      std::uint64_t         nodes = 0;
    };

    // Runs `run(root)` for roots 0..count-1 and returns the outcome of the
    // smallest root that succeeds, with the total node count.
    template <typename Result, typename Run>
    RootOutcome<Result> first_hit(std::size_t count, unsigned jobs, Run run) {
      RootOutcome<Result> total;
      if (jobs <= 1 || count <= 1) {
        for (std::size_t r = 0; r < count; ++r) {
          auto out = run(r);
          total.nodes += out.nodes;
          if (out.result) {
            total.result = std::move(out.result);
            return total;
          }
        }
        return total;
      }
      std::vector<std::optional<Result>> results(count);
      std::atomic<std::size_t>           next{0};
      std::atomic<std::size_t>           best{count};
      std::atomic<std::uint64_t>         nodes{0};
      {
        std::vector<std::jthread> workers;
        for (unsigned j = 0; j < jobs; ++j) {
          workers.emplace_back([&] {
            while (true) {
              auto const r = next.fetch_add(1);
              if (r >= count || r > best.load()) {
                return;
              }
              auto out = run(r);
              nodes += out.nodes;
              if (out.result) {
                results[r] = std::move(out.result);
                auto seen  = best.load();
                while (r < seen && !best.compare_exchange_weak(seen, r)) {
                }
              }
            }
          });
        }
      }
      total.nodes = nodes.load();
      if (best.load() < count) {
        total.result = std::move(results[best.load()]);
      }
      return total;
    }

    class UnsignedSearch {
     public:
      UnsignedSearch(KeySpace const& ks, std::size_t n)
          : _ks(ks), _n(static_cast<std::int64_t>(n)), _d(ks.size) {}

      bool run(std::size_t root) {
        _root = root;
        add_u(root, 1);
        return dfs();
      }

      std::vector<std::size_t> U, V;
      std::uint64_t            nodes = 0;

     private:
      void add_u(std::size_t p, std::int64_t sign) {
        _d.bump(_ks.id[p], sign);
        _d.bump(_ks.id_a[p], sign);
        if (sign > 0) {
          U.push_back(p);
        } else {
          U.pop_back();
        }
      }
      void add_v(std::size_t p, std::int64_t sign) {
        _d.bump(_ks.id[p], -sign);
        _d.bump(_ks.id_b[p], -sign);
        if (sign > 0) {
          V.push_back(p);
        } else {
          V.pop_back();
        }
      }

      bool dfs() {
        ++nodes;
        if (_d.nonzero().empty()) {
          return true;
        }
        auto const u_left = _n - static_cast<std::int64_t>(U.size());
        auto const v_left = _n - static_cast<std::int64_t>(V.size());
        if (_d.positive_mass() > 2 * v_left
            || _d.negative_mass() > 2 * u_left) {
          return false;
        }
        auto const k = *_d.nonzero().begin();
        if (_d[k] > 0) {
          for (auto p : _ks.v_cands[k]) {
            add_v(p, 1);
            if (dfs()) {
              return true;
            }
            add_v(p, -1);
          }
        } else {
          for (auto p : _ks.u_cands[k]) {
            if (p < _root) {
              continue;
            }
            add_u(p, 1);
            if (dfs()) {
              return true;
            }
            add_u(p, -1);
          }
        }
        return false;
      }

      KeySpace const& _ks;
      std::int64_t    _n;
      Deficit         _d;
      std::size_t     _root = 0;
    };

    struct SignedRoot {
      bool        on_u;
      std::size_t p;
      int         coefficient;
    };

    class SignedSearch {
     public:
      SignedSearch(KeySpace const& ks,
                   std::size_t     n,
                   int             sign_a,
                   int             sign_b,
                   int             bound)
          : _ks(ks),
            _n(n),
            _sign_a(sign_a),
            _sign_b(sign_b),
            _d(ks.size),
            _used_u(ks.id.size(), 0),
            _used_v(ks.id.size(), 0) {
        for (int c = 1; c <= bound; ++c) {
          _coefficients.push_back(c);
          _coefficients.push_back(-c);
        }
      }

      bool run(SignedRoot const& root) {
        _root = root;
        set(root.on_u, root.p, root.coefficient);
        return dfs();
      }

      std::vector<std::pair<std::size_t, int>> U, V;
      std::uint64_t                            nodes = 0;

     private:
      void set(bool on_u, std::size_t p, int c) {
        if (on_u) {
          _d.bump(_ks.id[p], c);
          _d.bump(_ks.id_a[p], _sign_a * c);
          _used_u[p] = 1;
          U.emplace_back(p, c);
        } else {
          _d.bump(_ks.id[p], -c);
          _d.bump(_ks.id_b[p], -_sign_b * c);
          _used_v[p] = 1;
          V.emplace_back(p, c);
        }
      }
      void unset(bool on_u) {
        auto& side        = on_u ? U : V;
        auto [p, c]       = side.back();
        side.pop_back();
        if (on_u) {
          _d.bump(_ks.id[p], -c);
          _d.bump(_ks.id_a[p], -_sign_a * c);
          _used_u[p] = 0;
        } else {
          _d.bump(_ks.id[p], c);
          _d.bump(_ks.id_b[p], _sign_b * c);
          _used_v[p] = 0;
        }
      }

      bool try_side(bool on_u, std::size_t k) {
        auto const& cands = on_u ? _ks.u_cands[k] : _ks.v_cands[k];
        auto const& used  = on_u ? _used_u : _used_v;
        for (auto p : cands) {
          if (used[p] != 0 || (_root.on_u == on_u && p <= _root.p)) {
            continue;
          }
          for (int c : _coefficients) {
            set(on_u, p, c);
            if (dfs()) {
              return true;
            }
            unset(on_u);
          }
        }
        return false;
      }

      bool dfs() {
        ++nodes;
        if (_d.nonzero().empty()) {
          return true;
        }
        bool const  u_open = _root.on_u && U.size() < _n;
        bool const  v_open = V.size() < _n;
        std::size_t capacity
            = (u_open ? _n - U.size() : 0) + (v_open ? _n - V.size() : 0);
        // Each new term touches at most two keys.
        if (_d.nonzero().size() > 2 * capacity) {
          return false;
        }
        auto const k = *_d.nonzero().begin();
        return (u_open && try_side(true, k)) || (v_open && try_side(false, k));
      }

      KeySpace const&   _ks;
      std::size_t       _n;
      int               _sign_a;
      int               _sign_b;
      Deficit           _d;
      std::vector<char> _used_u, _used_v;
      std::vector<int>  _coefficients;
      SignedRoot        _root{true, 0, 1};
    };

    std::vector<Element> sorted_by_key(Backend const&       backend,
                                       std::vector<Element> xs) {
      std::stable_sort(xs.begin(), xs.end(), [&](auto const& x, auto const& y) {
        return backend.key_less(backend.key(x), backend.key(y));
      });
      return xs;
    }

    Word ab_letter(char label, int exponent) {
      return letter_word(Generator{std::string(1, label), 0}, exponent);
    }
  }  // namespace

  std::vector<Element> enumerate_pool(Backend const&                backend,
                                      std::vector<Generator> const& generators,
                                      std::size_t                   max_length) {
    std::vector<Element> steps;
    for (auto const& g : generators) {
      steps.push_back(backend.from_word(letter_word(g, 1)));
      if (backend.is_group()) {
        steps.push_back(backend.from_word(letter_word(g, -1)));
      }
    }
    std::unordered_set<std::string> seen{backend.identity_key()};
    std::vector<Element>            pool{backend.identity()};
    std::vector<Element>            layer = pool;
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::vector<Element> next;
      for (auto const& e : layer) {
        for (auto const& s : steps) {
          auto x = backend.multiply(e, s);
          if (seen.insert(backend.key(x)).second) {
            next.push_back(x);
          }
        }
      }
      pool.insert(pool.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return sorted_by_key(backend, std::move(pool));
  }

  OreInstance OreInstance::make(BackendPtr           backend,
                                Element              a,
                                Element              b,
                                std::size_t          max_support,
                                std::vector<Element> pool) {
    if (max_support == 0) {
      throw Error("max support must be positive");
    }
    pool = sorted_by_key(*backend, std::move(pool));
    std::set<std::string> keys;
    for (auto const& p : pool) {
      if (!keys.insert(backend->key(p)).second) {
        throw Error("pool has a duplicate element " + backend->key(p));
      }
    }
    if (keys.count(backend->identity_key()) == 0) {
      throw Error("pool must contain the identity");
    }
    return OreInstance{std::move(backend), std::move(a), std::move(b),
                       max_support, std::move(pool)};
  }

  Solution make_verified_solution(Backend const&       backend,
                                  BackendPtr const&    ptr,
                                  Element const&       a,
                                  Element const&       b,
                                  std::vector<Element> U,
                                  std::vector<Element> V) {
    U        = sorted_by_key(backend, std::move(U));
    V        = sorted_by_key(backend, std::move(V));
    auto lhs = sr_left_factor(a, SemiringElement::from_multiset(ptr, U));
    auto rhs = sr_left_factor(b, SemiringElement::from_multiset(ptr, V));
    if (U.empty() || U.size() != V.size() || !sr_equals(lhs, rhs)) {
      throw VerificationError("(1+a)U != (1+b)V for a claimed solution");
    }
    return Solution{std::move(U), std::move(V), std::move(lhs), std::move(rhs)};
  }

  SearchReport search_common_multiple(OreInstance const& inst, unsigned jobs) {
    KeySpace const ks(inst);
    using Found    = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;
    auto outcome
        = first_hit<Found>(inst.pool.size(), jobs, [&](std::size_t root) {
            UnsignedSearch      search(ks, inst.max_support);
            RootOutcome<Found>  out;
            if (search.run(root)) {
              out.result = Found{search.U, search.V};
            }
            out.nodes = search.nodes;
            return out;
          });
    SearchReport report;
    report.pool_size = inst.pool.size();
    report.nodes     = outcome.nodes;
    if (outcome.result) {
      std::vector<Element> U, V;
      for (auto p : outcome.result->first) {
        U.push_back(inst.pool[p]);
      }
      for (auto p : outcome.result->second) {
        V.push_back(inst.pool[p]);
      }
      report.solution = make_verified_solution(
          *inst.backend, inst.backend, inst.a, inst.b, std::move(U), std::move(V));
    }
    return report;
  }

  RelationGraph build_relation_graph(Backend const&  backend,
                                     Element const&  a,
                                     Element const&  b,
                                     Solution const& sol) {
    struct Slot {
      Element     element;
      std::size_t kind;  // 0: g_i, 1: label * g_i
      std::size_t i;
    };
    using Slots = std::map<std::string, std::vector<Slot>, KeyOrder>;
    auto collect = [&](std::vector<Element> const& side, Element const& label) {
      Slots slots(KeyOrder{&backend});
      for (std::size_t kind = 0; kind < 2; ++kind) {
        for (std::size_t i = 0; i < side.size(); ++i) {
          auto x = kind == 0 ? side[i] : backend.multiply(label, side[i]);
          auto k = backend.key(x);
          slots[k].push_back(Slot{std::move(x), kind, i});
        }
      }
      return slots;
    };
    auto const u_slots = collect(sol.U, a);
    auto const v_slots = collect(sol.V, b);
    if (sol.U.size() != sol.V.size() || u_slots.size() != v_slots.size()) {
      throw VerificationError("vertex multisets of the two sides differ");
    }

    RelationGraph graph;
    std::vector<std::array<std::size_t, 2>> u_vertex(sol.U.size());
    std::vector<std::array<std::size_t, 2>> v_vertex(sol.V.size());
    auto v_it = v_slots.begin();
    for (auto const& [key, us] : u_slots) {
      if (v_it->first != key || v_it->second.size() != us.size()) {
        throw VerificationError("vertex multisets of the two sides differ");
      }
      for (std::size_t j = 0; j < us.size(); ++j) {
        auto const id = graph.vertices.size();
        graph.vertices.push_back(RelationGraph::Vertex{us[j].element, key, j});
        u_vertex[us[j].i][us[j].kind] = id;
        auto const& vs               = v_it->second[j];
        v_vertex[vs.i][vs.kind]      = id;
      }
      ++v_it;
    }
    for (auto const& uv : u_vertex) {
      graph.a_edges.push_back(RelationGraph::Edge{uv[1], uv[0]});
    }
    for (auto const& vv : v_vertex) {
      graph.b_edges.push_back(RelationGraph::Edge{vv[1], vv[0]});
    }
    check_degrees(graph);
    return graph;
  }

  void check_degrees(RelationGraph const& graph) {
    std::vector<int> a_deg(graph.vertices.size(), 0);
    std::vector<int> b_deg(graph.vertices.size(), 0);
    for (auto const& e : graph.a_edges) {
      ++a_deg.at(e.source);
      ++a_deg.at(e.target);
    }
    for (auto const& e : graph.b_edges) {
      ++b_deg.at(e.source);
      ++b_deg.at(e.target);
    }
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
      if (a_deg[v] != 1 || b_deg[v] != 1) {
        throw VerificationError("vertex " + graph.vertices[v].key
                                + " breaks the one-a-one-b incidence rule");
      }
    }
  }

  std::vector<AlternatingRelation> extract_cycles(RelationGraph const& graph,
                                                  Backend const&       backend,
                                                  Element const&       a,
                                                  Element const&       b) {
    check_degrees(graph);
    auto const       n = graph.vertices.size();
    std::vector<std::size_t> a_of(n), b_of(n);
    for (std::size_t e = 0; e < graph.a_edges.size(); ++e) {
      a_of[graph.a_edges[e].source] = a_of[graph.a_edges[e].target] = e;
    }
    for (std::size_t e = 0; e < graph.b_edges.size(); ++e) {
      b_of[graph.b_edges[e].source] = b_of[graph.b_edges[e].target] = e;
    }

    std::vector<char>                visited(n, 0);
    std::vector<AlternatingRelation> out;
    for (std::size_t start = 0; start < n; ++start) {
      if (visited[start] != 0) {
        continue;
      }
      AlternatingRelation rel;
      std::size_t         v          = start;
      bool                use_a_edge = true;
      do {
        visited[v] = 1;
        rel.cycle.push_back(v);
        auto const& edge = use_a_edge ? graph.a_edges[a_of[v]]
                                      : graph.b_edges[b_of[v]];
        bool const  with = edge.source == v;
        rel.word
            = rel.word * ab_letter(use_a_edge ? 'a' : 'b', with ? 1 : -1);
        v          = with ? edge.target : edge.source;
        use_a_edge = !use_a_edge;
      } while (v != start);
      if (!backend.relation_holds(a, b, rel.word)) {
        throw VerificationError("cycle label " + print_word(rel.word)
                                + " is not a relation");
      }
      rel.verified = true;
      out.push_back(std::move(rel));
    }
    return out;
  }

  bool is_ab_alternating(Word const& w) {
    if (w.size() < 2 || w.size() % 2 != 0) {
      return false;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto const& name = w[i].gen.name;
      if ((name != "a" && name != "b") || w[i].gen.index != 0
          || name == w[(i + 1) % w.size()].gen.name) {
        return false;
      }
    }
    return true;
  }

  std::optional<Solution>
  relation_to_solution(BackendPtr const&           backend,
                       Element const&              a,
                       Element const&              b,
                       Word const&                 relation,
                       std::vector<Element> const& translations) {
    if (!is_ab_alternating(relation)) {
      throw Error("'" + print_word(relation)
                  + "' is not an alternating word in a, b");
    }
    if (!backend->relation_holds(a, b, relation)) {
      throw Error("'" + print_word(relation)
                  + "' does not evaluate to the identity");
    }
    for (auto const& t : translations) {
      std::vector<Element> U, V;
      Element              v  = t;
      bool                 ok = true;
      for (auto const& l : relation.letters) {
        bool const     is_a  = l.gen.name == "a";
        Element const& label = is_a ? a : b;
        auto&          side  = is_a ? U : V;
        if (l.exponent > 0) {
          // v = label * next; the edge's target is next.
          auto next = backend->left_divide(label, v);
          if (!next) {
            ok = false;
            break;
          }
          side.push_back(*next);
          v = std::move(*next);
        } else {
          // next = label * v; the edge's target is v.
          side.push_back(v);
          v = backend->multiply(label, v);
        }
      }
      if (!ok || !backend->equals(v, t)) {
        continue;
      }
      return make_verified_solution(
          *backend, backend, a, b, std::move(U), std::move(V));
    }
    return std::nullopt;
  }

  SignedReport search_signed(OreInstance const& inst,
                             int                sign_a,
                             int                sign_b,
                             int                bound,
                             unsigned           jobs) {
    if ((sign_a != 1 && sign_a != -1) || (sign_b != 1 && sign_b != -1)) {
      throw Error("signs must be +1 or -1");
    }
    if (bound < 1) {
      throw Error("coefficient bound must be positive");
    }
    KeySpace const          ks(inst);
    std::vector<SignedRoot> roots;
    for (bool on_u : {true, false}) {
      for (std::size_t p = 0; p < inst.pool.size(); ++p) {
        for (int c = 1; c <= bound; ++c) {
          roots.push_back(SignedRoot{on_u, p, c});
        }
      }
    }
    using Found  = std::pair<std::vector<std::pair<std::size_t, int>>,
                            std::vector<std::pair<std::size_t, int>>>;
    auto outcome = first_hit<Found>(roots.size(), jobs, [&](std::size_t r) {
      SignedSearch       search(ks, inst.max_support, sign_a, sign_b, bound);
      RootOutcome<Found> out;
      if (search.run(roots[r])) {
        out.result = Found{search.U, search.V};
      }
      out.nodes = search.nodes;
      return out;
    });

    SignedReport report;
    report.pool_size = inst.pool.size();
    report.nodes     = outcome.nodes;
    if (outcome.result) {
      auto u = SemiringElement::zero(inst.backend, Coefficients::integer);
      auto v = u;
      for (auto [p, c] : outcome.result->first) {
        u.add_term(inst.pool[p], c);
      }
      for (auto [p, c] : outcome.result->second) {
        v.add_term(inst.pool[p], c);
      }
      auto lhs = sr_left_factor(inst.a, sign_a, u);
      auto rhs = sr_left_factor(inst.b, sign_b, v);
      if ((u.is_zero() && v.is_zero()) || !sr_equals(lhs, rhs)) {
        throw VerificationError("signed search produced a non-solution");
      }
      report.solution = SignedSolution{
          std::move(u), std::move(v), std::move(lhs), std::move(rhs)};
    }
    return report;
  }

}  // namespace oreslice
