#ifndef ORESLICE_ORE_HPP_
#define ORESLICE_ORE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiring.hpp"

namespace oreslice {

  // All values of words of length <= max_length over `generators` (and their
  // inverses on group backends), deduplicated and sorted identity first,
  // then by canonical key.
  std::vector<Element> enumerate_pool(Backend const&                backend,
                                      std::vector<Generator> const& generators,
                                      std::size_t                   max_length);

  // Bounded instance of (1 + a) u = (1 + b) v with u, v supported on `pool`.
  struct OreInstance {
    BackendPtr           backend;
    Element              a;
    Element              b;
    std::size_t          max_support = 1;
    std::vector<Element> pool;

    // Sorts the pool canonically and checks its invariants.
    static OreInstance make(BackendPtr           backend,
                            Element              a,
                            Element              b,
                            std::size_t          max_support,
                            std::vector<Element> pool);
  };

  // Multisets U, V with (1 + a) U == (1 + b) V in Z+[M].
  struct Solution {
    std::vector<Element> U;
    std::vector<Element> V;
    SemiringElement      lhs;
    SemiringElement      rhs;
  };

  struct SearchReport {
    std::optional<Solution> solution;
    std::size_t             pool_size = 0;
    // Search-tree nodes visited; only meaningful when nothing was found,
    // where it does not depend on the number of jobs.
    std::uint64_t nodes = 0;
  };

  // Throws VerificationError unless the solution's two sides agree and
  // |U| == |V| >= 1.
  Solution make_verified_solution(Backend const&       backend,
                                  BackendPtr const&    ptr,
                                  Element const&       a,
                                  Element const&       b,
                                  std::vector<Element> U,
                                  std::vector<Element> V);

  // Exact-cover style backtracking on the deficit (1 + a) U - (1 + b) V.
  // Returns the first solution in search order; `jobs` workers split the
  // first branching decision and give the same answer as one.
  SearchReport search_common_multiple(OreInstance const& instance,
                                      unsigned           jobs = 1);

  struct RelationGraph {
    struct Vertex {
      Element     element;
      std::string key;
      std::size_t occurrence = 0;
    };
    // Edge from label * target to target.
    struct Edge {
      std::size_t source = 0;
      std::size_t target = 0;
    };
    std::vector<Vertex> vertices;
    std::vector<Edge>   a_edges;
    std::vector<Edge>   b_edges;
  };

  // Equal elements on the two sides are matched in sorted-stable order:
  // U-side slots g_i before a g_i, V-side slots h_i before b h_i.
  RelationGraph build_relation_graph(Backend const&  backend,
                                     Element const&  a,
                                     Element const&  b,
                                     Solution const& solution);

  // Throws VerificationError if some vertex lacks exactly one a- and one
  // b-incidence.
  void check_degrees(RelationGraph const& graph);

  struct AlternatingRelation {
    Word                     word;  // over a, b
    std::vector<std::size_t> cycle;  // vertex ids, starting at the minimum
    bool                     verified = false;
  };

  // One relation per cycle. Each cycle starts at its minimal vertex and
  // leaves it along the a-edge; moving from l*g to g reads l, moving back
  // reads l^-1. Throws VerificationError if a label fails to evaluate to the
  // identity.
  std::vector<AlternatingRelation> extract_cycles(RelationGraph const& graph,
                                                  Backend const& backend,
                                                  Element const& a,
                                                  Element const& b);

  // Cyclically alternating word over {a, b} of even length >= 2.
  bool is_ab_alternating(Word const& w);

  // Walks the relation's cycle from base point t for each t in `translations`
  // (in order) and returns the first walk whose vertices all lie in the
  // backend. Throws Error if the word is not an alternating relation.
  std::optional<Solution>
  relation_to_solution(BackendPtr const&           backend,
                       Element const&              a,
                       Element const&              b,
                       Word const&                 relation,
                       std::vector<Element> const& translations);

  // (1 + sign_a a) u = (1 + sign_b b) v in Z[M].
  struct SignedSolution {
    SemiringElement u;
    SemiringElement v;
    SemiringElement lhs;
    SemiringElement rhs;
  };

  struct SignedReport {
    std::optional<SignedSolution> solution;
    std::size_t                   pool_size = 0;
    std::uint64_t                 nodes     = 0;
  };

  // Coefficients range over [-bound, bound] \ {0}; u = v = 0 is excluded and
  // each of u, v has support at most max_support.
  SignedReport search_signed(OreInstance const& instance,
                             int                sign_a,
                             int                sign_b,
                             int                coefficient_bound,
                             unsigned           jobs = 1);

}  // namespace oreslice

#endif  // ORESLICE_ORE_HPP_
