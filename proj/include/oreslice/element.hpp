#ifndef ORESLICE_ELEMENT_HPP_
#define ORESLICE_ELEMENT_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace oreslice {

  using IntVector = std::vector<std::int64_t>;

  // Element of the free abelian group Z^m.
  struct VectorElement {
    IntVector t;

    auto operator<=>(VectorElement const&) const = default;
  };

  // Directed Cayley-graph edge of Z^m from `base` to base + e_direction.
  // Directions are 1-based.
  struct FlowEdge {
    IntVector   base;
    std::size_t direction = 1;

    auto operator<=>(FlowEdge const&) const = default;
  };

  // Element of the free metabelian group of rank m: abelianization image
  // plus the net signed traversal count of every edge of the word's path.
  struct FlowElement {
    IntVector                         t;
    std::map<FlowEdge, std::int64_t> flow;

    auto operator<=>(FlowElement const&) const = default;
  };

  // Element of Thompson's group F as a pair of binary trees, each stored
  // as a preorder string over 'C' (caret) and 'L' (leaf).
  struct TreePair {
    std::string domain = "L";
    std::string range  = "L";

    auto operator<=>(TreePair const&) const = default;
  };

  // Element of the positive monoid of F: x_{i1} x_{i2} ... with i1 <= i2 <= ...
  struct PositiveNormalForm {
    std::vector<std::size_t> indices;

    auto operator<=>(PositiveNormalForm const&) const = default;
  };

  using Element
      = std::variant<VectorElement, FlowElement, TreePair, PositiveNormalForm>;

}  // namespace oreslice

#endif  // ORESLICE_ELEMENT_HPP_
