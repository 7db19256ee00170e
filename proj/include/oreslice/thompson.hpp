#ifndef ORESLICE_THOMPSON_HPP_
#define ORESLICE_THOMPSON_HPP_

#include <string>

#include "backend.hpp"

namespace oreslice {

  // Reduced tree-pair diagrams for Thompson's group F. Trees are preorder
  // strings over 'C'/'L'; leaf k of the domain tree maps to leaf k of the
  // range tree. Products read left to right: f_multiply(x, y) applies x
  // first, so that x_j x_i = x_i x_{j+1} for i < j.
  TreePair f_identity();
  TreePair f_from_generator(std::size_t i);
  TreePair f_multiply(TreePair const& x, TreePair const& y);
  TreePair f_inverse(TreePair const& x);
  TreePair f_reduce(TreePair const& x);
  bool     f_is_identity(TreePair const& x);
  TreePair f_from_word(Word const& w);

  // Structural validity of a preorder tree string.
  bool        is_tree(std::string_view preorder);
  std::size_t leaf_count(std::string_view preorder);

  std::string print_tree_pair(TreePair const& x);
  TreePair    parse_tree_pair(std::string_view text);

  class ThompsonBackend final : public Backend {
   public:
    ThompsonBackend();

    std::string name() const override {
      return "f";
    }
    Alphabet const& alphabet() const override {
      return _alphabet;
    }
    bool is_group() const override {
      return true;
    }
    Element     from_word(Word const& w) const override;
    Element     multiply(Element const& x, Element const& y) const override;
    Element     identity() const override;
    std::string key(Element const& x) const override;
    Element     from_key(std::string_view key) const override;
    Element     inverse(Element const& x) const override;

   private:
    Alphabet _alphabet;
  };

}  // namespace oreslice

#endif  // ORESLICE_THOMPSON_HPP_
