#ifndef ORESLICE_METABELIAN_HPP_
#define ORESLICE_METABELIAN_HPP_

#include <string>

#include "backend.hpp"

namespace oreslice {

  // A word w is trivial in the free metabelian group iff its path in the
  // Cayley graph of Z^m closes up and crosses every edge as often forwards
  // as backwards. FlowElement records exactly that data.
  FlowElement mb_from_word(Word const& w, std::size_t m);
  FlowElement mb_multiply(FlowElement const& x, FlowElement const& y);
  FlowElement mb_inverse(FlowElement const& x);
  FlowElement mb_identity(std::size_t m);
  bool        mb_is_identity(FlowElement const& x);

  // Net outflow at every vertex is [v == 0] - [v == t].
  bool mb_boundary_holds(FlowElement const& x);

  std::string print_flow(FlowElement const& x);
  FlowElement parse_flow(std::string_view text, std::size_t m);

  class MetabelianBackend final : public Backend {
   public:
    explicit MetabelianBackend(std::size_t rank = 2);

    std::string     name() const override;
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
    std::size_t _rank;
    Alphabet    _alphabet;
  };

}  // namespace oreslice

#endif  // ORESLICE_METABELIAN_HPP_
