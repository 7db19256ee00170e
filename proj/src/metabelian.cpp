#include "oreslice/metabelian.hpp"

#include <charconv>

#include "oreslice/abelian.hpp"
#include "oreslice/error.hpp"

namespace oreslice {

  namespace {
    void add_flow(std::map<FlowEdge, std::int64_t>& flow,
                  FlowEdge const&                   edge,
                  std::int64_t                      value) {
      auto [it, inserted] = flow.try_emplace(edge, value);
      if (!inserted) {
        it->second += value;
        if (it->second == 0) {
          flow.erase(it);
        }
      } else if (value == 0) {
        flow.erase(it);
      }
    }

    IntVector translate(IntVector v, IntVector const& by, std::int64_t sign) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] += sign * by[i];
      }
      return v;
    }

    void check_rank(FlowElement const& x, FlowElement const& y) {
      if (x.t.size() != y.t.size()) {
        throw Error("metabelian rank mismatch");
      }
    }
  }  // namespace

  FlowElement mb_identity(std::size_t m) {
    return FlowElement{IntVector(m, 0), {}};
  }

  FlowElement mb_from_word(Word const& w, std::size_t m) {
    auto const  alph = Alphabet::named(m);
    FlowElement x    = mb_identity(m);
    for (auto const& l : w.letters) {
      auto const d = alph.ordinal(l.gen);
      if (l.exponent > 0) {
        add_flow(x.flow, FlowEdge{x.t, d + 1}, 1);
        ++x.t[d];
      } else {
        --x.t[d];
        add_flow(x.flow, FlowEdge{x.t, d + 1}, -1);
      }
    }
    return x;
  }

  FlowElement mb_multiply(FlowElement const& x, FlowElement const& y) {
    check_rank(x, y);
    FlowElement r{translate(x.t, y.t, 1), x.flow};
    for (auto const& [edge, value] : y.flow) {
      add_flow(r.flow, FlowEdge{translate(edge.base, x.t, 1), edge.direction},
               value);
    }
    return r;
  }

  FlowElement mb_inverse(FlowElement const& x) {
    FlowElement r{translate(IntVector(x.t.size(), 0), x.t, -1), {}};
    for (auto const& [edge, value] : x.flow) {
      r.flow.emplace(FlowEdge{translate(edge.base, x.t, -1), edge.direction},
                     -value);
    }
    return r;
  }

  bool mb_is_identity(FlowElement const& x) {
    for (auto c : x.t) {
      if (c != 0) {
        return false;
      }
    }
    return x.flow.empty();
  }

  bool mb_boundary_holds(FlowElement const& x) {
    std::map<IntVector, std::int64_t> net;
    for (auto const& [edge, value] : x.flow) {
      if (value == 0 || edge.direction == 0
          || edge.direction > x.t.size() || edge.base.size() != x.t.size()) {
        return false;
      }
      auto head = edge.base;
      ++head[edge.direction - 1];
      net[edge.base] += value;
      net[head] -= value;
    }
    net[IntVector(x.t.size(), 0)] -= 1;
    net[x.t] += 1;
    for (auto const& [v, k] : net) {
      if (k != 0) {
        return false;
      }
    }
    return true;
  }

  std::string print_flow(FlowElement const& x) {
    std::string out = "t=" + print_vector(x.t) + "; flow={";
    bool        first = true;
    for (auto const& [edge, value] : x.flow) {
      if (!first) {
        out += ", ";
      }
      first = false;
      out += "(" + print_vector(edge.base) + ","
             + std::to_string(edge.direction) + "):" + std::to_string(value);
    }
    return out + "}";
  }

  FlowElement parse_flow(std::string_view text, std::size_t m) {
    auto expect = [&](std::size_t& pos, std::string_view token) {
      if (text.substr(pos, token.size()) != token) {
        throw ParseError("expected '" + std::string(token) + "'", pos);
      }
      pos += token.size();
    };
    auto integer = [&](std::size_t& pos) {
      std::int64_t value = 0;
      auto [ptr, ec]     = std::from_chars(
          text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc()) {
        throw ParseError("expected integer", pos);
      }
      pos = static_cast<std::size_t>(ptr - text.data());
      return value;
    };

    std::size_t pos = 0;
    FlowElement x;
    expect(pos, "t=");
    x.t = parse_vector(text, pos);
    expect(pos, "; flow={");
    while (pos < text.size() && text[pos] != '}') {
      if (!x.flow.empty()) {
        expect(pos, ", ");
      }
      expect(pos, "(");
      auto base = parse_vector(text, pos);
      expect(pos, ",");
      auto const dir = integer(pos);
      expect(pos, "):");
      auto const value = integer(pos);
      if (dir < 1 || static_cast<std::size_t>(dir) > m || base.size() != m
          || value == 0) {
        throw ParseError("bad flow entry", pos);
      }
      if (!x.flow
               .emplace(FlowEdge{std::move(base),
                                 static_cast<std::size_t>(dir)},
                        value)
               .second) {
        throw ParseError("duplicate flow edge", pos);
      }
    }
    expect(pos, "}");
    if (pos != text.size() || x.t.size() != m) {
      throw ParseError("malformed flow element", pos);
    }
    if (!mb_boundary_holds(x)) {
      throw Error("flow violates the boundary condition");
    }
    if (print_flow(x) != text) {
      throw Error("non-canonical flow key '" + std::string(text) + "'");
    }
    return x;
  }

  MetabelianBackend::MetabelianBackend(std::size_t rank)
      : _rank(rank), _alphabet(Alphabet::named(rank)) {}

  std::string MetabelianBackend::name() const {
    return "mb:" + std::to_string(_rank);
  }

  Element MetabelianBackend::from_word(Word const& w) const {
    return mb_from_word(w, _rank);
  }

  Element MetabelianBackend::multiply(Element const& x,
                                      Element const& y) const {
    return mb_multiply(std::get<FlowElement>(x), std::get<FlowElement>(y));
  }

  Element MetabelianBackend::identity() const {
    return mb_identity(_rank);
  }

  std::string MetabelianBackend::key(Element const& x) const {
    return print_flow(std::get<FlowElement>(x));
  }

  Element MetabelianBackend::from_key(std::string_view key) const {
    return parse_flow(key, _rank);
  }

  Element MetabelianBackend::inverse(Element const& x) const {
    return mb_inverse(std::get<FlowElement>(x));
  }

}  // namespace oreslice
