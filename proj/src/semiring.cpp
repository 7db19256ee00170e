#include "oreslice/semiring.hpp"

#include "oreslice/error.hpp"

namespace oreslice {

  namespace {
    void check_compatible(SemiringElement const& x, SemiringElement const& y) {
      if (x.mode() != y.mode()) {
        throw Error("cannot combine Z+[M] and Z[M] elements");
      }
      if (x.backend().name() != y.backend().name()) {
        throw Error("backend mismatch: " + x.backend().name() + " vs "
                    + y.backend().name());
      }
    }
  }  // namespace

  SemiringElement::SemiringElement(BackendPtr backend, Coefficients mode)
      : _backend(std::move(backend)),
        _mode(mode),
        _terms(KeyOrder{_backend.get()}) {}

  SemiringElement SemiringElement::zero(BackendPtr backend, Coefficients mode) {
    return SemiringElement(std::move(backend), mode);
  }

  SemiringElement SemiringElement::one(BackendPtr backend, Coefficients mode) {
    auto id = backend->identity();
    return monomial(std::move(backend), std::move(id), 1, mode);
  }

  SemiringElement SemiringElement::monomial(BackendPtr   backend,
                                            Element      g,
                                            Coefficient  c,
                                            Coefficients mode) {
    SemiringElement x(std::move(backend), mode);
    x.add_term(g, c);
    return x;
  }

  SemiringElement
  SemiringElement::from_multiset(BackendPtr                  backend,
                                 std::vector<Element> const& elements,
                                 Coefficients                mode) {
    SemiringElement x(std::move(backend), mode);
    for (auto const& g : elements) {
      x.add_term(g, 1);
    }
    return x;
  }

  void SemiringElement::add_term(Element const& g, Coefficient const& c) {
    if (c == 0) {
      return;
    }
    if (_mode == Coefficients::positive && c < 0) {
      throw Error("negative coefficient in Z+[M]");
    }
    auto k  = _backend->key(g);
    auto it = _terms.find(k);
    if (it == _terms.end()) {
      _terms.emplace(std::move(k), Term{g, c});
      return;
    }
    it->second.coefficient += c;
    if (it->second.coefficient == 0) {
      _terms.erase(it);
    }
  }

  Coefficient SemiringElement::mass() const {
    Coefficient total = 0;
    for (auto const& [k, t] : _terms) {
      total += t.coefficient;
    }
    return total;
  }

  SemiringElement sr_add(SemiringElement const& x, SemiringElement const& y) {
    check_compatible(x, y);
    auto r = x;
    for (auto const& [k, t] : y.terms()) {
      r.add_term(t.element, t.coefficient);
    }
    return r;
  }

  SemiringElement sr_mul(SemiringElement const& x, SemiringElement const& y) {
    check_compatible(x, y);
    SemiringElement r(x.backend_ptr(), x.mode());
    auto const&     backend = x.backend();
    for (auto const& [kx, tx] : x.terms()) {
      for (auto const& [ky, ty] : y.terms()) {
        r.add_term(backend.multiply(tx.element, ty.element),
                   tx.coefficient * ty.coefficient);
      }
    }
    return r;
  }

  SemiringElement sr_negate(SemiringElement const& x) {
    if (x.mode() != Coefficients::integer) {
      throw Error("negation is only defined in Z[M]");
    }
    SemiringElement r(x.backend_ptr(), x.mode());
    for (auto const& [k, t] : x.terms()) {
      r.add_term(t.element, -t.coefficient);
    }
    return r;
  }

  SemiringElement sr_sub(SemiringElement const& x, SemiringElement const& y) {
    check_compatible(x, y);
    return sr_add(x, sr_negate(y));
  }

  bool sr_equals(SemiringElement const& x, SemiringElement const& y) {
    check_compatible(x, y);
    if (x.terms().size() != y.terms().size()) {
      return false;
    }
    auto it = y.terms().begin();
    for (auto const& [k, t] : x.terms()) {
      if (k != it->first || t.coefficient != it->second.coefficient) {
        return false;
      }
      ++it;
    }
    return true;
  }

  SemiringElement sr_left_factor(Element const& c, SemiringElement const& x) {
    return sr_left_factor(c, 1, x);
  }

  SemiringElement sr_left_factor(Element const&         c,
                                 int                    sign,
                                 SemiringElement const& x) {
    if (sign < 0 && x.mode() != Coefficients::integer) {
      throw Error("(1 - c) needs Z[M]");
    }
    auto        r       = x;
    auto const& backend = x.backend();
    for (auto const& [k, t] : x.terms()) {
      r.add_term(backend.multiply(c, t.element), sign * t.coefficient);
    }
    return r;
  }

  std::vector<Element> sr_as_multiset(SemiringElement const& x) {
    if (x.mode() != Coefficients::positive) {
      throw Error("multiset view needs Z+[M]");
    }
    std::vector<Element> out;
    for (auto const& [k, t] : x.terms()) {
      for (Coefficient i = 0; i < t.coefficient; ++i) {
        out.push_back(t.element);
      }
    }
    return out;
  }

  std::string sr_to_text(SemiringElement const& x) {
    if (x.is_zero()) {
      return "0";
    }
    std::string out;
    for (auto const& [k, t] : x.terms()) {
      if (!out.empty()) {
        out += " + ";
      }
      out += t.coefficient.str() + "*" + k;
    }
    return out;
  }

}  // namespace oreslice
