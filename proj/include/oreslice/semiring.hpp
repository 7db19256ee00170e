#ifndef ORESLICE_SEMIRING_HPP_
#define ORESLICE_SEMIRING_HPP_

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "backend.hpp"

namespace oreslice {

  using Coefficient = boost::multiprecision::cpp_int;

  // Coefficients::positive is Z+[M]: every stored coefficient is >= 1.
  // Coefficients::integer is Z[M].
  enum class Coefficients { positive, integer };

  // Finite formal sum of backend elements. Terms are keyed by canonical key
  // and kept in the backend's canonical order; zero coefficients are never
  // stored.
  class SemiringElement {
   public:
    struct Term {
      Element     element;
      Coefficient coefficient;
    };
    using TermMap = std::map<std::string, Term, KeyOrder>;

    SemiringElement(BackendPtr backend, Coefficients mode);

    static SemiringElement zero(BackendPtr backend, Coefficients mode);
    static SemiringElement one(BackendPtr backend, Coefficients mode);
    static SemiringElement monomial(BackendPtr  backend,
                                    Element     g,
                                    Coefficient c    = 1,
                                    Coefficients mode = Coefficients::positive);
    // Sum of the elements with multiplicity.
    static SemiringElement from_multiset(BackendPtr                  backend,
                                         std::vector<Element> const& elements,
                                         Coefficients mode = Coefficients::positive);

    // Adds c*g in place.
    void add_term(Element const& g, Coefficient const& c);

    Backend const& backend() const {
      return *_backend;
    }
    BackendPtr const& backend_ptr() const {
      return _backend;
    }
    Coefficients mode() const {
      return _mode;
    }
    TermMap const& terms() const {
      return _terms;
    }
    bool is_zero() const {
      return _terms.empty();
    }
    // Sum of the coefficients.
    Coefficient mass() const;

   private:
    BackendPtr   _backend;
    Coefficients _mode;
    TermMap      _terms;
  };

  SemiringElement sr_add(SemiringElement const& x, SemiringElement const& y);
  SemiringElement sr_mul(SemiringElement const& x, SemiringElement const& y);
  // Integer mode only.
  SemiringElement sr_sub(SemiringElement const& x, SemiringElement const& y);
  SemiringElement sr_negate(SemiringElement const& x);
  bool sr_equals(SemiringElement const& x, SemiringElement const& y);

  // (1 + c) * x
  SemiringElement sr_left_factor(Element const& c, SemiringElement const& x);
  // (1 + sign * c) * x, sign = +1 or -1; -1 needs integer mode.
  SemiringElement sr_left_factor(Element const&         c,
                                 int                    sign,
                                 SemiringElement const& x);

  // Positive mode only: each element repeated by its coefficient.
  std::vector<Element> sr_as_multiset(SemiringElement const& x);

  // "c1*KEY1 + c2*KEY2 + ..." in canonical key order; "0" for zero.
  std::string sr_to_text(SemiringElement const& x);

  inline SemiringElement operator+(SemiringElement const& x,
                                   SemiringElement const& y) {
    return sr_add(x, y);
  }
  inline SemiringElement operator*(SemiringElement const& x,
                                   SemiringElement const& y) {
    return sr_mul(x, y);
  }
  inline bool operator==(SemiringElement const& x, SemiringElement const& y) {
    return sr_equals(x, y);
  }

}  // namespace oreslice

#endif  // ORESLICE_SEMIRING_HPP_
