#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "oreslice/error.hpp"
#include "oreslice/semiring.hpp"

using namespace oreslice;

namespace {
  Alphabet const ab = Alphabet::named(2);

  struct Fixture {
    BackendPtr backend;
    Element    el(std::string_view text) const {
      return backend->from_word(parse_word(text, backend->alphabet()));
    }
    SemiringElement mono(std::string_view text, Coefficient c = 1,
                         Coefficients mode = Coefficients::positive) const {
      return SemiringElement::monomial(backend, el(text), c, mode);
    }
    SemiringElement one(Coefficients mode = Coefficients::positive) const {
      return SemiringElement::one(backend, mode);
    }
    SemiringElement zero(Coefficients mode = Coefficients::positive) const {
      return SemiringElement::zero(backend, mode);
    }
  };

  void check_stored(SemiringElement const& x) {
    for (auto const& [key, term] : x.terms()) {
      CHECK(term.coefficient != 0);
      if (x.mode() == Coefficients::positive) {
        CHECK(term.coefficient > 0);
      }
      CHECK(x.backend().key(term.element) == key);
    }
  }
}  // namespace

TEST_CASE("expansions over Z^2") {
  Fixture const z{make_backend("zm:2")};
  auto const lhs = (z.one() + z.mono("a")) * (z.one() + z.mono("b"));
  CHECK(lhs == z.one() + z.mono("a") + z.mono("b") + z.mono("a b"));
  CHECK(sr_to_text(lhs) == "1*(0,0) + 1*(0,1) + 1*(1,0) + 1*(1,1)");
  CHECK(sr_to_text(z.zero()) == "0");
  auto const x = z.mono("a") + z.mono("b", 2);
  CHECK(x + z.zero() == x);
  CHECK(x * z.one() == x);
  CHECK(z.one() * x == x);
  CHECK(x.mass() == 3);
}

TEST_CASE("supports merge through normal forms") {
  Fixture const m{make_backend("posmon")};
  auto const sum = m.mono("x1 x0") + m.mono("x0 x2");
  REQUIRE(sum.terms().size() == 1);
  CHECK(sum == m.mono("x0 x2", 2));
}

TEST_CASE("left factor") {
  Fixture const z{make_backend("zm:2")};
  auto const x = z.one() + z.mono("b");
  CHECK(sr_left_factor(z.el("a"), x) == z.one() + z.mono("a") + z.mono("b") + z.mono("a b"));
  CHECK(sr_left_factor(z.backend->identity(), x) == x + x);
  CHECK(sr_left_factor(z.el("a"), x).terms().size() <= 2 * x.terms().size());

  auto const xi = z.one(Coefficients::integer) + z.mono("b", 1, Coefficients::integer);
  CHECK(sr_left_factor(z.el("a"), -1, xi)
        == sr_sub(xi, z.mono("a", 1, Coefficients::integer) * xi));

  Fixture const m{make_backend("posmon")};
  auto const y = m.one() + m.mono("x1");
  CHECK(sr_left_factor(m.el("x0"), y)
        == m.one() + m.mono("x1") + m.mono("x0") + m.mono("x0 x1"));
}

TEST_CASE("multisets") {
  Fixture const z{make_backend("zm:2")};
  auto const ms = sr_as_multiset(z.one() + z.mono("a", 2));
  REQUIRE(ms.size() == 3);
  CHECK(z.backend->key(ms[0]) == "(0,0)");
  CHECK(z.backend->key(ms[1]) == "(1,0)");
  CHECK(z.backend->key(ms[2]) == "(1,0)");
  CHECK(sr_as_multiset(z.zero()).empty());
  CHECK(sr_as_multiset((z.one() + z.mono("a")) * (z.one() + z.mono("b"))).size() == 4);
  CHECK_THROWS_AS(sr_as_multiset(z.one(Coefficients::integer)), Error);
  auto const back = SemiringElement::from_multiset(z.backend, ms);
  CHECK(back == z.one() + z.mono("a", 2));
}

TEST_CASE("mode and backend mismatches") {
  Fixture const z{make_backend("zm:2")};
  Fixture const w{make_backend("zm:3")};
  CHECK_THROWS_AS(z.one() + z.one(Coefficients::integer), Error);
  CHECK_THROWS_AS(z.one() + w.one(), Error);
  CHECK_THROWS_AS(sr_sub(z.one(), z.one()), Error);
  auto x = z.one();
  CHECK_THROWS_AS(x.add_term(z.el("a"), -1), Error);
  auto y = z.one(Coefficients::integer);
  y.add_term(z.backend->identity(), -1);
  CHECK(y.is_zero());
}

TEST_CASE("semiring laws") {
  std::mt19937_64 rng(13);
  for (auto const* selector : {"zm:2", "mb:2", "f", "posmon"}) {
    auto const backend = make_backend(selector);
    CAPTURE(selector);
    for (auto mode : {Coefficients::positive, Coefficients::integer}) {
      auto const one  = SemiringElement::one(backend, mode);
      auto const zero = SemiringElement::zero(backend, mode);
      int const  rounds = mode == Coefficients::positive ? 1000 : 300;
      for (int i = 0; i < rounds; ++i) {
        auto const x = oracle::random_element(rng, backend, mode);
        auto const y = oracle::random_element(rng, backend, mode);
        auto const z = oracle::random_element(rng, backend, mode);
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * (y + z) == x * y + x * z);
        REQUIRE((x + y) * z == x * z + y * z);
        REQUIRE((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK(one * x == x);
        CHECK(x * one == x);
        CHECK(x + zero == x);
        CHECK((x * zero).is_zero());
        check_stored(x * y + z);
        if (mode == Coefficients::integer) {
          CHECK((x + sr_negate(x)).is_zero());
        }
      }
    }
  }
}

TEST_CASE("equality matches multiset equality") {
  std::mt19937_64 rng(17);
  auto const backend = make_backend("zm:2");
  auto const a       = backend->from_word(parse_word("a", ab));
  auto const b       = backend->from_word(parse_word("b", ab));
  for (int i = 0; i < 500; ++i) {
    auto const u = oracle::random_element(rng, backend, Coefficients::positive);
    auto const v = oracle::random_element(rng, backend, Coefficients::positive);
    auto const l = sr_left_factor(a, u);
    auto const r = sr_left_factor(b, v);
    auto keys = [&](SemiringElement const& x) {
      std::vector<std::string> out;
      for (auto const& e : sr_as_multiset(x)) {
        out.push_back(backend->key(e));
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    CHECK((l == r) == (keys(l) == keys(r)));
  }
}

TEST_CASE("cancellativity probe") {
  std::mt19937_64 rng(19);
  for (auto const* selector : {"zm:2", "mb:2", "f", "posmon"}) {
    auto const backend = make_backend(selector);
    auto const gens    = backend->generators(2);
    for (int i = 0; i < 200; ++i) {
      auto const g = SemiringElement::monomial(
          backend, backend->from_word(oracle::random_word(rng, gens, 5, backend->is_group())));
      auto const x = oracle::random_element(rng, backend, Coefficients::positive);
      auto const y = oracle::random_element(rng, backend, Coefficients::positive);
      if (!(x == y)) {
        CHECK_FALSE(g * x == g * y);
      }
    }
  }
}
