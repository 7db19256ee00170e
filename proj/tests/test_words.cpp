#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "oreslice/error.hpp"
#include "oreslice/words.hpp"

using namespace oreslice;

namespace {
  Alphabet const ab = Alphabet::named(2);
  Alphabet const xs = Alphabet::indexed();

  Word w(std::string_view text, Alphabet const& alphabet = xs) {
    return parse_word(text, alphabet);
  }
  Generator gen(char c) {
    return {std::string(1, c), 0};
  }
  Generator x(std::size_t i) {
    return {"x", i};
  }
}  // namespace

TEST_CASE("parse named and indexed words") {
  auto const p = w("a b^-1 a", ab);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == Letter{gen('a'), 1});
  CHECK(p[1] == Letter{gen('b'), -1});
  CHECK(p[2] == Letter{gen('a'), 1});

  auto const q = w("x0 x1^-1");
  REQUIRE(q.size() == 2);
  CHECK(q[0] == Letter{x(0), 1});
  CHECK(q[1] == Letter{x(1), -1});

  CHECK(w("", ab).empty());
}

TEST_CASE("powers, uppercase and separators") {
  CHECK(w("a^3", ab) == w("a a a", ab));
  CHECK(w("a^-2", ab) == w("A A", ab));
  CHECK(w("a^+1*b", ab) == w("a b", ab));
  CHECK(w("x12^2") == w("x12 x12"));
  CHECK(w("a^0", ab).empty());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(w("a ^", ab), ParseError);
  CHECK_THROWS_AS(w("c", ab), Error);
  CHECK_THROWS_AS(w("x", xs), ParseError);
  CHECK_THROWS_AS(w("x0", Alphabet::named(26)), ParseError);
  CHECK(w("x", Alphabet::named(26)).size() == 1);
  CHECK_THROWS_AS(w("X0", xs), Error);
  CHECK_THROWS_AS(w("a", xs), Error);
  try {
    w("a b ?", ab);
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("print round trip") {
  CHECK(print_word(w("a B a^2", ab)) == "a b^-1 a a");
  CHECK(print_word(w("x3^-1 x0")) == "x3^-1 x0");
  std::mt19937_64 rng(7);
  std::vector<Generator> const named{gen('a'), gen('b'), gen('c')};
  std::vector<Generator> const indexed{x(0), x(1), x(10)};
  for (int i = 0; i < 500; ++i) {
    auto const u = oracle::random_word(rng, named, 12, true);
    CHECK(parse_word(print_word(u), Alphabet::named(3)) == u);
    auto const v = oracle::random_word(rng, indexed, 12, true);
    CHECK(parse_word(print_word(v), xs) == v);
  }
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(w("a A", ab)).empty());
  CHECK(free_reduce(w("a b B a", ab)) == w("a a", ab));
  CHECK(free_reduce(w("x0^-1 x1 x0")) == w("x0^-1 x1 x0"));
  CHECK(free_reduce(w("a b B A b", ab)) == w("b", ab));

  std::mt19937_64 rng(11);
  std::vector<Generator> const gens{gen('a'), gen('b')};
  for (int i = 0; i < 500; ++i) {
    auto const u = oracle::random_word(rng, gens, 16, true);
    auto const r = free_reduce(u);
    CHECK(r.size() <= u.size());
    CHECK(free_reduce(r) == r);
  }
}

TEST_CASE("alternating shape") {
  CHECK(is_alternating(w("x0 x1 x0^-1 x1^-1")));
  CHECK_FALSE(is_alternating(w("x0 x2")));
  CHECK(is_alternating(w("x2 x1 x0^-1 x3^-1")));
  CHECK_FALSE(is_alternating(Word{}));
  CHECK_FALSE(is_alternating(w("x1 x0")));
  CHECK(is_alternating(w("x1 x0"), true));
  CHECK_FALSE(is_alternating(w("x0 x1 x2"), true));

  for (std::size_t len = 2; len <= 10; len += 2) {
    for (auto const& u : oracle::alternating_words(x(0), x(1), len)) {
      CHECK(free_reduce(u) == u);
    }
  }
}

TEST_CASE("rotation and inversion") {
  CHECK(cyclic_shift(w("a b A", ab), 1) == w("b A a", ab));
  CHECK(invert_word(w("a B", ab)) == w("b A", ab));
  auto const u = w("a b b A B", ab);
  CHECK(cyclic_shift(u, 0) == u);
  CHECK(cyclic_shift(u, 5) == u);
  CHECK(cyclic_shift(u, -1) == cyclic_shift(u, 4));
  CHECK(invert_word(invert_word(u)) == u);
  CHECK(w("a", ab) * w("b", ab) == w("a b", ab));
}

TEST_CASE("shift endomorphism") {
  CHECK(shift_endomorphism(w("x0 x1^-1"), 2) == w("x2 x3^-1"));
  auto const u = w("x4 x1^-1 x0");
  CHECK(shift_endomorphism(u, 0) == u);
  CHECK(shift_endomorphism(shift_endomorphism(u, 3), -3) == u);
  CHECK_THROWS_AS(shift_endomorphism(u, -1), Error);
}

TEST_CASE("exponent sums") {
  auto const sums = exponent_sums(w("x1 x0 x1 x0^-1 x2^-1"));
  REQUIRE(sums.size() == 3);
  CHECK(sums[0] == std::pair{x(0), std::int64_t{0}});
  CHECK(sums[1] == std::pair{x(1), std::int64_t{2}});
  CHECK(sums[2] == std::pair{x(2), std::int64_t{-1}});
}
