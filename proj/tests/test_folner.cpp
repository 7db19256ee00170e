#include <doctest.h>

#include "oracles.hpp"
#include "oreslice/error.hpp"
#include "oreslice/folner.hpp"
#include "oreslice/ore.hpp"

using namespace oreslice;

namespace {
  Element el(BackendPtr const& backend, std::string_view text) {
    return backend->from_word(parse_word(text, backend->alphabet()));
  }

  std::vector<Element> box(BackendPtr const& z, std::int64_t n) {
    std::vector<Element> out;
    for (std::int64_t x = 0; x < n; ++x) {
      for (std::int64_t y = 0; y < n; ++y) {
        out.push_back(VectorElement{{x, y}});
      }
    }
    (void)z;
    return out;
  }
}  // namespace

TEST_CASE("rationals") {
  CHECK(print_rational(Rational(9, 10)) == "9/10");
  CHECK(print_rational(Rational(4, 2)) == "2");
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("3/12") == Rational(1, 4));
  CHECK(parse_rational("2") == Rational(2));
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("box counts") {
  auto const z = make_backend("zm:2");
  auto const r = folner_ratios(*z, box(z, 10), {el(z, "a")});
  REQUIRE(r.per_generator.size() == 1);
  CHECK(r.set_size == 100);
  CHECK(r.per_generator[0].intersection == 90);
  CHECK(r.per_generator[0].intersection_ratio == Rational(9, 10));
  CHECK(r.per_generator[0].symmetric_difference == 20);
  CHECK(r.per_generator[0].symmetric_difference_ratio == Rational(1, 5));
  CHECK(check_delta(r, Rational(1, 2)));
  CHECK_FALSE(check_epsilon(r, Rational(1, 10)));
  CHECK_FALSE(check_epsilon(r, Rational(1, 5)));
  CHECK(check_epsilon(r, Rational(21, 100)));
  CHECK(check_delta(r, Rational(0)));
  CHECK_FALSE(check_delta(r, Rational(9, 10)));

  for (std::int64_t n = 1; n <= 12; ++n) {
    auto const q = folner_ratios(*z, box(z, n), {el(z, "a"), el(z, "b")});
    CHECK(q.max_symmetric_difference_ratio == Rational(2, n));
    CHECK(q.per_generator[0].symmetric_difference
          == static_cast<std::size_t>(oracle::box_symmetric_difference(n)));
  }
}

TEST_CASE("singletons and identity generator") {
  auto const f = make_backend("f");
  auto const r = folner_ratios(*f, {el(f, "x1")}, {el(f, "x0"), f->identity()});
  CHECK(r.per_generator[0].intersection == 0);
  CHECK(r.per_generator[0].symmetric_difference == 2);
  CHECK(r.per_generator[1].intersection_ratio == Rational(1));
  CHECK(r.per_generator[1].symmetric_difference == 0);
  CHECK(r.min_intersection_ratio == Rational(0));
  CHECK(r.max_symmetric_difference_ratio == Rational(2));
}

TEST_CASE("positive monoid set") {
  auto const m = make_backend("posmon");
  auto const r = folner_ratios(*m, {m->identity(), el(m, "x0"), el(m, "x1")}, {el(m, "x0")});
  CHECK(r.per_generator[0].translate_size == 3);
  CHECK(r.per_generator[0].intersection == 1);
  CHECK(r.per_generator[0].intersection_ratio == Rational(1, 3));
  CHECK(r.per_generator[0].symmetric_difference == 4);
  CHECK(r.per_generator[0].symmetric_difference_ratio == Rational(4, 3));
}

TEST_CASE("invalid sets") {
  auto const z = make_backend("zm:2");
  CHECK_THROWS_AS(folner_ratios(*z, {}, {el(z, "a")}), Error);
  CHECK_THROWS_AS(folner_ratios(*z, {el(z, "a"), el(z, "a")}, {el(z, "a")}), Error);
}

TEST_CASE("greedy search") {
  auto const z    = make_backend("zm:2");
  auto const gens = std::vector<Element>{el(z, "a"), el(z, "b")};
  auto const r    = greedy_folner_search(*z, gens, Rational(1, 2), GreedyBudget{200, 200});
  REQUIRE(r.success);
  auto const again = folner_ratios(*z, r.set, gens);
  CHECK(check_epsilon(again, Rational(1, 2)));
  CHECK(again.max_symmetric_difference_ratio == r.report.max_symmetric_difference_ratio);

  // {1} has ratio exactly 2, which the strict check rejects.
  auto const easy = greedy_folner_search(*z, gens, Rational(2), GreedyBudget{});
  CHECK(easy.success);
  REQUIRE_FALSE(easy.history.empty());
  CHECK(easy.history.front() == std::pair<std::size_t, Rational>{1, Rational(2)});
  CHECK(easy.report.max_symmetric_difference_ratio < Rational(2));
  CHECK(easy.set.size() == 3);
  auto const loose = greedy_folner_search(*z, gens, Rational(201, 100), GreedyBudget{});
  CHECK(loose.success);
  REQUIRE(loose.set.size() == 1);
  CHECK(z->is_identity(loose.set[0]));

  auto const m  = make_backend("posmon");
  auto const mr = greedy_folner_search(*m, {el(m, "x0"), el(m, "x1")}, Rational(1, 10),
                                       GreedyBudget{20, 20});
  CHECK_FALSE(mr.success);
  CHECK_FALSE(mr.history.empty());
  CHECK(folner_ratios(*m, mr.set, {el(m, "x0"), el(m, "x1")}).max_symmetric_difference_ratio
        == mr.report.max_symmetric_difference_ratio);
}

TEST_CASE("translation is injective") {
  for (auto const* selector : {"zm:3", "mb:2", "f", "posmon"}) {
    auto const backend = make_backend(selector);
    auto const E       = enumerate_pool(*backend, backend->generators(2), 2);
    std::vector<Element> A;
    for (auto const& g : backend->generators(2)) {
      A.push_back(backend->from_word(letter_word(g)));
    }
    auto const r = folner_ratios(*backend, E, A);
    for (auto const& g : r.per_generator) {
      CHECK(g.translate_size == E.size());
      CHECK(g.symmetric_difference == 2 * (E.size() - g.intersection));
      CHECK(g.intersection_ratio <= Rational(1));
    }
  }
}
