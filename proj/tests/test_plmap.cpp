#include "plgroup/constructions.hpp"
#include "plgroup/plmap.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace plgroup;
using testutil::map_of;
using testutil::q;

TEST_CASE("eval on the explicit one-bump tables") {
  PLMap a1 = alpha1();
  CHECK(eval(a1, q(1, 4)) == q(1, 2));
  CHECK(eval(a1, q(3, 4)) == q(7, 8));
  CHECK(eval(a1, q(0)) == q(0));
  CHECK(eval(a1, q(1)) == q(1));
  CHECK(eval(PLMap(), q(3, 7)) == q(3, 7));
  CHECK_THROWS_AS(eval(a1, q(-1, 8)), std::domain_error);
  CHECK_THROWS_AS(eval(a1, q(9, 8)), std::domain_error);
}

TEST_CASE("compose follows the right action") {
  PLMap a1 = alpha1();
  CHECK(compose(a1, invert(a1)) == PLMap());
  CHECK(compose(PLMap(), a1) == a1);
  CHECK(compose(a1, PLMap()) == a1);
  // iterate the table twice: 1/8 -> 1/4 -> 1/2
  CHECK(eval(compose(a1, a1), q(1, 8)) == q(1, 2));

  std::mt19937_64 rng(7001);
  for (int i = 0; i < 50; ++i) {
    PLMap f = testutil::random_dyadic_map(rng), g = testutil::random_dyadic_map(rng);
    PLMap fg = compose(f, g);
    for (auto& x : testutil::probes(fg)) CHECK(eval(fg, x) == eval(g, eval(f, x)));
  }
}

TEST_CASE("invert") {
  PLMap a1 = alpha1(), a2 = alpha2();
  CHECK(invert(PLMap()) == PLMap());
  CHECK(eval(invert(a1), q(1, 2)) == q(1, 4));
  CHECK(invert(invert(a2)) == a2);
}

TEST_CASE("conjugate and commutator") {
  PLMap a1 = alpha1(), a2 = alpha2();
  CHECK(conjugate(a2, PLMap()) == a2);
  CHECK(conjugate(PLMap(), a1) == PLMap());
  CHECK(commutator(a1, a1) == PLMap());
  CHECK(commutator(a2, conjugate(a2, a1)) == PLMap());
  CHECK_FALSE(commutator(a2, a1) == PLMap());
}

TEST_CASE("power") {
  PLMap a1 = alpha1();
  CHECK(power(a1, 0) == PLMap());
  CHECK(power(a1, 1) == a1);
  CHECK(power(a1, -1) == invert(a1));
  CHECK(power(a1, 3) == compose(a1, compose(a1, a1)));
  // 1/8 -> 1/4 -> 1/2 -> 3/4 -> 7/8 -> 15/16
  CHECK(eval(power(a1, 5), q(1, 8)) == q(15, 16));
}

TEST_CASE("group laws on random maps") {
  std::mt19937_64 rng(7002);
  for (int i = 0; i < 40; ++i) {
    PLMap f = testutil::random_dyadic_map(rng);
    PLMap g = testutil::random_dyadic_map(rng);
    PLMap h = testutil::random_dyadic_map(rng);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(compose(f, invert(f)) == PLMap());
    CHECK(compose(invert(f), f) == PLMap());
    CHECK(compose(f, PLMap()) == f);
    CHECK(compose(PLMap(), f) == f);
  }
}

TEST_CASE("breakpoint containment under composition") {
  std::mt19937_64 rng(7003);
  for (int i = 0; i < 200; ++i) {
    PLMap g = testutil::random_dyadic_map(rng);
    PLMap h = testutil::random_dyadic_map(rng);
    PLMap gh = compose(g, h);
    auto bg = breakpoints(g), bh = breakpoints(h);
    for (auto& b : breakpoints(gh)) {
      bool in_g = std::find(bg.begin(), bg.end(), b) != bg.end();
      Rational image = eval(g, b);
      bool in_h = std::find(bh.begin(), bh.end(), image) != bh.end();
      CHECK((in_g || in_h));
    }
  }
}

TEST_CASE("left total order") {
  PLMap a1 = alpha1();
  CHECK(left_order_cmp(a1, a1) == std::strong_ordering::equal);
  CHECK(left_order_cmp(PLMap(), a1) == std::strong_ordering::less);
  CHECK(left_order_cmp(a1, PLMap()) == std::strong_ordering::greater);

  std::mt19937_64 rng(7004);
  for (int i = 0; i < 60; ++i) {
    PLMap f = testutil::random_dyadic_map(rng);
    PLMap g = testutil::random_dyadic_map(rng);
    PLMap h = testutil::random_dyadic_map(rng);
    auto fg = left_order_cmp(f, g), gf = left_order_cmp(g, f);
    CHECK((fg == std::strong_ordering::equal) == (f == g));
    if (fg == std::strong_ordering::less) CHECK(gf == std::strong_ordering::greater);
    if (fg == std::strong_ordering::greater) CHECK(gf == std::strong_ordering::less);
    // transitivity
    if (fg == std::strong_ordering::less &&
        left_order_cmp(g, h) == std::strong_ordering::less)
      CHECK(left_order_cmp(f, h) == std::strong_ordering::less);
  }
}

TEST_CASE("slopes_at") {
  PLMap a1 = alpha1(), a2 = alpha2();
  CHECK(slopes_at(a1, q(1, 4)) == std::make_pair(q(2), q(1)));
  CHECK(slopes_at(a2, q(5, 16)) == std::make_pair(q(2), q(1)));
  CHECK(slopes_at(PLMap(), q(1, 3)) == std::make_pair(q(1), q(1)));
  CHECK(slopes_at(a1, q(0)) == std::make_pair(q(2), q(2)));
  CHECK(slopes_at(a1, q(1)) == std::make_pair(q(1, 2), q(1, 2)));
  CHECK(slopes_at(a1, q(1, 8)) == std::make_pair(q(2), q(2)));
}

TEST_CASE("breakpoints") {
  CHECK(breakpoints(PLMap()).empty());
  CHECK(breakpoints(alpha1()) == std::vector<Rational>{q(1, 4), q(1, 2)});
  CHECK(breakpoints(alpha2()) ==
        std::vector<Rational>{q(1, 4), q(5, 16), q(3, 8), q(1, 2)});
}

TEST_CASE("membership in F") {
  CHECK(is_in_F(alpha1()));
  CHECK(is_in_F(alpha2()));
  CHECK(is_in_F(PLMap()));
  // slope 3 on the first segment
  CHECK_FALSE(is_in_F(map_of({{q(0), q(0)}, {q(1, 4), q(3, 4)}, {q(1), q(1)}})));
  // non-dyadic breakpoint
  CHECK_FALSE(is_in_F(map_of({{q(0), q(0)}, {q(1, 3), q(1, 2)}, {q(1), q(1)}})));
}

TEST_CASE("canonical form") {
  std::vector<PLMap::Vertex> redundant = {{q(0), q(0)},   {q(1, 8), q(1, 4)},
                                          {q(1, 4), q(1, 2)}, {q(1, 2), q(3, 4)},
                                          {q(3, 4), q(7, 8)}, {q(1), q(1)}};
  auto canon = PLMap::canonicalize(redundant);
  CHECK(canon == PLMap::canonicalize(canon));
  CHECK(PLMap::from_vertices(redundant) == alpha1());
  CHECK_THROWS_AS(PLMap::from_vertices_strict(redundant), std::invalid_argument);

  CHECK_THROWS_AS(map_of({{q(0), q(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(map_of({{q(0), q(0)}, {q(1, 2), q(1, 2)}}), std::invalid_argument);
  CHECK_THROWS_AS(map_of({{q(0), q(1, 8)}, {q(1), q(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(map_of({{q(0), q(0)}, {q(1, 2), q(3, 4)}, {q(1, 2), q(7, 8)}, {q(1), q(1)}}),
                  std::invalid_argument);
}

TEST_CASE("F closure under the group operations") {
  std::mt19937_64 rng(7005);
  std::vector<PLMap> pool = {alpha1(), alpha2(), invert(alpha1()), invert(alpha2())};
  PLMap cur;
  for (int i = 0; i < 100; ++i) {
    std::uniform_int_distribution<int> pick(0, (int)pool.size() - 1);
    std::uniform_int_distribution<int> op(0, 2);
    switch (op(rng)) {
      case 0:
        cur = compose(cur, pool[pick(rng)]);
        break;
      case 1:
        cur = invert(cur);
        break;
      default:
        cur = conjugate(cur, pool[pick(rng)]);
        break;
    }
    CHECK(is_in_F(cur));
  }
}
