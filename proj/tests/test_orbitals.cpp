#include "plgroup/orbitals.hpp"

#include "plgroup/constructions.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace plgroup;
using testutil::q;

TEST_CASE("support components of the named elements") {
  auto a2 = support_components(alpha2());
  REQUIRE(a2.size() == 1);
  CHECK(a2[0].orbital == Orbital(q(1, 4), q(1, 2)));
  CHECK(a2[0].direction == Direction::RightMover);

  CHECK(support_components(PLMap()).empty());

  // the two-bump element fixes 1/2 exactly: 4*(1/2) - 3/2 = 1/2
  auto a = support_components(alpha());
  REQUIRE(a.size() == 2);
  CHECK(a[0].orbital == Orbital(q(0), q(1, 2)));
  CHECK(a[0].direction == Direction::LeftMover);
  CHECK(a[1].orbital == Orbital(q(1, 2), q(1)));
  CHECK(a[1].direction == Direction::RightMover);
}

TEST_CASE("support components agree with pointwise probes") {
  std::mt19937_64 rng(8001);
  for (int i = 0; i < 120; ++i) {
    PLMap f = testutil::random_dyadic_map(rng);
    auto orbs = support_components(f);
    std::vector<Rational> pts = testutil::probes(f);
    for (auto& eo : orbs) {
      pts.push_back(eo.orbital.midpoint());
      pts.push_back(eo.orbital.lo);
      pts.push_back(eo.orbital.hi);
    }
    for (auto& x : pts) {
      bool moved = eval(f, x) != x;
      bool inside = false;
      for (auto& eo : orbs) inside = inside || eo.orbital.contains(x);
      CHECK(moved == inside);
    }
  }
}

TEST_CASE("induced orbitals") {
  PLMap a1 = alpha1(), a2 = alpha2();
  CHECK(induced_orbitals(a2, a1) == std::vector<Orbital>{Orbital(q(1, 2), q(3, 4))});
  CHECK(induced_orbitals(a2, PLMap()) == orbitals_of(a2));
  CHECK(induced_orbitals(a2, power(a1, 2)) == std::vector<Orbital>{Orbital(q(3, 4), q(7, 8))});

  std::mt19937_64 rng(8002);
  for (int i = 0; i < 80; ++i) {
    PLMap g = testutil::random_dyadic_map(rng);
    PLMap h = testutil::random_dyadic_map(rng);
    CHECK(induced_orbitals(g, h) == orbitals_of(conjugate(g, h)));
  }
}

TEST_CASE("end slopes") {
  PLMap a1 = alpha1(), a2 = alpha2();
  CHECK(end_slopes(a1, Orbital(q(0), q(1))) == std::make_pair(q(2), q(1, 2)));
  CHECK(end_slopes(a2, Orbital(q(1, 4), q(1, 2))) == std::make_pair(q(2), q(1, 2)));
  CHECK_THROWS_AS(end_slopes(a2, Orbital(q(0), q(1))), std::invalid_argument);

  // conjugation preserves the end slopes of corresponding orbitals
  std::mt19937_64 rng(8003);
  for (int i = 0; i < 80; ++i) {
    PLMap g = testutil::random_dyadic_map(rng);
    PLMap h = testutil::random_dyadic_map(rng);
    PLMap gh = conjugate(g, h);
    auto orbs = orbitals_of(g);
    auto induced = induced_orbitals(g, h);
    for (std::size_t k = 0; k < orbs.size(); ++k)
      CHECK(end_slopes(g, orbs[k]) == end_slopes(gh, induced[k]));
  }
}

TEST_CASE("realizes and approaches") {
  PLMap a1 = alpha1(), a2 = alpha2();
  Orbital full(q(0), q(1));
  CHECK(realizes(a1, full));
  CHECK_FALSE(realizes_end(a2, full, End::Lead));
  CHECK_FALSE(realizes(PLMap(), full));
  CHECK(realizes_end(a1, full, End::Lead));
  CHECK(realizes_end(a1, full, End::Trail));
  CHECK(approaches(invert(a1), full, End::Lead));
  CHECK_FALSE(approaches(a1, full, End::Lead));
  CHECK(approaches(a1, full, End::Trail));
}

TEST_CASE("iterate escape") {
  PLMap a1 = alpha1();
  Orbital full(q(0), q(1));
  // trailing side needs five steps: 1/8 -> ... -> 15/16 with 7/8 too short
  CHECK(iterate_escape(a1, full, q(1, 8), q(1, 8)) == 5);
  CHECK(iterate_escape(invert(a1), full, q(1, 8), q(1, 8)) == 5);
  CHECK_THROWS_AS(iterate_escape(a1, full, q(9, 8), q(1, 8)), std::domain_error);

  // oracle: direct iteration from the definition
  std::mt19937_64 rng(8004);
  for (int i = 0; i < 30; ++i) {
    PLMap h = testutil::random_one_bump(rng, q(1, 8), q(7, 8));
    Orbital a(q(1, 8), q(7, 8));
    for (Rational eps : {q(1, 2), q(1, 8), q(1, 64)}) {
      long n = iterate_escape(h, a, q(1, 2), eps);
      PLMap hinv = invert(h);
      Rational yf = q(1, 2), yb = q(1, 2);
      long expected = 0;
      for (long k = 1; k < 100000; ++k) {
        yf = eval(h, yf);
        yb = eval(hinv, yb);
        if (abs(yf - a.hi) < eps && abs(yb - a.lo) < eps) {
          expected = k;
          break;
        }
      }
      CHECK(n == expected);
    }
  }
}

TEST_CASE("nesting classification") {
  Orbital a(q(1, 4), q(1, 2)), b(q(0), q(1));
  CHECK(nesting_classify(a, b) == Nesting::AInsideB);
  CHECK(nesting_classify(b, a) == Nesting::BInsideA);
  CHECK(nesting_classify(a, a) == Nesting::Equal);
  CHECK(nesting_classify(Orbital(q(0), q(1, 2)), Orbital(q(7, 16), q(9, 16))) ==
        Nesting::Overlap);
  CHECK(nesting_classify(Orbital(q(0), q(1, 4)), Orbital(q(1, 4), q(1, 2))) ==
        Nesting::Disjoint);
  // shared-end containment is not closure nesting
  CHECK(nesting_classify(Orbital(q(0), q(1, 2)), b) == Nesting::Overlap);
}

TEST_CASE("signed orbital partial order") {
  PLMap a1 = alpha1(), a2 = alpha2();
  SignedOrbital p{Orbital(q(1, 4), q(1, 2)), GroupWord::letter("a2"), a2};
  SignedOrbital r{Orbital(q(0), q(1)), GroupWord::letter("a1"), a1};
  CHECK(signed_cmp(p, r) == PartialCmp::Less);
  CHECK(signed_cmp(r, p) == PartialCmp::Greater);
  CHECK(signed_cmp(p, p) == PartialCmp::Equal);
  SignedOrbital s{Orbital(q(1, 2), q(3, 4)), GroupWord::letter("x"), conjugate(a2, a1)};
  CHECK(signed_cmp(p, s) == PartialCmp::Incomparable);
  // same orbital, different signatures: left total order decides
  SignedOrbital p2{Orbital(q(1, 4), q(1, 2)), GroupWord::letter("a2", 2), power(a2, 2)};
  CHECK(signed_cmp(p, p2) == PartialCmp::Less);
}

TEST_CASE("split element") {
  CHECK(split_element(PLMap()).empty());
  PLMap a1 = alpha1();
  auto single = split_element(a1);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == a1);

  auto pieces = split_element(alpha());
  REQUIRE(pieces.size() == 2);
  CHECK(orbitals_of(pieces[0]) == std::vector<Orbital>{Orbital(q(0), q(1, 2))});
  CHECK(orbitals_of(pieces[1]) == std::vector<Orbital>{Orbital(q(1, 2), q(1))});
  CHECK(compose(pieces[0], pieces[1]) == alpha());
  CHECK(compose(pieces[1], pieces[0]) == alpha());

  std::mt19937_64 rng(8005);
  for (int i = 0; i < 60; ++i) {
    PLMap g = testutil::random_dyadic_map(rng);
    auto ps = split_element(g);
    PLMap prod;
    for (auto& p : ps) prod = compose(prod, p);
    CHECK(prod == g);
    for (std::size_t x = 0; x < ps.size(); ++x)
      for (std::size_t y = x + 1; y < ps.size(); ++y)
        CHECK(commutator(ps[x], ps[y]) == PLMap());
  }
}
