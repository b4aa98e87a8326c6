#include "plgroup/session.hpp"

#include "plgroup/constructions.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace plgroup;
using testutil::q;

namespace {
GroupSession w_session(int n, int radius) {
  return session_from(w_generators(n), radius);
}
}  // namespace

TEST_CASE("ball enumeration") {
  GroupSession empty(std::vector<std::pair<std::string, PLMap>>{}, 3);
  CHECK(empty.ball().size() == 1);
  CHECK(empty.ball()[0].map == PLMap());

  GroupSession w2 = w_session(2, 1);
  CHECK(w2.ball().size() == 5);  // id, a1, a1^-1, a2, a2^-1

  GroupSession w2r0 = w_session(2, 0);
  CHECK(w2r0.ball().size() == 1);

  // every entry's word evaluates to its map, and words are freely reduced
  GroupSession w2r3 = extend_ball(w2, 3);
  for (auto& e : w2r3.ball()) {
    PLMap m;
    for (auto& entry : e.word.entries()) {
      REQUIRE(entry.exp != 0);
      m = compose(m, power(*w2r3.find_generator(entry.name), entry.exp));
    }
    CHECK(m == e.map);
    CHECK(e.word.length() <= 3);
    for (std::size_t i = 1; i < e.word.entries().size(); ++i)
      CHECK(e.word.entries()[i - 1].name != e.word.entries()[i].name);
  }

  // shortest witness: a ball at a larger radius keeps the short words
  for (auto& e : w2.ball()) {
    bool found = false;
    for (auto& e3 : w2r3.ball())
      if (e3.map == e.map) {
        found = true;
        CHECK(e3.word == e.word);
      }
    CHECK(found);
  }
}

TEST_CASE("group orbitals") {
  CHECK(group_orbitals(w_session(2, 0)) == std::vector<Orbital>{Orbital(q(0), q(1))});
  GroupSession a2only({{"a2", alpha2()}}, 0);
  CHECK(group_orbitals(a2only) == std::vector<Orbital>{Orbital(q(1, 4), q(1, 2))});
  GroupSession trivial({{"e", PLMap()}}, 0);
  CHECK(group_orbitals(trivial).empty());
  // the pair (alpha, beta0) bridges the fixed point 1/2
  GroupSession ab({{"a", alpha()}, {"b0", beta0()}}, 0);
  CHECK(group_orbitals(ab) == std::vector<Orbital>{Orbital(q(0), q(1))});
  // touching supports stay separate components
  GroupSession touching({{"x", conjugate(alpha2(), alpha1())}, {"y", alpha2()}}, 0);
  CHECK(group_orbitals(touching) ==
        std::vector<Orbital>{Orbital(q(1, 4), q(1, 2)), Orbital(q(1, 2), q(3, 4))});
}

TEST_CASE("phi is the end-slope pair") {
  Orbital full(q(0), q(1));
  CHECK(phi(alpha1(), full) == std::make_pair(q(2), q(1, 2)));
  CHECK(phi(alpha2(), full) == std::make_pair(q(1), q(1)));
  CHECK(phi(alpha2(), Orbital(q(1, 4), q(1, 2))) == std::make_pair(q(2), q(1, 2)));
  CHECK_THROWS_AS(phi(alpha1(), Orbital(q(1, 4), q(3, 4))), std::invalid_argument);

  // homomorphism: phi(gh) = phi(g) phi(h) componentwise over ball pairs
  GroupSession w2 = w_session(2, 2);
  for (auto& e1 : w2.ball())
    for (auto& e2 : w2.ball()) {
      auto p1 = phi(e1.map, full), p2 = phi(e2.map, full);
      auto p12 = phi(compose(e1.map, e2.map), full);
      CHECK(p12.first == p1.first * p2.first);
      CHECK(p12.second == p1.second * p2.second);
    }
}

TEST_CASE("phi image rank") {
  Orbital full(q(0), q(1));
  GroupSession w1({{"a1", alpha1()}}, 0);
  PhiImage img = phi_image_rank(w1, full, 3);
  CHECK(img.rank == PhiImage::Rank::Cyclic);
  CHECK(img.generator == std::make_pair(q(2), q(1, 2)));

  GroupSession a2only({{"a2", alpha2()}}, 0);
  PhiImage img2 = phi_image_rank(a2only, Orbital(q(1, 4), q(1, 2)), 3);
  CHECK(img2.rank == PhiImage::Rank::Cyclic);
  CHECK(img2.generator == std::make_pair(q(2), q(1, 2)));

  GroupSession trivial({{"e", PLMap()}}, 0);
  CHECK(phi_image_rank(trivial, full, 2).rank == PhiImage::Rank::Trivial);

  // two independent end behaviours force rank two: slopes 2 and 3
  PLMap s3 = PLMap::from_vertices({{q(0), q(0)}, {q(1, 4), q(3, 4)}, {q(1), q(1)}});
  GroupSession mixed({{"a1", alpha1()}, {"s3", s3}}, 0);
  PhiImage img3 = phi_image_rank(mixed, full, 1);
  CHECK(img3.rank == PhiImage::Rank::RankAtLeast2);
  CHECK(img3.witnesses.size() == 2);
}

TEST_CASE("imbalance witness search") {
  GroupSession empty(std::vector<std::pair<std::string, PLMap>>{}, 0);
  CHECK_FALSE(imbalance_witness(empty, 2).has_value());

  // balanced: the whole W_3 ball at radius 4 gives no witness
  CHECK_FALSE(imbalance_witness(w_session(3, 0), 4).has_value());

  // one-end-aligned overlapping pair: j on (1/8, 1/2), its shift right
  std::mt19937_64 rng(9001);
  PLMap j = testutil::random_one_bump(rng, q(1, 8), q(1, 2));
  PLMap shift = testutil::random_one_bump(rng, q(1, 4), q(3, 4));
  PLMap j2 = conjugate(j, shift);
  GroupSession pair({{"j", j}, {"k", j2}}, 0);
  auto witness = imbalance_witness(pair, 1);
  REQUIRE(witness.has_value());
  auto p = phi(witness->element, witness->orbital);
  bool lead_only = p.first != 1 && p.second == 1;
  bool trail_only = p.first == 1 && p.second != 1;
  CHECK((lead_only || trail_only));
}

TEST_CASE("depth lower bound") {
  CHECK(depth_lower_bound(w_session(1, 0), 3) == 1);
  CHECK(depth_lower_bound(w_session(2, 0), 2) == 2);
  GroupSession trivial({{"e", PLMap()}}, 0);
  CHECK(depth_lower_bound(trivial, 2) == 0);
  // monotone in the radius
  GroupSession w2 = w_session(2, 0);
  int prev = 0;
  for (int radius = 0; radius <= 3; ++radius) {
    int d = depth_lower_bound(w2, radius);
    CHECK(d >= prev);
    prev = d;
  }
}

TEST_CASE("derived sample") {
  GroupSession w2 = w_session(2, 0);
  auto ball = derived_sample(w2, 2, 0);
  CHECK(ball.size() == extend_ball(w2, 2).ball().size());

  // W_2 is metabelian: level 2 collapses to the identity
  auto level2 = derived_sample_detail(w2, 3, 2);
  CHECK(level2.pairs_sampled_at_top >= 200);
  for (auto& m : level2.maps) CHECK(m == PLMap());

  // W_3 still has a nontrivial second derived subgroup
  auto w3level2 = derived_sample(w_session(3, 0), 3, 2);
  bool nontrivial = false;
  for (auto& m : w3level2) nontrivial = nontrivial || !(m == PLMap());
  CHECK(nontrivial);

  // every level k+1 element is a commutator of level k elements
  auto level1 = derived_sample(w2, 2, 1);
  auto level2b = derived_sample(w2, 2, 2);
  for (auto& m : level2b) {
    bool found = false;
    for (std::size_t i = 0; i < level1.size() && !found; ++i)
      for (std::size_t j = 0; j < level1.size() && !found; ++j)
        found = commutator(level1[i], level1[j]) == m;
    CHECK(found);
  }
}

TEST_CASE("controllers and c-form") {
  Orbital full(q(0), q(1));
  GroupSession w2 = w_session(2, 0);
  auto cand = controller_candidate(w2, full, 3);
  REQUIRE(cand.has_value());
  PLMap a1 = alpha1();
  CHECK((*cand == a1 || *cand == invert(a1)));

  CHECK(is_consistent_controller(a1, full));
  CHECK(is_consistent_controller(invert(a1), full));
  CHECK_FALSE(is_consistent_controller(alpha(), Orbital(q(0), q(1))));

  PLMap g = compose(power(a1, 2), alpha2());
  auto [k, residue] = c_form(g, a1, full);
  CHECK(k == 2);
  CHECK(residue == alpha2());
  CHECK(compose(power(a1, k), residue) == g);
  CHECK(phi(residue, full) == std::make_pair(q(1), q(1)));

  // no integer power matches: slope-3 end behaviour against a1
  PLMap s3 = PLMap::from_vertices({{q(0), q(0)}, {q(1, 4), q(3, 4)}, {q(1), q(1)}});
  CHECK_THROWS_AS(c_form(s3, a1, full), std::invalid_argument);
  CHECK_THROWS_AS(c_form(a1, alpha2(), full), std::invalid_argument);
}
