#pragma once

#include "plgroup/orbitals.hpp"
#include "plgroup/plmap.hpp"
#include "plgroup/rational.hpp"

#include <random>
#include <set>
#include <vector>

namespace testutil {

using plgroup::Orbital;
using plgroup::PLMap;
using plgroup::Rational;

inline Rational q(long num, long den = 1) { return Rational(num, den); }

inline PLMap map_of(std::vector<std::pair<Rational, Rational>> vs) {
  return PLMap::from_vertices(std::move(vs));
}

// random dyadic value in the open interval (lo, hi), denominator 2^depth
inline Rational random_dyadic_between(std::mt19937_64& rng, const Rational& lo,
                                      const Rational& hi, int depth = 6) {
  long den = 1L << depth;
  // count multiples of 1/den strictly between lo and hi; fall back to midpoint
  Rational step(1, den);
  long first = 0;
  while (Rational(first, den) <= lo) ++first;
  long last = first;
  while (Rational(last, den) < hi) ++last;
  --last;
  if (last < first) return (lo + hi) / 2;
  std::uniform_int_distribution<long> dist(first, last);
  return Rational(dist(rng), den);
}

// random dyadic PL homeomorphism with at most max_breaks interior vertices
inline PLMap random_dyadic_map(std::mt19937_64& rng, int max_breaks = 5) {
  std::uniform_int_distribution<int> nb(0, max_breaks);
  int k = nb(rng);
  std::set<Rational> xs, ys;
  std::uniform_int_distribution<long> pick(1, 63);
  while ((int)xs.size() < k) xs.insert(Rational(pick(rng), 64));
  while ((int)ys.size() < k) ys.insert(Rational(pick(rng), 64));
  std::vector<std::pair<Rational, Rational>> vs;
  vs.push_back({Rational(0), Rational(0)});
  auto xi = xs.begin();
  auto yi = ys.begin();
  for (int i = 0; i < k; ++i) vs.push_back({*xi++, *yi++});
  vs.push_back({Rational(1), Rational(1)});
  return PLMap::from_vertices(std::move(vs));
}

// one-bump map on (lo, hi), moving right, with dyadic vertices above the
// diagonal
inline PLMap random_one_bump(std::mt19937_64& rng, const Rational& lo, const Rational& hi,
                             int breaks = 2) {
  std::vector<std::pair<Rational, Rational>> vs;
  vs.push_back({Rational(0), Rational(0)});
  if (lo > 0) vs.push_back({lo, lo});
  Rational x = lo, y = lo;
  for (int i = 0; i < breaks; ++i) {
    x = random_dyadic_between(rng, x, hi, 8);
    Rational ylo = x > y ? x : y;  // keep the graph above the diagonal
    y = random_dyadic_between(rng, ylo, hi, 8);
    if (x < hi && y < hi && y > ylo) vs.push_back({x, y});
  }
  if (hi < 1) vs.push_back({hi, hi});
  vs.push_back({Rational(1), Rational(1)});
  return PLMap::from_vertices(std::move(vs));
}

// probe points: vertices of f, midpoints between them, and near-boundary
inline std::vector<Rational> probes(const PLMap& f) {
  std::vector<Rational> out;
  const auto& vs = f.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out.push_back(vs[i].first);
    if (i + 1 < vs.size()) out.push_back((vs[i].first + vs[i + 1].first) / 2);
  }
  return out;
}

}  // namespace testutil
