#pragma once

#include "plgroup/plmap.hpp"
#include "plgroup/session.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace plgroup {

/// Named, parameterized generator set. All families below produce elements of
/// Thompson's group F, with supports nested or disjoint per family contract.
struct GeneratorFamily {
  std::string name;
  std::vector<long> params;
  std::vector<std::pair<std::string, PLMap>> members;
};

inline GroupSession session_from(const GeneratorFamily& fam, int ball_radius = 0) {
  return GroupSession(fam.members, ball_radius);
}

namespace detail {
inline PLMap::Vertex vx(long xn, long xd, long yn, long yd) {
  return {Rational(xn, xd), Rational(yn, yd)};
}
}  // namespace detail

/// One bump over all of (0,1): 2x, then x + 1/4, then x/2 + 1/2.
inline PLMap alpha1() {
  return PLMap::from_vertices_strict({detail::vx(0, 1, 0, 1), detail::vx(1, 4, 1, 2),
                                      detail::vx(1, 2, 3, 4), detail::vx(1, 1, 1, 1)});
}

/// One bump supported on (1/4, 1/2).
inline PLMap alpha2() {
  return PLMap::from_vertices_strict({detail::vx(0, 1, 0, 1), detail::vx(1, 4, 1, 4),
                                      detail::vx(5, 16, 3, 8), detail::vx(3, 8, 7, 16),
                                      detail::vx(1, 2, 1, 2), detail::vx(1, 1, 1, 1)});
}

/// Conjugate by the shrinking map s(x) = x/4 + 1/4, computed directly on the
/// [0,1] table: identity outside [1/4,1/2], and s^{-1} f s on it. Maps F into
/// F and carries supp(f) onto its s-image.
inline PLMap shrink_conjugate(const PLMap& f) {
  std::vector<PLMap::Vertex> vs;
  vs.push_back({Rational(0), Rational(0)});
  for (const auto& [x, y] : f.vertices())
    vs.push_back({x / 4 + Rational(1, 4), y / 4 + Rational(1, 4)});
  vs.push_back({Rational(1), Rational(1)});
  return PLMap::from_vertices(std::move(vs));
}

/// a1 .. an with a_i the shrink-conjugate of a_{i-1}; a2 coincides with the
/// explicit alpha2 table. Adjacent supports nest into single fundamental
/// domains, so the family generates a copy of W_n.
inline GeneratorFamily w_generators(int n) {
  if (n < 1) throw std::invalid_argument("w_generators: n must be positive");
  GeneratorFamily fam{"w", {n}, {}};
  PLMap cur = alpha1();
  for (int i = 1; i <= n; ++i) {
    fam.members.push_back({"a" + std::to_string(i), cur});
    cur = shrink_conjugate(cur);
  }
  return fam;
}

/// Two-bump element, moving left on (0,1/2) and right on (1/2,1).
inline PLMap alpha() {
  return PLMap::from_vertices_strict({detail::vx(0, 1, 0, 1), detail::vx(1, 4, 1, 16),
                                      detail::vx(7, 16, 1, 4), detail::vx(9, 16, 3, 4),
                                      detail::vx(3, 4, 15, 16), detail::vx(1, 1, 1, 1)});
}

/// One bump supported on (7/16, 9/16).
inline PLMap beta0() {
  return PLMap::from_vertices_strict({detail::vx(0, 1, 0, 1), detail::vx(7, 16, 7, 16),
                                      detail::vx(15, 32, 1, 2), detail::vx(1, 2, 17, 32),
                                      detail::vx(9, 16, 9, 16), detail::vx(1, 1, 1, 1)});
}

/// beta_k = beta0 conjugated by alpha^k; supp(beta_{k-1}) sits in a single
/// fundamental domain of beta_k for every k.
inline PLMap beta(long k) { return conjugate(beta0(), power(alpha(), k)); }

/// b0 .. b{n-1}: the non-negative beta family, truncating the ascending
/// infinite wreath product.
inline GeneratorFamily zwr_generators(int n) {
  if (n < 1) throw std::invalid_argument("zwr_generators: n must be positive");
  GeneratorFamily fam{"zwr", {n}, {}};
  for (int k = 0; k < n; ++k)
    fam.members.push_back({"b" + std::to_string(k), beta(k)});
  return fam;
}

/// b-1 .. b-n: the negative beta family, truncating the descending infinite
/// wreath product; b-1 is the top generator.
inline GeneratorFamily wrz_generators(int n) {
  if (n < 1) throw std::invalid_argument("wrz_generators: n must be positive");
  GeneratorFamily fam{"wrz", {n}, {}};
  for (int k = 1; k <= n; ++k)
    fam.members.push_back({"b-" + std::to_string(k), beta(-k)});
  return fam;
}

/// Gamma_i = { beta_j conjugated by beta_{i+1} : 1 <= j <= i }; generates a
/// copy of W_i, with support disjoint from every other Gamma_k.
inline GeneratorFamily gamma_family(int i) {
  if (i < 1) throw std::invalid_argument("gamma_family: index must be positive");
  GeneratorFamily fam{"gamma", {i}, {}};
  PLMap conj = beta(i + 1);
  for (int j = 1; j <= i; ++j) {
    fam.members.push_back(
        {"c" + std::to_string(i) + "_" + std::to_string(j), conjugate(beta(j), conj)});
  }
  return fam;
}

/// Upsilon_i = { beta_{-i+j-2} conjugated by beta_{-1}^i : 1 <= j <= i }.
inline GeneratorFamily upsilon_family(int i) {
  if (i < 1) throw std::invalid_argument("upsilon_family: index must be positive");
  GeneratorFamily fam{"upsilon", {i}, {}};
  PLMap conj = power(beta(-1), i);
  for (int j = 1; j <= i; ++j) {
    fam.members.push_back({"u" + std::to_string(i) + "_" + std::to_string(j),
                           conjugate(beta(-i + j - 2), conj)});
  }
  return fam;
}

/// Union of Gamma_1 .. Gamma_m: a truncation of the direct sum of all W_i.
inline GeneratorFamily w_truncation(int m) {
  if (m < 1) throw std::invalid_argument("w_truncation: m must be positive");
  GeneratorFamily fam{"wtrunc", {m}, {}};
  for (int i = 1; i <= m; ++i)
    for (auto& member : gamma_family(i).members) fam.members.push_back(member);
  return fam;
}

/// b{-K} .. b{K}: conjugates of alpha2 by powers of alpha1, pairwise commuting
/// (disjoint supports), truncating the integer direct sum.
inline GeneratorFamily g1_generators(int K) {
  if (K < 0) throw std::invalid_argument("g1_generators: K must be nonnegative");
  GeneratorFamily fam{"g1", {K}, {}};
  PLMap a1 = alpha1(), a2 = alpha2();
  for (long k = -K; k <= K; ++k)
    fam.members.push_back({"b" + std::to_string(k), conjugate(a2, power(a1, k))});
  return fam;
}

/// Truncated generators for the n-th group of the tower G_n = sum of
/// (G_{n-1} wr Z) copies: the inductive core shrinks twice and adjoins
/// alpha2, and the direct-sum index is truncated symmetrically at K via
/// conjugation by powers of alpha1.
inline GeneratorFamily gn_generators(int n, int K) {
  if (n < 0 || K < 0) throw std::invalid_argument("gn_generators: n and K must be nonnegative");
  GeneratorFamily fam{"gn", {n, K}, {}};
  if (n == 0) return fam;
  std::vector<std::pair<std::string, PLMap>> core;
  for (int level = 1; level <= n; ++level) {
    std::vector<std::pair<std::string, PLMap>> next;
    for (auto& [nm, m] : core)
      next.push_back({nm + "s", shrink_conjugate(shrink_conjugate(m))});
    next.push_back({"t" + std::to_string(level), alpha2()});
    core = std::move(next);
  }
  PLMap a1 = alpha1();
  for (long k = -K; k <= K; ++k) {
    PLMap shift = power(a1, k);
    for (auto& [nm, m] : core)
      fam.members.push_back({nm + "k" + std::to_string(k), conjugate(m, shift)});
  }
  return fam;
}

}  // namespace plgroup
