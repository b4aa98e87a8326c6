#pragma once

#include "plgroup/plmap.hpp"
#include "plgroup/rational.hpp"
#include "plgroup/word.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace plgroup {

/// Open interval (lo, hi) inside [0,1]; a connected component of a support.
struct Orbital {
  Rational lo, hi;

  Orbital(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(0 <= lo && lo < hi && hi <= 1))
      throw std::invalid_argument("orbital endpoints must satisfy 0 <= lo < hi <= 1");
  }

  bool contains(const Rational& x) const { return lo < x && x < hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }

  friend bool operator==(const Orbital& a, const Orbital& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  friend bool operator<(const Orbital& a, const Orbital& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  }
};

inline std::string to_string(const Orbital& a) {
  return "(" + rat_str(a.lo) + ", " + rat_str(a.hi) + ")";
}

/// A is a subset of B (as open intervals).
inline bool subset(const Orbital& a, const Orbital& b) {
  return b.lo <= a.lo && a.hi <= b.hi;
}
inline bool proper_subset(const Orbital& a, const Orbital& b) {
  return subset(a, b) && !(a == b);
}
inline bool intersects(const Orbital& a, const Orbital& b) {
  return a.lo < b.hi && b.lo < a.hi;
}

enum class Direction { RightMover, LeftMover };

struct ElementOrbital {
  Orbital orbital;
  Direction direction;
};

/// An orbital together with a specific element realizing it; `word` is a
/// witness expression for `map` over some generating set (may be empty when
/// the signature was built directly rather than drawn from a ball).
struct SignedOrbital {
  Orbital orbital;
  GroupWord word;
  PLMap map;
};

/// Maximal open intervals where f moves points, left to right, with the
/// uniform direction of motion on each. Endpoints are exact solutions of the
/// affine pieces against y = x.
inline std::vector<ElementOrbital> support_components(const PLMap& f) {
  // the fixed set is a finite union of closed intervals (possibly points)
  std::vector<std::pair<Rational, Rational>> fixed;
  fixed.push_back({Rational(0), Rational(0)});
  fixed.push_back({Rational(1), Rational(1)});
  const auto& vs = f.vertices();
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    const auto& [x0, y0] = vs[i];
    const auto& [x1, y1] = vs[i + 1];
    if (y1 - y0 == x1 - x0) {
      if (y0 == x0) fixed.push_back({x0, x1});  // slope 1 through the diagonal
    } else {
      Rational m = (y1 - y0) / (x1 - x0);
      Rational xs = (y0 - m * x0) / (1 - m);
      if (x0 <= xs && xs <= x1) fixed.push_back({xs, xs});
    }
  }
  std::sort(fixed.begin(), fixed.end());
  std::vector<std::pair<Rational, Rational>> merged;
  for (auto& iv : fixed) {
    if (!merged.empty() && iv.first <= merged.back().second) {
      if (iv.second > merged.back().second) merged.back().second = iv.second;
    } else {
      merged.push_back(iv);
    }
  }
  std::vector<ElementOrbital> out;
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    Orbital a(merged[i].second, merged[i + 1].first);
    Direction d = eval(f, a.midpoint()) > a.midpoint() ? Direction::RightMover
                                                       : Direction::LeftMover;
    out.push_back({a, d});
  }
  return out;
}

inline std::vector<Orbital> orbitals_of(const PLMap& f) {
  std::vector<Orbital> out;
  for (auto& eo : support_components(f)) out.push_back(eo.orbital);
  return out;
}

inline bool realizes(const PLMap& g, const Orbital& a) {
  for (auto& b : orbitals_of(g))
    if (b == a) return true;
  return false;
}

/// Orbitals of g^h, i.e. the h-images of the orbitals of g, order preserved.
inline std::vector<Orbital> induced_orbitals(const PLMap& g, const PLMap& h) {
  std::vector<Orbital> out;
  for (auto& a : orbitals_of(g)) out.push_back(Orbital(eval(h, a.lo), eval(h, a.hi)));
  return out;
}

/// Slopes of the leading and trailing affine components of g meeting A.
/// A must be an orbital of g.
inline std::pair<Rational, Rational> end_slopes(const PLMap& g, const Orbital& a) {
  if (!realizes(g, a)) throw std::invalid_argument("end_slopes: not an orbital of the element");
  return {slopes_at(g, a.lo).second, slopes_at(g, a.hi).first};
}

enum class End { Lead, Trail };

/// g has an orbital inside A sharing the given end with A.
inline bool realizes_end(const PLMap& g, const Orbital& a, End end) {
  for (auto& b : orbitals_of(g)) {
    if (!subset(b, a)) continue;
    if (end == End::Lead ? b.lo == a.lo : b.hi == a.hi) return true;
  }
  return false;
}

/// g realizes the end of A and moves points toward it there.
inline bool approaches(const PLMap& g, const Orbital& a, End end) {
  for (auto& eo : support_components(g)) {
    if (!subset(eo.orbital, a)) continue;
    if (end == End::Lead && eo.orbital.lo == a.lo)
      return eo.direction == Direction::LeftMover;
    if (end == End::Trail && eo.orbital.hi == a.hi)
      return eo.direction == Direction::RightMover;
  }
  return false;
}

/// Minimal n >= 1 with the n-th forward iterate of x within eps of the end h
/// moves toward on A, and the n-th backward iterate within eps of the other
/// end.
inline long iterate_escape(const PLMap& h, const Orbital& a, const Rational& x,
                           const Rational& eps) {
  if (eps <= 0) throw std::domain_error("iterate_escape: eps must be positive");
  if (!a.contains(x)) throw std::domain_error("iterate_escape: point not in the orbital");
  Direction dir = Direction::RightMover;
  for (auto& eo : support_components(h)) {
    if (eo.orbital == a) {
      dir = eo.direction;
      goto found;
    }
  }
  throw std::invalid_argument("iterate_escape: not an orbital of the element");
found:
  const Rational& fwd_target = dir == Direction::RightMover ? a.hi : a.lo;
  const Rational& bwd_target = dir == Direction::RightMover ? a.lo : a.hi;
  PLMap hinv = invert(h);
  Rational yf = x, yb = x;
  for (long n = 1; n <= iteration_cap(); ++n) {
    yf = eval(h, yf);
    yb = eval(hinv, yb);
    if (abs(yf - fwd_target) < eps && abs(yb - bwd_target) < eps) return n;
  }
  throw iteration_limit_error("iterate_escape: iteration cap exceeded");
}

/// Relative position of two orbitals. AInsideB and BInsideA mean closure
/// containment; Overlap is every intersecting configuration that is neither
/// equality nor closure nesting (the transition-chain shapes).
enum class Nesting { Equal, AInsideB, BInsideA, Disjoint, Overlap };

inline Nesting nesting_classify(const Orbital& a, const Orbital& b) {
  if (a == b) return Nesting::Equal;
  if (!intersects(a, b)) return Nesting::Disjoint;
  if (b.lo < a.lo && a.hi < b.hi) return Nesting::AInsideB;
  if (a.lo < b.lo && b.hi < a.hi) return Nesting::BInsideA;
  return Nesting::Overlap;
}

enum class PartialCmp { Less, Equal, Greater, Incomparable };

/// Partial order on signed orbitals: orbital inclusion first, then the left
/// total order on signatures for equal orbitals.
inline PartialCmp signed_cmp(const SignedOrbital& p, const SignedOrbital& q) {
  if (p.orbital == q.orbital) {
    auto c = left_order_cmp(p.map, q.map);
    if (c == std::strong_ordering::less) return PartialCmp::Less;
    if (c == std::strong_ordering::greater) return PartialCmp::Greater;
    return PartialCmp::Equal;
  }
  if (proper_subset(p.orbital, q.orbital)) return PartialCmp::Less;
  if (proper_subset(q.orbital, p.orbital)) return PartialCmp::Greater;
  return PartialCmp::Incomparable;
}

/// One map per orbital of g, agreeing with g there and the identity
/// elsewhere. The pieces have disjoint supports and multiply back to g.
inline std::vector<PLMap> split_element(const PLMap& g) {
  std::vector<PLMap> out;
  for (auto& a : orbitals_of(g)) {
    std::vector<PLMap::Vertex> vs;
    vs.push_back({Rational(0), Rational(0)});
    if (a.lo > 0) vs.push_back({a.lo, a.lo});
    for (const auto& v : g.vertices())
      if (a.lo < v.first && v.first < a.hi) vs.push_back(v);
    if (a.hi < 1) vs.push_back({a.hi, a.hi});
    vs.push_back({Rational(1), Rational(1)});
    out.push_back(PLMap::from_vertices(std::move(vs)));
  }
  return out;
}

}  // namespace plgroup
