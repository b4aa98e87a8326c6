#pragma once

#include "plgroup/rational.hpp"

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <utility>
#include <vector>

namespace plgroup {

/// An orientation-preserving PL homeomorphism of [0,1], stored as its ordered
/// vertex table. Invariants: first vertex (0,0), last (1,1), x and y strictly
/// increasing, and no three consecutive vertices collinear, so every interior
/// vertex is a true breakpoint and equality is structural. Values are
/// immutable; all operations return new maps. Elements act on the right:
/// compose(f, g) is "f then g".
class PLMap {
 public:
  using Vertex = std::pair<Rational, Rational>;

  PLMap() : verts_{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}} {}

  static PLMap from_vertices(std::vector<Vertex> vs) {
    return PLMap(canonicalize(std::move(vs)));
  }

  /// Rejects input that is not already canonical.
  static PLMap from_vertices_strict(std::vector<Vertex> vs) {
    validate(vs);
    for (std::size_t i = 1; i + 1 < vs.size(); ++i)
      if (collinear(vs[i - 1], vs[i], vs[i + 1]))
        throw std::invalid_argument("vertex table is not canonical");
    return PLMap(std::move(vs));
  }

  /// Merges collinear interior vertices; throws if the table is not a valid
  /// homeomorphism graph ((0,0) to (1,1), strictly increasing).
  static std::vector<Vertex> canonicalize(std::vector<Vertex> vs) {
    validate(vs);
    std::vector<Vertex> out;
    out.reserve(vs.size());
    for (auto& v : vs) {
      while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), v))
        out.pop_back();
      out.push_back(std::move(v));
    }
    return out;
  }

  const std::vector<Vertex>& vertices() const { return verts_; }
  bool is_identity() const { return verts_.size() == 2; }

  friend bool operator==(const PLMap& a, const PLMap& b) { return a.verts_ == b.verts_; }
  // lexicographic on the vertex table; any total order works for containers
  friend bool operator<(const PLMap& a, const PLMap& b) { return a.verts_ < b.verts_; }

 private:
  explicit PLMap(std::vector<Vertex> vs) : verts_(std::move(vs)) {}

  static bool collinear(const Vertex& a, const Vertex& b, const Vertex& c) {
    return (b.second - a.second) * (c.first - b.first) ==
           (c.second - b.second) * (b.first - a.first);
  }

  static void validate(const std::vector<Vertex>& vs) {
    if (vs.size() < 2) throw std::invalid_argument("vertex table needs at least 2 vertices");
    if (vs.front().first != 0 || vs.front().second != 0)
      throw std::invalid_argument("first vertex must be (0,0)");
    if (vs.back().first != 1 || vs.back().second != 1)
      throw std::invalid_argument("last vertex must be (1,1)");
    for (std::size_t i = 1; i < vs.size(); ++i) {
      if (!(vs[i - 1].first < vs[i].first) || !(vs[i - 1].second < vs[i].second))
        throw std::invalid_argument("vertex coordinates must be strictly increasing");
    }
  }

  std::vector<Vertex> verts_;
};

/// Image of x under the right action x.f; exact. x must lie in [0,1].
inline Rational eval(const PLMap& f, const Rational& x) {
  if (x < 0 || x > 1) throw std::domain_error("eval: point outside [0,1]");
  const auto& vs = f.vertices();
  // rightmost segment whose left vertex is <= x
  std::size_t lo = 0, hi = vs.size() - 1;
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (vs[mid].first <= x)
      lo = mid;
    else
      hi = mid;
  }
  const auto& [x0, y0] = vs[lo];
  const auto& [x1, y1] = vs[lo + 1];
  if (x == x0) return y0;
  return y0 + (x - x0) * (y1 - y0) / (x1 - x0);
}

inline PLMap invert(const PLMap& f) {
  std::vector<PLMap::Vertex> vs;
  vs.reserve(f.vertices().size());
  for (const auto& [x, y] : f.vertices()) vs.push_back({y, x});
  return PLMap::from_vertices(std::move(vs));
}

/// x.(fg) = (x.f).g
inline PLMap compose(const PLMap& f, const PLMap& g) {
  PLMap finv = invert(f);
  std::vector<Rational> cuts;
  cuts.reserve(f.vertices().size() + g.vertices().size());
  for (const auto& v : f.vertices()) cuts.push_back(v.first);
  for (const auto& v : g.vertices()) cuts.push_back(eval(finv, v.first));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<PLMap::Vertex> vs;
  vs.reserve(cuts.size());
  for (const auto& x : cuts) vs.push_back({x, eval(g, eval(f, x))});
  return PLMap::from_vertices(std::move(vs));
}

/// g^h = h^{-1} g h
inline PLMap conjugate(const PLMap& g, const PLMap& h) {
  return compose(compose(invert(h), g), h);
}

/// [g,h] = g^{-1} h^{-1} g h
inline PLMap commutator(const PLMap& g, const PLMap& h) {
  return compose(compose(invert(g), invert(h)), compose(g, h));
}

inline PLMap power(const PLMap& g, long k) {
  if (k < 0) return power(invert(g), -k);
  PLMap acc, base = g;
  while (k > 0) {
    if (k & 1) acc = compose(acc, base);
    k >>= 1;
    if (k) base = compose(base, base);
  }
  return acc;
}

/// Left total order: strict comparison at the right derivative after the
/// largest initial segment [0,a] on which f and g agree.
inline std::strong_ordering left_order_cmp(const PLMap& f, const PLMap& g) {
  if (f == g) return std::strong_ordering::equal;
  std::vector<Rational> xs;
  for (const auto& v : f.vertices()) xs.push_back(v.first);
  for (const auto& v : g.vertices()) xs.push_back(v.first);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  // both maps are affine between consecutive merged cuts, so the first cut
  // where the values differ bounds the agreement interval [0,a]
  for (std::size_t k = 1; k < xs.size(); ++k) {
    Rational fy = eval(f, xs[k]), gy = eval(g, xs[k]);
    if (fy == gy) continue;
    const Rational a = xs[k - 1];
    Rational fs = (fy - eval(f, a)) / (xs[k] - a);
    Rational gs = (gy - eval(g, a)) / (xs[k] - a);
    return fs < gs ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;  // unreachable for canonical tables
}

/// (left slope, right slope) at x; one-sided at 0 and 1.
inline std::pair<Rational, Rational> slopes_at(const PLMap& f, const Rational& x) {
  if (x < 0 || x > 1) throw std::domain_error("slopes_at: point outside [0,1]");
  const auto& vs = f.vertices();
  auto seg_slope = [&](std::size_t i) {
    return (vs[i + 1].second - vs[i].second) / (vs[i + 1].first - vs[i].first);
  };
  if (x == 0) {
    Rational s = seg_slope(0);
    return {s, s};
  }
  if (x == 1) {
    Rational s = seg_slope(vs.size() - 2);
    return {s, s};
  }
  for (std::size_t i = 1; i + 1 < vs.size(); ++i)
    if (vs[i].first == x) return {seg_slope(i - 1), seg_slope(i)};
  for (std::size_t i = 0; i + 1 < vs.size(); ++i)
    if (vs[i].first < x && x < vs[i + 1].first) {
      Rational s = seg_slope(i);
      return {s, s};
    }
  throw std::logic_error("slopes_at: segment lookup failed");
}

/// Interior vertex x-coordinates, left to right.
inline std::vector<Rational> breakpoints(const PLMap& f) {
  std::vector<Rational> out;
  const auto& vs = f.vertices();
  for (std::size_t i = 1; i + 1 < vs.size(); ++i) out.push_back(vs[i].first);
  return out;
}

/// Thompson's group F: all slopes powers of two, all breakpoints dyadic.
inline bool is_in_F(const PLMap& f) {
  const auto& vs = f.vertices();
  for (const auto& [x, y] : vs)
    if (!is_dyadic(x) || !is_dyadic(y)) return false;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    Rational s = (vs[i + 1].second - vs[i].second) / (vs[i + 1].first - vs[i].first);
    if (!is_pow2_rational(s)) return false;
  }
  return true;
}

}  // namespace plgroup
