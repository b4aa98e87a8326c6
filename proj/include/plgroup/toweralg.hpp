#pragma once

#include "plgroup/orbitals.hpp"
#include "plgroup/plmap.hpp"
#include "plgroup/session.hpp"
#include "plgroup/towers.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace plgroup {

struct needs_larger_ball : std::runtime_error {
  explicit needs_larger_ball(const std::string& what) : std::runtime_error(what) {}
};

struct MoverResult {
  GroupWord word;
  PLMap map;
  Rational image;  // eval(map, c), verified > d
};

namespace detail {

// minimal m >= 1 with start.g^m > target, g moving right past target
inline long minimal_power_past(const PLMap& g, const Rational& start, const Rational& target) {
  Rational y = start;
  for (long m = 1; m <= iteration_cap(); ++m) {
    y = eval(g, y);
    if (y > target) return m;
  }
  throw iteration_limit_error("minimal power search exceeded the iteration cap");
}

struct ChainSlot {
  Orbital orbital;
  GroupWord word;  // already direction-normalized to move right
  PLMap map;
};

}  // namespace detail

/// An element g of the sampled group with c.g > d, built from a minimal
/// transition chain of ball-element orbitals covering [c,d]. For a single
/// covering orbital the minimal power is returned; longer chains follow the
/// covering construction with midpoint choices. Throws needs_larger_ball when
/// the current ball cannot cover [c,d].
inline MoverResult mover(const GroupSession& s, const Orbital& a, const Rational& c,
                         const Rational& d) {
  if (!(c < d)) throw std::domain_error("mover: require c < d");
  if (!a.contains(c) || !a.contains(d))
    throw std::domain_error("mover: points must lie inside the orbital");
  {
    bool found = false;
    for (auto& g : group_orbitals(s))
      if (g == a) found = true;
    if (!found) throw std::domain_error("mover: not an orbital of the session group");
  }

  // candidate signed orbitals, direction-normalized
  std::vector<detail::ChainSlot> cands;
  for (auto& e : s.ball()) {
    if (e.map.is_identity()) continue;
    for (auto& eo : support_components(e.map)) {
      if (eo.direction == Direction::RightMover)
        cands.push_back({eo.orbital, e.word, e.map});
      else
        cands.push_back({eo.orbital, e.word.inverse(), invert(e.map)});
    }
  }

  // greedy minimal cover of [c,d]; ties keep the earliest (shortest) witness
  std::vector<detail::ChainSlot> chain;
  Rational point = c;
  while (true) {
    const detail::ChainSlot* best = nullptr;
    for (auto& cand : cands) {
      if (!(cand.orbital.lo < point && point < cand.orbital.hi)) continue;
      if (!best || cand.orbital.hi > best->orbital.hi) best = &cand;
    }
    if (!best)
      throw needs_larger_ball("mover: ball orbitals do not cover [c,d] at this radius");
    chain.push_back(*best);
    if (d < chain.back().orbital.hi) break;
    point = chain.back().orbital.hi;
  }

  GroupWord word;
  PLMap map;
  if (chain.size() == 1) {
    long m = detail::minimal_power_past(chain[0].map, c, d);
    word = chain[0].word.pow(m);
    map = power(chain[0].map, m);
  } else {
    // delta bounds every overlap and the clearance of c and d, then each
    // x_k rides its own orbital to within delta of the right end
    Rational delta1 = chain[0].orbital.hi - chain[1].orbital.lo;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      Rational len = chain[i].orbital.hi - chain[i + 1].orbital.lo;
      if (len < delta1) delta1 = len;
    }
    Rational delta2 = c - chain.front().orbital.lo;
    if (chain.back().orbital.hi - d < delta2) delta2 = chain.back().orbital.hi - d;
    Rational delta = (delta1 < delta2 ? delta1 : delta2) / 2;
    for (auto& slot : chain) {
      Rational xk = slot.orbital.lo + delta / 2;
      long m = detail::minimal_power_past(slot.map, xk, slot.orbital.hi - delta);
      word = word.concat(slot.word.pow(m));
      map = compose(map, power(slot.map, m));
    }
  }
  Rational image = eval(map, c);
  if (!(image > d)) throw std::logic_error("mover: verification failed");
  return {std::move(word), std::move(map), std::move(image)};
}

namespace detail {

// no pair of orbitals in transition-chain position
inline bool no_overlap(const std::vector<Orbital>& xs, const std::vector<Orbital>& ys) {
  for (auto& x : xs)
    for (auto& y : ys)
      if (nesting_classify(x, y) == Nesting::Overlap) return false;
  return true;
}

// hull [u,v] of the support of g inside the orbital c (closure-nested pieces)
inline std::optional<std::pair<Rational, Rational>> support_hull_inside(
    const PLMap& g, const Orbital& c) {
  std::optional<std::pair<Rational, Rational>> hull;
  for (auto& b : orbitals_of(g)) {
    if (!subset(b, c) || b == c) continue;
    if (!hull)
      hull = {b.lo, b.hi};
    else {
      if (b.lo < hull->first) hull->first = b.lo;
      if (b.hi > hull->second) hull->second = b.hi;
    }
  }
  return hull;
}

// supp(g) inside c fits in one fundamental domain of h^m on c; h must
// realize c. Uses supp(g) as an open set, so the closed-end fit v <= u.h^m
// counts.
inline bool fits_fundamental_domain(const PLMap& g, const Orbital& c, const PLMap& h,
                                    long m) {
  auto hull = support_hull_inside(g, c);
  if (!hull) return true;
  PLMap hm = power(h, m);
  if (eval(h, c.midpoint()) > c.midpoint())
    return hull->second <= eval(hm, hull->first);
  return hull->first >= eval(hm, hull->second);
}

}  // namespace detail

/// Minimal positive (m, n), by total then first coordinate, such that g^m and
/// h^n satisfy the mutual efficiency condition. Requires the orbitals of g
/// and h to be free of transition-chain overlaps.
inline std::pair<long, long> mutual_efficiency_powers(const PLMap& g, const PLMap& h) {
  auto og = orbitals_of(g), oh = orbitals_of(h);
  if (!detail::no_overlap(og, oh))
    throw std::invalid_argument("mutual_efficiency_powers: orbitals overlap at an end");
  auto satisfied = [&](long m, long n) {
    for (auto& c : og) {
      bool proper = false;
      for (auto& b : oh)
        if (proper_subset(b, c)) proper = true;
      if (proper && !detail::fits_fundamental_domain(h, c, g, m)) return false;
    }
    for (auto& d : oh) {
      bool proper = false;
      for (auto& b : og)
        if (proper_subset(b, d)) proper = true;
      if (proper && !detail::fits_fundamental_domain(g, d, h, n)) return false;
    }
    return true;
  };
  for (long total = 2; total <= iteration_cap(); ++total) {
    for (long m = 1; m < total; ++m) {
      long n = total - m;
      if (satisfied(m, n)) return {m, n};
    }
  }
  throw iteration_limit_error("mutual_efficiency_powers: cap exceeded");
}

/// [g,2 h] = [[g,h],h]
inline PLMap double_commutator(const PLMap& g, const PLMap& h) {
  return commutator(commutator(g, h), h);
}

struct DcReport {
  bool inherited_orbitals_ok = true;  // g-orbitals properly inside h-orbitals survive
  bool confined_orbitals_ok = true;   // f-orbitals sit properly inside g-meeting h-orbitals
  std::vector<Orbital> inherited;     // the orbitals checked for point one
  std::vector<Orbital> f_orbitals;
  bool pass() const { return inherited_orbitals_ok && confined_orbitals_ok; }
};

/// Exact check of the two double-commutator orbital facts for a mutually
/// efficient pair.
inline DcReport dc_orbital_report(const PLMap& g, const PLMap& h) {
  auto og = orbitals_of(g), oh = orbitals_of(h);
  if (!detail::no_overlap(og, oh))
    throw std::invalid_argument("dc_orbital_report: orbitals overlap at an end");
  for (auto& c : og) {
    bool proper = false;
    for (auto& b : oh)
      if (proper_subset(b, c)) proper = true;
    if (proper && !detail::fits_fundamental_domain(h, c, g, 1))
      throw std::invalid_argument("dc_orbital_report: pair is not mutually efficient");
  }
  for (auto& d : oh) {
    bool proper = false;
    for (auto& b : og)
      if (proper_subset(b, d)) proper = true;
    if (proper && !detail::fits_fundamental_domain(g, d, h, 1))
      throw std::invalid_argument("dc_orbital_report: pair is not mutually efficient");
  }

  PLMap f = double_commutator(g, h);
  DcReport report;
  report.f_orbitals = orbitals_of(f);
  for (auto& a : og) {
    for (auto& b : oh) {
      if (proper_subset(a, b)) {
        report.inherited.push_back(a);
        if (!realizes(f, a)) report.inherited_orbitals_ok = false;
        break;
      }
    }
  }
  for (auto& a : report.f_orbitals) {
    bool ok = false;
    for (auto& b : oh) {
      if (!proper_subset(a, b)) continue;
      for (auto& cg : og)
        if (subset(cg, b)) ok = true;
    }
    if (!ok) report.confined_orbitals_ok = false;
  }
  return report;
}

/// One step of commutator descent: an exemplary tower of height n yields a
/// tower of height n-1 whose signatures are commutators of powers of the
/// input signatures and whose orbitals are the lower n-1 input orbitals.
inline Tower tower_descent(const Tower& t) {
  validate_tower(t);
  if (t.height() < 1) throw std::invalid_argument("tower_descent: empty tower");
  if (!is_exemplary(t)) throw std::invalid_argument("tower_descent: tower is not exemplary");
  for (std::size_t i = 0; i + 1 < t.entries.size(); ++i)
    if (!detail::no_overlap(orbitals_of(t.entries[i].map), orbitals_of(t.entries[i + 1].map)))
      throw std::invalid_argument("tower_descent: adjacent signatures overlap at an end");

  const std::size_t n = t.entries.size();
  std::vector<PLMap> h(n);
  std::vector<long> exps(n, 1);
  h[0] = t.entries[0].map;
  for (std::size_t i = 1; i < n; ++i) {
    const Orbital& ai = t.entries[i].orbital;
    const PLMap& gi = t.entries[i].map;
    long m = 1;
    while (!detail::fits_fundamental_domain(t.entries[i - 1].map, ai, gi, m)) {
      if (++m > iteration_cap())
        throw iteration_limit_error("tower_descent: power search cap exceeded");
    }
    exps[i] = m;
    h[i] = power(gi, m);
  }
  Tower out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    PLMap v = commutator(h[i], h[i + 1]);
    if (!realizes(v, t.entries[i].orbital))
      throw std::logic_error("tower_descent: commutator lost the expected orbital");
    GroupWord wi = t.entries[i].word.pow(exps[i]);
    GroupWord wj = t.entries[i + 1].word.pow(exps[i + 1]);
    GroupWord w = wi.inverse().concat(wj.inverse()).concat(wi).concat(wj);
    out.entries.push_back({t.entries[i].orbital, std::move(w), std::move(v)});
  }
  validate_tower(out);
  return out;
}

namespace detail {

// span (inf supp, sup supp) of a non-identity element
inline Orbital support_span(const PLMap& g) {
  auto orbs = orbitals_of(g);
  if (orbs.empty()) throw std::invalid_argument("support span of the identity");
  return Orbital(orbs.front().lo, orbs.back().hi);
}

// realizes both ends of its span with end slopes on the same side of 1
inline bool inconsistent_on_span(const PLMap& c, Orbital& span_out) {
  auto orbs = orbitals_of(c);
  if (orbs.size() < 2) return false;
  span_out = Orbital(orbs.front().lo, orbs.back().hi);
  auto [lead, trail] = phi(c, span_out);
  return (lead > 1 && trail > 1) || (lead < 1 && trail < 1);
}

// interior fixed set of c inside its span, as hull [lo, hi]
inline std::pair<Rational, Rational> interior_fixed_hull(const PLMap& c) {
  auto orbs = orbitals_of(c);
  return {orbs.front().hi, orbs.back().lo};
}

}  // namespace detail

struct TransferResult {
  long n = 0;
  PLMap conjugate;
  Orbital grown;
};

/// Grows an orbital of g by conjugating with powers of the inconsistent
/// element c until the closed interval [klo, khi] fits inside; minimal |n|.
inline TransferResult transfer_grow(const PLMap& c, const PLMap& g, const Rational& klo,
                                    const Rational& khi) {
  if (klo > khi) throw std::invalid_argument("transfer_grow: empty interval");
  Orbital span(0, 1);
  if (!detail::inconsistent_on_span(c, span))
    throw std::invalid_argument("transfer_grow: c is not inconsistent on its span");
  if (!(span.lo < klo && khi < span.hi))
    throw std::invalid_argument("transfer_grow: K is not compactly inside the span of c");
  auto inside = [&](const Orbital& b) { return b.lo < klo && khi < b.hi; };
  for (auto& b : orbitals_of(g))
    if (inside(b)) return {0, g, b};

  auto [flo, fhi] = detail::interior_fixed_hull(c);
  std::optional<Orbital> carrier;
  for (auto& b : orbitals_of(g))
    if (b.lo < flo && fhi < b.hi) carrier = b;
  if (!carrier)
    throw std::invalid_argument(
        "transfer_grow: no orbital of g contains the interior fixed set of c");

  auto grows = [&](const PLMap& m) {
    Rational l2 = eval(m, carrier->lo), h2 = eval(m, carrier->hi);
    return l2 <= carrier->lo && carrier->hi <= h2 &&
           (l2 < carrier->lo || h2 > carrier->hi);
  };
  long dir;
  if (grows(c))
    dir = 1;
  else if (grows(invert(c)))
    dir = -1;
  else
    throw std::invalid_argument("transfer_grow: conjugation by c does not grow the orbital");
  Rational lo = carrier->lo, hi = carrier->hi;
  PLMap cs = dir > 0 ? c : invert(c);
  for (long k = 1; k <= iteration_cap(); ++k) {
    lo = eval(cs, lo);
    hi = eval(cs, hi);
    if (lo < klo && khi < hi) {
      long n = dir * k;
      return {n, conjugate(g, power(c, n)), Orbital(lo, hi)};
    }
  }
  throw iteration_limit_error("transfer_grow: iteration cap exceeded");
}

/// Exemplary tower of the requested height built from repeated conjugation of
/// g0 by powers of the inconsistent element h: each next signature is the
/// previous one conjugated just far enough that its orbital swallows the
/// whole previous support.
inline Tower inconsistent_tower(const PLMap& h, const PLMap& g0, int height) {
  if (height < 1) throw std::invalid_argument("inconsistent_tower: height must be positive");
  Orbital span(0, 1);
  if (!detail::inconsistent_on_span(h, span))
    throw std::invalid_argument("inconsistent_tower: h is not inconsistent on its span");
  auto [flo, fhi] = detail::interior_fixed_hull(h);
  std::optional<Orbital> b0;
  for (auto& b : orbitals_of(g0))
    if (b.lo < flo && fhi < b.hi) b0 = b;
  if (!b0)
    throw std::invalid_argument(
        "inconsistent_tower: no orbital of g0 contains the interior fixed set of h");

  // normalize so conjugation by positive powers grows the carrier orbital
  auto grows = [&](const PLMap& m) {
    Rational l2 = eval(m, b0->lo), h2 = eval(m, b0->hi);
    return l2 <= b0->lo && b0->hi <= h2 && (l2 < b0->lo || h2 > b0->hi);
  };
  PLMap hn;
  if (grows(h))
    hn = h;
  else if (grows(invert(h)))
    hn = invert(h);
  else
    throw std::invalid_argument("inconsistent_tower: conjugation by h does not grow the orbital");
  Tower out;
  PLMap g = g0;
  Orbital b = *b0;
  out.entries.push_back({b, GroupWord(), g});
  for (int i = 1; i < height; ++i) {
    auto os = orbitals_of(g);
    Rational u = os.front().lo, v = os.back().hi;
    Rational lo = b.lo, hi = b.hi;
    long m = 0;
    do {
      lo = eval(hn, lo);
      hi = eval(hn, hi);
      if (++m > iteration_cap())
        throw iteration_limit_error("inconsistent_tower: power search cap exceeded");
    } while (!(lo < u && v < hi));
    g = conjugate(g, power(hn, m));
    b = Orbital(lo, hi);
    if (!realizes(g, b))
      throw std::logic_error("inconsistent_tower: conjugate lost the grown orbital");
    out.entries.push_back({b, GroupWord(), g});
  }
  validate_tower(out);
  if (!is_exemplary(out))
    throw std::logic_error("inconsistent_tower: output tower is not exemplary");
  return out;
}

}  // namespace plgroup
