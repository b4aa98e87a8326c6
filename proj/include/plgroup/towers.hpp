#pragma once

#include "plgroup/orbitals.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace plgroup {

/// Chain of signed orbitals, strictly increasing under the signed partial
/// order, one entry per orbital. Height = number of entries.
struct Tower {
  std::vector<SignedOrbital> entries;
  int height() const { return static_cast<int>(entries.size()); }
};

/// Sequence of signed orbitals where consecutive orbitals intersect, every
/// orbital owns a point outside all the others, and those points increase.
/// `points` records one valid choice of owned points.
struct TransitionChain {
  std::vector<SignedOrbital> entries;
  std::vector<Rational> points;
  int length() const { return static_cast<int>(entries.size()); }
};

inline void validate_tower(const Tower& t) {
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    if (!realizes(t.entries[i].map, t.entries[i].orbital))
      throw std::invalid_argument("tower: entry orbital is not an orbital of its signature");
    if (i > 0 && !proper_subset(t.entries[i - 1].orbital, t.entries[i].orbital))
      throw std::invalid_argument("tower: orbitals must be strictly increasing");
  }
}

/// Exemplary: for entries (A,g) < (B,h), no orbital of g contains an end of B
/// and no orbital of g inside B shares an end with B.
inline bool is_exemplary(const Tower& t) {
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    auto lower = orbitals_of(t.entries[i].map);
    for (std::size_t j = i + 1; j < t.entries.size(); ++j) {
      const Orbital& b = t.entries[j].orbital;
      for (auto& c : lower) {
        if (c.contains(b.lo) || c.contains(b.hi)) return false;
        if (subset(c, b) && (c.lo == b.lo || c.hi == b.hi)) return false;
      }
    }
  }
  return true;
}

namespace detail {

// half-open/closed interval piece used for exact ownership computations
struct Piece {
  Rational lo, hi;
  bool lo_closed, hi_closed;
  bool empty() const {
    return lo > hi || (lo == hi && !(lo_closed && hi_closed));
  }
};

// subtract the open interval (c, d) from p
inline void subtract_open(const Piece& p, const Rational& c, const Rational& d,
                          std::vector<Piece>& out) {
  if (d <= p.lo || p.hi <= c) {  // (c,d) is open, so touching endpoints survive
    out.push_back(p);
    return;
  }
  if (p.lo < c || (p.lo == c && p.lo_closed)) {
    Piece left{p.lo, c, p.lo_closed, true};
    if (!left.empty()) out.push_back(left);
  }
  if (d < p.hi || (d == p.hi && p.hi_closed)) {
    Piece right{d, p.hi, true, p.hi_closed};
    if (!right.empty()) out.push_back(right);
  }
}

// A_k minus the union of the other orbitals, as exact pieces
inline std::vector<Piece> owned_region(const std::vector<Orbital>& orbs, std::size_t k) {
  std::vector<Piece> pieces{{orbs[k].lo, orbs[k].hi, false, false}};
  for (std::size_t j = 0; j < orbs.size(); ++j) {
    if (j == k) continue;
    std::vector<Piece> next;
    for (auto& p : pieces) subtract_open(p, orbs[j].lo, orbs[j].hi, next);
    pieces = std::move(next);
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  return pieces;
}

// infimum of points in `pieces` strictly greater than `t` (nullopt for -inf),
// plus whether the infimum itself is attainable
struct Inf {
  Rational value;
  bool attainable;
};

inline std::optional<Inf> next_inf(const std::vector<Piece>& pieces,
                                   const std::optional<Rational>& t) {
  for (auto& p : pieces) {
    if (p.empty()) continue;
    if (!t) return Inf{p.lo, p.lo_closed};
    if (p.hi < *t || (p.hi == *t)) continue;  // needs points strictly above t
    if (p.lo > *t) return Inf{p.lo, p.lo_closed};
    return Inf{*t, false};  // points just above t inside p
  }
  return std::nullopt;
}

// feasibility of increasing owned points p_k; the constraint for step k is
// only "strictly above the previous infimum" (squeeze argument)
inline bool chain_points_feasible(const std::vector<Orbital>& orbs,
                                  std::vector<Rational>* points_out) {
  std::vector<std::vector<Piece>> regions;
  regions.reserve(orbs.size());
  for (std::size_t k = 0; k < orbs.size(); ++k) regions.push_back(owned_region(orbs, k));
  std::vector<Inf> infs;
  std::optional<Rational> t;
  for (std::size_t k = 0; k < orbs.size(); ++k) {
    auto nx = next_inf(regions[k], t);
    if (!nx) return false;
    infs.push_back(*nx);
    t = nx->value;
  }
  if (points_out) {
    // backward pass: concrete increasing points. The forward infimums are
    // strictly increasing except at non-attainable repeats, so every chosen
    // point stays strictly below the next one.
    points_out->assign(orbs.size(), Rational(0));
    std::optional<Rational> upper;
    for (std::size_t k = orbs.size(); k-- > 0;) {
      const Inf& inf = infs[k];
      Rational p;
      if (inf.attainable && (!upper || inf.value < *upper)) {
        p = inf.value;
      } else {
        // midpoint of (inf.value, min(upper, end of the piece just above it))
        Rational hi = upper ? *upper : Rational(2);
        for (auto& piece : regions[k]) {
          if (piece.empty()) continue;
          if (piece.hi > inf.value && piece.lo <= inf.value) {
            if (piece.hi < hi) hi = piece.hi;
            break;
          }
        }
        p = (inf.value + hi) / 2;
      }
      (*points_out)[k] = p;
      upper = p;
    }
  }
  return true;
}

}  // namespace detail

/// Checks the three transition-chain conditions exactly; on success fills
/// `points` with one valid choice of owned points.
inline bool is_transition_chain(const std::vector<SignedOrbital>& seq,
                                std::vector<Rational>* points) {
  if (seq.empty()) return false;
  std::vector<Orbital> orbs;
  for (auto& so : seq) orbs.push_back(so.orbital);
  for (std::size_t k = 0; k + 1 < orbs.size(); ++k)
    if (!intersects(orbs[k], orbs[k + 1])) return false;
  return detail::chain_points_feasible(orbs, points);
}

namespace detail {

inline bool lex_less_signed(const SignedOrbital& a, const SignedOrbital& b) {
  if (!(a.orbital == b.orbital)) return a.orbital < b.orbital;
  int wc = GroupWord::compare(a.word, b.word);
  if (wc != 0) return wc < 0;
  return a.map < b.map;
}

// one representative per distinct orbital, the least signature winning
inline std::vector<SignedOrbital> dedupe_by_orbital(std::vector<SignedOrbital> in) {
  std::sort(in.begin(), in.end(), lex_less_signed);
  std::vector<SignedOrbital> out;
  for (auto& so : in)
    if (out.empty() || !(out.back().orbital == so.orbital)) out.push_back(so);
  return out;
}

inline void chain_dfs(const std::vector<SignedOrbital>& cands, std::vector<int>& seq,
                      std::vector<char>& used, std::vector<std::vector<int>>& results,
                      long& nodes) {
  if (++nodes > 200000)
    throw std::runtime_error("transition chain enumeration exceeded the search cap");
  bool extended = false;
  for (std::size_t c = 0; c < cands.size(); ++c) {
    if (used[c]) continue;
    if (!intersects(cands[seq.back()].orbital, cands[c].orbital)) continue;
    seq.push_back(static_cast<int>(c));
    std::vector<SignedOrbital> trial;
    for (int i : seq) trial.push_back(cands[i]);
    bool ok = is_transition_chain(trial, nullptr);
    if (ok) {
      used[c] = 1;
      extended = true;
      chain_dfs(cands, seq, used, results, nodes);
      used[c] = 0;
    }
    seq.pop_back();
  }
  if (!extended) results.push_back(seq);
}

}  // namespace detail

/// All maximal transition chains formable from the given signed orbitals
/// (at most one entry per distinct orbital). Deterministic output order.
inline std::vector<TransitionChain> find_transition_chains(
    const std::vector<SignedOrbital>& signed_orbitals) {
  auto cands = detail::dedupe_by_orbital(signed_orbitals);
  std::vector<std::vector<int>> raw;
  long nodes = 0;
  for (std::size_t s = 0; s < cands.size(); ++s) {
    std::vector<int> seq{static_cast<int>(s)};
    std::vector<char> used(cands.size(), 0);
    used[s] = 1;
    detail::chain_dfs(cands, seq, used, raw, nodes);
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  // drop chains that appear as a contiguous subset of a longer one
  auto contiguous_subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() >= b.size()) return false;
    for (std::size_t off = 0; off + a.size() <= b.size(); ++off)
      if (std::equal(a.begin(), a.end(), b.begin() + off)) return true;
    return false;
  };
  std::vector<TransitionChain> out;
  for (auto& a : raw) {
    bool maximal = true;
    for (auto& b : raw)
      if (contiguous_subset(a, b)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    TransitionChain chain;
    for (int i : a) chain.entries.push_back(cands[i]);
    if (!is_transition_chain(chain.entries, &chain.points))
      throw std::logic_error("find_transition_chains produced an invalid chain");
    out.push_back(std::move(chain));
  }
  return out;
}

/// Maximum-cardinality chain under strict orbital inclusion, one signature
/// per orbital; signature ties break toward the lexicographically least
/// witness word.
inline Tower find_max_tower(const std::vector<SignedOrbital>& signed_orbitals) {
  auto cands = detail::dedupe_by_orbital(signed_orbitals);
  // strict inclusion implies strictly smaller width, so width sorting is a
  // topological order for the containment DAG
  std::sort(cands.begin(), cands.end(), [](const SignedOrbital& a, const SignedOrbital& b) {
    Rational wa = a.orbital.width(), wb = b.orbital.width();
    if (wa != wb) return wa < wb;
    return a.orbital < b.orbital;
  });
  std::vector<int> len(cands.size(), 1), prev(cands.size(), -1);
  int best = -1;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (proper_subset(cands[j].orbital, cands[i].orbital) && len[j] + 1 > len[i]) {
        len[i] = len[j] + 1;
        prev[i] = static_cast<int>(j);
      }
    }
    if (best < 0 || len[i] > len[best]) best = static_cast<int>(i);
  }
  Tower t;
  for (int i = best; i >= 0; i = prev[i]) t.entries.push_back(cands[i]);
  std::reverse(t.entries.begin(), t.entries.end());
  validate_tower(t);
  return t;
}

}  // namespace plgroup
