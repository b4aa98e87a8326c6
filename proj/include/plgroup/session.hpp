#pragma once

#include "plgroup/orbitals.hpp"
#include "plgroup/plmap.hpp"
#include "plgroup/towers.hpp"
#include "plgroup/word.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plgroup {

inline bool valid_generator_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    char c = s[i];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') continue;
    if (c == '-' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))
      continue;
    return false;
  }
  return true;
}

/// A named generating set plus the cached ball of all distinct maps of freely
/// reduced words of length <= ball_radius. Immutable snapshot: extending the
/// ball returns a new session. Ball entries are ordered by (word length,
/// lexicographic word) and each map is keyed once with its least witness.
class GroupSession {
 public:
  struct BallEntry {
    GroupWord word;
    PLMap map;
  };

  GroupSession() { enumerate(); }

  explicit GroupSession(std::vector<std::pair<std::string, PLMap>> generators,
                        int ball_radius = 0)
      : gens_(std::move(generators)), radius_(ball_radius) {
    if (radius_ < 0) throw std::invalid_argument("ball radius must be nonnegative");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (!valid_generator_name(gens_[i].first))
        throw std::invalid_argument("bad generator name: '" + gens_[i].first + "'");
      for (std::size_t j = i + 1; j < gens_.size(); ++j)
        if (gens_[i].first == gens_[j].first)
          throw std::invalid_argument("duplicate generator name: '" + gens_[i].first + "'");
    }
    enumerate();
  }

  const std::vector<std::pair<std::string, PLMap>>& generators() const { return gens_; }
  int ball_radius() const { return radius_; }
  const std::vector<BallEntry>& ball() const { return ball_; }

  const PLMap* find_generator(const std::string& name) const {
    for (auto& [n, m] : gens_)
      if (n == name) return &m;
    return nullptr;
  }

  /// Signed orbitals of every non-identity ball element.
  std::vector<SignedOrbital> ball_signed_orbitals() const {
    std::vector<SignedOrbital> out;
    for (auto& e : ball_) {
      if (e.map.is_identity()) continue;
      for (auto& a : orbitals_of(e.map)) out.push_back({a, e.word, e.map});
    }
    return out;
  }

 private:
  void enumerate() {
    ball_.clear();
    ball_.push_back({GroupWord(), PLMap()});
    std::map<PLMap, int> seen;
    seen.emplace(PLMap(), 0);

    struct Letter {
      std::string name;
      int sign;
      PLMap map;
    };
    std::vector<Letter> letters;
    {
      std::vector<std::pair<std::string, PLMap>> sorted = gens_;
      std::sort(sorted.begin(), sorted.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (auto& [n, m] : sorted) {
        letters.push_back({n, +1, m});
        letters.push_back({n, -1, invert(m)});
      }
    }

    // BFS over distinct maps; extensions of a rediscovered map are covered by
    // the first witness, and cancelled extensions land on shorter words
    std::vector<int> frontier{0};
    for (int len = 1; len <= radius_; ++len) {
      std::vector<int> next;
      for (int idx : frontier) {
        GroupWord word = ball_[idx].word;
        PLMap map = ball_[idx].map;
        for (auto& lt : letters) {
          if (!word.entries().empty()) {
            const auto& last = word.entries().back();
            if (last.name == lt.name && (last.exp > 0) != (lt.sign > 0)) continue;
          }
          PLMap m2 = compose(map, lt.map);
          if (seen.contains(m2)) continue;
          GroupWord w2 = word;
          w2.append(lt.name, lt.sign);
          int id = static_cast<int>(ball_.size());
          ball_.push_back({std::move(w2), std::move(m2)});
          seen.emplace(ball_.back().map, id);
          next.push_back(id);
        }
      }
      frontier = std::move(next);
    }
  }

  std::vector<std::pair<std::string, PLMap>> gens_;
  int radius_ = 0;
  std::vector<BallEntry> ball_;
};

inline GroupSession new_session(std::vector<std::pair<std::string, PLMap>> generators) {
  return GroupSession(std::move(generators), 0);
}

inline GroupSession extend_ball(const GroupSession& s, int radius) {
  if (radius == s.ball_radius()) return s;
  return GroupSession(s.generators(), radius);
}

/// Orbitals of the generated group: components of the union of the
/// generators' supports.
inline std::vector<Orbital> group_orbitals(const GroupSession& s) {
  if (s.generators().empty())
    throw std::invalid_argument("group_orbitals: session has no generators");
  std::vector<Orbital> all;
  for (auto& [n, m] : s.generators())
    for (auto& a : orbitals_of(m)) all.push_back(a);
  std::sort(all.begin(), all.end());
  std::vector<Orbital> out;
  for (auto& a : all) {
    if (!out.empty() && a.lo < out.back().hi) {  // strict: touching stays split
      if (a.hi > out.back().hi) out.back().hi = a.hi;
    } else {
      out.push_back(a);
    }
  }
  return out;
}

/// Multiplicative end-slope pair of g at the ends of A. Exactly (1,1) when g
/// realizes neither end. g must fix both ends of A.
inline std::pair<Rational, Rational> phi(const PLMap& g, const Orbital& a) {
  if (eval(g, a.lo) != a.lo || eval(g, a.hi) != a.hi)
    throw std::invalid_argument("phi: element does not fix the orbital ends");
  return {slopes_at(g, a.lo).second, slopes_at(g, a.hi).first};
}

namespace detail {

// prime exponent vectors; key = (prime, side) with side 0 = lead, 1 = trail
using ExpVec = std::map<std::pair<Integer, int>, long>;

inline void factor_into(Integer n, long mult, int side, ExpVec& out) {
  if (n < 0) throw std::logic_error("factor_into: negative value");
  for (Integer p = 2; p * p <= n;) {
    if (n % p == 0) {
      long e = 0;
      while (n % p == 0) n /= p, ++e;
      out[{p, side}] += mult * e;
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) out[{n, side}] += mult;
}

inline ExpVec phi_exponents(const std::pair<Rational, Rational>& pr) {
  ExpVec v;
  factor_into(numerator(pr.first), 1, 0, v);
  factor_into(denominator(pr.first), -1, 0, v);
  factor_into(numerator(pr.second), 1, 1, v);
  factor_into(denominator(pr.second), -1, 1, v);
  std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
  return v;
}

inline ExpVec scale(const ExpVec& v, long k) {
  ExpVec out;
  if (k == 0) return out;
  for (auto& [key, e] : v) out[key] = e * k;
  return out;
}

inline ExpVec add(const ExpVec& a, const ExpVec& b) {
  ExpVec out = a;
  for (auto& [key, e] : b) {
    out[key] += e;
    if (out[key] == 0) out.erase(key);
  }
  return out;
}

inline Rational side_value(const ExpVec& v, int side) {
  Rational r = 1;
  for (auto& [key, e] : v) {
    if (key.second != side) continue;
    for (long i = 0; i < std::labs(e); ++i) {
      if (e > 0)
        r *= key.first;
      else
        r /= key.first;
    }
  }
  return r;
}

inline std::pair<Rational, Rational> vec_to_pair(const ExpVec& v) {
  return {side_value(v, 0), side_value(v, 1)};
}

// rank of the lattice spanned by the vectors, by fraction-free elimination
inline int lattice_rank(std::vector<ExpVec> vecs) {
  std::vector<std::pair<Integer, int>> keys;
  for (auto& v : vecs)
    for (auto& [k, e] : v)
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  std::vector<std::vector<Integer>> rows;
  for (auto& v : vecs) {
    std::vector<Integer> row(keys.size(), 0);
    bool nonzero = false;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      auto it = v.find(keys[i]);
      if (it != v.end()) row[i] = it->second, nonzero = true;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  int rank = 0;
  for (std::size_t col = 0; col < keys.size() && rank < (int)rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Integer a = rows[rank][col], b = rows[r][col];
      for (std::size_t c = col; c < keys.size(); ++c)
        rows[r][c] = rows[r][c] * a - rows[rank][c] * b;
    }
    ++rank;
  }
  return rank;
}

// content gcd of the exponents
inline long content(const ExpVec& v) {
  Integer g = 0;
  for (auto& [k, e] : v) g = gcd(g, Integer(e < 0 ? -e : e));
  return g.convert_to<long>();
}

// v == k * u for an integer k?
inline std::optional<long> integer_multiplier(const ExpVec& v, const ExpVec& u) {
  if (u.empty()) return v.empty() ? std::optional<long>(0) : std::nullopt;
  if (v.empty()) return 0;
  auto& [key0, e0] = *u.begin();
  auto it = v.find(key0);
  if (it == v.end() || it->second % e0 != 0) return std::nullopt;
  long k = it->second / e0;
  if (!(scale(u, k) == v)) return std::nullopt;
  return k;
}

}  // namespace detail

struct PhiImage {
  enum class Rank { Trivial, Cyclic, RankAtLeast2 } rank;
  std::pair<Rational, Rational> generator{1, 1};  // Cyclic only, lead end >= 1
  std::vector<PLMap> witnesses;                   // two independents, RankAtLeast2 only
};

/// Rank of the multiplicative group generated by the phi values of all ball
/// elements at radius L, computed over prime-exponent lattices.
inline PhiImage phi_image_rank(const GroupSession& s, const Orbital& a, int radius) {
  GroupSession sr = extend_ball(s, radius);
  std::vector<detail::ExpVec> vecs;
  std::vector<const PLMap*> maps;
  for (auto& e : sr.ball()) {
    auto v = detail::phi_exponents(phi(e.map, a));
    if (v.empty()) continue;
    vecs.push_back(std::move(v));
    maps.push_back(&e.map);
  }
  if (vecs.empty()) return {PhiImage::Rank::Trivial, {1, 1}, {}};
  int rank = detail::lattice_rank(vecs);
  if (rank >= 2) {
    PhiImage out{PhiImage::Rank::RankAtLeast2, {1, 1}, {}};
    // first vector plus the first one independent of it
    out.witnesses.push_back(*maps[0]);
    for (std::size_t i = 1; i < vecs.size(); ++i) {
      if (detail::lattice_rank({vecs[0], vecs[i]}) == 2) {
        out.witnesses.push_back(*maps[i]);
        break;
      }
    }
    return out;
  }
  // rank 1: primitive direction, then the gcd of the multipliers
  detail::ExpVec u = vecs[0];
  long c = detail::content(u);
  detail::ExpVec dir;
  for (auto& [k, e] : u) dir[k] = e / c;
  Integer g = 0;
  for (auto& v : vecs) {
    auto k = detail::integer_multiplier(v, dir);
    if (!k) throw std::logic_error("phi_image_rank: rank-1 lattice with non-parallel vector");
    g = gcd(g, Integer(*k < 0 ? -*k : *k));
  }
  detail::ExpVec gen = detail::scale(dir, g.convert_to<long>());
  auto pair = detail::vec_to_pair(gen);
  if (pair.first < 1 || (pair.first == 1 && pair.second < 1))
    pair = detail::vec_to_pair(detail::scale(gen, -1));
  return {PhiImage::Rank::Cyclic, pair, {}};
}

struct ImbalanceWitness {
  PLMap element;
  GroupWord word;
  Orbital orbital;
};

namespace detail {

// primitive (a,b) != (0,0) with a*X + b*Y = 0, if the kernel is nontrivial;
// (0,0) signals a full kernel (both vectors zero)
inline std::optional<std::pair<long, long>> kernel_pair(const ExpVec& x, const ExpVec& y) {
  if (x.empty() && y.empty()) return std::make_pair(0L, 0L);
  if (x.empty()) return std::make_pair(1L, 0L);
  if (y.empty()) return std::make_pair(0L, 1L);
  // parallel test: x = (p/q) y
  auto& [key0, xe0] = *x.begin();
  auto it = y.find(key0);
  if (it == y.end()) return std::nullopt;
  Integer p = xe0, q = it->second;
  Integer g = gcd(abs(p), abs(q));
  p /= g, q /= g;
  // x*q == y*p componentwise?
  ExpVec lhs = scale(x, q.convert_to<long>());
  ExpVec rhs = scale(y, p.convert_to<long>());
  if (!(lhs == rhs)) return std::nullopt;
  return std::make_pair(q.convert_to<long>(), -p.convert_to<long>());
}

}  // namespace detail

/// Searches the subgroups generated by pairs of ball elements for an element
/// whose phi pair on a joint orbital has shape (s,1) or (1,s), s != 1.
/// Absence of a witness at this radius proves nothing.
inline std::optional<ImbalanceWitness> imbalance_witness(const GroupSession& s, int radius) {
  GroupSession sr = extend_ball(s, radius);
  const auto& ball = sr.ball();
  struct Cached {
    const GroupSession::BallEntry* e;
    std::vector<Orbital> orbitals;
  };
  std::vector<Cached> elems;
  for (auto& e : ball) {
    if (e.map.is_identity()) continue;
    elems.push_back({&e, orbitals_of(e.map)});
  }
  auto joint_orbitals = [](const std::vector<Orbital>& xs, const std::vector<Orbital>& ys) {
    std::vector<Orbital> all = xs;
    all.insert(all.end(), ys.begin(), ys.end());
    std::sort(all.begin(), all.end());
    std::vector<Orbital> out;
    for (auto& a : all) {
      if (!out.empty() && a.lo < out.back().hi) {
        if (a.hi > out.back().hi) out.back().hi = a.hi;
      } else {
        out.push_back(a);
      }
    }
    return out;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      for (auto& a : joint_orbitals(elems[i].orbitals, elems[j].orbitals)) {
        auto pu = phi(elems[i].e->map, a), pv = phi(elems[j].e->map, a);
        detail::ExpVec lu, tu, lv, tv;
        detail::factor_into(numerator(pu.first), 1, 0, lu);
        detail::factor_into(denominator(pu.first), -1, 0, lu);
        detail::factor_into(numerator(pu.second), 1, 1, tu);
        detail::factor_into(denominator(pu.second), -1, 1, tu);
        detail::factor_into(numerator(pv.first), 1, 0, lv);
        detail::factor_into(denominator(pv.first), -1, 0, lv);
        detail::factor_into(numerator(pv.second), 1, 1, tv);
        detail::factor_into(denominator(pv.second), -1, 1, tv);
        std::erase_if(lu, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(tu, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(lv, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(tv, [](const auto& kv) { return kv.second == 0; });
        // shape (s,1): kill the trail side, keep the lead side (and dually)
        for (int side = 0; side < 2; ++side) {
          const auto& kx = side == 0 ? tu : lu;
          const auto& ky = side == 0 ? tv : lv;
          const auto& mx = side == 0 ? lu : tu;
          const auto& my = side == 0 ? lv : tv;
          auto ker = detail::kernel_pair(kx, ky);
          if (!ker) continue;
          auto [ka, kb] = *ker;
          if (ka == 0 && kb == 0) {
            // both killed-side vectors vanish: any nonzero kept side works
            if (!mx.empty())
              ka = 1, kb = 0;
            else if (!my.empty())
              ka = 0, kb = 1;
            else
              continue;
          }
          if (detail::add(detail::scale(mx, ka), detail::scale(my, kb)).empty()) continue;
          PLMap w = compose(power(elems[i].e->map, ka), power(elems[j].e->map, kb));
          GroupWord word = elems[i].e->word.pow(ka).concat(elems[j].e->word.pow(kb));
          return ImbalanceWitness{std::move(w), std::move(word), a};
        }
      }
    }
  }
  return std::nullopt;
}

/// Max tower height over the signed orbitals of all ball elements at the
/// given radius; a lower bound for the depth, monotone in the radius.
inline int depth_lower_bound(const GroupSession& s, int radius) {
  GroupSession sr = extend_ball(s, radius);
  return find_max_tower(sr.ball_signed_orbitals()).height();
}

struct DerivedSample {
  std::vector<PLMap> maps;          // level-k sample, first-seen order
  long pairs_sampled_at_top = 0;    // commutator words evaluated at level k
};

namespace detail {
constexpr long kDerivedPairBudget = 1200;
constexpr std::size_t kDerivedKeepCap = 128;

inline bool supports_disjoint(const std::vector<Orbital>& xs, const std::vector<Orbital>& ys) {
  for (auto& x : xs)
    for (auto& y : ys)
      if (intersects(x, y)) return false;
  return true;
}
}  // namespace detail

/// Iterated commutator sampling: level 0 is the ball, level k the pairwise
/// commutators of level k-1 (deterministic block order over index pairs,
/// bounded budget). Every returned map lies in the k-th derived subgroup.
inline DerivedSample derived_sample_detail(const GroupSession& s, int radius, int level) {
  if (level < 0) throw std::invalid_argument("derived_sample: negative level");
  GroupSession sr = extend_ball(s, radius);
  std::vector<PLMap> cur;
  for (auto& e : sr.ball()) cur.push_back(e.map);
  DerivedSample out;
  for (int l = 1; l <= level; ++l) {
    std::vector<std::vector<Orbital>> orbs;
    orbs.reserve(cur.size());
    for (auto& m : cur) orbs.push_back(orbitals_of(m));
    std::vector<PLMap> next;
    std::map<PLMap, bool> seen;
    long sampled = 0;
    // block order: pairs (i,m),(m,i) for i < m, growing m
    for (std::size_t m = 1; m < cur.size() && sampled < detail::kDerivedPairBudget &&
                            next.size() < detail::kDerivedKeepCap;
         ++m) {
      for (std::size_t i = 0; i < m && sampled < detail::kDerivedPairBudget &&
                              next.size() < detail::kDerivedKeepCap;
           ++i) {
        // commuting pairs contribute the identity without a computation
        bool trivial = detail::supports_disjoint(orbs[i], orbs[m]);
        for (int flip = 0; flip < 2; ++flip) {
          PLMap c = trivial ? PLMap()
                            : (flip ? commutator(cur[m], cur[i]) : commutator(cur[i], cur[m]));
          ++sampled;
          if (seen.emplace(c, true).second) next.push_back(std::move(c));
          if (sampled >= detail::kDerivedPairBudget ||
              next.size() >= detail::kDerivedKeepCap)
            break;
        }
      }
    }
    out.pairs_sampled_at_top = sampled;
    cur = std::move(next);
  }
  out.maps = std::move(cur);
  return out;
}

inline std::vector<PLMap> derived_sample(const GroupSession& s, int radius, int level) {
  return derived_sample_detail(s, radius, level).maps;
}

/// First ball element realizing both ends of A whose phi pair generates the
/// sampled phi image (up to inversion).
inline std::optional<PLMap> controller_candidate(const GroupSession& s, const Orbital& a,
                                                 int radius) {
  PhiImage img = phi_image_rank(s, a, radius);
  if (img.rank != PhiImage::Rank::Cyclic) return std::nullopt;
  if (img.generator.first == 1 || img.generator.second == 1) return std::nullopt;
  GroupSession sr = extend_ball(s, radius);
  auto gen = detail::phi_exponents(img.generator);
  auto inv = detail::scale(gen, -1);
  for (auto& e : sr.ball()) {
    auto v = detail::phi_exponents(phi(e.map, a));
    if (v == gen || v == inv) return e.map;
  }
  return std::nullopt;
}

/// Consistent controller: realizes both ends of A with end slopes on opposite
/// sides of 1.
inline bool is_consistent_controller(const PLMap& c, const Orbital& a) {
  auto [lead, trail] = phi(c, a);
  return (lead > 1 && trail < 1) || (lead < 1 && trail > 1);
}

/// Factorization g = c^k * residue with phi(g) = phi(c)^k; the residue
/// realizes neither end of A. Fails if no integer k matches.
inline std::pair<long, PLMap> c_form(const PLMap& g, const PLMap& c, const Orbital& a) {
  auto vg = detail::phi_exponents(phi(g, a));
  auto vc = detail::phi_exponents(phi(c, a));
  if (vc.empty())
    throw std::invalid_argument("c_form: candidate controller realizes neither end");
  auto k = detail::integer_multiplier(vg, vc);
  if (!k)
    throw std::invalid_argument("c_form: phi(g) is not an integer power of phi(c)");
  PLMap residue = compose(power(c, -*k), g);
  if (phi(residue, a) != std::make_pair(Rational(1), Rational(1)))
    throw std::logic_error("c_form: residue fails to vanish at the ends");
  return {*k, std::move(residue)};
}

}  // namespace plgroup
