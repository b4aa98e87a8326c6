#pragma once

#include <cstdlib>
#include <string>
#include <vector>

namespace plgroup {

/// Freely reduced word over named generators: a run-length list of
/// (name, exponent) with nonzero exponents and distinct adjacent names.
/// The empty word is the identity. Words order by (letter count, then the
/// flattened letter sequence, names in string order with g before g^-1).
class GroupWord {
 public:
  struct Entry {
    std::string name;
    long exp;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  GroupWord() = default;

  static GroupWord letter(std::string name, long exp = 1) {
    GroupWord w;
    w.append(std::move(name), exp);
    return w;
  }

  bool empty() const { return entries_.empty(); }

  long length() const {
    long n = 0;
    for (auto& e : entries_) n += std::labs(e.exp);
    return n;
  }

  const std::vector<Entry>& entries() const { return entries_; }

  GroupWord& append(std::string name, long exp) {
    if (exp == 0) return *this;
    if (!entries_.empty() && entries_.back().name == name) {
      entries_.back().exp += exp;
      if (entries_.back().exp == 0) entries_.pop_back();
    } else {
      entries_.push_back({std::move(name), exp});
    }
    return *this;
  }

  GroupWord concat(const GroupWord& o) const {
    GroupWord w = *this;
    for (auto& e : o.entries_) w.append(e.name, e.exp);
    return w;
  }

  GroupWord inverse() const {
    GroupWord w;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
      w.append(it->name, -it->exp);
    return w;
  }

  GroupWord pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    GroupWord w;
    for (long i = 0; i < k; ++i) w = w.concat(*this);
    return w;
  }

  std::string str() const {
    if (entries_.empty()) return "1";
    std::string s;
    for (auto& e : entries_) {
      if (!s.empty()) s += ' ';
      s += e.name;
      if (e.exp != 1) s += "^" + std::to_string(e.exp);
    }
    return s;
  }

  /// (length, flattened letters) comparison; letters compare by name, then
  /// positive before negative.
  static int compare(const GroupWord& a, const GroupWord& b) {
    long la = a.length(), lb = b.length();
    if (la != lb) return la < lb ? -1 : 1;
    std::size_t ia = 0, ib = 0;
    long ra = 0, rb = 0;  // letters already consumed of the current entry
    while (ia < a.entries_.size() && ib < b.entries_.size()) {
      const Entry& ea = a.entries_[ia];
      const Entry& eb = b.entries_[ib];
      if (ea.name != eb.name) return ea.name < eb.name ? -1 : 1;
      int sa = ea.exp > 0 ? 0 : 1, sb = eb.exp > 0 ? 0 : 1;
      if (sa != sb) return sa < sb ? -1 : 1;
      if (++ra == std::labs(ea.exp)) ++ia, ra = 0;
      if (++rb == std::labs(eb.exp)) ++ib, rb = 0;
    }
    return 0;  // equal length with no difference: identical words
  }

  friend bool operator==(const GroupWord& a, const GroupWord& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry> entries_;
};

}  // namespace plgroup
