#pragma once

// Subset lattice of a small ground set: bitmask subsets, superset-closed
// classes, antichains and the zeta/Moebius transforms over the lattice.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace imsets {

inline constexpr int kMinVariables = 2;
inline constexpr int kMaxVariables = 6;

/// Subset of the ground set; variable i is bit i.
struct Subset {
  std::uint32_t bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t b) : bits(b) {}

  static constexpr Subset singleton(int i) { return Subset(1u << i); }
  static constexpr Subset of(std::initializer_list<int> vars) {
    std::uint32_t b = 0;
    for (int v : vars) b |= 1u << v;
    return Subset(b);
  }

  constexpr int size() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool contains(int i) const { return (bits >> i) & 1u; }
  constexpr bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
  constexpr bool proper_subset_of(Subset o) const { return subset_of(o) && bits != o.bits; }
  constexpr Subset with(int i) const { return Subset(bits | (1u << i)); }
  constexpr Subset without(int i) const { return Subset(bits & ~(1u << i)); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits | b.bits); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits & b.bits); }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits & ~b.bits); }
  friend constexpr auto operator<=>(Subset, Subset) = default;
};

/// Members in ascending order.
inline std::vector<int> elements(Subset s) {
  std::vector<int> out;
  for (std::uint32_t b = s.bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

class GroundSet {
 public:
  /// Variables labelled a, b, c, ...
  explicit GroundSet(int n) {
    if (n < kMinVariables || n > kMaxVariables)
      throw std::invalid_argument("ground set size must be in [2, 6], got " + std::to_string(n));
    for (int i = 0; i < n; ++i) labels_.push_back(std::string(1, static_cast<char>('a' + i)));
  }

  explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    const int n = static_cast<int>(labels_.size());
    if (n < kMinVariables || n > kMaxVariables)
      throw std::invalid_argument("ground set size must be in [2, 6], got " + std::to_string(n));
    std::set<std::string> seen;
    for (const auto& l : labels_) {
      if (l.empty()) throw std::invalid_argument("empty variable label");
      if (l.find_first_of(",|") != std::string::npos || l == "∅")
        throw std::invalid_argument("variable label '" + l + "' contains a reserved character");
      if (!seen.insert(l).second) throw std::invalid_argument("duplicate variable label '" + l + "'");
    }
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }

  /// Number of subsets, 2^n.
  std::uint32_t power() const { return 1u << size(); }
  Subset full() const { return Subset(power() - 1); }
  bool contains(Subset s) const { return s.bits < power(); }

  int index_of(std::string_view label) const {
    for (int i = 0; i < size(); ++i)
      if (labels_[static_cast<std::size_t>(i)] == label) return i;
    throw std::invalid_argument("unknown variable label '" + std::string(label) + "'");
  }

  /// Sorted labels joined by commas; "∅" for the empty set.
  std::string format(Subset s) const {
    if (s.empty()) return "∅";
    std::string out;
    for (int i : elements(s)) {
      if (!out.empty()) out += ',';
      out += label(i);
    }
    return out;
  }

  /// Labels concatenated without separator ("ab"); "empty" for the empty set.
  std::string compact(Subset s) const {
    if (s.empty()) return "empty";
    std::string out;
    for (int i : elements(s)) out += label(i);
    return out;
  }

  /// Inverse of format(); also accepts "" and "{}" for the empty set.
  Subset parse(std::string_view text) const {
    if (text.empty() || text == "∅" || text == "{}") return Subset();
    Subset s;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto comma = text.find(',', start);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view tok = text.substr(start, comma - start);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      s = s.with(index_of(tok));
      start = comma + 1;
    }
    return s;
  }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A class of subsets; membership is a 64-bit mask indexed by subset bits.
class SetClass {
 public:
  SetClass(GroundSet ground, std::uint64_t mask) : ground_(std::move(ground)), mask_(mask) {
    if (ground_.power() < 64 && (mask_ >> ground_.power()) != 0)
      throw std::invalid_argument("set class contains subsets outside the ground set");
  }

  SetClass(GroundSet ground, const std::vector<Subset>& members) : ground_(std::move(ground)) {
    for (Subset s : members) {
      if (!ground_.contains(s)) throw std::invalid_argument("subset outside the ground set");
      mask_ |= std::uint64_t{1} << s.bits;
    }
  }

  const GroundSet& ground() const { return ground_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(Subset s) const { return s.bits < 64 && ((mask_ >> s.bits) & 1u); }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  bool empty() const { return mask_ == 0; }

  /// Ascending bitmask order.
  std::vector<Subset> members() const {
    std::vector<Subset> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.emplace_back(static_cast<std::uint32_t>(std::countr_zero(m)));
    return out;
  }

  bool closed_under_supersets() const {
    for (Subset s : members())
      for (int i = 0; i < ground_.size(); ++i)
        if (!contains(s.with(i))) return false;
    return true;
  }

  friend bool operator==(const SetClass& a, const SetClass& b) { return a.mask_ == b.mask_ && a.ground_ == b.ground_; }

 private:
  GroundSet ground_;
  std::uint64_t mask_ = 0;
};

/// Non-empty family of non-empty, pairwise incomparable subsets.
class Antichain {
 public:
  Antichain(GroundSet ground, std::vector<Subset> sets) : ground_(std::move(ground)), sets_(std::move(sets)) {
    if (sets_.empty()) throw std::invalid_argument("antichain must be non-empty");
    std::sort(sets_.begin(), sets_.end());
    for (std::size_t k = 0; k < sets_.size(); ++k) {
      if (sets_[k].empty()) throw std::invalid_argument("antichain members must be non-empty");
      if (!ground_.contains(sets_[k])) throw std::invalid_argument("antichain member outside the ground set");
      if (k > 0 && sets_[k] == sets_[k - 1]) throw std::invalid_argument("duplicate antichain member");
      for (std::size_t l = 0; l < k; ++l)
        if (sets_[l].subset_of(sets_[k]))
          throw std::invalid_argument("antichain members " + ground_.format(sets_[l]) + " and " +
                                      ground_.format(sets_[k]) + " are comparable");
    }
  }

  const GroundSet& ground() const { return ground_; }
  const std::vector<Subset>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(Subset s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

  /// "ab,ac" style identifier.
  std::string tag() const {
    std::string out;
    for (Subset s : sets_) {
      if (!out.empty()) out += ',';
      out += ground_.compact(s);
    }
    return out;
  }

  friend bool operator==(const Antichain& a, const Antichain& b) { return a.sets_ == b.sets_ && a.ground_ == b.ground_; }

 private:
  GroundSet ground_;
  std::vector<Subset> sets_;
};

/// {A : |A| >= min_card}.
inline SetClass power_class(const GroundSet& ground, int min_card) {
  if (min_card < 0 || min_card > ground.size())
    throw std::invalid_argument("min_card out of range [0, n]");
  std::uint64_t mask = 0;
  for (std::uint32_t s = 0; s < ground.power(); ++s)
    if (std::popcount(s) >= min_card) mask |= std::uint64_t{1} << s;
  return SetClass(ground, mask);
}

inline SetClass superset_closure(const Antichain& antichain) {
  const GroundSet& ground = antichain.ground();
  std::uint64_t mask = 0;
  for (std::uint32_t s = 0; s < ground.power(); ++s)
    for (Subset t : antichain.sets())
      if (t.subset_of(Subset(s))) {
        mask |= std::uint64_t{1} << s;
        break;
      }
  return SetClass(ground, mask);
}

inline Antichain minimal_sets(const SetClass& cls) {
  if (cls.empty()) throw std::invalid_argument("minimal_sets: class is empty");
  if (cls.contains(Subset())) throw std::invalid_argument("minimal_sets: class contains the empty set");
  if (!cls.closed_under_supersets()) throw std::invalid_argument("minimal_sets: class is not closed under supersets");
  std::vector<Subset> mins;
  for (Subset s : cls.members()) {
    bool minimal = true;
    for (int i : elements(s))
      if (cls.contains(s.without(i))) {
        minimal = false;
        break;
      }
    if (minimal) mins.push_back(s);
  }
  return Antichain(cls.ground(), std::move(mins));
}

/// Unions of all non-empty subfamilies.
inline SetClass union_closure_class(const Antichain& antichain) {
  std::set<std::uint32_t> unions;
  for (Subset t : antichain.sets()) {
    std::vector<std::uint32_t> grown;
    for (std::uint32_t u : unions) grown.push_back(u | t.bits);
    unions.insert(grown.begin(), grown.end());
    unions.insert(t.bits);
  }
  std::uint64_t mask = 0;
  for (std::uint32_t u : unions) mask |= std::uint64_t{1} << u;
  return SetClass(antichain.ground(), mask);
}

/// Streams every antichain of non-empty subsets in lexicographic order of
/// their sorted member lists. Refuses n >= 6 unless forced.
inline void for_each_antichain(const GroundSet& ground, const std::function<void(const Antichain&)>& visit,
                               bool force = false) {
  if (ground.size() >= 6 && !force)
    throw std::invalid_argument("antichain enumeration for n >= 6 requires force");
  const std::uint32_t top = ground.power();
  std::vector<Subset> chosen;
  std::function<void(std::uint32_t)> extend = [&](std::uint32_t from) {
    for (std::uint32_t s = from; s < top; ++s) {
      const Subset cand(s);
      bool ok = true;
      for (Subset c : chosen)
        if (c.subset_of(cand) || cand.subset_of(c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(cand);
      visit(Antichain(ground, chosen));
      extend(s + 1);
      chosen.pop_back();
    }
  };
  extend(1);
}

inline std::vector<Antichain> enumerate_antichains(const GroundSet& ground, bool force = false) {
  std::vector<Antichain> out;
  for_each_antichain(ground, [&](const Antichain& a) { out.push_back(a); }, force);
  return out;
}

/// In place: v[S] <- sum over T containing S of v[T].
template <class T>
void superset_zeta(std::vector<T>& v, int n) {
  for (int i = 0; i < n; ++i)
    for (std::uint32_t s = 0; s < (1u << n); ++s)
      if (!((s >> i) & 1u)) v[s] += v[s | (1u << i)];
}

/// Inverse of superset_zeta: v[S] <- sum over T containing S of (-1)^|T\S| v[T].
template <class T>
void superset_mobius(std::vector<T>& v, int n) {
  for (int i = 0; i < n; ++i)
    for (std::uint32_t s = 0; s < (1u << n); ++s)
      if (!((s >> i) & 1u)) v[s] -= v[s | (1u << i)];
}

}  // namespace imsets
