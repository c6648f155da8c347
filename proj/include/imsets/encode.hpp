#pragma once

// The three vector encodings of a directed graph over N and the maps between
// them. All imsets are dense: one entry per subset of N, 2^n in total.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "imsets/digraph.hpp"
#include "imsets/setfam.hpp"

namespace imsets {

/// A pair (i|B) with i not in B.
struct ParentPair {
  int node = 0;
  Subset parents;
  friend bool operator==(const ParentPair&, const ParentPair&) = default;
};

inline std::size_t eta_size(int n) { return static_cast<std::size_t>(n) << (n - 1); }

/// Block i holds the 2^(n-1) sets B of N \ {i}, ordered by B with bit i squeezed out.
inline std::size_t eta_index(int n, ParentPair p) {
  if (p.parents.contains(p.node)) throw std::invalid_argument("eta index: node belongs to its parent set");
  const std::uint32_t b = p.parents.bits;
  const std::uint32_t low = b & ((1u << p.node) - 1);
  const std::uint32_t high = b >> (p.node + 1);
  return (static_cast<std::size_t>(p.node) << (n - 1)) | low | (high << p.node);
}

inline ParentPair eta_pair(int n, std::size_t k) {
  const int i = static_cast<int>(k >> (n - 1));
  const auto c = static_cast<std::uint32_t>(k & ((std::size_t{1} << (n - 1)) - 1));
  const std::uint32_t low = c & ((1u << i) - 1);
  const std::uint32_t high = c >> i;
  return {i, Subset(low | (high << (i + 1)))};
}

struct EtaVector {
  GroundSet ground;
  std::vector<std::int64_t> values;

  explicit EtaVector(GroundSet g) : ground(std::move(g)), values(eta_size(ground.size()), 0) {}
  EtaVector(GroundSet g, std::vector<std::int64_t> v) : ground(std::move(g)), values(std::move(v)) {
    if (values.size() != eta_size(ground.size())) throw std::invalid_argument("eta vector has wrong length");
  }

  std::int64_t at(int i, Subset b) const { return values[eta_index(ground.size(), {i, b})]; }
  std::int64_t& at(int i, Subset b) { return values[eta_index(ground.size(), {i, b})]; }

  /// Sum over B of eta(j|B) equals 1 for every j.
  bool satisfies_block_equalities() const {
    const std::size_t block = std::size_t{1} << (ground.size() - 1);
    for (int j = 0; j < ground.size(); ++j) {
      std::int64_t sum = 0;
      for (std::size_t k = 0; k < block; ++k) sum += values[static_cast<std::size_t>(j) * block + k];
      if (sum != 1) return false;
    }
    return true;
  }

  friend bool operator==(const EtaVector&, const EtaVector&) = default;
};

/// Integer vector over all subsets of N.
struct StandardImset {
  GroundSet ground;
  std::vector<std::int64_t> values;

  explicit StandardImset(GroundSet g) : ground(std::move(g)), values(ground.power(), 0) {}
  StandardImset(GroundSet g, std::vector<std::int64_t> v) : ground(std::move(g)), values(std::move(v)) {
    if (values.size() != ground.power()) throw std::invalid_argument("imset has wrong length");
  }

  std::int64_t at(Subset s) const { return values.at(s.bits); }
  std::int64_t& at(Subset s) { return values.at(s.bits); }

  /// sum_T u(T) = 0 and sum_{T containing j} u(T) = 0 for every j.
  bool is_standardized() const {
    std::int64_t total = 0;
    for (auto v : values) total += v;
    if (total != 0) return false;
    for (int j = 0; j < ground.size(); ++j) {
      std::int64_t sum = 0;
      for (std::uint32_t t = 0; t < ground.power(); ++t)
        if ((t >> j) & 1u) sum += values[t];
      if (sum != 0) return false;
    }
    return true;
  }

  bool is_zero() const {
    for (auto v : values)
      if (v != 0) return false;
    return true;
  }

  StandardImset& operator+=(const StandardImset& o) {
    for (std::size_t k = 0; k < values.size(); ++k) values[k] += o.values[k];
    return *this;
  }
  StandardImset& operator-=(const StandardImset& o) {
    for (std::size_t k = 0; k < values.size(); ++k) values[k] -= o.values[k];
    return *this;
  }
  friend StandardImset operator+(StandardImset a, const StandardImset& b) { return a += b; }
  friend StandardImset operator-(StandardImset a, const StandardImset& b) { return a -= b; }
  friend StandardImset operator*(std::int64_t k, StandardImset a) {
    for (auto& v : a.values) v *= k;
    return a;
  }

  friend bool operator==(const StandardImset&, const StandardImset&) = default;
};

struct Portrait {
  GroundSet ground;
  std::vector<std::int64_t> values;

  std::int64_t at(Subset s) const { return values.at(s.bits); }
  friend bool operator==(const Portrait&, const Portrait&) = default;
};

/// Entries over sets of size >= 2. Entries for |S| <= 1 are pinned to 1.
class CharacteristicImset {
 public:
  explicit CharacteristicImset(GroundSet g) : ground_(std::move(g)), values_(ground_.power(), 0) { pin(); }

  /// `full` has 2^n entries; those for |S| <= 1 are ignored.
  CharacteristicImset(GroundSet g, std::vector<std::int64_t> full) : ground_(std::move(g)), values_(std::move(full)) {
    if (values_.size() != ground_.power()) throw std::invalid_argument("characteristic imset has wrong length");
    pin();
  }

  const GroundSet& ground() const { return ground_; }
  std::int64_t at(Subset s) const { return values_.at(s.bits); }
  void set(Subset s, std::int64_t v) {
    if (s.size() < 2) throw std::invalid_argument("characteristic imset entries below size 2 are fixed at 1");
    values_.at(s.bits) = v;
  }
  /// Dense view including the pinned entries.
  const std::vector<std::int64_t>& values() const { return values_; }

  /// Entries over sets of size >= 2, ascending bitmask order.
  std::vector<std::int64_t> restricted() const {
    std::vector<std::int64_t> out;
    for (std::uint32_t s = 0; s < ground_.power(); ++s)
      if (std::popcount(s) >= 2) out.push_back(values_[s]);
    return out;
  }

  bool is_zero_one() const {
    for (auto v : values_)
      if (v != 0 && v != 1) return false;
    return true;
  }

  friend bool operator==(const CharacteristicImset&, const CharacteristicImset&) = default;
  friend auto operator<=>(const CharacteristicImset& a, const CharacteristicImset& b) {
    return a.values_ <=> b.values_;
  }

 private:
  void pin() {
    for (std::uint32_t s = 0; s < ground_.power(); ++s)
      if (std::popcount(s) <= 1) values_[s] = 1;
  }

  GroundSet ground_;
  std::vector<std::int64_t> values_;
};

inline StandardImset basic_vector(const GroundSet& ground, Subset a) {
  if (!ground.contains(a)) throw std::invalid_argument("subset outside the ground set");
  StandardImset u(ground);
  u.at(a) = 1;
  return u;
}

/// delta_C - delta_{A u C} - delta_{B u C} + delta_{A u B u C}.
inline StandardImset semi_elementary_imset(const GroundSet& ground, Subset a, Subset b, Subset c) {
  if (!(a & b).empty() || !(a & c).empty() || !(b & c).empty())
    throw std::invalid_argument("semi-elementary imset needs pairwise disjoint sets");
  StandardImset u(ground);
  u.at(c) += 1;
  u.at(a | c) -= 1;
  u.at(b | c) -= 1;
  u.at(a | b | c) += 1;
  return u;
}

inline EtaVector eta_of(const DirectedGraph& g) {
  EtaVector eta(g.ground());
  for (int i = 0; i < g.size(); ++i) eta.at(i, g.parents(i)) = 1;
  return eta;
}

inline StandardImset standard_imset_of(const DirectedGraph& g) {
  if (!is_acyclic(g)) throw std::invalid_argument("standard imset requires an acyclic graph");
  StandardImset u(g.ground());
  u.at(g.ground().full()) += 1;
  u.at(Subset()) -= 1;
  for (int i = 0; i < g.size(); ++i) {
    u.at(g.parents(i)) += 1;
    u.at(g.parents(i).with(i)) -= 1;
  }
  return u;
}

/// Affine map delta_N - delta_0 + sum eta(i|B) (delta_B - delta_{iB}); defined for every eta.
inline StandardImset u_from_eta(const EtaVector& eta) {
  const int n = eta.ground.size();
  StandardImset u(eta.ground);
  u.at(eta.ground.full()) += 1;
  u.at(Subset()) -= 1;
  for (std::size_t k = 0; k < eta.values.size(); ++k) {
    const std::int64_t w = eta.values[k];
    if (w == 0) continue;
    const ParentPair p = eta_pair(n, k);
    u.at(p.parents) += w;
    u.at(p.parents.with(p.node)) -= w;
  }
  return u;
}

/// p(S) = sum over T containing S of u(T).
inline Portrait portrait_of(const StandardImset& u) {
  std::vector<std::int64_t> p = u.values;
  superset_zeta(p, u.ground.size());
  return {u.ground, std::move(p)};
}

inline CharacteristicImset characteristic_of(const StandardImset& u) {
  if (!u.is_standardized()) throw std::invalid_argument("characteristic imset requires a standardized imset");
  Portrait p = portrait_of(u);
  std::vector<std::int64_t> c(p.values.size());
  for (std::size_t s = 0; s < c.size(); ++s) c[s] = 1 - p.values[s];
  return CharacteristicImset(u.ground, std::move(c));
}

/// u(T) = sum over S containing T of (-1)^|S\T| (1 - c(S)), with c = 1 below size 2.
inline StandardImset u_from_characteristic(const CharacteristicImset& c) {
  std::vector<std::int64_t> p(c.values().size());
  for (std::size_t s = 0; s < p.size(); ++s) p[s] = 1 - c.values()[s];
  superset_mobius(p, c.ground().size());
  return StandardImset(c.ground(), std::move(p));
}

/// c(S) = sum_{i in S} sum_{S\{i} <= B <= N\{i}} eta(i|B), evaluated for |S| >= 2.
inline CharacteristicImset char_from_eta(const EtaVector& eta) {
  const int n = eta.ground.size();
  const Subset full = eta.ground.full();
  std::vector<std::int64_t> c(eta.ground.power(), 0);
  for (std::uint32_t sb = 0; sb < eta.ground.power(); ++sb) {
    const Subset s(sb);
    if (s.size() < 2) continue;
    std::int64_t total = 0;
    for (int i : elements(s)) {
      const Subset must = s.without(i);
      const std::uint32_t free = (full.without(i) - must).bits;
      for (std::uint32_t extra = 0;; extra = (extra - free) & free) {
        total += eta.values[eta_index(n, {i, must | Subset(extra)})];
        if (extra == free) break;
      }
    }
    c[sb] = total;
  }
  return CharacteristicImset(eta.ground, std::move(c));
}

inline bool markov_equivalent(const DirectedGraph& g, const DirectedGraph& h) {
  if (!(g.ground() == h.ground())) throw std::invalid_argument("graphs over different ground sets");
  return standard_imset_of(g) == standard_imset_of(h);
}

}  // namespace imsets
