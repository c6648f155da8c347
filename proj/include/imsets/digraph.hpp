#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "imsets/setfam.hpp"

namespace imsets {

/// Loopless directed graph stored as one parent set per node.
class DirectedGraph {
 public:
  explicit DirectedGraph(GroundSet ground)
      : ground_(std::move(ground)), parents_(static_cast<std::size_t>(ground_.size())) {}

  DirectedGraph(GroundSet ground, std::vector<Subset> parents)
      : ground_(std::move(ground)), parents_(std::move(parents)) {
    if (static_cast<int>(parents_.size()) != ground_.size())
      throw std::invalid_argument("parent table size does not match the ground set");
    for (int i = 0; i < ground_.size(); ++i) {
      if (!ground_.contains(parents_[static_cast<std::size_t>(i)]))
        throw std::invalid_argument("parent set outside the ground set");
      if (parents_[static_cast<std::size_t>(i)].contains(i))
        throw std::invalid_argument("loop at node " + ground_.label(i));
    }
  }

  /// Arrows given as (tail, head) pairs, i.e. (j, i) means j -> i.
  static DirectedGraph from_arrows(GroundSet ground, const std::vector<std::pair<int, int>>& arrows) {
    std::vector<Subset> parents(static_cast<std::size_t>(ground.size()));
    for (auto [j, i] : arrows) {
      if (i < 0 || j < 0 || i >= ground.size() || j >= ground.size())
        throw std::invalid_argument("arrow endpoint out of range");
      parents[static_cast<std::size_t>(i)] = parents[static_cast<std::size_t>(i)].with(j);
    }
    return DirectedGraph(std::move(ground), std::move(parents));
  }

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  Subset parents(int i) const { return parents_.at(static_cast<std::size_t>(i)); }
  const std::vector<Subset>& parent_table() const { return parents_; }
  bool has_arrow(int tail, int head) const { return parents(head).contains(tail); }

  /// (tail, head) pairs ordered by head, then tail.
  std::vector<std::pair<int, int>> arrows() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
      for (int j : elements(parents(i))) out.emplace_back(j, i);
    return out;
  }

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  GroundSet ground_;
  std::vector<Subset> parents_;
};

namespace detail {

// Repeatedly strips nodes whose remaining parents are all stripped already.
inline bool acyclic_on(const std::vector<Subset>& parents, Subset nodes) {
  Subset done;
  bool progress = true;
  while (progress && done != nodes) {
    progress = false;
    for (int i : elements(nodes - done))
      if ((parents[static_cast<std::size_t>(i)] & nodes).subset_of(done)) {
        done = done.with(i);
        progress = true;
      }
  }
  return done == nodes;
}

}  // namespace detail

inline bool is_acyclic(const DirectedGraph& g) {
  return detail::acyclic_on(g.parent_table(), g.ground().full());
}

/// Every loopless digraph once; node 0 varies slowest, parent sets ascend.
inline void for_each_digraph(const GroundSet& ground, const std::function<void(const DirectedGraph&)>& visit,
                             bool force = false) {
  if (ground.size() >= 5 && !force) throw std::invalid_argument("digraph enumeration for n >= 5 requires force");
  const int n = ground.size();
  std::vector<Subset> parents(static_cast<std::size_t>(n));
  std::function<void(int)> assign = [&](int i) {
    if (i == n) {
      visit(DirectedGraph(ground, parents));
      return;
    }
    const std::uint32_t others = ground.full().without(i).bits;
    // Enumerate submasks of `others` in ascending order.
    for (std::uint32_t s = 0;; s = (s - others) & others) {
      parents[static_cast<std::size_t>(i)] = Subset(s);
      assign(i + 1);
      if (s == others) break;
    }
  };
  assign(0);
}

inline std::vector<DirectedGraph> enumerate_digraphs(const GroundSet& ground, bool force = false) {
  std::vector<DirectedGraph> out;
  for_each_digraph(ground, [&](const DirectedGraph& g) { out.push_back(g); }, force);
  return out;
}

/// Acyclic members of for_each_digraph, same order. Partial assignments are
/// pruned as soon as the nodes assigned so far contain a directed cycle.
inline void for_each_dag(const GroundSet& ground, const std::function<void(const DirectedGraph&)>& visit,
                         bool force = false) {
  if (ground.size() >= 6 && !force) throw std::invalid_argument("DAG enumeration for n >= 6 requires force");
  const int n = ground.size();
  std::vector<Subset> parents(static_cast<std::size_t>(n));
  std::function<void(int)> assign = [&](int i) {
    if (i == n) {
      visit(DirectedGraph(ground, parents));
      return;
    }
    const std::uint32_t others = ground.full().without(i).bits;
    const Subset assigned(static_cast<std::uint32_t>((1u << (i + 1)) - 1));
    for (std::uint32_t s = 0;; s = (s - others) & others) {
      parents[static_cast<std::size_t>(i)] = Subset(s);
      // A cycle only passes through nodes whose parents are already fixed.
      if (detail::acyclic_on(parents, assigned)) assign(i + 1);
      if (s == others) break;
    }
    parents[static_cast<std::size_t>(i)] = Subset();
  };
  assign(0);
}

inline std::vector<DirectedGraph> enumerate_dags(const GroundSet& ground, bool force = false) {
  std::vector<DirectedGraph> out;
  for_each_dag(ground, [&](const DirectedGraph& g) { out.push_back(g); }, force);
  return out;
}

/// Number of i in S with S \ {i} contained in pa(i).
inline int super_terminal_count(const DirectedGraph& g, Subset s) {
  if (s.size() < 2) throw std::invalid_argument("super_terminal_count needs |S| >= 2");
  if (!g.ground().contains(s)) throw std::invalid_argument("subset outside the ground set");
  int count = 0;
  for (int i : elements(s))
    if (s.without(i).subset_of(g.parents(i))) ++count;
  return count;
}

}  // namespace imsets
