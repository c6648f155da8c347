#pragma once
// Independent reference implementations used only by the tests. None of them
// share code paths with the library beyond the basic Subset/GroundSet types.

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <tuple>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;
using Parents = std::vector<std::uint32_t>;  // parent bitmask per node

// --- graphs -----------------------------------------------------------------

// Three-colour DFS.
inline bool has_cycle(const Parents& pa) {
  const int n = static_cast<int>(pa.size());
  std::vector<int> colour(n, 0);
  auto visit = [&](auto&& self, int v) -> bool {
    colour[v] = 1;
    for (int w = 0; w < n; ++w)
      if ((pa[w] >> v) & 1u) {  // arrow v -> w
        if (colour[w] == 1) return true;
        if (colour[w] == 0 && self(self, w)) return true;
      }
    colour[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v)
    if (colour[v] == 0 && visit(visit, v)) return true;
  return false;
}

inline void all_digraphs(int n, const std::function<void(const Parents&)>& fn) {
  const std::uint64_t slots = static_cast<std::uint64_t>(n) * (n - 1);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots); ++code) {
    Parents pa(n, 0);
    std::uint64_t bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if ((code >> bit) & 1u) pa[i] |= 1u << j;
        ++bit;
      }
    fn(pa);
  }
}

// a(n) = sum_k (-1)^(k+1) C(n,k) 2^(k(n-k)) a(n-k).
inline Big labelled_dag_count(int n) {
  std::vector<Big> a(n + 1);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Big s = 0;
    for (int k = 1; k <= m; ++k) {
      Big binom = 1;
      for (int t = 0; t < k; ++t) binom = binom * (m - t) / (t + 1);
      Big term = binom * (Big(1) << (k * (m - k))) * a[m - k];
      s += (k % 2 == 1) ? term : Big(-term);
    }
    a[m] = s;
  }
  return a[n];
}

// Skeleton plus unshielded colliders a -> c <- b.
inline std::pair<std::uint64_t, std::set<std::tuple<int, int, int>>> equivalence_key(const Parents& pa) {
  const int n = static_cast<int>(pa.size());
  auto adjacent = [&](int x, int y) { return ((pa[x] >> y) & 1u) || ((pa[y] >> x) & 1u); };
  std::uint64_t skeleton = 0;
  int bit = 0;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y, ++bit)
      if (adjacent(x, y)) skeleton |= std::uint64_t{1} << bit;
  std::set<std::tuple<int, int, int>> v;
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (((pa[c] >> a) & 1u) && ((pa[c] >> b) & 1u) && !adjacent(a, b)) v.insert({a, b, c});
  return {skeleton, v};
}

// c(S) = 1 iff some i in S has all of S \ {i} among its parents.
inline std::vector<std::int64_t> characteristic(const Parents& pa) {
  const int n = static_cast<int>(pa.size());
  std::vector<std::int64_t> c(1u << n, 1);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) < 2) continue;
    c[s] = 0;
    for (int i = 0; i < n; ++i)
      if (((s >> i) & 1u) && ((s & ~(1u << i)) & ~pa[i]) == 0) c[s] = 1;
  }
  return c;
}

// u(T) = sum over S containing T of (-1)^|S\T| (1 - c(S)).
inline std::vector<std::int64_t> u_from_c(const std::vector<std::int64_t>& c, int n) {
  std::vector<std::int64_t> u(1u << n, 0);
  for (std::uint32_t t = 0; t < (1u << n); ++t)
    for (std::uint32_t s = 0; s < (1u << n); ++s)
      if ((t & s) == t) u[t] += ((std::popcount(s ^ t) % 2) ? -1 : 1) * (1 - c[s]);
  return u;
}

// --- set families ------------------------------------------------------------

// Monotone Boolean functions on n variables, built as pairs f0 <= f1 on n-1.
inline std::vector<std::uint64_t> monotone_functions(int n) {
  if (n == 0) return {0, 1};
  const auto prev = monotone_functions(n - 1);
  const int half = 1 << (n - 1);
  std::vector<std::uint64_t> out;
  for (auto f0 : prev)
    for (auto f1 : prev)
      if ((f0 & ~f1) == 0) out.push_back(f0 | (f1 << half));
  return out;
}

// Antichains of non-empty subsets, non-empty: drop the two constant functions.
inline std::uint64_t antichain_count(int n) { return monotone_functions(n).size() - 2; }

// kappa(S) = sum over T in the up-closure with T subset of S of (-1)^|S\T|.
inline std::vector<std::int64_t> kappa_alternating(const std::vector<std::uint32_t>& antichain, int n) {
  std::vector<std::int64_t> k(1u << n, 0);
  auto in_up = [&](std::uint32_t t) {
    return std::any_of(antichain.begin(), antichain.end(), [&](std::uint32_t a) { return (a & t) == a; });
  };
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    for (std::uint32_t t = 0; t < (1u << n); ++t)
      if ((t & s) == t && in_up(t)) k[s] += (std::popcount(s ^ t) % 2) ? -1 : 1;
  return k;
}

// --- linear algebra ------------------------------------------------------------

inline Big laplace_det(const std::vector<std::vector<Big>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Big d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Big>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Big> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(row);
    }
    const Big minor = laplace_det(sub);
    d += (j % 2 == 0) ? Big(m[0][j] * minor) : Big(-m[0][j] * minor);
  }
  return d;
}

inline Q gauss_det(std::vector<std::vector<Q>> m) {
  const std::size_t n = m.size();
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Q f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// Null space of a k x d integer matrix of rank d - 1, as a primitive vector.
// Integer Gauss-Jordan with rows kept primitive.
inline std::vector<std::int64_t> null_vector(std::vector<std::vector<std::int64_t>> m, std::size_t d, bool& rank_ok) {
  auto primitive = [](std::vector<std::int64_t>& row) {
    std::int64_t g = 0;
    for (auto x : row) g = std::gcd(g, x);
    if (g > 1)
      for (auto& x : row) x /= g;
  };
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != r && m[i][c] != 0) {
        const std::int64_t a = m[r][c], b = m[i][c];
        for (std::size_t k = 0; k < d; ++k) m[i][k] = a * m[i][k] - b * m[r][k];
        primitive(m[i]);
      }
    pivots.push_back(c);
    ++r;
  }
  rank_ok = pivots.size() + 1 == d;
  if (!rank_ok) return {};
  std::size_t free = 0;
  while (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) ++free;
  std::int64_t l = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i) l = std::lcm(l, std::abs(m[i][pivots[i]]));
  std::vector<std::int64_t> v(d, 0);
  v[free] = l;
  for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free] * (l / m[i][pivots[i]]);
  primitive(v);
  return v;
}

// Extreme rays of {m : exchange inequalities >= 0} in the coordinates m(S),
// |S| >= 2, by trying every (d-1)-subset of inequalities.
inline std::set<std::vector<std::int64_t>> brute_force_rays(int n) {
  std::vector<std::uint32_t> coords;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (std::popcount(s) >= 2) coords.push_back(s);
  const std::size_t d = coords.size();
  auto col = [&](std::uint32_t s) -> int {
    for (std::size_t k = 0; k < d; ++k)
      if (coords[k] == s) return static_cast<int>(k);
    return -1;  // |S| <= 1: value fixed at 0
  };
  std::vector<std::vector<std::int64_t>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if ((s >> i) & 1u || (s >> j) & 1u) continue;
        std::vector<std::int64_t> row(d, 0);
        auto add = [&](std::uint32_t t, int w) {
          if (int c = col(t); c >= 0) row[c] += w;
        };
        add(s | (1u << i) | (1u << j), 1);
        add(s, 1);
        add(s | (1u << i), -1);
        add(s | (1u << j), -1);
        rows.push_back(row);
      }
  std::set<std::vector<std::int64_t>> rays;
  std::vector<std::size_t> pick(d - 1);
  std::iota(pick.begin(), pick.end(), 0);
  const std::size_t total = rows.size();
  for (;;) {
    std::vector<std::vector<std::int64_t>> m;
    for (auto r : pick) m.push_back(rows[r]);
    bool ok = false;
    auto v = null_vector(std::move(m), d, ok);
    if (ok) {
      for (int sign : {1, -1}) {
        bool feasible = true;
        for (const auto& row : rows) {
          std::int64_t s = 0;
          for (std::size_t k = 0; k < d; ++k) s += row[k] * v[k] * sign;
          if (s < 0) feasible = false;
        }
        if (feasible) {
          std::vector<std::int64_t> w = v;
          for (auto& x : w) x *= sign;
          rays.insert(w);
        }
      }
    }
    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] == total - pick.size() + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t k = i; k < pick.size(); ++k) pick[k] = pick[k - 1] + 1;
  }
  return rays;
}

}  // namespace oracle
