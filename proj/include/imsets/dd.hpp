#pragma once

// Double description method for pointed polyhedral cones {x : A x >= 0},
// exact integer arithmetic throughout.

#include <algorithm>
#include <bit>
#include <type_traits>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "imsets/rational.hpp"

namespace imsets::dd {

namespace detail {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t k) { words_[k / 64] |= std::uint64_t{1} << (k % 64); }
  bool test(std::size_t k) const { return (words_[k / 64] >> (k % 64)) & 1u; }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

template <class Int>
Int abs_value(const Int& v) {
  return v < 0 ? Int(-v) : v;
}

template <class Int>
Int gcd_value(Int a, Int b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

template <class Int>
void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd_value(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

template <class Int>
Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) s += a[k] * b[k];
  return s;
}

}  // namespace detail

/// Extreme rays of the pointed cone {x in R^dim : row . x >= 0 for every row},
/// each scaled to a primitive integer vector, sorted lexicographically.
/// Throws if the cone is not pointed (rows of rank < dim).
template <class Int>
std::vector<std::vector<Int>> extreme_rays(const std::vector<std::vector<Int>>& rows, std::size_t dim) {
  using detail::Bits;
  const std::size_t m = rows.size();
  for (const auto& r : rows)
    if (r.size() != dim) throw std::invalid_argument("double description: row length mismatch");

  // Greedy choice of dim independent rows, tracked with rational elimination.
  std::vector<std::size_t> basis;
  std::vector<std::vector<Rational>> echelon;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t k = 0; k < m && basis.size() < dim; ++k) {
    std::vector<Rational> v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = Rational(Integer(rows[k][j]));
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const Rational f = v[pivot_cols[e]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) v[j] -= f * echelon[e][j];
    }
    std::size_t piv = dim;
    for (std::size_t j = 0; j < dim; ++j)
      if (v[j] != 0) {
        piv = j;
        break;
      }
    if (piv == dim) continue;
    const Rational scale = v[piv];
    for (auto& x : v) x /= scale;
    for (auto& row : echelon) {
      const Rational f = row[piv];
      if (f == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) row[j] -= f * v[j];
    }
    echelon.push_back(std::move(v));
    pivot_cols.push_back(piv);
    basis.push_back(k);
  }
  if (basis.size() < dim) throw std::invalid_argument("double description: cone is not pointed");

  // Initial rays: columns of the inverse of the basis submatrix.
  std::vector<std::vector<Rational>> aug(dim, std::vector<Rational>(2 * dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) aug[i][j] = Rational(Integer(rows[basis[i]][j]));
    aug[i][dim + i] = 1;
  }
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t p = col;
    while (aug[p][col] == 0) ++p;
    std::swap(aug[p], aug[col]);
    const Rational s = aug[col][col];
    for (auto& x : aug[col]) x /= s;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      const Rational f = aug[i][col];
      for (std::size_t j = 0; j < 2 * dim; ++j) aug[i][j] -= f * aug[col][j];
    }
  }

  struct Ray {
    std::vector<Int> x;
    Bits zeros;
  };
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    Integer den = 1;
    for (std::size_t i = 0; i < dim; ++i) den = lcm(den, denominator_of(aug[i][dim + j]));
    std::vector<Int> x(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const Integer v = numerator_of(aug[i][dim + j]) * (den / denominator_of(aug[i][dim + j]));
      if constexpr (std::is_same_v<Int, Integer>)
        x[i] = v;
      else
        x[i] = v.template convert_to<Int>();
    }
    detail::make_primitive(x);
    Bits z(m);
    for (std::size_t i = 0; i < dim; ++i)
      if (i != j) z.set(basis[i]);
    rays.push_back({std::move(x), std::move(z)});
  }

  std::vector<bool> in_basis(m, false);
  for (auto b : basis) in_basis[b] = true;
  for (std::size_t k = 0; k < m; ++k) {
    if (in_basis[k]) continue;
    std::vector<Int> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = detail::dot(rows[k], rays[r].x);
      if (val[r] > 0)
        pos.push_back(r);
      else if (val[r] < 0)
        neg.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (val[r] == 0) rays[r].zeros.set(k);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] < 0) continue;
      Ray keep = rays[r];
      if (val[r] == 0) keep.zeros.set(k);
      next.push_back(std::move(keep));
    }
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        Bits common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        std::vector<Int> x(dim);
        const Int vp = val[p];
        const Int vq = -val[q];
        for (std::size_t j = 0; j < dim; ++j) x[j] = vp * rays[q].x[j] + vq * rays[p].x[j];
        detail::make_primitive(x);
        common.set(k);
        next.push_back({std::move(x), std::move(common)});
      }
    rays = std::move(next);
  }

  std::vector<std::vector<Int>> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace imsets::dd
