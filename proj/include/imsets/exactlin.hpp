#pragma once

// Dense exact matrices, the transformation matrices between the frameworks,
// Hermite normal form, unimodularity checks and a Phase-I simplex.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "imsets/encode.hpp"
#include "imsets/rational.hpp"
#include "imsets/setfam.hpp"

namespace imsets {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels)
      : rows_(row_labels.size()),
        cols_(col_labels.size()),
        data_(rows_ * cols_, Integer(0)),
        row_labels_(std::move(row_labels)),
        col_labels_(std::move(col_labels)) {}

  /// Unlabelled matrix; rows and columns get their indices as labels.
  static IntMatrix zeros(std::size_t rows, std::size_t cols) {
    return IntMatrix(index_labels(rows), index_labels(cols));
  }

  static IntMatrix identity(std::vector<std::string> labels) {
    IntMatrix m(labels, labels);
    for (std::size_t k = 0; k < m.rows_; ++k) m.at(k, k) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    IntMatrix m = zeros(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  std::size_t row_index(std::string_view label) const { return find(row_labels_, label, "row"); }
  std::size_t col_index(std::string_view label) const { return find(col_labels_, label, "column"); }
  const Integer& at(std::string_view row, std::string_view col) const { return at(row_index(row), col_index(col)); }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix out(a.row_labels_, b.col_labels_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& x = a.at(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b.at(k, j) != 0) out.at(i, j) += x * b.at(k, j);
      }
    return out;
  }

  /// Entry equality; labels are ignored.
  bool same_entries(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  IntMatrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    std::vector<std::string> rl, cl;
    for (auto r : rs) rl.push_back(row_labels_.at(r));
    for (auto c : cs) cl.push_back(col_labels_.at(c));
    IntMatrix out(std::move(rl), std::move(cl));
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) out.at(i, j) = at(rs[i], cs[j]);
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix out(col_labels_, row_labels_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  Integer max_abs() const {
    Integer m = 0;
    for (const auto& x : data_) m = std::max(m, Integer(x < 0 ? -x : x));
    return m;
  }

  /// Header row of column labels, then one labelled line per row.
  std::string to_csv() const {
    std::ostringstream out;
    out << "label";
    for (const auto& l : col_labels_) out << ',' << csv_field(l);
    out << '\n';
    for (std::size_t i = 0; i < rows_; ++i) {
      out << csv_field(row_labels_[i]);
      for (std::size_t j = 0; j < cols_; ++j) out << ',' << at(i, j);
      out << '\n';
    }
    return out.str();
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  static std::vector<std::string> index_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(std::to_string(k));
    return out;
  }
  static std::size_t find(const std::vector<std::string>& labels, std::string_view l, const char* what) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw std::out_of_range(std::string("no ") + what + " labelled '" + std::string(l) + "'");
    return static_cast<std::size_t>(it - labels.begin());
  }
  static std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + '"';
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
  std::vector<std::string> row_labels_, col_labels_;
};

struct RatVector {
  std::vector<std::string> labels;
  std::vector<Rational> entries;

  std::size_t size() const { return entries.size(); }
  friend bool operator==(const RatVector&, const RatVector&) = default;
};

inline RatVector operator*(const IntMatrix& m, const RatVector& x) {
  if (m.cols() != x.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  RatVector out{m.row_labels(), std::vector<Rational>(m.rows())};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0 && x.entries[j] != 0) out.entries[i] += Rational(m.at(i, j)) * x.entries[j];
  return out;
}

// ---------------------------------------------------------------------------
// labels and the concrete matrices

/// Non-empty subsets in ascending bitmask order.
inline std::vector<Subset> nonempty_sets(const GroundSet& g) {
  std::vector<Subset> out;
  for (std::uint32_t s = 1; s < g.power(); ++s) out.emplace_back(s);
  return out;
}

inline std::vector<std::string> set_labels(const GroundSet& g) {
  std::vector<std::string> out;
  for (Subset s : nonempty_sets(g)) out.push_back(g.compact(s));
  return out;
}

inline std::string pair_label(const GroundSet& g, ParentPair p) {
  return g.label(p.node) + "|" + g.compact(p.parents);
}

inline std::vector<std::string> eta_labels(const GroundSet& g) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < eta_size(g.size()); ++k) out.push_back(pair_label(g, eta_pair(g.size(), k)));
  return out;
}

/// a[T,(i|B)] = delta_{iB}(T) - delta_B(T) for |T| >= 2 and delta_{i}(T) for |T| = 1.
inline IntMatrix matrix_A(const GroundSet& g) {
  IntMatrix m(set_labels(g), eta_labels(g));
  for (std::size_t k = 0; k < eta_size(g.size()); ++k) {
    const ParentPair p = eta_pair(g.size(), k);
    for (std::uint32_t t = 1; t < g.power(); ++t) {
      const Subset T(t);
      std::int64_t v = 0;
      if (T.size() == 1)
        v = T == Subset::singleton(p.node) ? 1 : 0;
      else
        v = (T == p.parents.with(p.node) ? 1 : 0) - (T == p.parents ? 1 : 0);
      m.at(t - 1, k) = v;
    }
  }
  return m;
}

/// b_u[T] = 1 for |T| = 1 and delta_N(T) - u(T) for |T| >= 2.
inline RatVector vector_b(const StandardImset& u) {
  const GroundSet& g = u.ground;
  RatVector b{set_labels(g), {}};
  for (Subset t : nonempty_sets(g))
    b.entries.push_back(t.size() == 1 ? Rational(1) : Rational((t == g.full() ? 1 : 0) - u.at(t)));
  return b;
}

/// b[S,(i|B)] = 1 iff i in S and S \ {i} is contained in B.
inline IntMatrix matrix_B(const GroundSet& g) {
  IntMatrix m(set_labels(g), eta_labels(g));
  for (std::size_t k = 0; k < eta_size(g.size()); ++k) {
    const ParentPair p = eta_pair(g.size(), k);
    for (std::uint32_t s = 1; s < g.power(); ++s) {
      const Subset S(s);
      if (S.contains(p.node) && S.without(p.node).subset_of(p.parents)) m.at(s - 1, k) = 1;
    }
  }
  return m;
}

/// c[S,T] = [S subset of T] for |S| >= 2, [S = T] for |S| = 1.
inline IntMatrix matrix_C(const GroundSet& g) {
  IntMatrix m(set_labels(g), set_labels(g));
  for (std::uint32_t s = 1; s < g.power(); ++s)
    for (std::uint32_t t = 1; t < g.power(); ++t) {
      const Subset S(s), T(t);
      if (S.size() >= 2 ? S.subset_of(T) : S == T) m.at(s - 1, t - 1) = 1;
    }
  return m;
}

/// d[T,R] = [T subset of R] (-1)^|R\T| for |T| >= 2, [T = R] for |T| = 1.
inline IntMatrix matrix_D(const GroundSet& g) {
  IntMatrix m(set_labels(g), set_labels(g));
  for (std::uint32_t t = 1; t < g.power(); ++t)
    for (std::uint32_t r = 1; r < g.power(); ++r) {
      const Subset T(t), R(r);
      if (T.size() >= 2) {
        if (T.subset_of(R)) m.at(t - 1, r - 1) = ((R - T).size() % 2 == 0) ? 1 : -1;
      } else if (T == R) {
        m.at(t - 1, r - 1) = 1;
      }
    }
  return m;
}

/// Square part of the extended B: b[S,R] = [S subset of R] over non-empty S, R.
inline IntMatrix matrix_B_bar(const GroundSet& g) {
  IntMatrix m(set_labels(g), set_labels(g));
  for (std::uint32_t s = 1; s < g.power(); ++s)
    for (std::uint32_t r = 1; r < g.power(); ++r)
      if (Subset(s).subset_of(Subset(r))) m.at(s - 1, r - 1) = 1;
  return m;
}

/// f[R,U] = [R subset of U] (-1)^|U\R|.
inline IntMatrix matrix_F(const GroundSet& g) {
  IntMatrix m(set_labels(g), set_labels(g));
  for (std::uint32_t r = 1; r < g.power(); ++r)
    for (std::uint32_t u = 1; u < g.power(); ++u) {
      const Subset R(r), U(u);
      if (R.subset_of(U)) m.at(r - 1, u - 1) = ((U - R).size() % 2 == 0) ? 1 : -1;
    }
  return m;
}

/// Column pairs (C:B) with B non-empty, C = B + i, in eta order of (i|B).
inline std::vector<ParentPair> exchange_pairs(const GroundSet& g) {
  std::vector<ParentPair> out;
  for (std::size_t k = 0; k < eta_size(g.size()); ++k) {
    const ParentPair p = eta_pair(g.size(), k);
    if (!p.parents.empty()) out.push_back(p);
  }
  return out;
}

/// Columns: every non-empty set R (e[T,R] = [T = R]) followed by every pair
/// (C:B) (e[T,(C:B)] = [T = C] - [T = B]). With `dummy_row` an extra first
/// row labelled "empty" holds -1 on the R columns.
inline IntMatrix matrix_E(const GroundSet& g, bool dummy_row = false) {
  std::vector<std::string> rows = set_labels(g);
  if (dummy_row) rows.insert(rows.begin(), "empty");
  std::vector<std::string> cols = set_labels(g);
  const auto pairs = exchange_pairs(g);
  for (const auto& p : pairs) cols.push_back(g.compact(p.parents.with(p.node)) + ":" + g.compact(p.parents));
  IntMatrix m(rows, cols);
  const std::size_t off = dummy_row ? 1 : 0;
  const std::size_t sets = g.power() - 1;
  for (std::size_t r = 0; r < sets; ++r) {
    m.at(r + off, r) = 1;
    if (dummy_row) m.at(0, r) = -1;
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    m.at(pairs[k].parents.with(pairs[k].node).bits - 1 + off, sets + k) = 1;
    m.at(pairs[k].parents.bits - 1 + off, sets + k) = -1;
  }
  return m;
}

/// Every column has exactly one +1, one -1 and zeros elsewhere.
inline bool is_network_matrix(const IntMatrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    int plus = 0, minus = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const Integer& x = m.at(i, j);
      if (x == 1)
        ++plus;
      else if (x == -1)
        ++minus;
      else if (x != 0)
        return false;
    }
    if (plus != 1 || minus != 1) return false;
  }
  return true;
}

/// Column of B̄·E that corresponds to column k of B (eta order).
inline std::vector<std::size_t> b_columns_in_extended(const GroundSet& g) {
  std::vector<std::size_t> out;
  const std::size_t sets = g.power() - 1;
  std::size_t next_pair = 0;
  for (std::size_t k = 0; k < eta_size(g.size()); ++k) {
    const ParentPair p = eta_pair(g.size(), k);
    out.push_back(p.parents.empty() ? Subset::singleton(p.node).bits - 1 : sets + next_pair++);
  }
  return out;
}

// ---------------------------------------------------------------------------
// determinants and Hermite normal form

/// Fraction-free Bareiss elimination on a square row-major matrix.
template <class Int>
Int bareiss_determinant(std::vector<Int> a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Int(1);
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return Int(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

inline Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  std::vector<Integer> a;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(m.at(i, j));
  return bareiss_determinant(std::move(a), m.rows());
}

struct HermiteResult {
  IntMatrix H;  // H = M U
  IntMatrix U;  // unimodular column operations
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

namespace detail {

inline void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  x = old_s;
  y = old_t;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

/// Column-style Hermite normal form: H = M U with U unimodular, H lower
/// staircase, positive pivots and entries left of each pivot in [0, pivot).
inline HermiteResult hermite_normal_form(const IntMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  IntMatrix H = m;
  IntMatrix U = IntMatrix::identity(m.col_labels());
  auto combine = [&](IntMatrix& X, std::size_t k, std::size_t j, const Integer& x, const Integer& y, const Integer& p,
                     const Integer& q) {
    // col_k <- x col_k + y col_j ; col_j <- p col_k + q col_j
    for (std::size_t i = 0; i < X.rows(); ++i) {
      const Integer a = X.at(i, k), b = X.at(i, j);
      X.at(i, k) = x * a + y * b;
      X.at(i, j) = p * a + q * b;
    }
  };
  auto axpy = [&](IntMatrix& X, std::size_t dst, std::size_t src, const Integer& f) {
    if (f == 0) return;
    for (std::size_t i = 0; i < X.rows(); ++i) X.at(i, dst) -= f * X.at(i, src);
  };
  HermiteResult out{{}, {}, 0, {}};
  std::size_t k = 0;
  for (std::size_t r = 0; r < R && k < C; ++r) {
    for (std::size_t j = k + 1; j < C; ++j) {
      const Integer b = H.at(r, j);
      if (b == 0) continue;
      const Integer a = H.at(r, k);
      Integer g, x, y;
      detail::extended_gcd(a, b, g, x, y);
      const Integer p = -b / g, q = a / g;
      combine(H, k, j, x, y, p, q);
      combine(U, k, j, x, y, p, q);
    }
    if (H.at(r, k) == 0) continue;
    if (H.at(r, k) < 0) {
      for (std::size_t i = 0; i < R; ++i) H.at(i, k) = -H.at(i, k);
      for (std::size_t i = 0; i < C; ++i) U.at(i, k) = -U.at(i, k);
    }
    const Integer piv = H.at(r, k);
    for (std::size_t j = 0; j < k; ++j) {
      const Integer f = detail::floor_div(H.at(r, j), piv);
      axpy(H, j, k, f);
      axpy(U, j, k, f);
    }
    out.pivot_rows.push_back(r);
    ++k;
  }
  out.rank = k;
  out.H = std::move(H);
  out.U = std::move(U);
  return out;
}

/// H == [I 0].
inline bool is_identity_then_zero(const IntMatrix& h) {
  if (h.cols() < h.rows()) return false;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h.at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// unimodularity

inline constexpr std::uint64_t kSubmatrixLimit = 10'000'000;

/// C(n, k) saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

struct Minor {
  std::vector<std::size_t> rows, cols;
  Integer det;
};

struct UnimodularVerdict {
  bool full_row_rank = false;
  bool unimodular = false;  // for sampled mode: no counterexample found
  bool exhaustive = true;
  std::uint64_t minors_checked = 0;
  std::uint64_t nonzero_minors = 0;
  std::optional<Minor> violation;
};

namespace detail {

/// Square submatrix determinant, in int64 when Hadamard's bound allows it.
inline Integer minor_det(const IntMatrix& m, const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs,
                         bool small_entries) {
  const std::size_t k = rs.size();
  if (small_entries && k <= 14) {
    std::vector<std::int64_t> a(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a[i * k + j] = m.at(rs[i], cs[j]).convert_to<std::int64_t>();
    return Integer(bareiss_determinant(std::move(a), k));
  }
  std::vector<Integer> a(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i * k + j] = m.at(rs[i], cs[j]);
  return bareiss_determinant(std::move(a), k);
}

/// Advances a k-combination of {0..n-1} in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> iota(std::size_t k) {
  std::vector<std::size_t> v(k);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

}  // namespace detail

struct SampleMode {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Maximal minors of a full-row-rank matrix all lie in {-1, 0, 1}.
/// Without a sample mode every minor is computed (refused above 10^7).
inline UnimodularVerdict is_unimodular_full_row_rank(const IntMatrix& m, std::optional<SampleMode> sample = std::nullopt) {
  UnimodularVerdict v;
  v.full_row_rank = hermite_normal_form(m).rank == m.rows();
  if (!v.full_row_rank) return v;
  const bool small = m.max_abs() <= 1;
  const std::size_t r = m.rows(), c = m.cols();
  const auto all_rows = detail::iota(r);
  auto check = [&](const std::vector<std::size_t>& cols) {
    const Integer d = detail::minor_det(m, all_rows, cols, small);
    ++v.minors_checked;
    if (d != 0) ++v.nonzero_minors;
    if (d > 1 || d < -1) {
      v.violation = Minor{all_rows, cols, d};
      return false;
    }
    return true;
  };
  if (!sample) {
    if (binomial(c, r) > kSubmatrixLimit)
      throw std::invalid_argument("exhaustive unimodularity check needs " + std::to_string(binomial(c, r)) +
                                  " minors, more than the 10^7 limit");
    auto cols = detail::iota(r);
    do {
      if (!check(cols)) return v;
    } while (detail::next_combination(cols, c));
    v.unimodular = true;
    return v;
  }
  v.exhaustive = false;
  std::mt19937_64 rng(sample->seed);
  std::vector<std::size_t> pool = detail::iota(c);
  for (std::uint64_t s = 0; s < sample->samples; ++s) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<std::size_t> cols(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(r));
    std::sort(cols.begin(), cols.end());
    if (!check(cols)) return v;
  }
  v.unimodular = true;
  return v;
}

struct TotalUnimodularVerdict {
  bool passed = false;
  std::size_t checked_order = 0;
  std::uint64_t submatrices_checked = 0;
  std::optional<Minor> violation;
};

/// All square submatrices of order 1..max_order, ascending order; stops at the
/// first determinant outside {-1, 0, 1}.
inline TotalUnimodularVerdict is_totally_unimodular_small(const IntMatrix& m, std::size_t max_order) {
  max_order = std::min({max_order, m.rows(), m.cols()});
  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= max_order; ++k) {
    const std::uint64_t add = binomial(m.rows(), k) * binomial(m.cols(), k);
    total += add;
    if (binomial(m.cols(), k) != 0 && add / binomial(m.cols(), k) != binomial(m.rows(), k)) total = kSubmatrixLimit + 1;
    if (total > kSubmatrixLimit)
      throw std::invalid_argument("total unimodularity check exceeds the 10^7 submatrix limit");
  }
  TotalUnimodularVerdict v;
  const bool small = m.max_abs() <= 1;
  for (std::size_t k = 1; k <= max_order; ++k) {
    auto rs = detail::iota(k);
    do {
      auto cs = detail::iota(k);
      do {
        const Integer d = detail::minor_det(m, rs, cs, small);
        ++v.submatrices_checked;
        if (d > 1 || d < -1) {
          v.checked_order = k;
          v.violation = Minor{rs, cs, d};
          return v;
        }
      } while (detail::next_combination(cs, m.cols()));
    } while (detail::next_combination(rs, m.rows()));
    v.checked_order = k;
  }
  v.passed = true;
  return v;
}

/// Rank over the rationals.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Phase-I simplex

/// Some x >= 0 with M x = b, or nullopt. Exact rationals, Bland's rule.
inline std::optional<RatVector> feasible_nonneg_solution(const IntMatrix& m, const RatVector& b) {
  const std::size_t R = m.rows(), C = m.cols();
  if (b.size() != R) throw std::invalid_argument("feasibility: right-hand side has wrong length");
  const std::size_t W = C + R;  // original columns then one artificial per row
  std::vector<std::vector<Rational>> t(R, std::vector<Rational>(W + 1));
  for (std::size_t i = 0; i < R; ++i) {
    const bool flip = b.entries[i] < 0;
    for (std::size_t j = 0; j < C; ++j) t[i][j] = flip ? Rational(-m.at(i, j)) : Rational(m.at(i, j));
    t[i][C + i] = 1;
    t[i][W] = flip ? Rational(-b.entries[i]) : b.entries[i];
  }
  std::vector<std::size_t> basis(R);
  for (std::size_t i = 0; i < R; ++i) basis[i] = C + i;
  // Reduced costs of the phase-I objective (sum of artificials).
  std::vector<Rational> z(W + 1);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j <= W; ++j)
      if (j < C || j == W) z[j] -= t[i][j];
  for (;;) {
    std::size_t enter = W;
    for (std::size_t j = 0; j < W; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter == W) break;
    std::size_t leave = R;
    Rational best;
    for (std::size_t i = 0; i < R; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][W] / t[i][enter];
      if (leave == R || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == R) throw std::logic_error("phase-I simplex is unbounded");
    const Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= W; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    if (z[enter] != 0) {
      const Rational f = z[enter];
      for (std::size_t j = 0; j <= W; ++j)
        if (t[leave][j] != 0) z[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (z[W] != 0) return std::nullopt;
  RatVector x{m.col_labels(), std::vector<Rational>(C)};
  for (std::size_t i = 0; i < R; ++i)
    if (basis[i] < C) x.entries[basis[i]] = t[i][W];
  return x;
}

}  // namespace imsets
