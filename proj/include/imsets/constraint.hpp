#pragma once

// Linear constraint families over the eta, standard-imset (u) and
// characteristic-imset (c) coordinates, the kappa coefficients, the cone of
// standardized supermodular functions and the dual cone of y-vectors.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "imsets/dd.hpp"
#include "imsets/encode.hpp"
#include "imsets/rational.hpp"
#include "imsets/setfam.hpp"

namespace imsets {

enum class Framework { eta, u, c };
enum class Sense { ge, le, eq };

/// Constraint families. The first three live in the eta framework, the next
/// four in u, the last two in c.
enum class Family { nonneg, equality, cluster, specific, nonspecific, cluster_u, kappa_specific, cluster_c };

inline std::string to_string(Framework f) {
  switch (f) {
    case Framework::eta: return "eta";
    case Framework::u: return "u";
    case Framework::c: return "c";
  }
  return "?";
}

inline Framework parse_framework(std::string_view s) {
  if (s == "eta") return Framework::eta;
  if (s == "u") return Framework::u;
  if (s == "c") return Framework::c;
  throw std::invalid_argument("unknown framework '" + std::string(s) + "'");
}

inline std::string to_string(Sense s) {
  switch (s) {
    case Sense::ge: return ">=";
    case Sense::le: return "<=";
    case Sense::eq: return "=";
  }
  return "?";
}

inline Sense parse_sense(std::string_view s) {
  if (s == ">=") return Sense::ge;
  if (s == "<=") return Sense::le;
  if (s == "=" || s == "==") return Sense::eq;
  throw std::invalid_argument("unknown sense '" + std::string(s) + "'");
}

inline std::string to_string(Family f) {
  switch (f) {
    case Family::nonneg: return "nonneg";
    case Family::equality: return "equality";
    case Family::cluster: return "cluster";
    case Family::specific: return "specific";
    case Family::nonspecific: return "nonspecific";
    case Family::cluster_u: return "cluster-u";
    case Family::kappa_specific: return "kappa-specific";
    case Family::cluster_c: return "cluster-c";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  for (Family f : {Family::nonneg, Family::equality, Family::cluster, Family::specific, Family::nonspecific,
                   Family::cluster_u, Family::kappa_specific, Family::cluster_c})
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown constraint family '" + std::string(s) + "'");
}

/// Comma-separated family list, e.g. "equality,specific".
inline std::vector<Family> parse_families(std::string_view list) {
  std::vector<Family> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    if (comma > start) out.push_back(parse_family(list.substr(start, comma - start)));
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty family list");
  return out;
}

inline std::size_t index_space_size(Framework f, int n) {
  return f == Framework::eta ? eta_size(n) : (std::size_t{1} << n);
}

/// Index k of framework f is a real coordinate (c only uses sets of size >= 2).
inline bool index_allowed(Framework f, std::size_t k) {
  return f != Framework::c || std::popcount(static_cast<std::uint32_t>(k)) >= 2;
}

/// Dense row: sum_k coefficients[k] * x[k] (sense) rhs.
struct LinearConstraint {
  Framework framework = Framework::u;
  std::vector<Rational> coefficients;
  Sense sense = Sense::ge;
  Rational rhs;
  std::string tag;
  bool vacuous = false;

  template <class T>
  Rational lhs(std::span<const T> x) const {
    if (x.size() != coefficients.size()) throw std::invalid_argument("point has wrong dimension for row " + tag);
    Rational s = 0;
    for (std::size_t k = 0; k < coefficients.size(); ++k)
      if (coefficients[k] != 0) s += coefficients[k] * Rational(x[k]);
    return s;
  }

  bool accepts(const Rational& value) const {
    switch (sense) {
      case Sense::ge: return value >= rhs;
      case Sense::le: return value <= rhs;
      case Sense::eq: return value == rhs;
    }
    return false;
  }

  template <class T>
  bool holds(std::span<const T> x) const {
    return accepts(lhs(x));
  }
  template <class T>
  bool holds(const std::vector<T>& x) const {
    return holds(std::span<const T>(x));
  }

  std::size_t support() const {
    return static_cast<std::size_t>(std::count_if(coefficients.begin(), coefficients.end(),
                                                  [](const Rational& q) { return q != 0; }));
  }

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

struct ConstraintSystem {
  GroundSet ground;
  Framework framework = Framework::u;
  std::vector<LinearConstraint> rows;
};

/// Integer-scaled sparse copy of a row for fast evaluation at int64 points.
struct CompiledRow {
  std::vector<std::pair<std::uint32_t, std::int64_t>> terms;
  std::int64_t rhs = 0;
  Sense sense = Sense::ge;

  bool holds(const std::int64_t* x) const {
    std::int64_t s = 0;
    for (const auto& [k, a] : terms) s += a * x[k];
    switch (sense) {
      case Sense::ge: return s >= rhs;
      case Sense::le: return s <= rhs;
      case Sense::eq: return s == rhs;
    }
    return false;
  }
};

inline CompiledRow compile(const LinearConstraint& row) {
  Integer den = denominator_of(row.rhs);
  for (const auto& q : row.coefficients)
    if (q != 0) den = lcm(den, denominator_of(q));
  CompiledRow out;
  out.sense = row.sense;
  out.rhs = to_int64(row.rhs * Rational(den));
  for (std::size_t k = 0; k < row.coefficients.size(); ++k)
    if (row.coefficients[k] != 0)
      out.terms.emplace_back(static_cast<std::uint32_t>(k), to_int64(row.coefficients[k] * Rational(den)));
  return out;
}

// ---------------------------------------------------------------------------
// eta framework

inline LinearConstraint eta_nonneg_constraint(const GroundSet& ground, ParentPair p) {
  const int n = ground.size();
  LinearConstraint row{Framework::eta, std::vector<Rational>(eta_size(n)), Sense::ge, 0,
                       "nonneg:" + ground.label(p.node) + "|" + ground.compact(p.parents)};
  row.coefficients[eta_index(n, p)] = 1;
  return row;
}

inline LinearConstraint eta_equality_constraint(const GroundSet& ground, int j) {
  const int n = ground.size();
  LinearConstraint row{Framework::eta, std::vector<Rational>(eta_size(n)), Sense::eq, 1, "equality:" + ground.label(j)};
  const std::size_t block = std::size_t{1} << (n - 1);
  for (std::size_t k = 0; k < block; ++k) row.coefficients[static_cast<std::size_t>(j) * block + k] = 1;
  return row;
}

/// 1 <= sum_{i in C} sum_{D subset of N \ C} eta(i|D).
inline LinearConstraint eta_cluster_constraint(const GroundSet& ground, Subset cluster) {
  if (cluster.size() < 2) throw std::invalid_argument("cluster inequality needs |C| >= 2");
  const int n = ground.size();
  LinearConstraint row{Framework::eta, std::vector<Rational>(eta_size(n)), Sense::ge, 1,
                       "cluster:" + ground.compact(cluster)};
  const std::uint32_t outside = (ground.full() - cluster).bits;
  for (int i : elements(cluster))
    for (std::uint32_t d = 0;; d = (d - outside) & outside) {
      row.coefficients[eta_index(n, {i, Subset(d)})] = 1;
      if (d == outside) break;
    }
  return row;
}

inline std::vector<LinearConstraint> eta_system(const GroundSet& ground, const std::vector<Family>& families) {
  const int n = ground.size();
  std::vector<LinearConstraint> rows;
  auto wants = [&](Family f) { return std::find(families.begin(), families.end(), f) != families.end(); };
  for (Family f : families)
    if (f != Family::nonneg && f != Family::equality && f != Family::cluster)
      throw std::invalid_argument("family " + to_string(f) + " is not an eta family");
  if (wants(Family::nonneg))
    for (std::size_t k = 0; k < eta_size(n); ++k) rows.push_back(eta_nonneg_constraint(ground, eta_pair(n, k)));
  if (wants(Family::equality))
    for (int j = 0; j < n; ++j) rows.push_back(eta_equality_constraint(ground, j));
  if (wants(Family::cluster))
    for (std::uint32_t c = 0; c < ground.power(); ++c)
      if (std::popcount(c) >= 2) rows.push_back(eta_cluster_constraint(ground, Subset(c)));
  return rows;
}

// ---------------------------------------------------------------------------
// u framework

inline std::vector<LinearConstraint> u_equality_system(const GroundSet& ground) {
  std::vector<LinearConstraint> rows;
  rows.push_back({Framework::u, std::vector<Rational>(ground.power(), Rational(1)), Sense::eq, 0, "equality:all"});
  for (int j = 0; j < ground.size(); ++j) {
    LinearConstraint row{Framework::u, std::vector<Rational>(ground.power()), Sense::eq, 0,
                         "equality:" + ground.label(j)};
    for (std::uint32_t t = 0; t < ground.power(); ++t)
      if ((t >> j) & 1u) row.coefficients[t] = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

/// sum_{T in A} u(T) <= 1 where A is the superset closure of the antichain.
inline LinearConstraint specific_constraint(const Antichain& antichain) {
  const SetClass cls = superset_closure(antichain);
  LinearConstraint row{Framework::u, std::vector<Rational>(antichain.ground().power()), Sense::le, 1,
                       "specific:" + antichain.tag()};
  for (Subset t : cls.members()) row.coefficients[t.bits] = 1;
  return row;
}

/// sum_{|C n T| >= 2} u(T) (|C n T| - 1) >= 0.
inline LinearConstraint cluster_constraint_u(const GroundSet& ground, Subset cluster) {
  if (cluster.size() < 2) throw std::invalid_argument("cluster inequality needs |C| >= 2");
  LinearConstraint row{Framework::u, std::vector<Rational>(ground.power()), Sense::ge, 0,
                       "cluster-u:" + ground.compact(cluster)};
  for (std::uint32_t t = 0; t < ground.power(); ++t) {
    const int k = (Subset(t) & cluster).size();
    if (k >= 2) row.coefficients[t] = k - 1;
  }
  return row;
}

// ---------------------------------------------------------------------------
// kappa coefficients and the c framework

struct KappaCoefficients {
  Antichain antichain;
  std::vector<std::int64_t> values;  // indexed by subset bits

  std::int64_t at(Subset s) const { return values.at(s.bits); }
};

/// kappa(S) = 1 - sum_{T in C(I), T proper subset of S} kappa(T) on the
/// union class C(I), zero elsewhere.
inline KappaCoefficients kappa_coefficients(const Antichain& antichain) {
  const SetClass unions = union_closure_class(antichain);
  std::vector<std::int64_t> kappa(antichain.ground().power(), 0);
  const std::vector<Subset> members = unions.members();
  // Ascending bitmask order lists every proper subset before its supersets.
  for (std::size_t a = 0; a < members.size(); ++a) {
    std::int64_t sum = 0;
    for (std::size_t b = 0; b < a; ++b)
      if (members[b].proper_subset_of(members[a])) sum += kappa[members[b].bits];
    kappa[members[a].bits] = 1 - sum;
  }
  return {antichain, std::move(kappa)};
}

/// 0 <= sum_S kappa(S) c(S) with the |S| <= 1 terms moved to the right-hand
/// side via c(S) = 1. Rows whose coefficients all vanish are flagged vacuous.
inline LinearConstraint char_specific_constraint(const Antichain& antichain) {
  const KappaCoefficients kappa = kappa_coefficients(antichain);
  const GroundSet& ground = antichain.ground();
  LinearConstraint row{Framework::c, std::vector<Rational>(ground.power()), Sense::ge, 0,
                       "kappa-specific:" + antichain.tag()};
  std::int64_t constant = 0;
  for (std::uint32_t s = 0; s < ground.power(); ++s) {
    if (std::popcount(s) <= 1)
      constant += kappa.values[s];
    else
      row.coefficients[s] = kappa.values[s];
  }
  row.rhs = -constant;
  row.vacuous = row.support() == 0;
  return row;
}

/// |C| - 1 - sum_{S subset of C, |S| >= 2} (-1)^|S| c(S) >= 0.
inline LinearConstraint cluster_constraint_c(const GroundSet& ground, Subset cluster) {
  if (cluster.size() < 2) throw std::invalid_argument("cluster inequality needs |C| >= 2");
  LinearConstraint row{Framework::c, std::vector<Rational>(ground.power()), Sense::ge, -(cluster.size() - 1),
                       "cluster-c:" + ground.compact(cluster)};
  for (std::uint32_t s = 0; s < ground.power(); ++s) {
    const Subset S(s);
    if (S.size() >= 2 && S.subset_of(cluster)) row.coefficients[s] = (S.size() % 2 == 0) ? -1 : 1;
  }
  return row;
}

/// Rewrites a u-row as the equivalent c-row, valid for standardized u. With
/// a^(S) = sum_{T subset of S} (-1)^|S\T| a(T), one has
/// sum_T a(T) u(T) = sum_{|S| >= 2} a^(S) (1 - c(S)).
inline LinearConstraint translate_to_characteristic(const LinearConstraint& row, int n) {
  if (row.framework != Framework::u) throw std::invalid_argument("translate_to_characteristic expects a u-row");
  std::vector<Rational> hat = row.coefficients;
  for (int i = 0; i < n; ++i)
    for (std::uint32_t s = 0; s < (1u << n); ++s)
      if ((s >> i) & 1u) hat[s] -= hat[s ^ (1u << i)];
  LinearConstraint out{Framework::c, std::vector<Rational>(hat.size()), row.sense, row.rhs, row.tag};
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) < 2) continue;
    out.coefficients[s] = -hat[s];
    out.rhs -= hat[s];
  }
  out.vacuous = out.support() == 0;
  return out;
}

// ---------------------------------------------------------------------------
// supermodular functions

struct SupermodularFunction {
  GroundSet ground;
  std::vector<Rational> values;  // indexed by subset bits

  const Rational& at(Subset s) const { return values.at(s.bits); }

  bool standardized() const {
    for (std::uint32_t s = 0; s < ground.power(); ++s)
      if (std::popcount(s) <= 1 && values[s] != 0) return false;
    return true;
  }

  friend bool operator==(const SupermodularFunction&, const SupermodularFunction&) = default;
};

/// Checks m(C+ij) + m(C) >= m(C+i) + m(C+j) for all i < j and C avoiding i, j.
inline bool is_supermodular(const SupermodularFunction& m) {
  const int n = m.ground.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const std::uint32_t rest = m.ground.full().without(i).without(j).bits;
      for (std::uint32_t c = 0;; c = (c - rest) & rest) {
        const std::uint32_t ci = c | (1u << i), cj = c | (1u << j), cij = ci | cj;
        if (m.values[cij] + m.values[c] < m.values[ci] + m.values[cj]) return false;
        if (c == rest) break;
      }
    }
  return true;
}

/// m_C(T) = max(0, |C n T| - 1).
inline SupermodularFunction cluster_supermodular(const GroundSet& ground, Subset cluster) {
  if (cluster.size() < 2) throw std::invalid_argument("cluster function needs |C| >= 2");
  SupermodularFunction m{ground, std::vector<Rational>(ground.power())};
  for (std::uint32_t t = 0; t < ground.power(); ++t) m.values[t] = std::max(0, (Subset(t) & cluster).size() - 1);
  return m;
}

/// m(T) = 1 if S is contained in T, else 0.
inline SupermodularFunction indicator_supermodular(const GroundSet& ground, Subset s) {
  if (s.size() < 2) throw std::invalid_argument("indicator function needs |S| >= 2");
  SupermodularFunction m{ground, std::vector<Rational>(ground.power())};
  for (std::uint32_t t = 0; t < ground.power(); ++t) m.values[t] = s.subset_of(Subset(t)) ? 1 : 0;
  return m;
}

template <class T>
Rational pairing(const SupermodularFunction& m, const std::vector<T>& u) {
  Rational s = 0;
  for (std::size_t k = 0; k < m.values.size(); ++k)
    if (m.values[k] != 0) s += m.values[k] * Rational(u[k]);
  return s;
}

/// Scales to the integer representative with coprime entries.
inline SupermodularFunction normalize_ray(SupermodularFunction m) {
  Integer den = 1;
  for (const auto& q : m.values) den = lcm(den, denominator_of(q));
  Integer g = 0;
  for (const auto& q : m.values) g = gcd(g, numerator_of(q * Rational(den)));
  if (g == 0) throw std::invalid_argument("zero vector is not a ray");
  for (auto& q : m.values) q = q * Rational(den) / Rational(g);
  return m;
}

enum class RayMethod { builtin, dd, file };

struct RaySource {
  RayMethod method = RayMethod::builtin;
  std::string path;
  bool long_run = false;
};

/// The five extreme rays for n = 3: three pair indicators, the N indicator and m_N.
inline std::vector<SupermodularFunction> builtin_rays(const GroundSet& ground) {
  if (ground.size() != 3) throw std::invalid_argument("builtin rays exist only for n = 3");
  std::vector<SupermodularFunction> rays;
  for (std::uint32_t s : {0b011u, 0b101u, 0b110u, 0b111u}) rays.push_back(indicator_supermodular(ground, Subset(s)));
  rays.push_back(cluster_supermodular(ground, ground.full()));
  return rays;
}

/// Elementary-exchange rows of the standardized supermodular cone over the
/// coordinates T with |T| >= 2 (ascending bitmask order).
inline std::vector<std::vector<Integer>> supermodular_cone_rows(const GroundSet& ground) {
  const int n = ground.size();
  std::vector<int> coord(ground.power(), -1);
  int dim = 0;
  for (std::uint32_t s = 0; s < ground.power(); ++s)
    if (std::popcount(s) >= 2) coord[s] = dim++;
  std::vector<std::vector<Integer>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const std::uint32_t rest = ground.full().without(i).without(j).bits;
      for (std::uint32_t c = 0;; c = (c - rest) & rest) {
        std::vector<Integer> row(static_cast<std::size_t>(dim), 0);
        auto add = [&](std::uint32_t s, int w) {
          if (coord[s] >= 0) row[static_cast<std::size_t>(coord[s])] += w;
        };
        add(c | (1u << i) | (1u << j), 1);
        add(c, 1);
        add(c | (1u << i), -1);
        add(c | (1u << j), -1);
        rows.push_back(std::move(row));
        if (c == rest) break;
      }
    }
  return rows;
}

inline std::vector<SupermodularFunction> dd_rays(const GroundSet& ground, bool long_run = false) {
  if (ground.size() >= 5 && !long_run)
    throw std::invalid_argument("computing supermodular rays for n >= 5 requires the long-run flag");
  const auto rows = supermodular_cone_rows(ground);
  const std::size_t dim = ground.power() - static_cast<std::size_t>(ground.size()) - 1;
  const auto rays = dd::extreme_rays<Integer>(rows, dim);
  std::vector<SupermodularFunction> out;
  for (const auto& r : rays) {
    SupermodularFunction m{ground, std::vector<Rational>(ground.power())};
    std::size_t k = 0;
    for (std::uint32_t s = 0; s < ground.power(); ++s)
      if (std::popcount(s) >= 2) m.values[s] = Rational(r[k++]);
    out.push_back(std::move(m));
  }
  return out;
}

/// Accepts a JSON list of {"entries": {"a,b": 1, ...}} or an object
/// {"labels": [...], "rays": [...]}. Every ray must be standardized and
/// supermodular; extremality is not re-verified.
inline std::vector<SupermodularFunction> rays_from_json(const GroundSet& ground, const nlohmann::json& doc) {
  const nlohmann::json* list = &doc;
  if (doc.is_object()) {
    if (doc.contains("labels") && GroundSet(doc.at("labels").get<std::vector<std::string>>()) != ground)
      throw std::invalid_argument("ray file labels do not match the ground set");
    list = &doc.at("rays");
  }
  if (!list->is_array()) throw std::invalid_argument("ray file must hold a list of rays");
  std::vector<SupermodularFunction> out;
  for (const auto& item : *list) {
    SupermodularFunction m{ground, std::vector<Rational>(ground.power())};
    for (const auto& [key, value] : item.at("entries").items()) {
      const Subset s = ground.parse(key);
      m.values[s.bits] = value.is_string() ? parse_rational(value.get<std::string>()) : Rational(value.get<std::int64_t>());
    }
    if (!m.standardized()) throw std::invalid_argument("ray " + std::to_string(out.size()) + " is not standardized");
    if (!is_supermodular(m)) throw std::invalid_argument("ray " + std::to_string(out.size()) + " is not supermodular");
    out.push_back(normalize_ray(std::move(m)));
  }
  return out;
}

inline std::vector<SupermodularFunction> supermodular_rays(const GroundSet& ground, const RaySource& source) {
  switch (source.method) {
    case RayMethod::builtin: return builtin_rays(ground);
    case RayMethod::dd: return dd_rays(ground, source.long_run);
    case RayMethod::file: {
      std::ifstream in(source.path);
      if (!in) throw std::runtime_error("cannot open ray file '" + source.path + "'");
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("ray file '" + source.path + "': " + e.what());
      }
      return rays_from_json(ground, doc);
    }
  }
  return {};
}

/// Default ray source for n: builtin for n = 3, double description for n = 4.
inline RaySource default_ray_source(int n) {
  return n == 3 ? RaySource{RayMethod::builtin, {}, false} : RaySource{RayMethod::dd, {}, false};
}

inline std::vector<LinearConstraint> nonspecific_constraints(const std::vector<SupermodularFunction>& rays) {
  std::vector<LinearConstraint> rows;
  for (std::size_t k = 0; k < rays.size(); ++k) {
    if (!rays[k].standardized()) throw std::invalid_argument("nonspecific rows need standardized functions");
    rows.push_back({Framework::u, rays[k].values, Sense::ge, 0, "nonspecific:" + std::to_string(k)});
  }
  return rows;
}

/// All rows of the requested families in their native framework. Families of
/// different frameworks cannot be mixed. `rays` feeds the nonspecific family.
inline ConstraintSystem build_system(const GroundSet& ground, const std::vector<Family>& families,
                                     const std::optional<RaySource>& rays = std::nullopt) {
  auto framework_of = [](Family f) {
    switch (f) {
      case Family::nonneg:
      case Family::cluster: return Framework::eta;
      case Family::specific:
      case Family::nonspecific:
      case Family::cluster_u: return Framework::u;
      case Family::kappa_specific:
      case Family::cluster_c: return Framework::c;
      case Family::equality: return Framework::u;
    }
    return Framework::u;
  };
  // "equality" is shared by eta and u; the other families decide.
  std::optional<Framework> fw;
  for (Family f : families) {
    if (f == Family::equality) continue;
    const Framework g = framework_of(f);
    if (fw && *fw != g) throw std::invalid_argument("families from different frameworks cannot be combined");
    fw = g;
  }
  ConstraintSystem sys{ground, fw.value_or(Framework::u), {}};
  if (sys.framework == Framework::eta) {
    sys.rows = eta_system(ground, families);
    return sys;
  }
  for (Family f : families) {
    switch (f) {
      case Family::equality:
        if (sys.framework == Framework::u)
          for (auto& r : u_equality_system(ground)) sys.rows.push_back(std::move(r));
        // In c the equalities are the pinned entries c(S) = 1, |S| <= 1.
        break;
      case Family::specific:
        for_each_antichain(ground, [&](const Antichain& a) { sys.rows.push_back(specific_constraint(a)); });
        break;
      case Family::nonspecific:
        for (auto& r : nonspecific_constraints(supermodular_rays(ground, rays.value_or(default_ray_source(ground.size())))))
          sys.rows.push_back(std::move(r));
        break;
      case Family::cluster_u:
        for (std::uint32_t c = 0; c < ground.power(); ++c)
          if (std::popcount(c) >= 2) sys.rows.push_back(cluster_constraint_u(ground, Subset(c)));
        break;
      case Family::kappa_specific:
        for_each_antichain(ground, [&](const Antichain& a) { sys.rows.push_back(char_specific_constraint(a)); });
        break;
      case Family::cluster_c:
        for (std::uint32_t c = 0; c < ground.power(); ++c)
          if (std::popcount(c) >= 2) sys.rows.push_back(cluster_constraint_c(ground, Subset(c)));
        break;
      default: break;
    }
  }
  return sys;
}

// ---------------------------------------------------------------------------
// dual cone {y : A^T y >= 0} and its conic decomposition

/// Vector over the non-empty subsets; entry 0 (the empty set) is unused and zero.
struct DualVector {
  GroundSet ground;
  std::vector<Rational> values;

  explicit DualVector(GroundSet g) : ground(std::move(g)), values(ground.power()) {}
  DualVector(GroundSet g, std::vector<Rational> v) : ground(std::move(g)), values(std::move(v)) {
    if (values.size() != ground.power()) throw std::invalid_argument("dual vector has wrong length");
    if (values[0] != 0) throw std::invalid_argument("dual vector has no entry for the empty set");
  }

  const Rational& at(Subset s) const { return values.at(s.bits); }
  bool is_zero() const {
    return std::all_of(values.begin(), values.end(), [](const Rational& q) { return q == 0; });
  }

  friend bool operator==(const DualVector&, const DualVector&) = default;
};

/// y_A(T) = [T in A] - #{j : {j} in A, {j} proper subset of T}.
inline DualVector y_of_class(const Antichain& antichain) {
  const GroundSet& ground = antichain.ground();
  const SetClass cls = superset_closure(antichain);
  Subset singles;
  for (int j = 0; j < ground.size(); ++j)
    if (cls.contains(Subset::singleton(j))) singles = singles.with(j);
  DualVector y(ground);
  for (std::uint32_t t = 1; t < ground.power(); ++t) {
    const Subset T(t);
    int below = 0;
    for (int j : elements(singles))
      if (T.contains(j) && T.size() > 1) ++below;
    y.values[t] = (cls.contains(T) ? 1 : 0) - below;
  }
  return y;
}

/// (a1) y({i}) >= 0; (a2) y(S) + y({i}) >= 0 for |S| = 2, i in S;
/// (a3) y(S) + y({i}) - y(S\{i}) >= 0 for |S| >= 3, i in S.
inline bool check_dual_cone(const DualVector& y) {
  const GroundSet& g = y.ground;
  for (std::uint32_t s = 1; s < g.power(); ++s) {
    const Subset S(s);
    if (S.size() == 1) {
      if (y.values[s] < 0) return false;
      continue;
    }
    for (int i : elements(S)) {
      Rational v = y.values[s] + y.values[Subset::singleton(i).bits];
      if (S.size() >= 3) v -= y.values[S.without(i).bits];
      if (v < 0) return false;
    }
  }
  return true;
}

struct ConicTerm {
  Antichain minimal_sets;
  Rational weight;
};

struct ConicDecomposition {
  std::vector<ConicTerm> terms;
  std::size_t initial_class_size = 0;  // |A_y| of the input
};

/// Superset closure of the support of y.
inline SetClass support_class(const DualVector& y) {
  std::vector<Subset> support;
  for (std::uint32_t t = 1; t < y.ground.power(); ++t)
    if (y.values[t] != 0) support.emplace_back(t);
  std::uint64_t mask = 0;
  for (std::uint32_t s = 1; s < y.ground.power(); ++s)
    for (Subset t : support)
      if (t.subset_of(Subset(s))) {
        mask |= std::uint64_t{1} << s;
        break;
      }
  return SetClass(y.ground, mask);
}

/// Peels y = sum beta_k y_{A_k}: A is the superset closure of the current
/// support, beta the least value of y on the minimal sets of A. Every step
/// shrinks the closure. Throws std::logic_error if y leaves the cone.
inline ConicDecomposition conic_decompose(DualVector y) {
  if (!check_dual_cone(y)) throw std::invalid_argument("vector violates the dual cone inequalities");
  ConicDecomposition out;
  SetClass cls = support_class(y);
  out.initial_class_size = cls.size();
  while (!y.is_zero()) {
    const Antichain mins = minimal_sets(cls);
    Rational beta = y.at(mins.sets().front());
    for (Subset t : mins.sets()) beta = std::min(beta, y.at(t));
    if (beta <= 0) throw std::logic_error("conic decomposition: non-positive step");
    const DualVector step = y_of_class(mins);
    for (std::size_t k = 0; k < y.values.size(); ++k) y.values[k] -= beta * step.values[k];
    if (!check_dual_cone(y)) throw std::logic_error("conic decomposition: residual left the cone");
    SetClass next = support_class(y);
    if (next.size() >= cls.size()) throw std::logic_error("conic decomposition: class did not shrink");
    out.terms.push_back({mins, beta});
    cls = std::move(next);
  }
  return out;
}

inline DualVector recombine(const GroundSet& ground, const std::vector<ConicTerm>& terms) {
  DualVector y(ground);
  for (const auto& term : terms) {
    const DualVector part = y_of_class(term.minimal_sets);
    for (std::size_t k = 0; k < y.values.size(); ++k) y.values[k] += term.weight * part.values[k];
  }
  return y;
}

}  // namespace imsets
