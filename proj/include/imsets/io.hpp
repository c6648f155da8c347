#pragma once

// JSON, CSV and LP-format serialization of graphs, imsets, constraint
// systems, rays and dual vectors.

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "imsets/constraint.hpp"
#include "imsets/digraph.hpp"
#include "imsets/encode.hpp"
#include "imsets/exactlin.hpp"
#include "imsets/rational.hpp"
#include "imsets/setfam.hpp"

namespace imsets::io {

using json = nlohmann::ordered_json;

inline GroundSet ground_from_json(const json& doc) {
  if (!doc.contains("labels")) throw std::invalid_argument("document has no \"labels\" field");
  return GroundSet(doc.at("labels").get<std::vector<std::string>>());
}

inline json rational_json(const Rational& q) { return to_string(q); }

/// Integers or "p/q" strings.
inline Rational rational_from_json(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string, got " + v.dump());
}

inline std::string eta_key(const GroundSet& g, ParentPair p) { return g.label(p.node) + "|" + g.format(p.parents); }

inline ParentPair parse_eta_key(const GroundSet& g, std::string_view key) {
  const auto bar = key.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("eta key '" + std::string(key) + "' lacks '|'");
  ParentPair p{g.index_of(key.substr(0, bar)), g.parse(key.substr(bar + 1))};
  if (p.parents.contains(p.node)) throw std::invalid_argument("eta key '" + std::string(key) + "' has i in B");
  return p;
}

// ---------------------------------------------------------------------------
// graphs

inline json to_json(const DirectedGraph& g) {
  json edges = json::array();
  for (auto [j, i] : g.arrows()) edges.push_back({g.ground().label(j), g.ground().label(i)});
  return {{"labels", g.ground().labels()}, {"edges", edges}};
}

inline DirectedGraph graph_from_json(const json& doc) {
  const GroundSet g = ground_from_json(doc);
  std::vector<std::pair<int, int>> arrows;
  for (const auto& e : doc.value("edges", json::array())) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a [tail, head] pair");
    const int j = g.index_of(e[0].get<std::string>()), i = g.index_of(e[1].get<std::string>());
    if (i == j) throw std::invalid_argument("loop at node " + g.label(i));
    arrows.emplace_back(j, i);
  }
  return DirectedGraph::from_arrows(g, arrows);
}

// ---------------------------------------------------------------------------
// imsets

inline json to_json(const EtaVector& eta) {
  json entries = json::object();
  for (std::size_t k = 0; k < eta.values.size(); ++k)
    if (eta.values[k] != 0) entries[eta_key(eta.ground, eta_pair(eta.ground.size(), k))] = eta.values[k];
  return {{"labels", eta.ground.labels()}, {"kind", "eta"}, {"entries", entries}};
}

inline json to_json(const StandardImset& u) {
  json entries = json::object();
  for (std::uint32_t s = 0; s < u.ground.power(); ++s)
    if (u.values[s] != 0) entries[u.ground.format(Subset(s))] = u.values[s];
  return {{"labels", u.ground.labels()}, {"kind", "standard"}, {"entries", entries}};
}

/// Entries for |S| >= 2 only; the pinned ones are implicit.
inline json to_json(const CharacteristicImset& c) {
  json entries = json::object();
  for (std::uint32_t s = 0; s < c.ground().power(); ++s)
    if (std::popcount(s) >= 2 && c.values()[s] != 0) entries[c.ground().format(Subset(s))] = c.values()[s];
  return {{"labels", c.ground().labels()}, {"kind", "characteristic"}, {"entries", entries}};
}

inline std::string kind_of(const json& doc) {
  if (!doc.contains("kind")) throw std::invalid_argument("imset document has no \"kind\" field");
  return doc.at("kind").get<std::string>();
}

inline void expect_kind(const json& doc, std::string_view kind) {
  if (kind_of(doc) != kind)
    throw std::invalid_argument("expected an imset of kind '" + std::string(kind) + "', got '" + kind_of(doc) + "'");
}

inline EtaVector eta_from_json(const json& doc) {
  expect_kind(doc, "eta");
  EtaVector eta(ground_from_json(doc));
  for (const auto& [key, v] : doc.at("entries").items())
    eta.values[eta_index(eta.ground.size(), parse_eta_key(eta.ground, key))] = v.get<std::int64_t>();
  return eta;
}

inline StandardImset standard_from_json(const json& doc) {
  expect_kind(doc, "standard");
  StandardImset u(ground_from_json(doc));
  for (const auto& [key, v] : doc.at("entries").items()) u.at(u.ground.parse(key)) = v.get<std::int64_t>();
  return u;
}

inline CharacteristicImset characteristic_from_json(const json& doc) {
  expect_kind(doc, "characteristic");
  CharacteristicImset c(ground_from_json(doc));
  for (const auto& [key, v] : doc.at("entries").items()) {
    const Subset s = c.ground().parse(key);
    const auto value = v.get<std::int64_t>();
    if (s.size() < 2) {
      if (value != 1) throw std::invalid_argument("characteristic entry '" + key + "' must equal 1");
      continue;
    }
    c.set(s, value);
  }
  return c;
}

// ---------------------------------------------------------------------------
// constraint systems

inline std::string index_key(const GroundSet& g, Framework f, std::size_t k) {
  if (f == Framework::eta) return eta_key(g, eta_pair(g.size(), k));
  return g.format(Subset(static_cast<std::uint32_t>(k)));
}

inline json to_json(const GroundSet& g, const LinearConstraint& row) {
  json coeffs = json::object();
  for (std::size_t k = 0; k < row.coefficients.size(); ++k)
    if (row.coefficients[k] != 0) coeffs[index_key(g, row.framework, k)] = rational_json(row.coefficients[k]);
  json out = {{"tag", row.tag}, {"coeffs", coeffs}, {"sense", to_string(row.sense)}, {"rhs", rational_json(row.rhs)}};
  if (row.vacuous) out["vacuous"] = true;
  return out;
}

inline json to_json(const ConstraintSystem& sys) {
  json rows = json::array();
  for (const auto& r : sys.rows) rows.push_back(to_json(sys.ground, r));
  return {{"framework", to_string(sys.framework)}, {"labels", sys.ground.labels()}, {"rows", rows}};
}

inline ConstraintSystem system_from_json(const json& doc) {
  ConstraintSystem sys{ground_from_json(doc), parse_framework(doc.at("framework").get<std::string>()), {}};
  const std::size_t size = index_space_size(sys.framework, sys.ground.size());
  for (const auto& r : doc.at("rows")) {
    LinearConstraint row{sys.framework, std::vector<Rational>(size), parse_sense(r.at("sense").get<std::string>()),
                         rational_from_json(r.at("rhs")), r.value("tag", std::string()), r.value("vacuous", false)};
    for (const auto& [key, v] : r.at("coeffs").items()) {
      const std::size_t k = sys.framework == Framework::eta
                                ? eta_index(sys.ground.size(), parse_eta_key(sys.ground, key))
                                : sys.ground.parse(key).bits;
      if (!index_allowed(sys.framework, k))
        throw std::invalid_argument("coefficient key '" + key + "' is outside the c index set");
      row.coefficients[k] = rational_from_json(v);
    }
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

/// Variable names u_ab, c_ab, eta_a_bc, with "empty" for the empty set.
inline std::string lp_variable(const GroundSet& g, Framework f, std::size_t k) {
  if (f == Framework::eta) {
    const ParentPair p = eta_pair(g.size(), k);
    return "eta_" + g.label(p.node) + "_" + g.compact(p.parents);
  }
  return to_string(f) + "_" + g.compact(Subset(static_cast<std::uint32_t>(k)));
}

inline std::string lp_name(std::string_view s) {
  std::string out;
  for (char ch : s) out += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
  return out;
}

/// CPLEX LP text. Rows are scaled to integer coefficients; every variable is free.
inline std::string to_lp(const ConstraintSystem& sys) {
  const GroundSet& g = sys.ground;
  const std::size_t size = index_space_size(sys.framework, g.size());
  std::ostringstream out;
  out << "\\ framework " << to_string(sys.framework) << ", " << sys.rows.size() << " rows\n";
  out << "Minimize\n obj:";
  bool first_var = true;
  for (std::size_t k = 0; k < size; ++k)
    if (index_allowed(sys.framework, k)) {
      out << (first_var ? " " : " + ") << "0 " << lp_variable(g, sys.framework, k);
      first_var = false;
    }
  out << "\nSubject To\n";
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    const auto& row = sys.rows[r];
    Integer den = denominator_of(row.rhs);
    for (const auto& q : row.coefficients)
      if (q != 0) den = lcm(den, denominator_of(q));
    out << " r" << r << "_" << lp_name(row.tag) << ":";
    bool first = true;
    for (std::size_t k = 0; k < row.coefficients.size(); ++k) {
      if (row.coefficients[k] == 0) continue;
      const Integer a = numerator_of(row.coefficients[k] * Rational(den));
      out << (a < 0 ? " - " : (first ? " " : " + ")) << (a < 0 ? Integer(-a) : a) << ' '
          << lp_variable(g, sys.framework, k);
      first = false;
    }
    if (first) out << " 0 " << lp_variable(g, sys.framework, sys.framework == Framework::c ? 3 : 0);
    out << ' ' << to_string(row.sense) << ' ' << numerator_of(row.rhs * Rational(den)) << '\n';
  }
  out << "Bounds\n";
  for (std::size_t k = 0; k < size; ++k)
    if (index_allowed(sys.framework, k)) out << ' ' << lp_variable(g, sys.framework, k) << " free\n";
  out << "End\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// rays, dual vectors, witnesses

inline json to_json(const SupermodularFunction& m) {
  json entries = json::object();
  for (std::uint32_t s = 0; s < m.ground.power(); ++s)
    if (m.values[s] != 0) {
      const Rational& q = m.values[s];
      entries[m.ground.format(Subset(s))] =
          denominator_of(q) == 1 ? json(numerator_of(q).convert_to<std::int64_t>()) : rational_json(q);
    }
  return {{"entries", entries}};
}

inline json rays_to_json(const GroundSet& g, const std::vector<SupermodularFunction>& rays) {
  json list = json::array();
  for (const auto& r : rays) list.push_back(to_json(r));
  return {{"labels", g.labels()}, {"rays", list}};
}

inline json to_json(const DualVector& y) {
  json entries = json::object();
  for (std::uint32_t s = 1; s < y.ground.power(); ++s)
    if (y.values[s] != 0) entries[y.ground.format(Subset(s))] = rational_json(y.values[s]);
  return {{"labels", y.ground.labels()}, {"entries", entries}};
}

inline DualVector dual_from_json(const json& doc) {
  DualVector y(ground_from_json(doc));
  for (const auto& [key, v] : doc.at("entries").items()) {
    const Subset s = y.ground.parse(key);
    if (s.empty()) throw std::invalid_argument("dual vectors have no entry for the empty set");
    y.values[s.bits] = rational_from_json(v);
  }
  return y;
}

inline json to_json(const ConicDecomposition& d) {
  json terms = json::array();
  for (const auto& t : d.terms) {
    json sets = json::array();
    for (Subset s : t.minimal_sets.sets()) sets.push_back(t.minimal_sets.ground().format(s));
    terms.push_back({{"minimal_sets", sets}, {"weight", rational_json(t.weight)}});
  }
  return {{"initial_class_size", d.initial_class_size}, {"iterations", d.terms.size()}, {"terms", terms}};
}

inline json to_json(const RatVector& v) {
  json entries = json::object();
  for (std::size_t k = 0; k < v.entries.size(); ++k)
    if (v.entries[k] != 0) entries[v.labels[k]] = rational_json(v.entries[k]);
  return {{"entries", entries}};
}

inline json to_json(const KappaCoefficients& kappa) {
  json entries = json::object();
  const GroundSet& g = kappa.antichain.ground();
  for (std::uint32_t s = 0; s < g.power(); ++s)
    if (kappa.values[s] != 0) entries[g.format(Subset(s))] = kappa.values[s];
  return {{"antichain", kappa.antichain.tag()}, {"kappa", entries}};
}

inline json minor_json(const IntMatrix& m, const Minor& minor) {
  json rows = json::array(), cols = json::array();
  for (auto r : minor.rows) rows.push_back(m.row_labels()[r]);
  for (auto c : minor.cols) cols.push_back(m.col_labels()[c]);
  return {{"rows", rows}, {"cols", cols}, {"det", minor.det.str()}};
}

}  // namespace imsets::io
