#pragma once

// Experiment drivers: equivalence-class census, lattice-point scans inside
// the relaxations, relaxation comparison, Farkas feasibility, identity
// suites and the golden examples over N = {a, b, c}.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "imsets/constraint.hpp"
#include "imsets/digraph.hpp"
#include "imsets/encode.hpp"
#include "imsets/exactlin.hpp"
#include "imsets/io.hpp"
#include "imsets/setfam.hpp"

namespace imsets {

using json = io::json;

struct VerificationReport {
  std::string experiment;
  json parameters = json::object();
  json counts = json::object();
  json checks = json::array();
  json witnesses = json::array();
  bool passed = true;
  std::optional<double> wall_seconds{};

  bool check(const std::string& name, bool ok) {
    checks.push_back({{"name", name}, {"passed", ok}});
    passed = passed && ok;
    return ok;
  }

  json to_json() const {
    json out = {{"experiment", experiment}, {"parameters", parameters}, {"counts", counts}, {"checks", checks}};
    if (!witnesses.empty()) out["witnesses"] = witnesses;
    if (wall_seconds) out["wall_seconds"] = *wall_seconds;
    out["verdict"] = passed ? "pass" : "fail";
    return out;
  }
};

struct RunOptions {
  bool timing = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline void finish(VerificationReport& r, const Stopwatch& w, bool timing) {
  if (timing) r.wall_seconds = w.seconds();
}

inline unsigned worker_count(unsigned requested) {
  if (requested) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

inline json point_json(const GroundSet& g, const std::vector<std::int64_t>& restricted) {
  json out = json::object();
  std::size_t k = 0;
  for (std::uint32_t s = 0; s < g.power(); ++s)
    if (std::popcount(s) >= 2) out[g.format(Subset(s))] = restricted[k++];
  return out;
}

inline std::vector<std::int64_t> restrict_c(const GroundSet& g, const std::vector<std::int64_t>& full) {
  std::vector<std::int64_t> out;
  for (std::uint32_t s = 0; s < g.power(); ++s)
    if (std::popcount(s) >= 2) out.push_back(full[s]);
  return out;
}

/// u = Möbius transform of 1 - c, with c pinned to 1 below size 2.
inline void u_of_c(const std::vector<std::int64_t>& c, std::vector<std::int64_t>& u, int n) {
  for (std::size_t s = 0; s < c.size(); ++s) u[s] = 1 - c[s];
  superset_mobius(u, n);
}

inline std::vector<CompiledRow> compile_rows(const std::vector<LinearConstraint>& rows) {
  std::vector<CompiledRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(compile(r));
  std::stable_sort(out.begin(), out.end(),
                   [](const CompiledRow& a, const CompiledRow& b) { return a.terms.size() < b.terms.size(); });
  return out;
}

inline bool all_hold(const std::vector<CompiledRow>& rows, const std::int64_t* x) {
  for (const auto& r : rows)
    if (!r.holds(x)) return false;
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// enumeration boxes

inline constexpr std::uint64_t kDefaultScanBudget = 100'000'000;

/// Integer bounds on c(S) for |S| >= 2; the other entries are pinned to 1.
struct EnumerationBox {
  GroundSet ground;
  std::string name;
  std::vector<std::int64_t> lower, upper;  // indexed by subset bits

  /// 0 <= c(S) <= 2^(|S|-2), implied by the pair cluster rows and the
  /// kappa rows of {S\i, S\j}.
  static EnumerationBox standard(const GroundSet& g) {
    EnumerationBox b{g, "default", std::vector<std::int64_t>(g.power(), 1), std::vector<std::int64_t>(g.power(), 1)};
    for (std::uint32_t s = 0; s < g.power(); ++s)
      if (std::popcount(s) >= 2) {
        b.lower[s] = 0;
        b.upper[s] = std::int64_t{1} << (std::popcount(s) - 2);
      }
    return b;
  }

  static EnumerationBox zero_one(const GroundSet& g) {
    EnumerationBox b = standard(g);
    b.name = "01";
    for (std::uint32_t s = 0; s < g.power(); ++s)
      if (std::popcount(s) >= 2) b.upper[s] = 1;
    return b;
  }

  static EnumerationBox parse(const GroundSet& g, std::string_view name) {
    if (name == "default") return standard(g);
    if (name == "01") return zero_one(g);
    throw std::invalid_argument("unknown box '" + std::string(name) + "' (expected 01 or default)");
  }

  std::vector<std::uint32_t> coordinates() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < ground.power(); ++s)
      if (std::popcount(s) >= 2) out.push_back(s);
    return out;
  }

  /// Number of lattice points, saturating at UINT64_MAX.
  std::uint64_t volume() const {
    unsigned __int128 v = 1;
    for (auto s : coordinates()) {
      v *= static_cast<unsigned __int128>(upper[s] - lower[s] + 1);
      if (v > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(v);
  }

  bool contains(const std::vector<std::int64_t>& full_c) const {
    for (auto s : coordinates())
      if (full_c[s] < lower[s] || full_c[s] > upper[s]) return false;
    return true;
  }

  /// Calls fn(full c vector) for points begin..end-1 in lexicographic order,
  /// the smallest coordinate varying slowest.
  template <class Fn>
  void walk(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
    const auto coords = coordinates();
    std::vector<std::int64_t> c(ground.power(), 1);
    std::vector<std::int64_t> digit(coords.size());
    std::uint64_t idx = begin;
    for (std::size_t k = coords.size(); k-- > 0;) {
      const auto radix = static_cast<std::uint64_t>(upper[coords[k]] - lower[coords[k]] + 1);
      digit[k] = static_cast<std::int64_t>(idx % radix);
      idx /= radix;
      c[coords[k]] = lower[coords[k]] + digit[k];
    }
    for (std::uint64_t p = begin; p < end; ++p) {
      fn(static_cast<const std::vector<std::int64_t>&>(c));
      for (std::size_t k = coords.size(); k-- > 0;) {
        const std::uint32_t s = coords[k];
        if (++digit[k] <= upper[s] - lower[s]) {
          c[s] = lower[s] + digit[k];
          break;
        }
        digit[k] = 0;
        c[s] = lower[s];
      }
    }
  }
};

// ---------------------------------------------------------------------------
// census

struct Census {
  std::uint64_t dags = 0;
  std::vector<std::vector<std::int64_t>> classes;  // restricted characteristic imsets, sorted
};

inline Census compute_census(const GroundSet& g) {
  Census out;
  std::vector<std::vector<std::int64_t>> all;
  for_each_dag(g, [&](const DirectedGraph& dag) {
    ++out.dags;
    all.push_back(characteristic_of(standard_imset_of(dag)).restricted());
  });
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  out.classes = std::move(all);
  return out;
}

inline VerificationReport census_equivalence_classes(const GroundSet& g, const RunOptions& opt = {}) {
  if (g.size() > 5) throw std::invalid_argument("census is limited to n <= 5");
  detail::Stopwatch watch;
  VerificationReport r{"census"};
  r.parameters = {{"n", g.size()}};
  const Census census = compute_census(g);
  r.counts = {{"dags", census.dags}, {"classes", census.classes.size()}};
  bool zero_one = true, round_trip = true;
  for (const auto& c : census.classes) {
    zero_one = zero_one && std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0 || v == 1; });
    std::vector<std::int64_t> full(g.power(), 1);
    std::size_t k = 0;
    for (std::uint32_t s = 0; s < g.power(); ++s)
      if (std::popcount(s) >= 2) full[s] = c[k++];
    const CharacteristicImset ci(g, full);
    round_trip = round_trip && characteristic_of(u_from_characteristic(ci)) == ci;
  }
  r.check("characteristic imsets are 0-1 vectors", zero_one);
  r.check("u and c round-trip on every class", round_trip);
  detail::finish(r, watch, opt.timing);
  return r;
}

// ---------------------------------------------------------------------------
// lattice scans

struct ScanOptions {
  std::optional<RaySource> rays;
  std::uint64_t budget = kDefaultScanBudget;
  bool long_run = false;
  unsigned threads = 0;
  bool timing = false;
  std::size_t max_witnesses = 10;
};

struct ScanResult {
  VerificationReport report;
  std::vector<std::vector<std::int64_t>> points;  // restricted c, lexicographic order
};

/// Rows of `families` evaluated at every lattice point of the box. u-scans
/// map each c through the inverse transform first.
inline ScanResult lattice_scan(const GroundSet& g, Framework framework, const std::vector<Family>& families,
                               const EnumerationBox& box, const ScanOptions& opt = {}) {
  if (framework == Framework::eta) throw std::invalid_argument("lattice scans run in the u or c framework");
  const std::uint64_t volume = box.volume();
  if (volume > opt.budget && !opt.long_run)
    throw std::invalid_argument("box holds " + std::to_string(volume) + " points, above the budget of " +
                                std::to_string(opt.budget) + "; pass the long-run flag to proceed");
  detail::Stopwatch watch;
  const ConstraintSystem sys = build_system(g, families, opt.rays);
  if (sys.framework != framework && !sys.rows.empty())
    throw std::invalid_argument("families belong to the " + to_string(sys.framework) + " framework");
  const auto rows = detail::compile_rows(sys.rows);
  const int n = g.size();

  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(detail::worker_count(opt.threads), std::max<std::uint64_t>(volume, 1)));
  std::vector<std::vector<std::vector<std::int64_t>>> found(workers);
  auto work = [&](unsigned w) {
    const std::uint64_t lo = volume / workers * w + std::min<std::uint64_t>(w, volume % workers);
    const std::uint64_t hi = lo + volume / workers + (w < volume % workers ? 1 : 0);
    std::vector<std::int64_t> u(g.power());
    box.walk(lo, hi, [&](const std::vector<std::int64_t>& c) {
      const std::int64_t* x = c.data();
      if (framework == Framework::u) {
        detail::u_of_c(c, u, n);
        x = u.data();
      }
      if (detail::all_hold(rows, x)) found[w].push_back(detail::restrict_c(g, c));
    });
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  ScanResult out;
  for (auto& part : found)
    for (auto& p : part) out.points.push_back(std::move(p));

  VerificationReport& r = out.report;
  r.experiment = "scan";
  json fams = json::array();
  for (Family f : families) fams.push_back(to_string(f));
  r.parameters = {{"n", n}, {"framework", to_string(framework)}, {"families", fams}, {"box", box.name}};
  r.counts = {{"box_points", volume}, {"rows", sys.rows.size()}, {"satisfying", out.points.size()}};
  if (n <= 5) {
    const Census census = compute_census(g);
    std::vector<std::vector<std::int64_t>> extra, missing;
    std::set_difference(out.points.begin(), out.points.end(), census.classes.begin(), census.classes.end(),
                        std::back_inserter(extra));
    std::set_difference(census.classes.begin(), census.classes.end(), out.points.begin(), out.points.end(),
                        std::back_inserter(missing));
    r.counts["census_classes"] = census.classes.size();
    r.counts["not_in_census"] = extra.size();
    r.counts["census_missing"] = missing.size();
    for (std::size_t k = 0; k < extra.size() && k < opt.max_witnesses; ++k)
      r.witnesses.push_back({{"kind", "satisfying non-imset"}, {"c", detail::point_json(g, extra[k])}});
    for (std::size_t k = 0; k < missing.size() && k < opt.max_witnesses; ++k)
      r.witnesses.push_back({{"kind", "imset cut off"}, {"c", detail::point_json(g, missing[k])}});
    r.check("satisfying lattice points are exactly the characteristic imsets", extra.empty() && missing.empty());
  }
  detail::finish(r, watch, opt.timing);
  return out;
}

// ---------------------------------------------------------------------------
// relaxation comparison

/// Points of {equality, specific, nonspecific} against {equality, specific,
/// cluster-u} over the default box.
inline VerificationReport relaxation_comparison(const GroundSet& g, const ScanOptions& opt = {}) {
  if (g.size() > 4) throw std::invalid_argument("relaxation comparison is limited to n <= 4");
  detail::Stopwatch watch;
  VerificationReport r{"compare-relaxations"};
  const EnumerationBox box = EnumerationBox::standard(g);
  r.parameters = {{"n", g.size()}, {"box", box.name}};
  const RaySource rays = opt.rays.value_or(default_ray_source(g.size()));
  const auto first = detail::compile_rows(
      build_system(g, {Family::equality, Family::specific, Family::nonspecific}, rays).rows);
  const auto second =
      detail::compile_rows(build_system(g, {Family::equality, Family::specific, Family::cluster_u}).rows);
  std::uint64_t in_first = 0, in_second = 0, only_first = 0, only_second = 0;
  std::vector<std::int64_t> u(g.power());
  box.walk(0, box.volume(), [&](const std::vector<std::int64_t>& c) {
    detail::u_of_c(c, u, g.size());
    const bool a = detail::all_hold(first, u.data()), b = detail::all_hold(second, u.data());
    in_first += a;
    in_second += b;
    if (a && !b) {
      ++only_first;
      if (r.witnesses.size() < opt.max_witnesses)
        r.witnesses.push_back({{"kind", "containment counterexample"}, {"c", detail::point_json(g, detail::restrict_c(g, c))}});
    }
    if (b && !a) ++only_second;
  });
  r.counts = {{"box_points", box.volume()},
              {"nonspecific_system", in_first},
              {"cluster_system", in_second},
              {"nonspecific_only", only_first},
              {"cluster_only", only_second}};
  r.check("nonspecific system is contained in the cluster system", only_first == 0);

  bool structural = true;
  for (std::uint32_t s = 0; s < g.power(); ++s)
    if (std::popcount(s) >= 2) {
      const auto m = cluster_supermodular(g, Subset(s));
      structural = structural && m.standardized() && is_supermodular(m);
    }
  r.check("every cluster function is standardized supermodular", structural);

  const Census census = compute_census(g);
  bool census_ok = true;
  for (const auto& c : census.classes) {
    std::vector<std::int64_t> full(g.power(), 1);
    std::size_t k = 0;
    for (std::uint32_t s = 0; s < g.power(); ++s)
      if (std::popcount(s) >= 2) full[s] = c[k++];
    detail::u_of_c(full, u, g.size());
    census_ok = census_ok && detail::all_hold(first, u.data()) && detail::all_hold(second, u.data());
  }
  r.check("every characteristic imset satisfies both systems", census_ok);

  if (g.size() == 3) {
    // u(T) = (-1)^|T|
    std::vector<std::int64_t> w(g.power());
    for (std::uint32_t t = 0; t < g.power(); ++t) w[t] = (std::popcount(t) % 2 == 0) ? 1 : -1;
    const auto cluster_rows = detail::compile_rows(build_system(g, {Family::equality, Family::cluster_u}).rows);
    const LinearConstraint top = nonspecific_constraints({indicator_supermodular(g, g.full())}).front();
    const bool sat = detail::all_hold(cluster_rows, w.data());
    const bool viol = !top.holds(w);
    r.witnesses.push_back({{"kind", "strictness"}, {"u", io::to_json(StandardImset(g, w))["entries"]},
                           {"satisfies_cluster_u", sat}, {"violates_u_N_nonneg", viol}});
    r.check("(-1)^|T| satisfies every cluster-u row but violates u(N) >= 0", sat && viol);
  }
  detail::finish(r, watch, opt.timing);
  return r;
}

// ---------------------------------------------------------------------------
// Farkas feasibility against the specific rows

inline VerificationReport farkas_equivalence(const GroundSet& g, const EnumerationBox& box, const RunOptions& opt = {}) {
  detail::Stopwatch watch;
  VerificationReport r{"farkas"};
  r.parameters = {{"n", g.size()}, {"box", box.name}};
  const IntMatrix A = matrix_A(g);
  const auto eq = u_equality_system(g);
  std::vector<LinearConstraint> spec;
  for_each_antichain(g, [&](const Antichain& a) { spec.push_back(specific_constraint(a)); });
  std::uint64_t feasible = 0, agree = 0, total = 0, bad_witness = 0;
  box.walk(0, box.volume(), [&](const std::vector<std::int64_t>& c) {
    ++total;
    const StandardImset u = u_from_characteristic(CharacteristicImset(g, c));
    const auto x = feasible_nonneg_solution(A, vector_b(u));
    if (x) {
      ++feasible;
      const bool nonneg = std::all_of(x->entries.begin(), x->entries.end(), [](const Rational& q) { return q >= 0; });
      if (!nonneg || !((A * *x).entries == vector_b(u).entries)) ++bad_witness;
    }
    bool predicate = true;
    for (const auto& row : eq) predicate = predicate && row.holds(u.values);
    for (const auto& row : spec) predicate = predicate && row.holds(u.values);
    if (predicate == x.has_value())
      ++agree;
    else if (r.witnesses.size() < 10)
      r.witnesses.push_back({{"c", detail::point_json(g, detail::restrict_c(g, c))}, {"feasible", x.has_value()}});
  });
  r.counts = {{"points", total}, {"feasible", feasible}, {"agreeing", agree}, {"specific_rows", spec.size()}};
  r.check("feasibility coincides with standardization plus specific rows", agree == total);
  r.check("every witness is non-negative and solves A x = b", bad_witness == 0);
  detail::finish(r, watch, opt.timing);
  return r;
}

// ---------------------------------------------------------------------------
// identity suites

/// For every digraph code and cluster C: eta cluster sum minus 1, the
/// cluster-u left side at the image u and the cluster-c slack at the image c.
inline VerificationReport cluster_identity_check(const GroundSet& g, const RunOptions& opt = {}) {
  if (g.size() > 4) throw std::invalid_argument("cluster identity check is limited to n <= 4");
  detail::Stopwatch watch;
  VerificationReport r{"cluster-identity"};
  r.parameters = {{"n", g.size()}};
  std::vector<std::tuple<LinearConstraint, LinearConstraint, LinearConstraint>> rows;
  for (std::uint32_t s = 0; s < g.power(); ++s)
    if (std::popcount(s) >= 2)
      rows.emplace_back(eta_cluster_constraint(g, Subset(s)), cluster_constraint_u(g, Subset(s)),
                        cluster_constraint_c(g, Subset(s)));
  std::uint64_t cases = 0, equal = 0;
  for_each_digraph(g, [&](const DirectedGraph& d) {
    const EtaVector eta = eta_of(d);
    const StandardImset u = u_from_eta(eta);
    const CharacteristicImset c = char_from_eta(eta);
    for (const auto& [r1, r2, r3] : rows) {
      ++cases;
      const Rational q1 = r1.lhs(std::span<const std::int64_t>(eta.values)) - 1;
      const Rational q2 = r2.lhs(std::span<const std::int64_t>(u.values));
      const Rational q3 = r3.lhs(std::span<const std::int64_t>(c.values())) - r3.rhs;
      if (q1 == q2 && q2 == q3)
        ++equal;
      else if (r.witnesses.size() < 10)
        r.witnesses.push_back({{"graph", io::to_json(d)}, {"cluster", r1.tag}, {"values", {to_string(q1), to_string(q2), to_string(q3)}}});
    }
  });
  r.counts = {{"cases", cases}, {"agreeing", equal}};
  r.check("three cluster expressions agree", cases == equal);
  detail::finish(r, watch, opt.timing);
  return r;
}

/// Random conic combinations of y_A vectors decompose and recombine exactly.
inline VerificationReport decomposition_check(const GroundSet& g, std::size_t count, std::uint64_t seed,
                                              const RunOptions& opt = {}) {
  detail::Stopwatch watch;
  VerificationReport r{"decomposition"};
  r.parameters = {{"n", g.size()}, {"count", count}, {"seed", seed}};
  const auto antichains = enumerate_antichains(g);
  bool all_in_cone = true;
  for (const auto& a : antichains) all_in_cone = all_in_cone && check_dual_cone(y_of_class(a));
  r.check("every y_A satisfies the dual cone inequalities", all_in_cone);
  std::mt19937_64 rng(seed);
  std::size_t ok = 0, max_iter = 0;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t terms = 1 + rng() % 4;
    std::vector<ConicTerm> combo;
    for (std::size_t k = 0; k < terms; ++k)
      combo.push_back({antichains[rng() % antichains.size()],
                       Rational(static_cast<std::int64_t>(1 + rng() % 9), static_cast<std::int64_t>(1 + rng() % 4))});
    const DualVector y = recombine(g, combo);
    bool good = false;
    try {
      const ConicDecomposition d = conic_decompose(y);
      max_iter = std::max(max_iter, d.terms.size());
      good = recombine(g, d.terms) == y && d.terms.size() <= d.initial_class_size &&
             std::all_of(d.terms.begin(), d.terms.end(), [](const ConicTerm& c) { return c.weight > 0; });
    } catch (const std::exception&) {
      good = false;
    }
    if (good)
      ++ok;
    else if (r.witnesses.size() < 10)
      r.witnesses.push_back({{"y", io::to_json(y)["entries"]}});
  }
  r.counts = {{"antichains", antichains.size()}, {"combinations", count}, {"reconstructed", ok}, {"max_iterations", max_iter}};
  r.check("every combination decomposes and reconstructs", ok == count);
  detail::finish(r, watch, opt.timing);
  return r;
}

/// Every characteristic imset satisfies every generated row. Nonspecific rows
/// are included for n <= 4 (computed rays) or when a ray source is given.
inline VerificationReport soundness_check(const GroundSet& g, const std::optional<RaySource>& rays = std::nullopt,
                                          const RunOptions& opt = {}) {
  if (g.size() > 5) throw std::invalid_argument("soundness check is limited to n <= 5");
  detail::Stopwatch watch;
  VerificationReport r{"soundness"};
  r.parameters = {{"n", g.size()}};
  const Census census = compute_census(g);
  std::vector<Family> u_fams{Family::equality, Family::specific, Family::cluster_u};
  if (rays || g.size() <= 4) u_fams.push_back(Family::nonspecific);
  const ConstraintSystem us = build_system(g, u_fams, rays.value_or(default_ray_source(g.size())));
  const ConstraintSystem cs = build_system(g, {Family::kappa_specific, Family::cluster_c});
  const auto urows = detail::compile_rows(us.rows), crows = detail::compile_rows(cs.rows);
  std::uint64_t violations = 0;
  std::vector<std::int64_t> full(g.power()), u(g.power());
  for (const auto& c : census.classes) {
    std::fill(full.begin(), full.end(), 1);
    std::size_t k = 0;
    for (std::uint32_t s = 0; s < g.power(); ++s)
      if (std::popcount(s) >= 2) full[s] = c[k++];
    detail::u_of_c(full, u, g.size());
    for (const auto& row : urows) violations += !row.holds(u.data());
    for (const auto& row : crows) violations += !row.holds(full.data());
  }
  json fams = json::array();
  for (Family f : u_fams) fams.push_back(to_string(f));
  fams.push_back("kappa-specific");
  fams.push_back("cluster-c");
  r.parameters["families"] = fams;
  r.counts = {{"classes", census.classes.size()},
              {"u_rows", us.rows.size()},
              {"c_rows", cs.rows.size()},
              {"violations", violations}};
  r.check("every characteristic imset satisfies every row", violations == 0);
  detail::finish(r, watch, opt.timing);
  return r;
}

// ---------------------------------------------------------------------------
// golden examples over N = {a, b, c}

namespace detail {

inline GroundSet abc() { return GroundSet(std::vector<std::string>{"a", "b", "c"}); }

inline void require_abc(const GroundSet& g) {
  if (g.size() != 3) throw std::invalid_argument("this check is defined for n = 3");
}

/// The digraph a <-> b <- c.
inline DirectedGraph example_graph(const GroundSet& g) {
  return DirectedGraph::from_arrows(g, {{1, 0}, {0, 1}, {2, 1}});
}

/// Row over sets given as label lists, e.g. {{"a,b", 1}, {"a,b,c", -1}}.
inline LinearConstraint make_row(const GroundSet& g, Framework f, std::vector<std::pair<std::string, Rational>> coeffs,
                                 Sense sense, Rational rhs) {
  LinearConstraint row{f, std::vector<Rational>(index_space_size(f, g.size())), sense, std::move(rhs), ""};
  for (auto& [key, v] : coeffs) {
    const std::size_t k = f == Framework::eta ? eta_index(g.size(), io::parse_eta_key(g, key)) : g.parse(key).bits;
    row.coefficients[k] = v;
  }
  return row;
}

inline bool same_row(const LinearConstraint& a, const LinearConstraint& b) {
  return a.framework == b.framework && a.coefficients == b.coefficients && a.sense == b.sense && a.rhs == b.rhs;
}

inline bool has_row(const std::vector<LinearConstraint>& rows, const LinearConstraint& want) {
  return std::any_of(rows.begin(), rows.end(), [&](const LinearConstraint& r) { return same_row(r, want); });
}

/// Images of bit s under the permutation (bit i goes to bit perm[i]).
inline std::uint32_t permute_bits(std::uint32_t s, const std::vector<int>& perm) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if ((s >> i) & 1u) out |= 1u << perm[i];
  return out;
}

inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Tuple over (ab, ac, bc, abc) as a full vector indexed by subset bits.
template <class T>
std::vector<T> full_from_tuple(const std::vector<T>& t) {
  return {T(1), T(1), T(1), t[0], T(1), t[1], t[2], t[3]};
}

template <class T>
std::vector<T> tuple_from_full(const std::vector<T>& c) {
  return {c[3], c[5], c[6], c[7]};
}

/// Lexicographically largest relabelling of a tuple over (ab, ac, bc, abc).
template <class T>
std::vector<T> orbit_max(const std::vector<T>& t) {
  std::vector<T> best;
  const std::vector<T> full = full_from_tuple(t);
  for (const auto& perm : permutations(3)) {
    std::vector<T> moved(8);
    for (std::uint32_t s = 0; s < 8; ++s) moved[permute_bits(s, perm)] = full[s];
    auto cand = tuple_from_full(moved);
    if (best.empty() || cand > best) best = cand;
  }
  return best;
}

/// A c-row 0 <= k + sum a(S) c(S) stored as (k, a_ab, a_ac, a_bc, a_abc).
using CRow = std::vector<std::int64_t>;

inline CRow crow_of(const LinearConstraint& row) {
  // sum a c >= rhs  <=>  0 <= -rhs + sum a c
  CRow out{to_int64(-row.rhs)};
  for (std::uint32_t s : {3u, 5u, 6u, 7u}) out.push_back(to_int64(row.coefficients[s]));
  return out;
}

inline std::set<CRow> expand_row_types(const std::vector<CRow>& types) {
  std::set<CRow> out;
  for (const auto& t : types)
    for (const auto& perm : permutations(3)) {
      CRow moved(5);
      moved[0] = t[0];
      const std::uint32_t bits[4] = {3, 5, 6, 7};
      for (int k = 0; k < 4; ++k) {
        const std::uint32_t to = permute_bits(bits[k], perm);
        const int idx = to == 3 ? 1 : to == 5 ? 2 : to == 6 ? 3 : 4;
        moved[static_cast<std::size_t>(idx)] = t[static_cast<std::size_t>(k) + 1];
      }
      out.insert(moved);
    }
  return out;
}

template <class T>
Rational crow_value(const CRow& row, const std::vector<T>& tuple) {
  Rational v = row[0];
  for (int k = 0; k < 4; ++k) v += Rational(row[static_cast<std::size_t>(k) + 1]) * Rational(tuple[static_cast<std::size_t>(k)]);
  return v;
}

/// Rank of the rows of `rows` tight at `point`.
template <class T>
std::size_t tight_rank(const std::set<CRow>& rows, const std::vector<T>& point) {
  std::vector<std::vector<Rational>> tight;
  for (const auto& row : rows)
    if (crow_value(row, point) == 0) tight.push_back({Rational(row[1]), Rational(row[2]), Rational(row[3]), Rational(row[4])});
  return rational_rank(std::move(tight));
}

inline json tuple_json(const std::vector<std::int64_t>& t) { return t; }

}  // namespace detail

inline VerificationReport example_check(int id, const RunOptions& opt = {});

/// Images of all 64 digraph codes under eta -> c, reduced modulo relabelling.
inline VerificationReport example5_image_check(const GroundSet& g, const RunOptions& opt = {}) {
  detail::require_abc(g);
  detail::Stopwatch watch;
  VerificationReport r{"example-5"};
  std::set<std::vector<std::int64_t>> images, orbits;
  std::uint64_t graphs = 0;
  for_each_digraph(g, [&](const DirectedGraph& d) {
    ++graphs;
    const auto t = detail::tuple_from_full(char_from_eta(eta_of(d)).values());
    images.insert(t);
    orbits.insert(detail::orbit_max(t));
  });
  const std::vector<std::vector<std::int64_t>> listed = {
      {0, 0, 0, 0}, {1, 0, 0, 0}, {2, 0, 0, 0}, {2, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 0, 1},
      {2, 1, 0, 1}, {2, 2, 0, 1}, {1, 1, 1, 1}, {2, 1, 1, 1}, {2, 1, 1, 2}, {2, 2, 1, 2}, {2, 2, 2, 3}};
  std::set<std::vector<std::int64_t>> listed_orbits;
  for (const auto& t : listed) listed_orbits.insert(detail::orbit_max(t));
  r.counts = {{"digraphs", graphs}, {"distinct_images", images.size()}, {"image_orbits", orbits.size()}};
  r.check("image orbits equal the 14 listed representatives", orbits == listed_orbits && listed_orbits.size() == 14);

  const std::vector<std::int64_t> o{0, 0, 0, 0}, two{2, 0, 0, 0}, one{1, 0, 0, 0};
  bool midpoint = true;
  for (int k = 0; k < 4; ++k) midpoint = midpoint && 2 * one[static_cast<std::size_t>(k)] == o[static_cast<std::size_t>(k)] + two[static_cast<std::size_t>(k)];
  r.check("[1,0,0,0] is the midpoint of [0,0,0,0] and [2,0,0,0]",
          midpoint && images.count(o) && images.count(one) && images.count(two));

  // 0 <= k + a.c, coefficients over (ab, ac, bc, abc)
  const std::vector<detail::CRow> types = {{0, 1, 0, 0, 0},  {2, -1, 0, 0, 0}, {3, -1, -1, -1, 1}, {0, 0, 0, 0, 1},
                                           {1, 1, 0, 0, -1}, {0, 1, 1, 0, -1}, {0, 1, 1, 1, -2}};
  const std::set<detail::CRow> expanded = detail::expand_row_types(types);
  r.counts["expanded_inequalities"] = expanded.size();
  bool all_hold = true;
  for (const auto& t : images)
    for (const auto& row : expanded) all_hold = all_hold && detail::crow_value(row, t) >= 0;
  r.check("every image satisfies the seven inequality types", all_hold);

  const std::vector<std::vector<std::int64_t>> vertices = {{0, 0, 0, 0}, {2, 0, 0, 0}, {2, 1, 0, 0}, {1, 1, 0, 1},
                                                           {2, 1, 0, 1}, {2, 2, 0, 1}, {2, 1, 1, 2}, {2, 2, 2, 3}};
  bool vertex_ok = true;
  for (const auto& v : vertices) vertex_ok = vertex_ok && images.count(v) && detail::tight_rank(expanded, v) == 4;
  r.check("each listed vertex is an image point with tight rows of rank 4", vertex_ok);

  std::set<detail::CRow> kappa_rows;
  for_each_antichain(g, [&](const Antichain& a) {
    const LinearConstraint row = char_specific_constraint(a);
    if (!row.vacuous) kappa_rows.insert(detail::crow_of(row));
  });
  r.counts["nonvacuous_kappa_rows"] = kappa_rows.size();
  r.check("the inequality types coincide with the non-vacuous kappa-specific rows", kappa_rows == expanded);
  detail::finish(r, watch, opt.timing);
  return r;
}

/// The fractional vertex (1,1,1,3/2) of the transformed eta relaxation.
inline VerificationReport example8_fractional_check(const GroundSet& g, const RunOptions& opt = {}) {
  detail::require_abc(g);
  detail::Stopwatch watch;
  VerificationReport r{"example-8"};
  const ConstraintSystem sys = build_system(g, {Family::kappa_specific, Family::cluster_c});
  const std::vector<Rational> x = detail::full_from_tuple<Rational>({1, 1, 1, Rational(3, 2)});
  bool sat = true;
  for (const auto& row : sys.rows) sat = sat && row.holds(x);
  r.check("(1,1,1,3/2) satisfies every kappa-specific and cluster-c row", sat);

  const LinearConstraint top =
      translate_to_characteristic(nonspecific_constraints({indicator_supermodular(g, g.full())}).front(), 3);
  const LinearConstraint expect = detail::make_row(g, Framework::c, {{"a,b,c", -1}}, Sense::ge, -1);
  r.check("u(abc) >= 0 translates to c(abc) <= 1", detail::same_row(top, expect));
  r.check("(1,1,1,3/2) violates c(abc) <= 1", !top.holds(x));

  // x = lambda [2,2,2,3] + (1 - lambda) [0,0,0,0]; lambda is read off the first coordinate.
  const std::vector<Rational> big{2, 2, 2, 3}, zero{0, 0, 0, 0};
  const std::vector<Rational> point = detail::tuple_from_full(x);
  const Rational lambda = (point[0] - zero[0]) / (big[0] - zero[0]);
  auto mix = [&](const Rational& l) {
    bool same = true;
    for (std::size_t k = 0; k < 4; ++k) same = same && l * big[k] + (1 - l) * zero[k] == point[k];
    return same;
  };
  r.witnesses.push_back({{"point", "1,1,1,3/2"}, {"lambda", to_string(lambda)},
                         {"three_quarters_reproduces_point", mix(Rational(3, 4))}});
  r.check("(1,1,1,3/2) is a convex combination of [2,2,2,3] and [0,0,0,0]",
          lambda >= 0 && lambda <= 1 && mix(lambda));

  const auto clusters = std::vector<LinearConstraint>{cluster_constraint_c(g, Subset::of({0, 1})),
                                                      cluster_constraint_c(g, g.full())};
  r.check("cluster-c rows read 0 <= 1 - c(ab) and 0 <= 2 - c(ab) - c(ac) - c(bc) + c(abc)",
          detail::crow_of(clusters[0]) == detail::CRow{1, -1, 0, 0, 0} &&
              detail::crow_of(clusters[1]) == detail::CRow{2, -1, -1, -1, 1});

  std::set<detail::CRow> rows;
  for (const auto& row : sys.rows)
    if (!row.vacuous) rows.insert(detail::crow_of(row));
  const std::vector<std::vector<Rational>> reps = {{0, 0, 0, 0}, {1, 0, 0, 0}, {1, 1, 0, 0},
                                                   {1, 1, 0, 1}, {1, 1, 1, 1}, {1, 1, 1, Rational(3, 2)}};
  std::set<std::vector<Rational>> vertices;
  bool vertex_ok = true;
  for (const auto& v : reps) {
    for (const auto& perm : detail::permutations(3)) {
      const auto full = detail::full_from_tuple(v);
      std::vector<Rational> moved(8);
      for (std::uint32_t s = 0; s < 8; ++s) moved[detail::permute_bits(s, perm)] = full[s];
      vertices.insert(detail::tuple_from_full(moved));
    }
    bool feasible = true;
    for (const auto& row : rows) feasible = feasible && detail::crow_value(row, v) >= 0;
    vertex_ok = vertex_ok && feasible && detail::tight_rank(rows, v) == 4;
  }
  r.counts = {{"rows", sys.rows.size()}, {"listed_vertex_orbit_points", vertices.size()}};
  r.check("each listed representative is a vertex of the transformed relaxation", vertex_ok);

  ScanOptions so;
  so.threads = opt.threads;
  const ScanResult scan = lattice_scan(g, Framework::c, {Family::kappa_specific, Family::cluster_c},
                                       EnumerationBox::standard(g), so);
  r.counts["lattice_points"] = scan.points.size();
  r.check("the lattice points are exactly the 11 characteristic imsets",
          scan.report.passed && scan.points.size() == 11);
  detail::finish(r, watch, opt.timing);
  return r;
}

inline VerificationReport example_check(int id, const RunOptions& opt) {
  const GroundSet g = detail::abc();
  detail::Stopwatch watch;
  VerificationReport r{"example-" + std::to_string(id)};
  r.parameters = {{"id", id}};
  auto eta_row = [&](std::vector<std::pair<std::string, Rational>> coeffs, Sense s, Rational rhs) {
    return detail::make_row(g, Framework::eta, std::move(coeffs), s, std::move(rhs));
  };
  auto u_row = [&](std::vector<std::pair<std::string, Rational>> coeffs, Sense s, Rational rhs) {
    return detail::make_row(g, Framework::u, std::move(coeffs), s, std::move(rhs));
  };
  auto c_row = [&](std::vector<std::pair<std::string, Rational>> coeffs, Sense s, Rational rhs) {
    return detail::make_row(g, Framework::c, std::move(coeffs), s, std::move(rhs));
  };
  const DirectedGraph ex1 = detail::example_graph(g);

  switch (id) {
    case 1: {
      const EtaVector eta = eta_of(ex1);
      EtaVector want(g);
      want.at(0, Subset::of({1})) = 1;
      want.at(1, Subset::of({0, 2})) = 1;
      want.at(2, Subset()) = 1;
      r.check("parent sets pa(a)={b}, pa(b)={a,c}, pa(c)=empty",
              ex1.parents(0) == Subset::of({1}) && ex1.parents(1) == Subset::of({0, 2}) && ex1.parents(2).empty());
      r.check("eta is 1 exactly at (a|b), (b|a,c), (c|empty)", eta == want);
      r.check("the graph is not acyclic", !is_acyclic(ex1));
      r.witnesses.push_back(io::to_json(eta));
      break;
    }
    case 2: {
      const auto nonneg = eta_system(g, {Family::nonneg});
      const auto eq = eta_system(g, {Family::equality});
      const auto cl = eta_system(g, {Family::cluster});
      const auto all = eta_system(g, {Family::nonneg, Family::equality, Family::cluster});
      r.counts = {{"nonneg", nonneg.size()}, {"equality", eq.size()}, {"cluster", cl.size()}, {"total", all.size()}};
      r.check("eta vectors have length 12", eta_size(3) == 12);
      r.check("12 non-negativity, 3 equality and 4 cluster rows",
              nonneg.size() == 12 && eq.size() == 3 && cl.size() == 4 && all.size() == 19);
      r.check("cluster row for C = ab",
              detail::has_row(cl, eta_row({{"a|∅", 1}, {"a|c", 1}, {"b|∅", 1}, {"b|c", 1}}, Sense::ge, 1)));
      r.check("cluster row for C = abc",
              detail::has_row(cl, eta_row({{"a|∅", 1}, {"b|∅", 1}, {"c|∅", 1}}, Sense::ge, 1)));
      std::uint64_t feasible = 0, acyclic = 0, agree = 0;
      for_each_digraph(g, [&](const DirectedGraph& d) {
        const EtaVector eta = eta_of(d);
        const bool ok = std::all_of(all.begin(), all.end(), [&](const LinearConstraint& row) { return row.holds(eta.values); });
        feasible += ok;
        acyclic += is_acyclic(d);
        agree += ok == is_acyclic(d);
      });
      r.counts["feasible_codes"] = feasible;
      r.counts["acyclic_codes"] = acyclic;
      r.check("a digraph code satisfies the system iff the digraph is acyclic", agree == 64 && acyclic == 25);
      const EtaVector bad = eta_of(ex1);
      r.check("the cyclic code of a <-> b <- c violates a cluster row",
              std::any_of(cl.begin(), cl.end(), [&](const LinearConstraint& row) { return !row.holds(bad.values); }));
      break;
    }
    case 3: {
      const auto eq = u_equality_system(g);
      std::vector<LinearConstraint> spec;
      std::set<std::string> types;
      for_each_antichain(g, [&](const Antichain& a) {
        spec.push_back(specific_constraint(a));
        std::string best;
        for (const auto& perm : detail::permutations(3)) {
          std::vector<Subset> moved;
          for (Subset s : a.sets()) moved.emplace_back(detail::permute_bits(s.bits, perm));
          const std::string tag = Antichain(g, moved).tag();
          if (best.empty() || tag < best) best = tag;
        }
        types.insert(best);
      });
      const auto rays = builtin_rays(g);
      const auto nonspec = nonspecific_constraints(rays);
      r.counts = {{"equality", eq.size()}, {"specific", spec.size()}, {"specific_types", types.size()},
                  {"nonspecific", nonspec.size()}};
      r.check("u vectors have length 8", g.power() == 8);
      r.check("4 equality rows", eq.size() == 4);
      r.check("equality row u(a) = -u(ab) - u(ac) - u(abc)",
              detail::has_row(eq, u_row({{"a", 1}, {"a,b", 1}, {"a,c", 1}, {"a,b,c", 1}}, Sense::eq, 0)));
      r.check("18 specific rows in 8 types", spec.size() == 18 && types.size() == 8);
      r.check("specific row for {ab, ac, bc}",
              detail::has_row(spec, u_row({{"a,b", 1}, {"a,c", 1}, {"b,c", 1}, {"a,b,c", 1}}, Sense::le, 1)));
      const std::vector<LinearConstraint> want = {
          u_row({{"a,b,c", 1}}, Sense::ge, 0),
          u_row({{"a,b", 1}, {"a,b,c", 1}}, Sense::ge, 0),
          u_row({{"a,c", 1}, {"a,b,c", 1}}, Sense::ge, 0),
          u_row({{"b,c", 1}, {"a,b,c", 1}}, Sense::ge, 0),
          u_row({{"a,b", 1}, {"a,c", 1}, {"b,c", 1}, {"a,b,c", 2}}, Sense::ge, 0)};
      bool match = nonspec.size() == 5;
      for (const auto& w : want) match = match && detail::has_row(nonspec, w);
      r.check("5 nonspecific rows in 3 types", match);
      bool sound = true;
      for_each_dag(g, [&](const DirectedGraph& d) {
        const StandardImset u = standard_imset_of(d);
        for (const auto* rows : std::initializer_list<const std::vector<LinearConstraint>*>{&eq, &spec, &nonspec})
          for (const auto& row : *rows) sound = sound && row.holds(u.values);
      });
      r.check("every standard imset satisfies all rows", sound);
      break;
    }
    case 4: {
      const CharacteristicImset c = char_from_eta(eta_of(ex1));
      r.check("c(ac)=0, c(bc)=c(abc)=1, c(ab)=2",
              c.at(Subset::of({0, 2})) == 0 && c.at(Subset::of({1, 2})) == 1 && c.at(g.full()) == 1 &&
                  c.at(Subset::of({0, 1})) == 2);
      bool terminal = true;
      for (std::uint32_t s = 0; s < 8; ++s)
        if (std::popcount(s) >= 2) terminal = terminal && super_terminal_count(ex1, Subset(s)) == c.at(Subset(s));
      r.check("values equal the super-terminal node counts", terminal);
      r.check("c is not a 0-1 vector", !c.is_zero_one());
      r.witnesses.push_back(io::to_json(c));
      break;
    }
    case 5: {
      VerificationReport sub = example5_image_check(g, opt);
      sub.experiment = r.experiment;
      sub.parameters = r.parameters;
      return sub;
    }
    case 6: {
      struct Case {
        std::vector<std::string> sets;
        std::vector<std::pair<std::string, std::int64_t>> kappa;
        LinearConstraint row;
        bool vacuous;
      };
      const std::vector<Case> cases = {
          {{"a,b,c"}, {{"a,b,c", 1}}, c_row({{"a,b,c", 1}}, Sense::ge, 0), false},
          {{"a,b"}, {{"a,b", 1}}, c_row({{"a,b", 1}}, Sense::ge, 0), false},
          {{"a,b", "a,c"}, {{"a,b", 1}, {"a,c", 1}, {"a,b,c", -1}}, c_row({{"a,b", 1}, {"a,c", 1}, {"a,b,c", -1}}, Sense::ge, 0), false},
          {{"a,b", "a,c", "b,c"},
           {{"a,b", 1}, {"a,c", 1}, {"b,c", 1}, {"a,b,c", -2}},
           c_row({{"a,b", 1}, {"a,c", 1}, {"b,c", 1}, {"a,b,c", -2}}, Sense::ge, 0),
           false},
          {{"c"}, {{"c", 1}}, c_row({}, Sense::ge, -1), true},
          {{"c", "a,b"}, {{"c", 1}, {"a,b", 1}, {"a,b,c", -1}}, c_row({{"a,b", 1}, {"a,b,c", -1}}, Sense::ge, -1), false},
          {{"a", "b"}, {{"a", 1}, {"b", 1}, {"a,b", -1}}, c_row({{"a,b", -1}}, Sense::ge, -2), false},
          {{"a", "b", "c"},
           {{"a", 1}, {"b", 1}, {"c", 1}, {"a,b", -1}, {"a,c", -1}, {"b,c", -1}, {"a,b,c", 1}},
           c_row({{"a,b", -1}, {"a,c", -1}, {"b,c", -1}, {"a,b,c", 1}}, Sense::ge, -3),
           false},
      };
      int good = 0;
      for (const auto& cs : cases) {
        std::vector<Subset> sets;
        for (const auto& s : cs.sets) sets.push_back(g.parse(s));
        const Antichain a(g, sets);
        const KappaCoefficients kappa = kappa_coefficients(a);
        std::vector<std::int64_t> want(8, 0);
        for (const auto& [s, v] : cs.kappa) want[g.parse(s).bits] = v;
        const LinearConstraint row = char_specific_constraint(a);
        const bool ok = kappa.values == want && detail::same_row(row, cs.row) && row.vacuous == cs.vacuous;
        good += ok;
        r.check("kappa table and row for {" + a.tag() + "}", ok);
        r.witnesses.push_back(io::to_json(kappa));
      }
      r.counts = {{"tables", cases.size()}, {"matching", good}};
      break;
    }
    case 7: {
      const LinearConstraint ab = cluster_constraint_u(g, Subset::of({0, 1}));
      const LinearConstraint all = cluster_constraint_u(g, g.full());
      r.check("cluster-u row u(ab) + u(abc) >= 0",
              detail::same_row(ab, u_row({{"a,b", 1}, {"a,b,c", 1}}, Sense::ge, 0)));
      r.check("cluster-u row u(ab) + u(ac) + u(bc) + 2 u(abc) >= 0",
              detail::same_row(all, u_row({{"a,b", 1}, {"a,c", 1}, {"b,c", 1}, {"a,b,c", 2}}, Sense::ge, 0)));
      const auto nonspec = nonspecific_constraints(builtin_rays(g));
      bool coincide = true;
      for (std::uint32_t s = 0; s < 8; ++s)
        if (std::popcount(s) >= 2) coincide = coincide && detail::has_row(nonspec, cluster_constraint_u(g, Subset(s)));
      r.check("the four cluster-u rows are nonspecific rows", coincide);
      std::vector<std::int64_t> w(8);
      for (std::uint32_t t = 0; t < 8; ++t) w[t] = (std::popcount(t) % 2 == 0) ? 1 : -1;
      bool sat = StandardImset(g, w).is_standardized();
      for (std::uint32_t s = 0; s < 8; ++s)
        if (std::popcount(s) >= 2) sat = sat && cluster_constraint_u(g, Subset(s)).holds(w);
      r.check("u(T) = (-1)^|T| is standardized and satisfies every cluster-u row", sat);
      r.check("u(T) = (-1)^|T| violates u(abc) >= 0", !u_row({{"a,b,c", 1}}, Sense::ge, 0).holds(w));
      break;
    }
    case 8: {
      VerificationReport sub = example8_fractional_check(g, opt);
      sub.experiment = r.experiment;
      sub.parameters = r.parameters;
      return sub;
    }
    default:
      throw std::invalid_argument("example id must be between 1 and 8");
  }
  detail::finish(r, watch, opt.timing);
  return r;
}

}  // namespace imsets
