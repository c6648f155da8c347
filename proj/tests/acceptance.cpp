// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "imsets/verify.hpp"
#include "oracles.hpp"

using namespace imsets;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

oracle::Parents parents_of(const DirectedGraph& g) {
  oracle::Parents pa;
  for (Subset s : g.parent_table()) pa.push_back(s.bits);
  return pa;
}

std::set<std::vector<std::int64_t>> oracle_classes(int n) {
  std::set<std::vector<std::int64_t>> out;
  oracle::all_digraphs(n, [&](const oracle::Parents& pa) {
    if (oracle::has_cycle(pa)) return;
    const auto c = oracle::characteristic(pa);
    std::vector<std::int64_t> r;
    for (std::uint32_t s = 0; s < (1u << n); ++s)
      if (std::popcount(s) >= 2) r.push_back(c[s]);
    out.insert(r);
  });
  return out;
}

std::set<std::vector<std::int64_t>> as_set(const std::vector<std::vector<std::int64_t>>& v) { return {v.begin(), v.end()}; }

struct Line {
  bool ok = true;
  std::string notes;
  void need(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes += (notes.empty() ? "" : "; ") + what;
    }
  }
};

bool census_counts(Line& l) {
  for (int n = 3; n <= 5; ++n) {
    const auto t = Clock::now();
    const VerificationReport r = census_equivalence_classes(GroundSet(n));
    const double secs = seconds_since(t);
    const std::uint64_t dags = r.counts["dags"], classes = r.counts["classes"];
    l.need(r.passed, "census report n=" + std::to_string(n));
    l.need(oracle::Big(dags) == oracle::labelled_dag_count(n), "DAG count n=" + std::to_string(n));
    if (n == 5) {
      l.need(secs < 60, "n=5 census took " + std::to_string(secs) + " s");
      std::set<std::pair<std::uint64_t, std::set<std::tuple<int, int, int>>>> keys;
      for_each_dag(GroundSet(5), [&](const DirectedGraph& d) { keys.insert(oracle::equivalence_key(parents_of(d))); });
      l.need(classes == keys.size(), "class count n=5 against skeleton/collider oracle");
    } else {
      l.need(classes == oracle_classes(n).size(), "class count n=" + std::to_string(n));
    }
    const std::uint64_t want_dags[] = {25, 543, 29281}, want_classes[] = {11, 185, 8782};
    l.need(dags == want_dags[n - 3] && classes == want_classes[n - 3], "printed counts n=" + std::to_string(n));
  }
  return l.ok;
}

bool nonspecific_relaxation(Line& l) {
  for (int n = 3; n <= 4; ++n) {
    const GroundSet g(n);
    const auto t = Clock::now();
    const ScanResult r = lattice_scan(g, Framework::u, {Family::equality, Family::specific, Family::nonspecific},
                                      EnumerationBox::zero_one(g));
    l.need(seconds_since(t) < 300, "scan time n=" + std::to_string(n));
    l.need(as_set(r.points) == oracle_classes(n), "scan points n=" + std::to_string(n));
    l.need(r.points.size() == (n == 3 ? 11u : 185u), "scan count n=" + std::to_string(n));
  }
  const auto t = Clock::now();
  const VerificationReport s = soundness_check(GroundSet(5));
  l.need(s.passed, "n=5 soundness");
  l.need(seconds_since(t) < 600, "n=5 soundness time");
  return l.ok;
}

bool transformed_relaxation(Line& l) {
  const GroundSet g(3);
  const ScanResult r = lattice_scan(g, Framework::c, {Family::kappa_specific, Family::cluster_c}, EnumerationBox::standard(g));
  l.need(as_set(r.points) == oracle_classes(3) && r.points.size() == 11, "transformed scan");
  const VerificationReport e = example_check(8);
  l.need(e.passed, "fractional vertex checks");
  return l.ok;
}

bool matrix_certificates(Line& l) {
  for (int n = 3; n <= 4; ++n) {
    const GroundSet g(n);
    const IntMatrix A = matrix_A(g);
    const HermiteResult h = hermite_normal_form(A);
    const Integer du = determinant(h.U);
    l.need(is_identity_then_zero(h.H) && (A * h.U).same_entries(h.H) && (du == 1 || du == -1), "HNF n=" + std::to_string(n));
    l.need((matrix_C(g) * A).same_entries(matrix_B(g)), "B = CA n=" + std::to_string(n));
    l.need((matrix_C(g) * matrix_D(g)).is_identity(), "CD = I n=" + std::to_string(n));
    l.need((matrix_B_bar(g) * matrix_F(g)).is_identity(), "BbarF = I n=" + std::to_string(n));
    l.need(is_network_matrix(matrix_E(g, true)), "extended E n=" + std::to_string(n));
  }
  const GroundSet g(3);
  for (const auto& [name, m] : {std::pair{"A", matrix_A(g)}, std::pair{"B", matrix_B(g)}}) {
    const UnimodularVerdict v = is_unimodular_full_row_rank(m);
    l.need(v.unimodular && v.full_row_rank && v.exhaustive && v.minors_checked == 792,
           std::string("maximal minors of ") + name);
  }
  const IntMatrix A = matrix_A(g);
  const TotalUnimodularVerdict tu = is_totally_unimodular_small(A, 7);
  bool witness = !tu.passed && tu.violation.has_value();
  if (witness) {
    const IntMatrix sub = A.submatrix(tu.violation->rows, tu.violation->cols);
    std::vector<std::vector<oracle::Big>> rows(sub.rows(), std::vector<oracle::Big>(sub.cols()));
    for (std::size_t i = 0; i < sub.rows(); ++i)
      for (std::size_t j = 0; j < sub.cols(); ++j) rows[i][j] = sub.at(i, j);
    const oracle::Big d = oracle::laplace_det(rows);
    witness = d == oracle::Big(tu.violation->det) && abs(d) >= 2;
  }
  l.need(witness, "submatrix of A with |det| >= 2");
  return l.ok;
}

bool farkas(Line& l) {
  const GroundSet g(3);
  const auto t = Clock::now();
  const VerificationReport r = farkas_equivalence(g, EnumerationBox::standard(g));
  l.need(r.passed && r.counts["agreeing"] == r.counts["points"] && r.counts["points"] == 24, "agreement");
  l.need(r.counts["specific_rows"] == 18, "18 specific rows");
  l.need(seconds_since(t) < 60, "time");
  return l.ok;
}

bool cluster_identities(Line& l) {
  const VerificationReport r = cluster_identity_check(GroundSet(3));
  l.need(r.passed && r.counts["cases"] == 256 && r.counts["agreeing"] == 256, "256 three-way agreements");
  return l.ok;
}

bool decomposition(Line& l) {
  for (int n = 3; n <= 4; ++n) {
    const VerificationReport r = decomposition_check(GroundSet(n), 1000, 20240601);
    l.need(r.passed && r.counts["reconstructed"] == 1000, "decomposition n=" + std::to_string(n));
  }
  const auto all = enumerate_antichains(GroundSet(3));
  bool cone = all.size() == 18;
  for (const auto& a : all) cone = cone && check_dual_cone(y_of_class(a));
  l.need(cone, "18 vectors in the dual cone");
  return l.ok;
}

bool kappa(Line& l) {
  bool same = true, unit = true;
  for (int n = 2; n <= 4; ++n)
    for_each_antichain(GroundSet(n), [&](const Antichain& a) {
      std::vector<std::uint32_t> bits;
      for (Subset s : a.sets()) bits.push_back(s.bits);
      const auto k = kappa_coefficients(a);
      same = same && k.values == oracle::kappa_alternating(bits, n);
      std::int64_t sum = 0;
      for (auto v : k.values) sum += v;
      unit = unit && sum == 1;
    });
  l.need(same, "recursion against alternating sum");
  l.need(unit, "kappa sums to one");
  l.need(example_check(6).passed, "kappa tables");
  return l.ok;
}

bool golden_examples(Line& l) {
  for (int id = 1; id <= 8; ++id) l.need(example_check(id).passed, "example " + std::to_string(id));
  return l.ok;
}

bool properties(Line& l) {
  const auto t = Clock::now();
  std::mt19937_64 rng(99);
  bool round = true;
  for (int n = 2; n <= 6; ++n) {
    const GroundSet g(n);
    for (int k = 0; k < 100; ++k) {
      CharacteristicImset c(g);
      for (std::uint32_t s = 0; s < g.power(); ++s)
        if (std::popcount(s) >= 2) c.set(Subset(s), static_cast<std::int64_t>(rng() % 5) - 2);
      round = round && characteristic_of(u_from_characteristic(c)) == c;
    }
  }
  l.need(round, "u/c round trip");
  bool triangle = true;
  for (int n = 2; n <= 5; ++n)
    for_each_dag(GroundSet(n), [&](const DirectedGraph& d) {
      triangle = triangle && characteristic_of(u_from_eta(eta_of(d))) == char_from_eta(eta_of(d));
    });
  l.need(triangle, "triangle commutativity");
  bool super = true;
  for (int n = 2; n <= 5; ++n)
    for (std::uint32_t s = 0; s < (1u << n); ++s)
      if (std::popcount(s) >= 2)
        super = super && is_supermodular(cluster_supermodular(GroundSet(n), Subset(s))) &&
                is_supermodular(indicator_supermodular(GroundSet(n), Subset(s)));
  l.need(super, "supermodularity");
  const auto rays = dd_rays(GroundSet(4));
  std::set<std::vector<std::int64_t>> got;
  for (const auto& m : rays) {
    std::vector<std::int64_t> v;
    for (std::uint32_t s = 0; s < 16; ++s)
      if (std::popcount(s) >= 2) v.push_back(to_int64(m.values[s]));
    got.insert(v);
  }
  const auto want = oracle::brute_force_rays(4);
  l.need(got == want, "rays at n=4 against brute force (" + std::to_string(want.size()) + " expected)");
  std::printf("  info: %zu extreme rays at n=4\n", want.size());
  bool deterministic = true;
  for (int id = 1; id <= 8; ++id) deterministic = deterministic && example_check(id).to_json() == example_check(id).to_json();
  ScanOptions one;
  one.threads = 1;
  const auto fams = std::vector<Family>{Family::equality, Family::specific, Family::nonspecific};
  deterministic = deterministic && lattice_scan(GroundSet(4), Framework::u, fams, EnumerationBox::zero_one(GroundSet(4)), one)
                                           .report.to_json() ==
                                       lattice_scan(GroundSet(4), Framework::u, fams, EnumerationBox::zero_one(GroundSet(4)))
                                           .report.to_json();
  l.need(deterministic, "report determinism");
  l.need(seconds_since(t) < 600, "time");
  return l.ok;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(Line&)>>> criteria = {
      {"census counts", census_counts},
      {"nonspecific LP relaxation is exact", nonspecific_relaxation},
      {"transformed relaxation and fractional vertex", transformed_relaxation},
      {"matrix certificates", matrix_certificates},
      {"feasibility equivalence", farkas},
      {"cluster identities", cluster_identities},
      {"dual cone decomposition", decomposition},
      {"kappa coefficients", kappa},
      {"golden examples", golden_examples},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Line line;
    const auto t = Clock::now();
    bool ok = false;
    try {
      ok = criteria[k].second(line);
    } catch (const std::exception& e) {
      line.need(false, std::string("exception: ") + e.what());
    }
    ok = ok && line.ok;
    failed += !ok;
    std::printf("criterion %zu: %s  %s (%.1f s)%s%s\n", k + 1, ok ? "PASS" : "FAIL", criteria[k].first.c_str(),
                seconds_since(t), line.notes.empty() ? "" : "  ", line.notes.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
