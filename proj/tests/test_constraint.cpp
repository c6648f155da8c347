#include <gtest/gtest.h>

#include <random>

#include "imsets/constraint.hpp"
#include "imsets/exactlin.hpp"
#include "oracles.hpp"

using namespace imsets;

namespace {

std::vector<std::vector<std::int64_t>> census_c(const GroundSet& g) {
  std::set<std::vector<std::int64_t>> out;
  for_each_dag(g, [&](const DirectedGraph& d) { out.insert(char_from_eta(eta_of(d)).values()); });
  return {out.begin(), out.end()};
}

std::vector<std::int64_t> random_c(const GroundSet& g, std::mt19937_64& rng, int lo, int hi) {
  std::vector<std::int64_t> c(g.power(), 1);
  for (std::uint32_t s = 0; s < g.power(); ++s)
    if (std::popcount(s) >= 2) c[s] = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
  return c;
}

std::vector<std::int64_t> u_of(const GroundSet& g, const std::vector<std::int64_t>& c) {
  return u_from_characteristic(CharacteristicImset(g, c)).values;
}

bool supermodular_brute(const SupermodularFunction& m) {
  const std::uint32_t p = m.ground.power();
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      if (m.values[a | b] + m.values[a & b] < m.values[a] + m.values[b]) return false;
  return true;
}

}  // namespace

TEST(Parsing, FamiliesFrameworksSenses) {
  EXPECT_EQ(parse_families("equality,specific,nonspecific"),
            (std::vector<Family>{Family::equality, Family::specific, Family::nonspecific}));
  EXPECT_EQ(parse_families("kappa-specific,cluster-c"), (std::vector<Family>{Family::kappa_specific, Family::cluster_c}));
  EXPECT_THROW(parse_families("bogus"), std::invalid_argument);
  EXPECT_EQ(parse_framework("c"), Framework::c);
  EXPECT_THROW(parse_framework("x"), std::invalid_argument);
  for (Family f : {Family::nonneg, Family::equality, Family::cluster, Family::specific, Family::nonspecific,
                   Family::cluster_u, Family::kappa_specific, Family::cluster_c})
    EXPECT_EQ(parse_family(to_string(f)), f);
  for (Sense s : {Sense::ge, Sense::le, Sense::eq}) EXPECT_EQ(parse_sense(to_string(s)), s);
}

TEST(Kappa, RecursionEqualsAlternatingSum) {
  for (int n = 2; n <= 5; ++n)
    for_each_antichain(GroundSet(n), [&](const Antichain& a) {
      std::vector<std::uint32_t> bits;
      for (Subset s : a.sets()) bits.push_back(s.bits);
      const auto want = oracle::kappa_alternating(bits, n);
      const auto got = kappa_coefficients(a);
      EXPECT_EQ(got.values, want) << a.tag();
      std::int64_t sum = 0;
      for (auto v : got.values) sum += v;
      EXPECT_EQ(sum, 1) << a.tag();
      const SetClass uc = union_closure_class(a);
      for (std::uint32_t s = 0; s < (1u << n); ++s)
        if (!uc.contains(Subset(s))) EXPECT_EQ(got.values[s], 0);
    });
}

TEST(Kappa, SpecificRowTranslatesToKappaRow) {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 4; ++n) {
    const GroundSet g(n);
    std::vector<std::vector<std::int64_t>> points = census_c(g);
    for (int k = 0; k < 300; ++k) points.push_back(random_c(g, rng, -2, 3));
    for_each_antichain(g, [&](const Antichain& a) {
      const LinearConstraint spec = specific_constraint(a);
      const LinearConstraint translated = translate_to_characteristic(spec, n);
      const LinearConstraint kappa = char_specific_constraint(a);
      for (const auto& c : points) {
        const auto u = u_of(g, c);
        EXPECT_EQ(spec.holds(u), translated.holds(c));
        EXPECT_EQ(spec.holds(u), kappa.holds(c)) << a.tag();
      }
    });
  }
}

TEST(Cluster, ThreeFormsAgreeOnPoints) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 4; ++n) {
    const GroundSet g(n);
    for (std::uint32_t cb = 0; cb < g.power(); ++cb) {
      if (std::popcount(cb) < 2) continue;
      const LinearConstraint cu = cluster_constraint_u(g, Subset(cb));
      const LinearConstraint cc = cluster_constraint_c(g, Subset(cb));
      const LinearConstraint tr = translate_to_characteristic(cu, n);
      for (int k = 0; k < 200; ++k) {
        const auto c = random_c(g, rng, -1, 2);
        const auto u = u_of(g, c);
        EXPECT_EQ(cu.lhs(std::span<const std::int64_t>(u)) - cu.rhs, cc.lhs(std::span<const std::int64_t>(c)) - cc.rhs);
        EXPECT_EQ(tr.holds(c), cc.holds(c));
      }
    }
  }
  EXPECT_THROW(cluster_constraint_c(GroundSet(3), Subset::of({0})), std::invalid_argument);
}

TEST(Soundness, CharacteristicImsetsSatisfyEveryRow) {
  for (int n = 2; n <= 4; ++n) {
    const GroundSet g(n);
    const auto u_sys = build_system(g, {Family::equality, Family::specific, Family::cluster_u, Family::nonspecific},
                                    n == 3 ? default_ray_source(3) : RaySource{RayMethod::dd, {}, false});
    const auto c_sys = build_system(g, {Family::kappa_specific, Family::cluster_c});
    for (const auto& c : census_c(g)) {
      const auto u = u_of(g, c);
      for (const auto& row : u_sys.rows) EXPECT_TRUE(row.holds(u)) << row.tag;
      for (const auto& row : c_sys.rows) EXPECT_TRUE(row.holds(c)) << row.tag;
    }
  }
  for_each_digraph(GroundSet(3), [&](const DirectedGraph& d) {
    const auto eta = eta_of(d);
    const auto sys = build_system(GroundSet(3), {Family::nonneg, Family::equality});
    for (const auto& row : sys.rows) EXPECT_TRUE(row.holds(eta.values));
  });
}

TEST(Systems, SizesAndFrameworks) {
  const GroundSet g(3);
  EXPECT_EQ(u_equality_system(g).size(), 4u);
  EXPECT_EQ(build_system(g, {Family::specific}).rows.size(), 18u);
  EXPECT_EQ(build_system(g, {Family::nonspecific}).rows.size(), 5u);
  EXPECT_EQ(build_system(g, {Family::kappa_specific}).rows.size(), 18u);
  EXPECT_EQ(build_system(g, {Family::cluster_c}).rows.size(), 4u);
  const auto eta = build_system(g, {Family::nonneg, Family::equality, Family::cluster});
  EXPECT_EQ(eta.framework, Framework::eta);
  EXPECT_EQ(eta.rows.size(), 12u + 3u + 4u);
  EXPECT_EQ(build_system(g, {Family::equality, Family::kappa_specific}).rows.size(), 18u);
  EXPECT_THROW(build_system(g, {Family::specific, Family::cluster_c}), std::invalid_argument);
  EXPECT_THROW(build_system(g, {Family::nonneg, Family::specific}), std::invalid_argument);
  EXPECT_THROW(build_system(GroundSet(5), {Family::nonspecific}), std::invalid_argument);
}

TEST(Systems, CompiledRowsAgreeWithExactRows) {
  std::mt19937_64 rng(9);
  const GroundSet g(4);
  const auto sys = build_system(g, {Family::equality, Family::specific, Family::cluster_u});
  for (int k = 0; k < 200; ++k) {
    const auto u = u_of(g, random_c(g, rng, 0, 2));
    for (const auto& row : sys.rows) EXPECT_EQ(compile(row).holds(u.data()), row.holds(u));
  }
  LinearConstraint half{Framework::u, std::vector<Rational>(16), Sense::le, Rational(1, 2), "half"};
  half.coefficients[3] = Rational(1, 3);
  const CompiledRow cr = compile(half);
  std::vector<std::int64_t> x(16, 0);
  x[3] = 1;
  EXPECT_TRUE(cr.holds(x.data()));
  x[3] = 2;
  EXPECT_FALSE(cr.holds(x.data()));
}

TEST(Supermodular, ClusterAndIndicatorFunctions) {
  for (int n = 2; n <= 5; ++n) {
    const GroundSet g(n);
    for (std::uint32_t s = 0; s < g.power(); ++s) {
      if (std::popcount(s) < 2) continue;
      for (const auto& m : {cluster_supermodular(g, Subset(s)), indicator_supermodular(g, Subset(s))}) {
        EXPECT_TRUE(is_supermodular(m));
        EXPECT_TRUE(supermodular_brute(m));
        EXPECT_TRUE(m.standardized());
      }
    }
  }
  SupermodularFunction bad{GroundSet(3), std::vector<Rational>(8)};
  bad.values[3] = -1;
  EXPECT_FALSE(is_supermodular(bad));
  EXPECT_FALSE(supermodular_brute(bad));
}

TEST(Rays, BuiltinMatchesDoubleDescriptionAtThree) {
  const GroundSet g(3);
  auto a = builtin_rays(g), b = dd_rays(g);
  auto key = [](const std::vector<SupermodularFunction>& v) {
    std::set<std::vector<Rational>> s;
    for (const auto& m : v) s.insert(m.values);
    return s;
  };
  EXPECT_EQ(a.size(), 5u);
  EXPECT_EQ(key(a), key(b));
}

TEST(Rays, DoubleDescriptionMatchesBruteForceAtFour) {
  const GroundSet g(4);
  const auto rays = dd_rays(g);
  std::set<std::vector<std::int64_t>> got;
  for (const auto& m : rays) {
    EXPECT_TRUE(is_supermodular(m));
    EXPECT_TRUE(supermodular_brute(m));
    EXPECT_TRUE(m.standardized());
    EXPECT_EQ(normalize_ray(m), m);
    std::vector<std::int64_t> v;
    for (std::uint32_t s = 0; s < 16; ++s)
      if (std::popcount(s) >= 2) v.push_back(to_int64(m.values[s]));
    got.insert(v);
  }
  const auto want = oracle::brute_force_rays(4);
  EXPECT_EQ(got, want);
  EXPECT_EQ(rays.size(), want.size());
  std::cout << "extreme rays at n=4: " << want.size() << "\n";
}

TEST(Rays, BruteForceOracleReproducesBuiltinAtThree) {
  const auto want = oracle::brute_force_rays(3);
  std::set<std::vector<std::int64_t>> got;
  for (const auto& m : builtin_rays(GroundSet(3))) {
    std::vector<std::int64_t> v;
    for (std::uint32_t s = 0; s < 8; ++s)
      if (std::popcount(s) >= 2) v.push_back(to_int64(m.values[s]));
    got.insert(v);
  }
  EXPECT_EQ(got, want);
}

TEST(Rays, JsonSourceValidation) {
  const GroundSet g(3);
  nlohmann::json ok = {{"labels", {"a", "b", "c"}}, {"rays", {{{"entries", {{"a,b", 2}, {"a,b,c", 2}}}}}}};
  const auto rays = rays_from_json(g, ok);
  ASSERT_EQ(rays.size(), 1u);
  EXPECT_EQ(rays[0], indicator_supermodular(g, Subset::of({0, 1})));
  nlohmann::json bad = {{{"entries", {{"a,b", -1}}}}};
  EXPECT_THROW(rays_from_json(g, bad), std::invalid_argument);
  nlohmann::json unstd = {{{"entries", {{"a", 1}}}}};
  EXPECT_THROW(rays_from_json(g, unstd), std::invalid_argument);
  nlohmann::json wrong = {{"labels", {"x", "y", "z"}}, {"rays", nlohmann::json::array()}};
  EXPECT_THROW(rays_from_json(g, wrong), std::invalid_argument);
  EXPECT_THROW(supermodular_rays(g, {RayMethod::file, "/nonexistent/rays.json", false}), std::runtime_error);
}

TEST(DualCone, MembershipEqualsTransposeProduct) {
  for (int n = 2; n <= 4; ++n) {
    const GroundSet g(n);
    const IntMatrix At = matrix_A(g).transpose();
    std::mt19937_64 rng(13);
    auto in_cone = [&](const DualVector& y) {
      RatVector v{set_labels(g), {}};
      for (std::uint32_t t = 1; t < g.power(); ++t) v.entries.push_back(y.values[t]);
      const RatVector p = At * v;
      return std::all_of(p.entries.begin(), p.entries.end(), [](const Rational& q) { return q >= 0; });
    };
    for_each_antichain(g, [&](const Antichain& a) {
      const DualVector y = y_of_class(a);
      EXPECT_TRUE(check_dual_cone(y));
      EXPECT_TRUE(in_cone(y));
    });
    for (int k = 0; k < 500; ++k) {
      DualVector y(g);
      for (std::uint32_t t = 1; t < g.power(); ++t) y.values[t] = static_cast<std::int64_t>(rng() % 5) - 2;
      EXPECT_EQ(check_dual_cone(y), in_cone(y));
    }
  }
}

TEST(DualCone, DecompositionReconstructs) {
  std::mt19937_64 rng(17);
  for (int n = 3; n <= 4; ++n) {
    const GroundSet g(n);
    const auto all = enumerate_antichains(g);
    for (int k = 0; k < 300; ++k) {
      std::vector<ConicTerm> terms;
      const int count = 1 + static_cast<int>(rng() % 5);
      for (int t = 0; t < count; ++t)
        terms.push_back({all[rng() % all.size()], Rational(static_cast<std::int64_t>(1 + rng() % 7), 1 + static_cast<std::int64_t>(rng() % 3))});
      const DualVector y = recombine(g, terms);
      const ConicDecomposition d = conic_decompose(y);
      EXPECT_TRUE(recombine(g, d.terms) == y);
      EXPECT_LE(d.terms.size(), d.initial_class_size);
      for (const auto& t : d.terms) EXPECT_GT(t.weight, 0);
    }
    for (const auto& a : all) {
      const ConicDecomposition d = conic_decompose(y_of_class(a));
      ASSERT_EQ(d.terms.size(), 1u);
      EXPECT_EQ(d.terms[0].minimal_sets, a);
      EXPECT_EQ(d.terms[0].weight, 1);
    }
  }
  DualVector outside(GroundSet(3));
  outside.values[1] = -1;
  EXPECT_THROW(conic_decompose(outside), std::invalid_argument);
  EXPECT_TRUE(conic_decompose(DualVector(GroundSet(3))).terms.empty());
}
