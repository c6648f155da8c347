// Command line front end: census, scans, examples, encodings, constraint
// export, matrix certificates, conic decomposition and ray computation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "imsets/constraint.hpp"
#include "imsets/encode.hpp"
#include "imsets/exactlin.hpp"
#include "imsets/io.hpp"
#include "imsets/verify.hpp"

namespace {

using namespace imsets;
using json = io::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  int n = 3;
  std::string labels;
  std::string out;
  bool timing = false;
  unsigned threads = 0;

  GroundSet ground() const {
    if (labels.empty()) return GroundSet(n);
    std::vector<std::string> ls;
    std::stringstream in(labels);
    for (std::string item; std::getline(in, item, ',');) ls.push_back(item);
    if (static_cast<int>(ls.size()) != n) throw UsageError("--labels must list exactly n labels");
    return GroundSet(ls);
  }
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot write '" + c.out + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

int emit_report(const Common& c, const VerificationReport& r) {
  emit(c, r.to_json().dump(2));
  return r.passed ? kOk : kFailed;
}

json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "': " + e.what());
  }
}

std::optional<RaySource> ray_source(const std::string& file, const std::string& method, bool long_run) {
  if (!file.empty()) return RaySource{RayMethod::file, file, long_run};
  if (method.empty()) return std::nullopt;
  if (method == "builtin") return RaySource{RayMethod::builtin, {}, long_run};
  if (method == "dd") return RaySource{RayMethod::dd, {}, long_run};
  throw UsageError("unknown ray method '" + method + "'");
}

void add_common(CLI::App* cmd, Common& c, bool with_n = true) {
  if (with_n) cmd->add_option("--n", c.n, "number of variables")->check(CLI::Range(kMinVariables, kMaxVariables));
  if (with_n) cmd->add_option("--labels", c.labels, "comma-separated variable labels");
  cmd->add_option("--out", c.out, "write output to this file");
  cmd->add_flag("--timing", c.timing, "include wall time in reports");
  cmd->add_option("--threads", c.threads, "worker threads (0: all cores)");
}

std::string points_csv(const GroundSet& g, const std::vector<std::vector<std::int64_t>>& points) {
  std::ostringstream out;
  bool first = true;
  for (std::uint32_t s = 0; s < g.power(); ++s)
    if (std::popcount(s) >= 2) {
      out << (first ? "" : ",") << "c_" << g.compact(Subset(s));
      first = false;
    }
  out << '\n';
  for (const auto& p : points) {
    for (std::size_t k = 0; k < p.size(); ++k) out << (k ? "," : "") << p[k];
    out << '\n';
  }
  return out.str();
}

IntMatrix pick_matrix(const GroundSet& g, const std::string& which) {
  if (which == "A") return matrix_A(g);
  if (which == "B") return matrix_B(g);
  if (which == "C") return matrix_C(g);
  if (which == "D") return matrix_D(g);
  if (which == "E") return matrix_E(g);
  if (which == "E+") return matrix_E(g, true);
  if (which == "F") return matrix_F(g);
  if (which == "Bbar") return matrix_B_bar(g);
  throw UsageError("unknown matrix '" + which + "'");
}

VerificationReport matrix_check(const GroundSet& g, const std::string& which, const IntMatrix& m,
                                const std::string& check, std::uint64_t samples, std::uint64_t seed,
                                std::size_t max_order) {
  VerificationReport r{"matrix"};
  r.parameters = {{"n", g.size()}, {"which", which}, {"check", check}};
  r.counts = {{"rows", m.rows()}, {"cols", m.cols()}};
  if (check == "hnf") {
    const HermiteResult h = hermite_normal_form(m);
    const Integer det = determinant(h.U);
    r.counts["rank"] = h.rank;
    r.counts["det_U"] = det.str();
    r.check("H = M U", (m * h.U).same_entries(h.H));
    r.check("U is unimodular", det == 1 || det == -1);
    r.check("H = [I 0]", is_identity_then_zero(h.H));
  } else if (check == "unimodular") {
    const std::uint64_t minors = binomial(m.cols(), m.rows());
    std::optional<SampleMode> mode;
    if (minors > kSubmatrixLimit) mode = SampleMode{samples, seed};
    const UnimodularVerdict v = is_unimodular_full_row_rank(m, mode);
    r.parameters["mode"] = mode ? "sampled" : "exhaustive";
    r.counts["minors_checked"] = v.minors_checked;
    r.counts["nonzero_minors"] = v.nonzero_minors;
    if (v.violation) r.witnesses.push_back(io::minor_json(m, *v.violation));
    r.check("full row rank", v.full_row_rank);
    r.check(mode ? "no maximal minor outside {-1,0,1} in the sample" : "every maximal minor lies in {-1,0,1}",
            v.unimodular);
  } else if (check == "tu") {
    const TotalUnimodularVerdict v = is_totally_unimodular_small(m, max_order ? max_order : std::min(m.rows(), m.cols()));
    r.counts["submatrices_checked"] = v.submatrices_checked;
    r.counts["checked_order"] = v.checked_order;
    if (v.violation) r.witnesses.push_back(io::minor_json(m, *v.violation));
    r.check("every square submatrix has determinant in {-1,0,1}", v.passed);
  } else if (check == "products") {
    const IntMatrix A = matrix_A(g), B = matrix_B(g), C = matrix_C(g), D = matrix_D(g);
    const IntMatrix Bbar = matrix_B_bar(g), F = matrix_F(g), E = matrix_E(g);
    r.check("B = C A", (C * A).same_entries(B));
    r.check("C D = I", (C * D).is_identity());
    r.check("A = D B", (D * B).same_entries(A));
    r.check("Bbar F = I", (Bbar * F).is_identity());
    r.check("Bbar E reproduces B", (Bbar * E).submatrix(detail::iota(B.rows()), b_columns_in_extended(g)).same_entries(B));
    r.check("E with the dummy row has one +1 and one -1 per column", is_network_matrix(matrix_E(g, true)));
    r.check("det C is +1 or -1", determinant(C) == 1 || determinant(C) == -1);
  } else {
    throw UsageError("unknown check '" + check + "'");
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact encodings and relaxations of Bayesian network structures"};
  app.require_subcommand(1);
  Common c;

  auto* census = app.add_subcommand("census", "count DAGs and Markov equivalence classes");
  add_common(census, c);

  std::string framework = "u", families, box = "01", rays_file, ray_method;
  bool long_run = false, csv = false;
  std::uint64_t budget = kDefaultScanBudget;
  auto* scan = app.add_subcommand("scan", "enumerate lattice points of a relaxation inside a box");
  add_common(scan, c);
  scan->add_option("--framework", framework, "u or c")->check(CLI::IsMember({"u", "c"}));
  scan->add_option("--families", families, "comma-separated constraint families")->required();
  scan->add_option("--box", box, "01 or default")->check(CLI::IsMember({"01", "default"}));
  scan->add_option("--rays", rays_file, "ray file for nonspecific rows");
  scan->add_option("--ray-method", ray_method, "builtin or dd")->check(CLI::IsMember({"builtin", "dd"}));
  scan->add_option("--budget", budget, "maximum number of box points");
  scan->add_flag("--long-run", long_run, "allow boxes above the budget");
  scan->add_flag("--csv", csv, "print satisfying points as CSV");

  auto* compare = app.add_subcommand("compare-relaxations", "nonspecific against cluster relaxation");
  add_common(compare, c);
  compare->add_option("--rays", rays_file, "ray file for nonspecific rows");

  int example_id = 0;
  auto* example = app.add_subcommand("example", "run a golden example check");
  add_common(example, c, false);
  example->add_option("--id", example_id, "example number 1..8")->required()->check(CLI::Range(1, 8));

  std::string graph_file, as = "standard";
  auto* encode = app.add_subcommand("encode", "encode a directed graph");
  add_common(encode, c, false);
  encode->add_option("--graph", graph_file, "graph JSON")->required();
  encode->add_option("--as", as, "eta, standard or characteristic")
      ->check(CLI::IsMember({"eta", "standard", "characteristic"}));

  std::string format = "json";
  auto* constraints = app.add_subcommand("constraints", "export a constraint system");
  add_common(constraints, c);
  constraints->add_option("--framework", framework, "eta, u or c")->check(CLI::IsMember({"eta", "u", "c"}));
  constraints->add_option("--families", families, "comma-separated constraint families")->required();
  constraints->add_option("--format", format, "json or lp")->check(CLI::IsMember({"json", "lp"}));
  constraints->add_option("--rays", rays_file, "ray file for nonspecific rows");
  constraints->add_option("--ray-method", ray_method, "builtin or dd")->check(CLI::IsMember({"builtin", "dd"}));
  constraints->add_flag("--long-run", long_run, "allow ray computation for n >= 5");

  std::string which = "A", check;
  std::uint64_t samples = 10000, seed = 1;
  std::size_t max_order = 0;
  auto* matrix = app.add_subcommand("matrix", "dump or certify a transformation matrix");
  add_common(matrix, c);
  matrix->add_option("--which", which, "A, B, C, D, E, E+, F or Bbar")
      ->check(CLI::IsMember({"A", "B", "C", "D", "E", "E+", "F", "Bbar"}));
  matrix->add_option("--check", check, "hnf, unimodular, tu or products")
      ->check(CLI::IsMember({"hnf", "unimodular", "tu", "products"}));
  matrix->add_option("--samples", samples, "sampled minors when exhaustive is too large");
  matrix->add_option("--seed", seed, "sampling seed");
  matrix->add_option("--max-order", max_order, "largest submatrix order for tu");

  std::string y_file;
  auto* decompose = app.add_subcommand("decompose", "conic decomposition of a dual vector");
  add_common(decompose, c, false);
  decompose->add_option("--y", y_file, "dual vector JSON")->required();

  std::string method = "builtin";
  auto* rays = app.add_subcommand("rays", "extreme rays of the standardized supermodular cone");
  add_common(rays, c);
  rays->add_option("--method", method, "builtin or dd")->check(CLI::IsMember({"builtin", "dd"}));
  rays->add_flag("--long-run", long_run, "allow n >= 5");

  std::string from, to, in_file;
  auto* transform = app.add_subcommand("transform", "map an imset between frameworks");
  add_common(transform, c, false);
  transform->add_option("--from", from, "eta, u or c")->required()->check(CLI::IsMember({"eta", "u", "c"}));
  transform->add_option("--to", to, "u or c")->required()->check(CLI::IsMember({"u", "c"}));
  transform->add_option("--in", in_file, "imset JSON")->required();

  auto* farkas = app.add_subcommand("farkas", "feasibility of A x = b_u, x >= 0 against the specific rows");
  add_common(farkas, c);
  farkas->add_option("--box", box, "01 or default")->check(CLI::IsMember({"01", "default"}));

  auto* soundness = app.add_subcommand("soundness", "every characteristic imset satisfies every row");
  add_common(soundness, c);
  soundness->add_option("--rays", rays_file, "ray file for nonspecific rows");

  std::size_t count = 1000;
  auto* identities = app.add_subcommand("identities", "cluster identity and conic decomposition suites");
  add_common(identities, c);
  identities->add_option("--count", count, "random conic combinations");
  identities->add_option("--seed", seed, "seed for the combinations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const RunOptions run{c.timing, c.threads};
    if (census->parsed()) return emit_report(c, census_equivalence_classes(c.ground(), run));

    if (scan->parsed()) {
      ScanOptions opt;
      opt.rays = ray_source(rays_file, ray_method, long_run);
      opt.budget = budget;
      opt.long_run = long_run;
      opt.threads = c.threads;
      opt.timing = c.timing;
      const GroundSet g = c.ground();
      const ScanResult res =
          lattice_scan(g, parse_framework(framework), parse_families(families), EnumerationBox::parse(g, box), opt);
      if (csv) {
        emit(c, points_csv(g, res.points));
        return res.report.passed ? kOk : kFailed;
      }
      VerificationReport r = res.report;
      json pts = json::array();
      for (const auto& p : res.points) pts.push_back(detail::point_json(g, p));
      json doc = r.to_json();
      doc["points"] = pts;
      emit(c, doc.dump(2));
      return r.passed ? kOk : kFailed;
    }

    if (compare->parsed()) {
      ScanOptions opt;
      opt.rays = ray_source(rays_file, "", false);
      opt.timing = c.timing;
      return emit_report(c, relaxation_comparison(c.ground(), opt));
    }

    if (example->parsed()) return emit_report(c, example_check(example_id, run));

    if (encode->parsed()) {
      const DirectedGraph g = io::graph_from_json(read_json(graph_file));
      if (as == "eta") {
        emit(c, io::to_json(eta_of(g)).dump(2));
        return kOk;
      }
      if (as == "standard") {
        if (!is_acyclic(g)) throw UsageError("standard imsets exist only for acyclic graphs");
        emit(c, io::to_json(standard_imset_of(g)).dump(2));
        return kOk;
      }
      emit(c, io::to_json(char_from_eta(eta_of(g))).dump(2));
      return kOk;
    }

    if (constraints->parsed()) {
      const GroundSet g = c.ground();
      const ConstraintSystem sys = build_system(g, parse_families(families), ray_source(rays_file, ray_method, long_run));
      if (sys.framework != parse_framework(framework))
        throw UsageError("the requested families belong to the " + to_string(sys.framework) + " framework");
      emit(c, format == "lp" ? io::to_lp(sys) : io::to_json(sys).dump(2));
      return kOk;
    }

    if (matrix->parsed()) {
      const GroundSet g = c.ground();
      const IntMatrix m = pick_matrix(g, which);
      if (check.empty()) {
        emit(c, m.to_csv());
        return kOk;
      }
      return emit_report(c, matrix_check(g, which, m, check, samples, seed, max_order));
    }

    if (decompose->parsed()) {
      const DualVector y = io::dual_from_json(read_json(y_file));
      VerificationReport r{"decompose"};
      r.parameters = {{"n", y.ground.size()}};
      if (!r.check("y satisfies the dual cone inequalities", check_dual_cone(y))) return emit_report(c, r);
      const ConicDecomposition d = conic_decompose(y);
      r.check("the terms reconstruct y", recombine(y.ground, d.terms) == y);
      r.check("iterations do not exceed the initial class size", d.terms.size() <= d.initial_class_size);
      json doc = r.to_json();
      doc["decomposition"] = io::to_json(d);
      emit(c, doc.dump(2));
      return r.passed ? kOk : kFailed;
    }

    if (rays->parsed()) {
      const GroundSet g = c.ground();
      const auto list = supermodular_rays(g, *ray_source("", method, long_run));
      emit(c, io::rays_to_json(g, list).dump(2));
      return kOk;
    }

    if (transform->parsed()) {
      const json doc = read_json(in_file);
      if (from == to) throw UsageError("--from and --to coincide");
      if (from == "eta") {
        const EtaVector eta = io::eta_from_json(doc);
        emit(c, to == "u" ? io::to_json(u_from_eta(eta)).dump(2) : io::to_json(char_from_eta(eta)).dump(2));
      } else if (from == "u") {
        emit(c, io::to_json(characteristic_of(io::standard_from_json(doc))).dump(2));
      } else {
        emit(c, io::to_json(u_from_characteristic(io::characteristic_from_json(doc))).dump(2));
      }
      return kOk;
    }

    if (farkas->parsed()) {
      const GroundSet g = c.ground();
      return emit_report(c, farkas_equivalence(g, EnumerationBox::parse(g, box == "01" ? "01" : "default"), run));
    }

    if (soundness->parsed())
      return emit_report(c, soundness_check(c.ground(), ray_source(rays_file, "", true), run));

    if (identities->parsed()) {
      const GroundSet g = c.ground();
      VerificationReport a = cluster_identity_check(g, run);
      VerificationReport b = decomposition_check(g, count, seed, run);
      json doc = {{"cluster_identity", a.to_json()}, {"decomposition", b.to_json()}};
      emit(c, doc.dump(2));
      return a.passed && b.passed ? kOk : kFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
