// nct: noncommutative-geometry workbench CLI.
//
// Subcommands: verify, solve-dirac, gauge-group, distance, check-lagrangian,
// heat-trace, fermionic-check. Reports are JSON (schema_version 1), with an
// optional CSV table for series data. Exit codes: 0 all checks pass, 1 a
// mathematical check failed, 2 malformed input.

#include <CLI11.hpp>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "ncg/clifford.hpp"
#include "ncg/distance.hpp"
#include "ncg/fermionic.hpp"
#include "ncg/gauge.hpp"
#include "ncg/spectral_action.hpp"
#include "ncg/triple.hpp"
#include "ncg/triple_io.hpp"

using json = nlohmann::ordered_json;
using namespace ncg;

namespace {

std::string shortest_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

json matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

struct Output {
  std::string json_path;
  std::string csv_path;

  void emit(const json& report, const std::vector<std::vector<std::string>>& csv_rows) const {
    std::string text = report.dump(2);
    if (json_path.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream f(json_path);
      f << text << "\n";
    }
    if (!csv_path.empty()) {
      std::ofstream f(csv_path);
      for (const auto& row : csv_rows) {
        for (size_t k = 0; k < row.size(); ++k)
          f << (k ? "," : "") << row[k];
        f << "\n";
      }
    }
  }
};

json check_entry(const std::string& name, bool pass, double residual) {
  return {{"name", name}, {"pass", pass}, {"residual", residual}};
}

json base_report(const std::string& command) {
  return {{"schema_version", 1}, {"command", command}};
}

std::vector<Mode> parse_mode_spec(const std::string& spec) {
  // "box:N" is all modes with |kappa_mu| <= N; otherwise a semicolon list
  // "k1,k2,k3,k4;..." closed under negation by ModeSpace::make.
  std::vector<Mode> modes;
  if (spec.rfind("box:", 0) == 0) {
    int n = std::stoi(spec.substr(4));
    if (n < 0) throw StructuralError("mode box radius must be >= 0");
    for (int a = -n; a <= n; ++a)
      for (int b = -n; b <= n; ++b)
        for (int c = -n; c <= n; ++c)
          for (int d = -n; d <= n; ++d) modes.push_back({a, b, c, d});
    return modes;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    Mode m{};
    std::stringstream ms(item);
    std::string num;
    int k = 0;
    while (std::getline(ms, num, ',')) {
      if (k >= 4) throw StructuralError("mode entry has more than 4 components");
      m[k++] = std::stoi(num);
    }
    if (k != 4) throw StructuralError("mode entry needs 4 components");
    modes.push_back(m);
  }
  if (modes.empty()) throw StructuralError("empty mode spec");
  return modes;
}

std::vector<GaugeMode> parse_gauge_spec(const std::string& spec) {
  // "q1,q2,q3,q4:re1,im1,re2,im2,re3,im3,re4,im4;..."; empty string is no field.
  std::vector<GaugeMode> gauge;
  if (spec.empty() || spec == "none") return gauge;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw StructuralError("gauge entry needs q1,q2,q3,q4:coeffs");
    GaugeMode gm;
    {
      std::stringstream qs(item.substr(0, colon));
      std::string num;
      int k = 0;
      while (std::getline(qs, num, ',')) {
        if (k >= 4) throw StructuralError("gauge momentum has more than 4 components");
        gm.q[k++] = std::stoi(num);
      }
      if (k != 4) throw StructuralError("gauge momentum needs 4 components");
    }
    {
      std::stringstream cs(item.substr(colon + 1));
      std::string num;
      std::vector<double> vals;
      while (std::getline(cs, num, ',')) vals.push_back(std::stod(num));
      if (vals.size() != 8)
        throw StructuralError("gauge coefficients need 8 numbers (4 complex)");
      for (int mu = 0; mu < 4; ++mu)
        gm.coeff(mu) = Complex(vals[2 * mu], vals[2 * mu + 1]);
    }
    gauge.push_back(gm);
  }
  return gauge;
}

int run_verify(const std::string& path, double tol, const Output& out) {
  FiniteTriple t = load_triple(path);
  if (tol > 0) t.tol.eps = tol;
  AxiomReport rep = verify_axioms(t);

  json report = base_report("verify");
  report["input"] = path;
  json checks = json::array();
  std::string first_fail;
  for (const auto& c : rep.checks) {
    checks.push_back(check_entry(c.name, c.pass, c.residual));
    if (!c.pass && first_fail.empty()) first_fail = c.name;
  }
  report["checks"] = checks;
  if (rep.ko_dimension) report["ko_dimension"] = *rep.ko_dimension;
  report["all_pass"] = rep.all_pass;
  out.emit(report, {});
  if (!rep.all_pass) {
    std::cerr << "check failed: " << first_fail << "\n";
    return 1;
  }
  return 0;
}

int run_solve_dirac(const std::string& path, double tol, const Output& out) {
  FiniteTriple t = load_triple(path);
  if (tol > 0) t.tol.eps = tol;
  auto basis = solve_dirac_space(t);

  json report = base_report("solve-dirac");
  report["input"] = path;
  report["dimension"] = basis.size();
  json mats = json::array();
  for (const auto& b : basis) mats.push_back(matrix_json(b));
  report["basis"] = mats;
  out.emit(report, {});
  return 0;
}

int run_gauge_group(const std::string& path, double tol, const Output& out) {
  FiniteTriple t = load_triple(path);
  if (tol > 0) t.tol.eps = tol;
  GaugeGroupInfo info = gauge_group(t);

  json report = base_report("gauge-group");
  report["input"] = path;
  report["dim_u_A"] = info.dim_u_A;
  report["dim_u_tilde"] = info.dim_u_tilde;
  report["dim_gauge"] = info.dim_gauge;
  report["torus_rank"] = info.torus_rank;
  report["commutative"] = info.commutative;
  report["exact"] = info.exact;
  out.emit(report, {});
  return info.exact ? 0 : 1;
}

int run_distance(const std::string& path, int from, int to, double tol,
                 std::uint64_t seed, const Output& out) {
  FiniteTriple t = load_triple(path);
  if (tol > 0) t.tol.eps = tol;
  DistanceOptions opts;
  opts.seed = seed;
  DistanceResult r = connes_distance(t, from, to, opts);

  json report = base_report("distance");
  report["input"] = path;
  report["from"] = from;
  report["to"] = to;
  if (r.unbounded) {
    report["value"] = "UNBOUNDED";
  } else {
    report["value"] = r.value;
    json cert = json::array();
    for (Eigen::Index k = 0; k < r.certificate.size(); ++k)
      cert.push_back(r.certificate(k));
    report["certificate"] = cert;
  }
  report["min_commutator_norm"] = r.min_commutator_norm;
  report["restart_spread"] = r.restart_spread;
  report["numerical_failure"] = r.numerical_failure;
  out.emit(report, {});
  return r.numerical_failure ? 1 : 0;
}

int run_check_lagrangian(int trials, std::uint64_t seed, bool include_ds,
                         const Output& out) {
  if (trials <= 0) throw StructuralError("--trials must be positive");
  GammaSet g = build_gammas();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);

  double worst = 0.0;
  json rows = json::array();
  std::vector<std::vector<std::string>> csv{{"trial", "rel_error"}};
  for (int k = 0; k < trials; ++k) {
    PointGeometry geom = PointGeometry::random(rng(), 1.0);
    if (include_ds) geom.laplacian_s = unif(rng);
    ModelPoint model;
    model.d = Complex(unif(rng), unif(rng));
    Eigen::Matrix4d F = Eigen::Matrix4d::Zero();
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        F(a, b) = unif(rng);
        F(b, a) = -F(a, b);
      }
    model.F = F;
    Moments mom;
    mom.f0 = 0.5 + std::abs(unif(rng));
    mom.f2 = 0.5 + std::abs(unif(rng));
    mom.f4 = 0.5 + std::abs(unif(rng));
    mom.Lambda = 0.5 + std::abs(unif(rng));
    double rel = compare_lagrangian(geom, model, mom, g);
    worst = std::max(worst, rel);
    rows.push_back({{"trial", k}, {"rel_error", rel}});
    csv.push_back({std::to_string(k), shortest_double(rel)});
  }

  json report = base_report("check-lagrangian");
  report["trials"] = trials;
  report["seed"] = seed;
  report["include_ds"] = include_ds;
  report["worst_rel_error"] = worst;
  const bool pass = worst < 1e-10;
  report["checks"] = json::array({check_entry("gilkey_vs_closed_form", pass, worst)});
  report["results"] = rows;
  out.emit(report, csv);
  if (!pass) {
    std::cerr << "check failed: gilkey_vs_closed_form\n";
    return 1;
  }
  return 0;
}

int run_heat_trace(double side, int cut, double mass, const std::string& t_list,
                   const Output& out) {
  std::vector<double> ts;
  {
    std::stringstream ss(t_list);
    std::string item;
    while (std::getline(ss, item, ',')) ts.push_back(std::stod(item));
  }
  if (ts.empty()) throw StructuralError("--t needs at least one value");
  HeatTraceResult r = heat_trace_torus(side, cut, Complex(0.0, -mass), ts);

  const double vol = std::pow(side, 4);
  const double pi2 = M_PI * M_PI;
  const double a0_expect = 1.0 / pi2;
  const double a2_expect = -mass * mass / pi2;
  const double a0_err = std::abs(r.fitted_a0_density - a0_expect) / std::abs(a0_expect);
  const double a2_err = mass == 0.0 ? std::abs(r.fitted_a2_density)
                                    : std::abs(r.fitted_a2_density - a2_expect) /
                                          std::abs(a2_expect);

  json report = base_report("heat-trace");
  report["side"] = side;
  report["mode_cut"] = cut;
  report["mass"] = mass;
  report["volume"] = vol;
  report["fitted_a0_density"] = r.fitted_a0_density;
  report["fitted_a2_density"] = r.fitted_a2_density;
  report["expected_a0_density"] = a0_expect;
  report["expected_a2_density"] = a2_expect;
  report["truncation_bound"] = r.truncation_bound;
  const bool pass = a0_err < 0.01 && a2_err < 0.01;
  report["checks"] = json::array({check_entry("a0_density", a0_err < 0.01, a0_err),
                                  check_entry("a2_density", a2_err < 0.01, a2_err)});

  std::vector<std::vector<std::string>> csv{{"t", "trace"}};
  for (size_t k = 0; k < r.t_values.size(); ++k)
    csv.push_back({shortest_double(r.t_values[k]), shortest_double(r.traces[k])});
  json series = json::array();
  for (size_t k = 0; k < r.t_values.size(); ++k)
    series.push_back({{"t", r.t_values[k]}, {"trace", r.traces[k]}});
  report["series"] = series;
  out.emit(report, csv);
  if (!pass) {
    std::cerr << "check failed: " << (a0_err >= 0.01 ? "a0_density" : "a2_density")
              << "\n";
    return 1;
  }
  return 0;
}

int run_fermionic_check(const std::string& mode_spec, double mass,
                        const std::string& gauge_spec, const Output& out) {
  ModeSpace ms = ModeSpace::make(parse_mode_spec(mode_spec));
  GammaSet g = build_gammas();
  std::vector<GaugeMode> gauge = parse_gauge_spec(gauge_spec);
  double dev = certify_decomposition(ms, g, gauge, mass);

  json report = base_report("fermionic-check");
  report["mode_count"] = ms.mode_count();
  report["mass"] = mass;
  report["gauge_modes"] = gauge.size();
  report["inner_product_convention"] = "antilinear in the first argument";
  report["deviation"] = dev;
  const bool pass = dev < 1e-10;
  report["checks"] = json::array({check_entry("decomposition", pass, dev)});

  HPlusBasis basis = build_hplus(ms, g);
  CMatrix da = dirac_operator(ms, g, gauge, Complex(0.0, -mass));
  GrassmannQuadratic q = fermionic_action_grassmann(da, basis, ms, g);
  json sparsity = json::array();
  for (Eigen::Index i = 0; i < q.coeff.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < q.coeff.cols(); ++j)
      row.push_back(std::abs(q.coeff(i, j)) > 1e-12 ? 1 : 0);
    sparsity.push_back(row);
  }
  report["coefficient_sparsity"] = sparsity;
  out.emit(report, {});
  if (!pass) {
    std::cerr << "check failed: decomposition\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite spectral triple workbench"};
  app.require_subcommand(1);

  double tol = 0.0;
  Output out;
  std::uint64_t seed = 1234;
  app.add_option("--tol", tol, "Override verification tolerance");
  app.add_option("--json", out.json_path, "Write the JSON report to a file");
  app.add_option("--csv", out.csv_path, "Write series data as CSV");
  app.add_option("--seed", seed, "Seed for randomized subcommands");

  std::string path;
  auto* verify = app.add_subcommand("verify", "Check the axioms of a triple file");
  verify->add_option("file", path, "Triple JSON file")->required();

  auto* solve = app.add_subcommand("solve-dirac", "Basis of admissible Dirac operators");
  solve->add_option("file", path, "Triple JSON file")->required();

  auto* gauge_cmd = app.add_subcommand("gauge-group", "Gauge group dimensions");
  gauge_cmd->add_option("file", path, "Triple JSON file")->required();

  int from = 0, to = 1;
  auto* dist = app.add_subcommand("distance", "Connes distance between two points");
  dist->add_option("file", path, "Triple JSON file")->required();
  dist->add_option("--from", from, "First point index")->required();
  dist->add_option("--to", to, "Second point index")->required();

  int trials = 100;
  bool include_ds = false;
  auto* lagr = app.add_subcommand("check-lagrangian",
                                  "Heat-kernel expansion vs the closed form");
  lagr->add_option("--trials", trials, "Number of random draws");
  lagr->add_flag("--include-ds", include_ds, "Include the scalar Laplacian term");

  double side = 2.0 * M_PI, mass = 1.0;
  int cut = 30;
  std::string t_list = "0.02,0.025,0.03,0.035,0.04";
  auto* heat = app.add_subcommand("heat-trace", "Flat-torus heat trace fit");
  heat->add_option("--side", side, "Torus side length");
  heat->add_option("--cut", cut, "Fourier mode cut |n| <= cut");
  heat->add_option("--mass", mass, "Fermion mass |d|");
  heat->add_option("--t", t_list, "Comma-separated t values");

  std::string mode_spec = "box:1", gauge_spec;
  double fmass = 1.0;
  auto* ferm = app.add_subcommand("fermionic-check",
                                  "Fermionic action decomposition certificate");
  ferm->add_option("--modes", mode_spec, "Mode list: box:N or k1,k2,k3,k4;...");
  ferm->add_option("--mass", fmass, "Fermion mass");
  ferm->add_option("--gauge", gauge_spec, "Gauge modes: q:c1re,c1im,...;...");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return run_verify(path, tol, out);
    if (*solve) return run_solve_dirac(path, tol, out);
    if (*gauge_cmd) return run_gauge_group(path, tol, out);
    if (*dist) return run_distance(path, from, to, tol, seed, out);
    if (*lagr) return run_check_lagrangian(trials, seed, include_ds, out);
    if (*heat) return run_heat_trace(side, cut, mass, t_list, out);
    if (*ferm) return run_fermionic_check(mode_spec, fmass, gauge_spec, out);
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
