// Copyright 2026 The opencoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "opencoh/jobs.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>

#include "opencoh/dynamics.hpp"
#include "opencoh/io.hpp"
#include "opencoh/liouvillian.hpp"
#include "opencoh/stationary.hpp"

namespace opencoh {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

std::string describe_model(const ModelConfig& m) {
  std::ostringstream os;
  auto join = [](const auto& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + io::format_double(static_cast<double>(v[i]));
    return s + "]";
  };
  if (m.kind == ModelKind::kXxz) {
    const auto& x = m.xxz;
    os << "xxz n=" << x.n << " delta=" << io::format_double(x.delta) << " loss_sites=" << join(x.loss_sites)
       << " gammas=" << join(x.gammas) << " nnn_zz=" << io::format_double(x.nnn_zz);
  } else {
    const auto& h = m.hubbard;
    os << "hubbard l_sites=" << h.l_sites << " tau=" << io::format_double(h.tau) << " u=" << io::format_double(h.u)
       << " mu=" << io::format_double(h.mu) << " dephasing_gammas=" << join(h.dephasing_gammas);
  }
  return os.str();
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json report_json(const TheoremReport& r) {
  Json j;
  j["theorem"] = r.theorem;
  j["passed"] = r.passed();
  j["tolerance"] = r.tolerance;
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    Json e{{"name", c.name}, {"residual", c.residual}, {"pass", c.pass}};
    if (!c.note.empty()) e["note"] = c.note;
    conds.push_back(std::move(e));
  }
  j["conditions"] = std::move(conds);
  Json preds = Json::array();
  for (const auto& p : r.predictions) {
    Json e{{"label", p.label}, {"eigenvalue", complex_json(p.eigenvalue)}, {"residual", p.residual}};
    if (!p.note.empty()) e["note"] = p.note;
    preds.push_back(std::move(e));
  }
  j["predictions"] = std::move(preds);
  j["notes"] = r.notes;
  return j;
}

// Collects the files of one job and writes them atomically.
class Output {
 public:
  explicit Output(std::filesystem::path dir) : dir_(std::move(dir)) {}

  void write(const std::string& name, const std::string& content) {
    io::atomic_write(dir_ / name, content);
    files_.push_back({name, io::content_digest(content)});
  }
  void write_json(const std::string& name, const Json& j) { write(name, j.dump(2) + "\n"); }

  const std::filesystem::path& dir() const { return dir_; }
  const std::vector<ProducedFile>& files() const { return files_; }

 private:
  std::filesystem::path dir_;
  std::vector<ProducedFile> files_;
};

const SymmetrySet& require_symmetries(const BuiltModel& b, const std::string& what) {
  if (!b.symmetries) throw ConfigError(what + " requires a Hubbard model");
  return *b.symmetries;
}

DenseMatrix make_state(const StateSpec& s, const BuiltModel& b, std::uint64_t seed) {
  const Eigen::Index d = b.hamiltonian.dim();
  if (s.kind == "maximally-mixed") return DenseMatrix::Identity(d, d) / static_cast<double>(d);
  if (s.kind == "random") return random_density_matrix(d, seed);
  if (s.kind == "canonical") {
    const Superoperator sup = assemble_superoperator(b.hamiltonian, b.jumps, {.require_matrix = true});
    return stationary_states(sup).canonical;
  }
  if (s.kind == "grand-canonical") return grand_canonical_state(s.betas, require_symmetries(b, "grand-canonical state"));
  if (s.kind == "sector") {
    const SymmetrySet& sym = require_symmetries(b, "sector state");
    DenseMatrix rho = DenseMatrix::Zero(d, d);
    const SparseMatrix& n = sym.n_total.matrix();
    for (Eigen::Index i = 0; i < d; ++i) {
      if (std::abs(n.coeff(i, i) - Complex(s.sector)) < 1e-12) rho(i, i) = 1.0;
    }
    const double tr = rho.trace().real();
    if (tr == 0.0) throw ConfigError("sector state: particle number " + std::to_string(s.sector) + " is empty");
    return rho / tr;
  }
  if (s.kind == "all-down") {
    if (b.hamiltonian.space().local_dim() != 2) throw ConfigError("all-down state requires a spin model");
    DenseMatrix rho = DenseMatrix::Zero(d, d);
    rho(d - 1, d - 1) = 1.0;
    return rho;
  }
  if (s.kind == "dark-superposition") {
    const auto darks = find_dark_states(b.hamiltonian, b.jumps);
    const auto nd = static_cast<int>(darks.size());
    if (s.dark_n < 0 || s.dark_m < 0 || s.dark_n >= nd || s.dark_m >= nd || s.dark_n == s.dark_m) {
      throw ConfigError("dark-superposition: need two distinct indices below the dark-state count " +
                        std::to_string(nd));
    }
    ComplexVector psi = darks[static_cast<std::size_t>(s.dark_n)].vector +
                        std::exp(kI * s.alpha) * darks[static_cast<std::size_t>(s.dark_m)].vector;
    psi.normalize();
    return psi * psi.adjoint();
  }
  throw ConfigError("unknown state kind '" + s.kind + "'");
}

SparseOperator make_operator(const OperatorSpec& op, const BuiltModel& b, const std::filesystem::path& base) {
  if (op.name == "identity") return SparseOperator::identity(b.hamiltonian.space());
  if (op.name == "file") {
    const auto path = base / op.file;
    std::istringstream is(io::read_file(path));
    SparseMatrix m = read_coordinate(is);
    if (m.rows() != b.hamiltonian.dim()) {
      throw ConfigError("operator file '" + path.string() + "' has dim " + std::to_string(m.rows()) +
                        ", the model has " + std::to_string(b.hamiltonian.dim()));
    }
    return SparseOperator(b.hamiltonian.space(), std::move(m));
  }
  const SymmetrySet& sym = require_symmetries(b, "operator '" + op.name + "'");
  if (op.name == "eta_plus") return sym.eta_plus;
  if (op.name == "eta_minus") return sym.eta_minus;
  if (op.name == "s_plus") return sym.s_plus;
  if (op.name == "s_minus") return sym.s_minus;
  throw ConfigError("unknown operator '" + op.name + "'");
}

Json dark_states_json(const std::vector<DarkState>& darks) {
  Json arr = Json::array();
  for (const auto& s : darks) {
    arr.push_back({{"energy", s.energy}, {"residual_h", s.residual_h}, {"residual_l", s.residual_l}});
  }
  return arr;
}

int run_spectrum(const JobConfig& cfg, const BuiltModel& b, Output& out) {
  const auto& p = cfg.spectrum;
  const Superoperator sup = assemble_superoperator(b.hamiltonian, b.jumps, {.require_matrix = true});
  SpectrumResult spec;
  if (p.mode == "full") {
    spec = full_spectrum(sup, {.vectors = p.vectors});
  } else {
    TargetedOptions t;
    t.shifts = p.shifts;
    t.nev = p.nev;
    t.krylov_dim = p.krylov_dim;
    t.max_restarts = p.max_restarts;
    t.tol = p.tol;
    t.split_blocks = p.split_blocks;
    spec = targeted_spectrum(sup, t);
  }
  const ClassifiedSpectrum cls = classify_eigenvalues(spec, p.rel_zero, p.rel_re);
  std::ostringstream csv;
  csv << "# opencoh " << kVersion << " spectrum (" << p.mode << ")\n";
  csv << "# model: " << describe_model(cfg.model) << "\n";
  csv << "# rel_zero: " << io::format_double(p.rel_zero) << " rel_re: " << io::format_double(p.rel_re) << "\n";
  write_spectrum_csv(csv, spec, cls);
  out.write("eigenvalues.csv", csv.str());

  double max_re = -std::numeric_limits<double>::infinity();
  for (Complex z : spec.eigenvalues) max_re = std::max(max_re, z.real());
  Json j;
  j["mode"] = p.mode;
  j["count"] = spec.size();
  j["stationary"] = cls.stationary.size();
  j["oscillating"] = cls.oscillating.size();
  j["decaying"] = cls.decaying.size();
  j["distinct_frequencies"] = distinct_oscillation_frequencies(spec, cls);
  j["max_real_part"] = spec.size() ? max_re : 0.0;
  j["conjugation_mismatch"] = conjugation_mismatch(spec.eigenvalues);
  j["scale"] = cls.scale;
  out.write_json("summary.json", j);
  return 0;
}

int run_evolve(const JobConfig& cfg, const BuiltModel& b, Output& out) {
  const auto& p = cfg.evolve;
  if (b.hamiltonian.space().local_dim() != 2) throw ConfigError("evolve: observables are defined for spin models");
  const SparseOperator obs = site_operator(p.observable, p.observable_site, b.hamiltonian.space());
  const DenseMatrix rho0 = make_state(p.initial, b, cfg.seed);
  const auto grid = uniform_grid(0.0, p.t_final, p.dt);
  const Trajectory traj = evolve(b.hamiltonian, b.jumps, rho0, grid, {.rel_tol = p.rel_tol});
  const ObservableSeries series = observable_series(traj, obs);

  std::ostringstream csv;
  csv << "# opencoh " << kVersion << " evolve\n";
  csv << "# model: " << describe_model(cfg.model) << "\n";
  csv << "# initial: " << p.initial.kind << " seed: " << cfg.seed << "\n";
  csv << "# rel_tol: " << io::format_double(p.rel_tol) << " dt: " << io::format_double(p.dt) << "\n";
  csv << "t,value\n";
  char buf[80];
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", series.times[i], series.values[i]);
    csv << buf;
  }
  out.write("series.csv", csv.str());

  TheoremReport r;
  r.theorem = "evolve";
  r.tolerance = p.rel_tol;
  r.seed = cfg.seed;
  double min_eig = 0.0;
  for (const auto& rho : traj.states) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
    min_eig = std::min(min_eig, eig.eigenvalues().minCoeff());
  }
  r.add("trace drift", traj.max_trace_drift, 1e-8);
  r.add("hermiticity drift", traj.max_hermiticity_drift, 1e-8);
  r.add("positivity: -min eigenvalue", -min_eig, 1e-7);
  r.add("observable imaginary part", series.max_imaginary, 1e-10);
  Json j;
  if (p.stationary_tol) {
    const Superoperator sup = assemble_superoperator(b.hamiltonian, b.jumps, {.require_matrix = true});
    const StationaryBasis basis = stationary_states(sup);
    const double dist = (traj.states.back() - basis.canonical).norm();
    r.add("final state distance to the stationary state", dist, *p.stationary_tol);
    r.notes.push_back("null-space dimension " + std::to_string(basis.dims));
    j["null_space_dimension"] = basis.dims;
  }
  Json rj = report_json(r);
  rj["accepted_steps"] = traj.accepted_steps;
  rj["rejected_steps"] = traj.rejected_steps;
  rj["peak_to_peak_early"] = peak_to_peak(series, 0.0, std::min(50.0, p.t_final));
  if (p.t_final >= 200.0) rj["peak_to_peak_late"] = peak_to_peak(series, 150.0, 200.0);
  if (j.contains("null_space_dimension")) rj["null_space_dimension"] = j["null_space_dimension"];
  out.write_json("report.json", rj);
  return r.passed() ? 0 : 2;
}

int run_theorem1(const JobConfig& cfg, const BuiltModel& b, Output& out) {
  const auto& p = cfg.theorem1;
  const auto darks = find_dark_states(b.hamiltonian, b.jumps, p.tol);
  TheoremReport r = check_theorem1(darks, b.hamiltonian, b.jumps, p.tol);
  r.seed = cfg.seed;
  Json related = Json::array();
  Json search;
  bool ok = r.passed();
  const Eigen::Index d = b.hamiltonian.dim();
  if (d <= 16) {
    const Superoperator sup = assemble_superoperator(b.hamiltonian, b.jumps, {.require_matrix = true});
    const SpectrumResult spec = full_spectrum(sup, {.vectors = VectorRetention::kAlways});
    double worst = 0.0;
    for (auto& pred : r.predictions) {
      const Complex near = nearest_eigenvalue(spec.eigenvalues, pred.eigenvalue);
      worst = std::max(worst, std::abs(near - pred.eigenvalue));
    }
    r.add("predicted eigenvalues present in the spectrum", worst, 1e-7, "max distance to the nearest eigenvalue");
    ok = r.passed();
    if (p.theorem2) {
      const ClassifiedSpectrum cls = classify_eigenvalues(spec);
      TheoremReport r2 = verify_theorem2_conclusion(spec, cls, darks);
      r2.seed = cfg.seed;
      ok = ok && r2.passed();
      related.push_back(report_json(r2));
      const auto res = search_invariant_subspace(b.hamiltonian, b.jumps, darks, p.trials, cfg.seed, p.invariance);
      search = {{"invariance", p.invariance == InvarianceSet::kJumpsOnly ? "jumps-only" : "jumps-and-effective"},
                {"verdict", res.verdict},
                {"trials_run", res.trials_run},
                {"subspace_dimension", res.subspace ? res.subspace->cols() : 0},
                {"invariance_residual", res.invariance_residual}};
    }
  } else {
    r.notes.push_back("spectrum cross-check skipped: dimension above 16");
  }
  Json j = report_json(r);
  j["passed"] = r.passed();
  j["dark_states"] = dark_states_json(darks);
  j["related"] = std::move(related);
  if (!search.is_null()) j["invariant_search"] = std::move(search);
  out.write_json("report.json", j);
  return ok ? 0 : 2;
}

int run_theorem3(const JobConfig& cfg, const BuiltModel& b, Output& out) {
  const auto& p = cfg.theorem3;
  const SparseOperator a = make_operator(p.op, b, cfg.base_dir);
  const DenseMatrix rho = make_state(p.state, b, cfg.seed);
  TheoremReport r = check_theorem3(a, rho, b.hamiltonian, b.jumps, p.tol);
  r.seed = cfg.seed;
  out.write_json("report.json", report_json(r));
  return r.passed() ? 0 : 2;
}

// Shared by the corollary and multiblock jobs: premise conditions, then the
// modes ρ_nm for n, m <= max_power.
struct CorollaryRun {
  TheoremReport report;
  std::vector<CorollaryMode> modes;
};

CorollaryRun corollary_modes(const SparseOperator& a, const DenseMatrix& rho, int max_power, double premise_tol,
                             const BuiltModel& b) {
  CorollaryRun run;
  const CorollaryPremise prem = corollary1_premise(a, rho, b.hamiltonian, b.jumps);
  auto& r = run.report;
  r.tolerance = premise_tol;
  r.add("premise: [H,A] = lambda A", prem.commutator_h, premise_tol,
        "lambda = " + io::format_double(prem.lambda.real()));
  r.add("premise: lambda real", std::abs(prem.lambda.imag()), premise_tol);
  r.add("premise: [L_k,A] = 0", prem.commutator_l, premise_tol, "max over k");
  r.add("premise: [L_k^dag,A] = 0", prem.commutator_ldag, premise_tol, "max over k");
  r.add("premise: L(rho_inf) = 0", prem.stationarity, premise_tol);
  if (!r.passed()) return run;
  for (int n = 0; n <= max_power; ++n) {
    for (int m = 0; m <= max_power; ++m) {
      run.modes.push_back(build_corollary1_modes(a, rho, n, m, b.hamiltonian, b.jumps, premise_tol));
    }
  }
  return run;
}

int run_corollary1(const JobConfig& cfg, const BuiltModel& b, Output& out) {
  const auto& p = cfg.corollary1;
  const SparseOperator a = make_operator(p.op, b, cfg.base_dir);
  const DenseMatrix rho = make_state(p.state, b, cfg.seed);
  CorollaryRun run = corollary_modes(a, rho, p.max_power, p.premise_tol, b);
  TheoremReport& r = run.report;
  r.theorem = "corollary1";
  r.seed = cfg.seed;
  double worst = 0.0;
  double conj = 0.0;
  const std::size_t side = static_cast<std::size_t>(p.max_power) + 1;
  for (const auto& mode : run.modes) {
    const std::string label = std::to_string(mode.n) + "," + std::to_string(mode.m);
    r.predictions.push_back({label, mode.eigenvalue, mode.residual, mode.annihilated ? "annihilated" : ""});
    if (!mode.annihilated) worst = std::max(worst, mode.residual);
    const auto& mirror = run.modes[static_cast<std::size_t>(mode.m) * side + static_cast<std::size_t>(mode.n)];
    conj = std::max(conj, std::abs(mode.eigenvalue - std::conj(mirror.eigenvalue)));
  }
  if (!run.modes.empty()) {
    r.add("eigen-relation |L(rho_nm) + i lambda (n-m) rho_nm| / |rho_nm|", worst, p.mode_tol,
          "max over modes that are not annihilated");
    r.add("(n,m) and (m,n) eigenvalues conjugate", conj, 1e-10);
  }
  out.write_json("report.json", report_json(r));
  return r.passed() ? 0 : 2;
}

int run_multiblock(const JobConfig& cfg, const BuiltModel& b, Output& out) {
  const auto& p = cfg.multiblock;
  const SymmetrySet& sym = require_symmetries(b, "verify-multiblock");
  const SparseOperator a = make_operator(p.op, b, cfg.base_dir);
  const DenseMatrix rho = make_state(p.state, b, cfg.seed);
  CorollaryRun run = corollary_modes(a, rho, p.max_power, 1e-10, b);
  TheoremReport& r = run.report;
  r.theorem = "multiblock";
  r.seed = cfg.seed;
  Json modes = Json::array();
  bool first = true;
  for (const auto& mode : run.modes) {
    if (mode.annihilated) continue;
    const MultiblockReport mb = verify_multiblock(mode.rho, sym, p.tol);
    if (first) {
      r.add("spin projector completeness", mb.spin_completeness, 1e-12);
      r.add("number projector completeness", mb.number_completeness, 1e-12);
      first = false;
    }
    Json blocks = Json::array();
    for (const auto& blk : mb.diagonal_blocks) {
      blocks.push_back({{"spin", blk.spin}, {"number", blk.number}, {"weight", blk.weight}});
    }
    auto weights = [](const std::vector<BlockWeight>& v) {
      Json arr = Json::array();
      for (const auto& w : v) arr.push_back({{"row", w.row_label}, {"col", w.col_label}, {"weight", w.weight}});
      return arr;
    };
    modes.push_back({{"n", mode.n},
                     {"m", mode.m},
                     {"eigenvalue", complex_json(mode.eigenvalue)},
                     {"diagonal_blocks", std::move(blocks)},
                     {"spin_offdiagonal", weights(mb.spin_offdiagonal)},
                     {"number_offdiagonal", weights(mb.number_offdiagonal)},
                     {"single_block", mb.single_block},
                     {"single_spin_block", mb.single_spin_block}});
  }
  Json j = report_json(r);
  j["modes"] = std::move(modes);
  out.write_json("report.json", j);
  return r.passed() ? 0 : 2;
}

int run_stationary(const JobConfig& cfg, const BuiltModel& b, Output& out) {
  const auto& p = cfg.stationary;
  const Superoperator sup = assemble_superoperator(b.hamiltonian, b.jumps, {.require_matrix = true});
  const StationaryBasis basis = stationary_states(sup, p.tol);
  TheoremReport r;
  r.theorem = "stationary";
  r.tolerance = p.tol;
  const DenseMatrix& c = basis.canonical;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(0.5 * (c + c.adjoint()), Eigen::EigenvaluesOnly);
  r.add("canonical: |L(rho)| / sigma_max", basis.canonical_residual / basis.sigma_max, 1e-8);
  r.add("canonical: hermiticity", (c - c.adjoint()).norm(), 1e-12);
  r.add("canonical: trace", std::abs(c.trace() - Complex(1.0)), 1e-12);
  r.add("canonical: -min eigenvalue", -eig.eigenvalues().minCoeff(), 1e-10);
  {
    std::ostringstream os;
    write_coordinate(os, c);
    out.write("canonical.txt", os.str());
  }
  for (std::size_t k = 0; k < basis.modes.size(); ++k) {
    std::ostringstream os;
    write_coordinate(os, basis.modes[k]);
    out.write("mode_" + std::to_string(k) + ".txt", os.str());
  }
  for (const auto& beta : p.betas) {
    const DenseMatrix rho = grand_canonical_state(beta, require_symmetries(b, "grand-canonical states"));
    Eigen::SelfAdjointEigenSolver<DenseMatrix> ge(rho, Eigen::EigenvaluesOnly);
    const std::string tag = "grand-canonical [" + io::format_double(beta[0]) + ", " + io::format_double(beta[1]) +
                            ", " + io::format_double(beta[2]) + "]";
    r.add(tag + ": |L(rho)|", apply_lindbladian(b.hamiltonian, b.jumps, rho).norm(), p.gc_tol);
    r.add(tag + ": trace", std::abs(rho.trace() - Complex(1.0)), 1e-12);
    r.add(tag + ": -min eigenvalue", std::max(0.0, -ge.eigenvalues().minCoeff()), 1e-12);
  }
  Json j = report_json(r);
  j["null_space_dimension"] = basis.dims;
  j["largest_null_singular"] = basis.largest_null_singular;
  j["smallest_kept_singular"] = basis.smallest_kept_singular;
  out.write_json("report.json", j);
  return r.passed() ? 0 : 2;
}

int run_scan(const JobConfig& cfg, int threads, Output& out) {
  const auto& p = cfg.scan;
  const auto entries = imaginary_count_scan(p.ns, p.delta, p.gamma, threads);
  std::ostringstream csv;
  csv << "# opencoh " << kVersion << " scan delta=" << io::format_double(p.delta)
      << " gamma=" << io::format_double(p.gamma) << "\n";
  csv << "n,count,frequencies,note\n";
  for (const auto& e : entries) {
    csv << e.n << ",";
    if (e.count) csv << *e.count;
    csv << ",";
    for (std::size_t i = 0; i < e.frequencies.size(); ++i) csv << (i ? ";" : "") << io::format_double(e.frequencies[i]);
    csv << "," << e.note << "\n";
  }
  out.write("scan.csv", csv.str());
  return 0;
}

std::filesystem::path resolve_out_dir(const JobConfig& cfg, const RunOptions& opts) {
  if (opts.out_dir) return *opts.out_dir;
  if (cfg.output_dir) return *cfg.output_dir;
  if (const char* env = std::getenv(kOutputEnv); env && *env) return env;
  return "opencoh-out";
}

}  // namespace

BuiltModel build_model(const ModelConfig& m) {
  try {
    if (m.kind == ModelKind::kXxz) {
      XxzModel x = build_xxz_ring(m.xxz);
      return {std::move(x.hamiltonian), std::move(x.jumps), std::nullopt};
    }
    HubbardModel h = build_hubbard_chain(m.hubbard);
    return {std::move(h.hamiltonian), std::move(h.jumps), std::move(h.symmetries)};
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("model: ") + e.what());
  }
}

RunManifest run_job(const JobConfig& input, const RunOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  JobConfig cfg = input;
  if (opts.seed) cfg.seed = *opts.seed;
  if (opts.threads < 1) throw ConfigError("threads must be >= 1");
  const std::filesystem::path dir = resolve_out_dir(cfg, opts) / cfg.job_name();
  Output out(dir);

  int code = 0;
  if (cfg.job == JobKind::kScan) {
    code = run_scan(cfg, opts.threads, out);
  } else {
    const BuiltModel b = build_model(cfg.model);
    switch (cfg.job) {
      case JobKind::kSpectrum: code = run_spectrum(cfg, b, out); break;
      case JobKind::kEvolve: code = run_evolve(cfg, b, out); break;
      case JobKind::kTheorem1: code = run_theorem1(cfg, b, out); break;
      case JobKind::kTheorem3: code = run_theorem3(cfg, b, out); break;
      case JobKind::kCorollary1: code = run_corollary1(cfg, b, out); break;
      case JobKind::kMultiblock: code = run_multiblock(cfg, b, out); break;
      case JobKind::kStationary: code = run_stationary(cfg, b, out); break;
      case JobKind::kScan: break;
    }
  }

  RunManifest m;
  m.job_name = cfg.job_name();
  m.directory = dir;
  m.files = out.files();
  m.seed = cfg.seed;
  m.exit_code = code;
  m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Json j;
  j["job"] = to_string(cfg.job);
  j["name"] = m.job_name;
  j["config"] = serialize_config(cfg);
  j["versions"] = {{"opencoh", kVersion},
                   {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                                 std::to_string(EIGEN_MINOR_VERSION)}};
  j["seed"] = m.seed;
  j["wall_seconds"] = m.wall_seconds;
  j["exit_code"] = code;
  Json files = Json::array();
  for (const auto& f : m.files) files.push_back({{"path", f.path.string()}, {"sha256", f.sha256}});
  j["files"] = std::move(files);
  io::atomic_write(dir / "manifest.json", j.dump(2) + "\n");
  return m;
}

}  // namespace opencoh
