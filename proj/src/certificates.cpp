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

#include "opencoh/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "opencoh/linalg.hpp"

namespace opencoh {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

// Induced 1-norm; bounds the spectral norm of a Hermitian matrix.
double one_norm(const SparseMatrix& m) {
  double best = 0.0;
  for (Eigen::Index c = 0; c < m.outerSize(); ++c) {
    double col = 0.0;
    for (SparseMatrix::InnerIterator it(m, c); it; ++it) col += std::abs(it.value());
    best = std::max(best, col);
  }
  return best;
}

void require_dense_dim(Eigen::Index d, const char* what) {
  if (d > kDenseDimCap) {
    throw DimensionError(std::string(what) + ": dim " + std::to_string(d) + " exceeds the dense cap " +
                         std::to_string(kDenseDimCap));
  }
}

// Right singular vectors of `a` with singular value <= abs_tol.
DenseMatrix kernel_abs(const DenseMatrix& a, double abs_tol) {
  const Eigen::Index n = a.cols();
  if (n == 0) return DenseMatrix(0, 0);
  linalg::Svd s = linalg::svd(a);
  Eigen::Index rank = 0;
  while (rank < s.singular_values.size() && s.singular_values(rank) > abs_tol) ++rank;
  if (a.rows() >= n) return s.v.rightCols(n - rank);
  return linalg::orthogonal_complement(s.v.leftCols(rank), n);
}

// Gram–Schmidt over the standard-basis images w_i = V† e_i, always taking
// the largest remaining residual. Returns coefficients in V's column space.
DenseMatrix pivoted_canonical_basis(const DenseMatrix& v) {
  const Eigen::Index c = v.cols();
  DenseMatrix w = v.adjoint();  // c x d, column i is V† e_i
  DenseMatrix q(c, c);
  for (Eigen::Index k = 0; k < c; ++k) {
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < w.cols(); ++i) {
      const double nrm = w.col(i).norm();
      if (nrm > best * (1.0 + 1e-12)) {
        best = nrm;
        pivot = i;
      }
    }
    ComplexVector u = w.col(pivot);
    for (Eigen::Index j = 0; j < k; ++j) u -= q.col(j) * q.col(j).dot(u);
    u.normalize();
    q.col(k) = u;
    // Deflate all columns against the new direction.
    w -= u * (u.adjoint() * w);
  }
  return q;
}

double max_abs_offdiag_identity(const DenseMatrix& g) {
  return (g - DenseMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

}  // namespace

bool TheoremReport::passed() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.pass; });
}

void TheoremReport::add(std::string name, double residual, double tol, std::string note) {
  conditions.push_back({std::move(name), residual, residual < tol, std::move(note)});
}

Complex hs_inner(const DenseMatrix& a, const DenseMatrix& b) {
  return (a.adjoint() * b).trace();
}

std::vector<DarkState> find_dark_states(const SparseOperator& hamiltonian, const LindbladSet& jumps, double tol) {
  const Eigen::Index d = hamiltonian.dim();
  require_dense_dim(d, "find_dark_states");
  jumps.check_space(hamiltonian.space());

  DenseMatrix kernel;
  if (jumps.empty()) {
    kernel = DenseMatrix::Identity(d, d);
  } else {
    DenseMatrix stacked(d * static_cast<Eigen::Index>(jumps.size()), d);
    for (std::size_t k = 0; k < jumps.size(); ++k) {
      stacked.middleRows(static_cast<Eigen::Index>(k) * d, d) = jumps.ops[k].dense();
    }
    kernel = linalg::null_space(stacked, tol);
  }

  // Shrink K to its largest H-invariant subspace: keep v ∈ K with Hv ∈ K.
  const DenseMatrix h = hamiltonian.dense();
  const double h_scale = std::max(1.0, one_norm(hamiltonian.matrix()));
  while (kernel.cols() > 0) {
    const DenseMatrix hk = h * kernel;
    const DenseMatrix leak = hk - kernel * (kernel.adjoint() * hk);
    const DenseMatrix keep = kernel_abs(leak, tol * h_scale);
    if (keep.cols() == kernel.cols()) break;
    kernel = kernel * keep;
  }
  if (kernel.cols() == 0) return {};

  DenseMatrix projected = kernel.adjoint() * h * kernel;
  projected = 0.5 * (projected + projected.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(projected);
  const Eigen::VectorXd& energies = eig.eigenvalues();
  const DenseMatrix vectors = kernel * eig.eigenvectors();

  const double cluster_width = 1e-8 * std::max(1.0, energies.cwiseAbs().maxCoeff());
  std::vector<DarkState> out;
  Eigen::Index start = 0;
  while (start < energies.size()) {
    Eigen::Index stop = start + 1;
    while (stop < energies.size() && energies(stop) - energies(stop - 1) <= cluster_width) ++stop;
    const DenseMatrix block = vectors.middleCols(start, stop - start);
    const DenseMatrix canonical = block * pivoted_canonical_basis(block);
    const double energy = energies.segment(start, stop - start).mean();
    for (Eigen::Index j = 0; j < canonical.cols(); ++j) {
      DarkState s;
      s.vector = canonical.col(j);
      s.energy = energy;
      s.residual_h = (hamiltonian.apply(s.vector) - energy * s.vector).norm();
      for (const auto& l : jumps.ops) s.residual_l = std::max(s.residual_l, l.apply(s.vector).norm());
      if (s.residual_h < tol * h_scale && s.residual_l < tol * h_scale) out.push_back(std::move(s));
    }
    start = stop;
  }
  return out;
}

DenseMatrix dark_basis(const std::vector<DarkState>& darks, Eigen::Index dim) {
  DenseMatrix b(dim, static_cast<Eigen::Index>(darks.size()));
  for (std::size_t i = 0; i < darks.size(); ++i) b.col(static_cast<Eigen::Index>(i)) = darks[i].vector;
  if (b.cols() == 0) return b;
  Eigen::HouseholderQR<DenseMatrix> qr(b);
  return qr.householderQ() * DenseMatrix::Identity(dim, b.cols());
}

TheoremReport check_theorem1(const std::vector<DarkState>& states, const SparseOperator& hamiltonian,
                             const LindbladSet& jumps, double tol, Lambdas* lambdas_out) {
  const Eigen::Index d = hamiltonian.dim();
  const std::size_t ns = states.size();
  const std::size_t nk = jumps.size();
  TheoremReport report;
  report.theorem = "theorem1";
  report.tolerance = tol;
  if (ns == 0) {
    report.notes.push_back("no states supplied; nothing to certify");
    return report;
  }

  DenseMatrix basis(d, static_cast<Eigen::Index>(ns));
  for (std::size_t i = 0; i < ns; ++i) basis.col(static_cast<Eigen::Index>(i)) = states[i].vector;
  const double ortho = max_abs_offdiag_identity(basis.adjoint() * basis);
  if (ortho > tol) {
    throw std::invalid_argument(fmt("check_theorem1: states are not orthonormal (max |G - 1| = %.3g)", ortho));
  }

  SparseMatrix decay(d, d);
  for (const auto& l : jumps.ops) decay += SparseMatrix(l.matrix().adjoint()) * l.matrix();
  const SparseMatrix generator = kI * hamiltonian.matrix() + decay;

  Lambdas lam;
  lam.lambda_n.resize(ns);
  lam.lambda_kn.assign(nk, std::vector<Complex>(ns));
  double res_a = 0.0;
  double res_b = 0.0;
  double res_b_rates = 0.0;
  for (std::size_t n = 0; n < ns; ++n) {
    const ComplexVector& phi = states[n].vector;
    const ComplexVector x = generator * phi;
    lam.lambda_n[n] = phi.dot(x);
    res_a = std::max(res_a, (x - lam.lambda_n[n] * phi).norm());
    double rate_sum = 0.0;
    for (std::size_t k = 0; k < nk; ++k) {
      const ComplexVector y = jumps.ops[k].apply(phi);
      lam.lambda_kn[k][n] = phi.dot(y);
      res_b = std::max(res_b, (y - lam.lambda_kn[k][n] * phi).norm());
      rate_sum += std::norm(lam.lambda_kn[k][n]);
    }
    res_b_rates = std::max(res_b_rates, std::abs(rate_sum - lam.lambda_n[n].real()));
  }

  bool all_lambda_zero = true;
  for (const auto& row : lam.lambda_kn) {
    for (Complex z : row) all_lambda_zero = all_lambda_zero && std::abs(z) <= tol;
  }
  double res_c = 0.0;
  for (std::size_t n = 0; n < ns; ++n) {
    for (std::size_t m = 0; m < ns; ++m) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < nk; ++k) {
        acc += 2.0 * lam.lambda_kn[k][n] * std::conj(lam.lambda_kn[k][m]) - std::norm(lam.lambda_kn[k][n]) -
               std::norm(lam.lambda_kn[k][m]);
      }
      res_c = std::max(res_c, std::abs(acc.real()));
    }
  }

  report.add("a: (iH + sum L^dag L) phi_n = lambda_n phi_n", res_a, tol, "max over states");
  report.add("b: L_k phi_n = lambda_kn phi_n", res_b, tol, "max over jumps and states");
  report.add("b: sum_k |lambda_kn|^2 = Re lambda_n", res_b_rates, tol, "max over states");
  report.add("c: Re sum_k (2 lambda_kn lambda_km^* - |lambda_kn|^2 - |lambda_km|^2) = 0", res_c, tol,
             all_lambda_zero ? "vacuous: every lambda_kn vanishes" : "max over pairs");

  const Lindbladian lindblad(hamiltonian, jumps);
  double worst_mode = 0.0;
  double worst_formula = 0.0;
  for (std::size_t n = 0; n < ns; ++n) {
    for (std::size_t m = 0; m < ns; ++m) {
      Complex mu = -lam.lambda_n[n] - std::conj(lam.lambda_n[m]);
      for (std::size_t k = 0; k < nk; ++k) mu += 2.0 * lam.lambda_kn[k][n] * std::conj(lam.lambda_kn[k][m]);
      const DenseMatrix rho = states[n].vector * states[m].vector.adjoint();
      const double residual = (lindblad(rho) - mu * rho).norm();
      const double formula = std::abs(mu.imag() - (states[m].energy - states[n].energy));
      worst_mode = std::max(worst_mode, residual);
      worst_formula = std::max(worst_formula, formula);
      report.predictions.push_back({std::to_string(n) + "," + std::to_string(m), mu, residual,
                                    fmt("omega_n = %.12g, omega_m = %.12g", states[n].energy, states[m].energy)});
    }
  }
  report.add("eigenmode: |L(|phi_n><phi_m|) - mu_nm |phi_n><phi_m|| (mu_nm = -i(omega_n - omega_m))", worst_mode,
             tol, "max over ordered pairs");
  report.add("frequency: Im mu_nm = omega_m - omega_n", worst_formula, tol, "max over ordered pairs");
  if (lambdas_out) *lambdas_out = std::move(lam);
  return report;
}

TheoremReport check_theorem3(const SparseOperator& a, const DenseMatrix& rho_inf, const SparseOperator& hamiltonian,
                             const LindbladSet& jumps, double tol) {
  TheoremReport report;
  report.theorem = "theorem3";
  report.tolerance = tol;
  const Lindbladian lindblad(hamiltonian, jumps);
  report.add("stationarity: |L(rho_inf)|", lindblad(rho_inf).norm(), tol);

  const DenseMatrix x = a.matrix() * rho_inf;
  const double xnorm = x.norm();
  if (xnorm <= 1e-12 * std::max(1.0, a.norm() * rho_inf.norm())) {
    report.add("nontrivial: |A rho_inf| > 0", xnorm, 0.0, "vacuous: A annihilates the stationary state");
    report.notes.push_back("vacuous");
    return report;
  }
  const DenseMatrix c = commutator(hamiltonian, a).matrix() * rho_inf;
  const Complex lambda = hs_inner(x, c) / (xnorm * xnorm);
  report.add("[H,A] rho_inf = lambda A rho_inf", (c - lambda * x).norm(), tol,
             fmt("lambda = %.12g%+.3gi", lambda.real(), lambda.imag()));
  report.add("lambda real: |Im lambda|", std::abs(lambda.imag()), tol);
  for (std::size_t k = 0; k < jumps.size(); ++k) {
    const SparseOperator& l = jumps.ops[k];
    const double r1 = (commutator(l, a).matrix() * rho_inf).norm();
    const double r2 = (commutator(l.adjoint(), a).matrix() * (l.matrix() * rho_inf)).norm();
    report.add("[L_" + std::to_string(k) + ",A] rho_inf = 0", r1, tol);
    report.add("[L_" + std::to_string(k) + "^dag,A] L_" + std::to_string(k) + " rho_inf = 0", r2, tol);
  }
  const Complex eigenvalue = -kI * lambda;
  const double residual = (lindblad(x) - eigenvalue * x).norm();
  report.add("eigenmode: |L(A rho_inf) + i lambda A rho_inf|", residual, tol);
  report.predictions.push_back({"A rho_inf", eigenvalue, residual, "eigenvalue = -i lambda"});
  return report;
}

CorollaryPremise corollary1_premise(const SparseOperator& a, const DenseMatrix& rho_inf,
                                    const SparseOperator& hamiltonian, const LindbladSet& jumps) {
  CorollaryPremise p;
  const SparseOperator ha = commutator(hamiltonian, a);
  const double an = a.norm();
  if (an == 0.0) throw std::invalid_argument("corollary1: A is the zero operator");
  const DenseMatrix ad = a.dense();
  p.lambda = hs_inner(ad, ha.dense()) / (an * an);
  p.commutator_h = (ha - p.lambda * a).norm();
  for (const auto& l : jumps.ops) {
    p.commutator_l = std::max(p.commutator_l, commutator(l, a).norm());
    p.commutator_ldag = std::max(p.commutator_ldag, commutator(l.adjoint(), a).norm());
  }
  p.stationarity = Lindbladian(hamiltonian, jumps)(rho_inf).norm();
  return p;
}

CorollaryMode build_corollary1_modes(const SparseOperator& a, const DenseMatrix& rho_inf, int n, int m,
                                     const SparseOperator& hamiltonian, const LindbladSet& jumps, double tol) {
  if (n < 0 || m < 0) throw std::invalid_argument("corollary1: powers must be non-negative");
  const CorollaryPremise p = corollary1_premise(a, rho_inf, hamiltonian, jumps);
  const double worst = std::max({p.commutator_h, p.commutator_l, p.commutator_ldag, p.stationarity,
                                 std::abs(p.lambda.imag())});
  if (worst >= tol) {
    throw std::runtime_error(fmt("corollary1: premise fails (largest residual %.3g >= tol %.3g)", worst, tol));
  }
  CorollaryMode mode;
  mode.n = n;
  mode.m = m;
  mode.lambda = p.lambda.real();
  mode.eigenvalue = -kI * mode.lambda * static_cast<double>(n - m);
  DenseMatrix rho = rho_inf;
  for (int i = 0; i < n; ++i) rho = a.matrix() * rho;
  const SparseMatrix adag = a.matrix().adjoint();
  for (int i = 0; i < m; ++i) rho = rho * adag;
  mode.rho = std::move(rho);
  const double norm = mode.rho.norm();
  if (norm <= 1e-12 * std::max(1.0, rho_inf.norm())) {
    mode.annihilated = true;
    return mode;
  }
  const DenseMatrix lr = Lindbladian(hamiltonian, jumps)(mode.rho);
  mode.residual = (lr - mode.eigenvalue * mode.rho).norm() / norm;
  return mode;
}

namespace {

struct SpectralProjectors {
  std::vector<double> labels;
  std::vector<DenseMatrix> projectors;
};

SpectralProjectors spectral_projectors(const DenseMatrix& herm) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(0.5 * (herm + herm.adjoint()));
  const Eigen::VectorXd& w = eig.eigenvalues();
  const double width = 1e-8 * std::max(1.0, w.cwiseAbs().maxCoeff());
  SpectralProjectors out;
  Eigen::Index start = 0;
  while (start < w.size()) {
    Eigen::Index stop = start + 1;
    while (stop < w.size() && w(stop) - w(stop - 1) <= width) ++stop;
    const DenseMatrix v = eig.eigenvectors().middleCols(start, stop - start);
    out.labels.push_back(w.segment(start, stop - start).mean());
    out.projectors.push_back(v * v.adjoint());
    start = stop;
  }
  return out;
}

}  // namespace

MultiblockReport verify_multiblock(const DenseMatrix& mode, const SymmetrySet& sym, double tol) {
  if (sym.n_total.space().local_dim() != 4) {
    throw DimensionError("verify_multiblock: expects a Hubbard space (local_dim 4)");
  }
  const Eigen::Index d = sym.n_total.dim();
  require_dense_dim(d, "verify_multiblock");
  if (mode.rows() != d || mode.cols() != d) throw DimensionError("verify_multiblock: mode has the wrong shape");

  const SpectralProjectors spin = spectral_projectors((sym.s_plus * sym.s_minus).dense());
  const SpectralProjectors number = spectral_projectors(sym.n_total.dense());
  MultiblockReport r;
  r.spin_labels = spin.labels;
  r.number_labels = number.labels;
  DenseMatrix sum = DenseMatrix::Zero(d, d);
  for (const auto& p : spin.projectors) sum += p;
  r.spin_completeness = (sum - DenseMatrix::Identity(d, d)).norm();
  sum.setZero();
  for (const auto& p : number.projectors) sum += p;
  r.number_completeness = (sum - DenseMatrix::Identity(d, d)).norm();

  const double mnorm = mode.norm();
  if (mnorm == 0.0) return r;
  for (std::size_t a = 0; a < spin.projectors.size(); ++a) {
    for (std::size_t b = 0; b < number.projectors.size(); ++b) {
      const DenseMatrix q = spin.projectors[a] * number.projectors[b];
      const double w = (q * mode * q).norm() / mnorm;
      if (w > tol) r.diagonal_blocks.push_back({spin.labels[a], number.labels[b], w});
    }
  }
  std::size_t spin_diag_blocks = 0;
  for (std::size_t a = 0; a < spin.projectors.size(); ++a) {
    for (std::size_t b = 0; b < spin.projectors.size(); ++b) {
      const double w = (spin.projectors[a] * mode * spin.projectors[b]).norm() / mnorm;
      if (w <= tol) continue;
      if (a == b) {
        ++spin_diag_blocks;
      } else {
        r.spin_offdiagonal.push_back({spin.labels[a], spin.labels[b], w});
      }
    }
  }
  for (std::size_t a = 0; a < number.projectors.size(); ++a) {
    for (std::size_t b = 0; b < number.projectors.size(); ++b) {
      if (a == b) continue;
      const double w = (number.projectors[a] * mode * number.projectors[b]).norm() / mnorm;
      if (w > tol) r.number_offdiagonal.push_back({number.labels[a], number.labels[b], w});
    }
  }
  r.single_spin_block = spin_diag_blocks == 1 && r.spin_offdiagonal.empty();
  r.single_block = r.diagonal_blocks.size() == 1 && r.spin_offdiagonal.empty() && r.number_offdiagonal.empty();
  return r;
}

TheoremReport verify_theorem2_modes(const SpectrumResult& spec, const std::vector<std::size_t>& indices,
                                    const std::vector<DarkState>& darks, double tol) {
  if (!spec.has_vectors()) {
    throw std::invalid_argument("verify_theorem2: eigenvectors were not retained for this spectrum");
  }
  TheoremReport report;
  report.theorem = "theorem2";
  report.tolerance = tol;
  if (indices.empty()) {
    report.notes.push_back("no modes to check");
    return report;
  }
  const Eigen::Index d2 = spec.right_eigenvectors.front().size();
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(d2))));
  const DenseMatrix dbasis = dark_basis(darks, d);

  for (std::size_t idx : indices) {
    const DenseMatrix rho = devectorize(spec.right_eigenvectors.at(idx), d);
    linalg::Svd s = linalg::svd(rho);
    const double ratio = s.singular_values.size() > 1 ? s.singular_values(1) / s.singular_values(0) : 0.0;
    const ComplexVector u = s.u.col(0);
    const ComplexVector v = s.v.col(0);
    double span_res = 1.0;
    std::string pair_note;
    if (dbasis.cols() > 0) {
      const double ru = (u - dbasis * (dbasis.adjoint() * u)).norm();
      const double rv = (v - dbasis * (dbasis.adjoint() * v)).norm();
      span_res = std::max(ru, rv);
      std::size_t best_u = 0;
      std::size_t best_v = 0;
      double ou = -1.0;
      double ov = -1.0;
      for (std::size_t k = 0; k < darks.size(); ++k) {
        const double a = std::abs(darks[k].vector.dot(u));
        const double b = std::abs(darks[k].vector.dot(v));
        if (a > ou) {
          ou = a;
          best_u = k;
        }
        if (b > ov) {
          ov = b;
          best_v = k;
        }
      }
      pair_note = "factors onto dark pair (" + std::to_string(best_u) + "," + std::to_string(best_v) + ")" +
                  fmt(" with overlaps %.12g, %.12g", ou, ov);
    }
    const std::string tag = "mode " + std::to_string(idx);
    report.add(tag + ": rank one (s2/s1)", ratio, tol);
    report.add(tag + ": factors in dark span", span_res, tol);
    report.predictions.push_back({tag, spec.eigenvalues[idx], 0.0, pair_note});
  }
  return report;
}

TheoremReport verify_theorem2_conclusion(const SpectrumResult& spec, const ClassifiedSpectrum& cls,
                                         const std::vector<DarkState>& darks, double tol) {
  return verify_theorem2_modes(spec, cls.oscillating, darks, tol);
}

InvariantSearchResult search_invariant_subspace(const SparseOperator& hamiltonian, const LindbladSet& jumps,
                                                const std::vector<DarkState>& darks, int trials,
                                                std::uint64_t seed, InvarianceSet set, double tol) {
  const Eigen::Index d = hamiltonian.dim();
  require_dense_dim(d, "search_invariant_subspace");
  InvariantSearchResult result;
  result.verdict = "not falsified";

  std::vector<DenseMatrix> ops;
  for (const auto& l : jumps.ops) ops.push_back(l.dense());
  if (set == InvarianceSet::kJumpsAndEffective) {
    DenseMatrix eff = kI * hamiltonian.dense();
    for (const auto& l : jumps.ops) eff += (l.adjoint() * l).dense();
    ops.push_back(std::move(eff));
  }
  if (ops.empty()) return result;
  std::vector<double> scales;
  for (const auto& o : ops) scales.push_back(std::max(1.0, o.norm()));

  const DenseMatrix complement = linalg::orthogonal_complement(dark_basis(darks, d), d);
  if (complement.cols() == 0) return result;

  auto invariance = [&](const DenseMatrix& basis) {
    double worst = 0.0;
    for (std::size_t k = 0; k < ops.size(); ++k) {
      const DenseMatrix image = ops[k] * basis;
      worst = std::max(worst, (image - basis * (basis.adjoint() * image)).norm() / scales[k]);
    }
    return worst;
  };
  auto try_candidate = [&](DenseMatrix basis) {
    if (basis.cols() == 0) return false;
    Eigen::HouseholderQR<DenseMatrix> qr(basis);
    basis = qr.householderQ() * DenseMatrix::Identity(basis.rows(), basis.cols());
    const double r = invariance(basis);
    if (r < tol) {
      result.subspace = std::move(basis);
      result.invariance_residual = r;
      result.verdict = "found";
      return true;
    }
    return false;
  };

  // The whole complement is only a meaningful candidate when D is nontrivial.
  if (!darks.empty() && try_candidate(complement)) return result;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  for (int t = 0; t < trials; ++t) {
    result.trials_run = t + 1;
    DenseMatrix combo = DenseMatrix::Zero(d, d);
    for (const auto& o : ops) {
      const double re = normal(rng);
      const double im = normal(rng);
      combo += Complex(re, im) * o;
    }
    // Kernel of the combination inside D⊥: mapped to zero, hence invariant
    // under it.
    const DenseMatrix ker = kernel_abs(combo * complement, tol * combo.norm());
    if (ker.cols() > 0) {
      if (try_candidate(complement * ker)) return result;
      for (Eigen::Index j = 0; j < ker.cols(); ++j) {
        if (try_candidate(complement * ker.col(j))) return result;
      }
    }
    const DenseMatrix compressed = complement.adjoint() * combo * complement;
    linalg::GeneralEigen eig = linalg::eig_general(compressed, true);
    for (Eigen::Index j = 0; j < eig.vectors.cols(); ++j) {
      if (try_candidate(complement * eig.vectors.col(j))) return result;
    }
    Eigen::ComplexSchur<DenseMatrix> schur(compressed);
    for (Eigen::Index k = 1; k < compressed.cols(); ++k) {
      if (try_candidate(complement * schur.matrixU().leftCols(k))) return result;
    }
  }
  return result;
}

}  // namespace opencoh
