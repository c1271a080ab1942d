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

#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "opencoh/liouvillian.hpp"

namespace opencoh {

/// Eigenvalues of a Liouvillian, sorted by (Re, Im). Right eigenvectors
/// and residuals ‖Sv − λv‖/‖v‖ are present only when retained.
struct SpectrumResult {
  std::vector<Complex> eigenvalues;
  std::vector<ComplexVector> right_eigenvectors;
  std::vector<double> residuals;

  bool has_vectors() const { return !right_eigenvectors.empty(); }
  std::size_t size() const { return eigenvalues.size(); }
};

enum class ModeClass { kStationary, kOscillating, kDecaying };
std::string to_string(ModeClass c);

struct ClassifiedSpectrum {
  std::vector<std::size_t> stationary;
  std::vector<std::size_t> oscillating;
  std::vector<std::size_t> decaying;
  std::vector<ModeClass> labels;  // per eigenvalue
  double scale = 1.0;
  double tol_zero = 0.0;
  double tol_re = 0.0;
};

enum class VectorRetention { kAuto, kAlways, kNever };

struct SpectrumOptions {
  /// kAuto keeps eigenvectors for d <= 16 only.
  VectorRetention vectors = VectorRetention::kAuto;
  /// Largest superoperator dimension d² for the dense path.
  Eigen::Index dense_cap = 4096;
};

/// Complete spectrum through a dense general eigensolve of the explicit
/// superoperator. Throws DimensionError above the dense cap.
SpectrumResult full_spectrum(const Superoperator& s, const SpectrumOptions& opts = {});

/// max |λ| over the spectrum, or 1 when it is empty or identically zero.
double spectral_scale(std::span<const Complex> eigenvalues);

/// Stationary: |λ| <= rel_zero·scale. Oscillating: |Re λ| <= rel_re·scale and
/// |Im λ| > rel_zero·scale. Everything else decays.
ClassifiedSpectrum classify_eigenvalues(const SpectrumResult& spec, double rel_zero = 1e-8,
                                        double rel_re = 1e-8);

/// Sorted distinct |Im λ| over the oscillating class; values closer than
/// rel_dedup·scale are merged.
std::vector<double> distinct_oscillation_frequencies(const SpectrumResult& spec,
                                                     const ClassifiedSpectrum& cls,
                                                     double rel_dedup = 1e-6);

/// Largest distance between an eigenvalue and the conjugate it is paired
/// with under a greedy nearest-neighbour matching of {λ} against {λ*}.
double conjugation_mismatch(std::span<const Complex> eigenvalues);

/// Eigenvalue in `eigenvalues` closest to `target`.
Complex nearest_eigenvalue(std::span<const Complex> eigenvalues, Complex target);

struct ScanEntry {
  int n = 0;
  std::optional<std::size_t> count;
  std::vector<double> frequencies;
  std::string note;  // reason when skipped
};

/// Distinct oscillating frequencies of the single-loss XXZ ring for each n.
/// Sizes beyond the dense cap are reported as skipped. Entries are
/// independent and may be computed on `threads` workers; output order
/// follows `ns`.
std::vector<ScanEntry> imaginary_count_scan(std::span<const int> ns, double delta, double gamma,
                                            int threads = 1);

/// "re,im,class,residual" rows in canonical order. The residual column is
/// empty when eigenvectors were not retained.
void write_spectrum_csv(std::ostream& os, const SpectrumResult& spec, const ClassifiedSpectrum& cls);

struct TargetedOptions {
  std::vector<Complex> shifts;  // usually points i·ω on the imaginary axis
  int nev = 16;                 // eigenvalues wanted per shift
  int krylov_dim = 48;
  int max_restarts = 60;
  double tol = 1e-10;  // on ‖Sv − λv‖ / ‖v‖
  bool split_blocks = true;
  /// Blocks up to this size are solved densely instead of by Arnoldi.
  Eigen::Index dense_block_limit = 512;
};

/// Eigenvalues nearest to each shift by shift-invert Arnoldi on the sparse
/// superoperator (sparse LU of S − σ). With split_blocks the matrix is first
/// separated into its decoupled diagonal blocks (connected components of the
/// sparsity graph). Only converged pairs are returned, deduplicated, sorted.
SpectrumResult targeted_spectrum(const Superoperator& s, const TargetedOptions& opts);

}  // namespace opencoh
