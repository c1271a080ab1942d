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

#include "opencoh/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "opencoh/linalg.hpp"

namespace opencoh {

namespace {

constexpr double kResidualLimit = 1e-8;

bool canonical_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

std::string to_string(ModeClass c) {
  switch (c) {
    case ModeClass::kStationary:
      return "stationary";
    case ModeClass::kOscillating:
      return "oscillating";
    case ModeClass::kDecaying:
      return "decaying";
  }
  return "unknown";
}

SpectrumResult full_spectrum(const Superoperator& s, const SpectrumOptions& opts) {
  const Eigen::Index d = s.dim();
  if (d * d > opts.dense_cap) {
    throw DimensionError("full_spectrum: superoperator dimension " + std::to_string(d * d) +
                         " exceeds the dense cap " + std::to_string(opts.dense_cap) +
                         "; use targeted_spectrum instead");
  }
  const SparseMatrix& m = s.explicit_matrix();
  const bool want_vectors = opts.vectors == VectorRetention::kAlways ||
                            (opts.vectors == VectorRetention::kAuto && d <= 16);

  linalg::GeneralEigen eig = linalg::eig_general(DenseMatrix(m), want_vectors);

  std::vector<std::size_t> order(eig.values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(eig.values[a], eig.values[b]);
  });

  SpectrumResult out;
  out.eigenvalues.reserve(order.size());
  for (std::size_t i : order) out.eigenvalues.push_back(eig.values[i]);
  if (!want_vectors) return out;

  out.right_eigenvectors.reserve(order.size());
  out.residuals.reserve(order.size());
  double worst = 0.0;
  std::size_t worst_index = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    ComplexVector v = eig.vectors.col(static_cast<Eigen::Index>(order[k]));
    const double r = (m * v - out.eigenvalues[k] * v).norm() / v.norm();
    if (r > worst) {
      worst = r;
      worst_index = k;
    }
    out.right_eigenvectors.push_back(std::move(v));
    out.residuals.push_back(r);
  }
  if (worst > kResidualLimit) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "full_spectrum: eigenpair %zu (lambda = %.6g%+.6gi) has residual %.3g > %.0e",
                  worst_index, out.eigenvalues[worst_index].real(), out.eigenvalues[worst_index].imag(), worst,
                  kResidualLimit);
    throw std::runtime_error(buf);
  }
  return out;
}

double spectral_scale(std::span<const Complex> eigenvalues) {
  double scale = 0.0;
  for (Complex z : eigenvalues) scale = std::max(scale, std::abs(z));
  return scale > 0.0 ? scale : 1.0;
}

ClassifiedSpectrum classify_eigenvalues(const SpectrumResult& spec, double rel_zero, double rel_re) {
  ClassifiedSpectrum out;
  out.scale = spectral_scale(spec.eigenvalues);
  out.tol_zero = rel_zero * out.scale;
  out.tol_re = rel_re * out.scale;
  out.labels.reserve(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const Complex z = spec.eigenvalues[i];
    ModeClass c = ModeClass::kDecaying;
    if (std::abs(z) <= out.tol_zero) {
      c = ModeClass::kStationary;
      out.stationary.push_back(i);
    } else if (std::abs(z.real()) <= out.tol_re && std::abs(z.imag()) > out.tol_zero) {
      c = ModeClass::kOscillating;
      out.oscillating.push_back(i);
    } else {
      out.decaying.push_back(i);
    }
    out.labels.push_back(c);
  }
  return out;
}

std::vector<double> distinct_oscillation_frequencies(const SpectrumResult& spec,
                                                     const ClassifiedSpectrum& cls, double rel_dedup) {
  std::vector<double> freqs;
  freqs.reserve(cls.oscillating.size());
  for (std::size_t i : cls.oscillating) freqs.push_back(std::abs(spec.eigenvalues[i].imag()));
  std::sort(freqs.begin(), freqs.end());
  std::vector<double> distinct;
  const double tol = rel_dedup * cls.scale;
  for (double f : freqs) {
    if (distinct.empty() || f - distinct.back() > tol) distinct.push_back(f);
  }
  return distinct;
}

double conjugation_mismatch(std::span<const Complex> eigenvalues) {
  const std::size_t n = eigenvalues.size();
  std::vector<bool> used(n, false);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex target = std::conj(eigenvalues[i]);
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double dist = std::abs(eigenvalues[j] - target);
      if (dist < best) {
        best = dist;
        best_j = j;
      }
    }
    if (best_j < n) used[best_j] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

Complex nearest_eigenvalue(std::span<const Complex> eigenvalues, Complex target) {
  if (eigenvalues.empty()) throw std::invalid_argument("nearest_eigenvalue: empty spectrum");
  return *std::min_element(eigenvalues.begin(), eigenvalues.end(), [&](Complex a, Complex b) {
    return std::abs(a - target) < std::abs(b - target);
  });
}

std::vector<ScanEntry> imaginary_count_scan(std::span<const int> ns, double delta, double gamma, int threads) {
  std::vector<ScanEntry> entries(ns.size());
  const SpectrumOptions opts{VectorRetention::kNever, 4096};

  auto work = [&](std::size_t i) {
    ScanEntry& e = entries[i];
    e.n = ns[i];
    const double d2 = std::pow(4.0, e.n);
    if (d2 > static_cast<double>(opts.dense_cap)) {
      e.note = "skipped: d^2 = " + std::to_string(static_cast<long long>(d2)) + " exceeds the dense cap " +
               std::to_string(opts.dense_cap) + "; use the targeted path";
      return;
    }
    XxzModel m = build_xxz_ring({e.n, delta, {1}, {gamma}});
    Superoperator s = assemble_superoperator(m.hamiltonian, m.jumps);
    SpectrumResult spec = full_spectrum(s, opts);
    ClassifiedSpectrum cls = classify_eigenvalues(spec);
    e.frequencies = distinct_oscillation_frequencies(spec, cls);
    e.count = e.frequencies.size();
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, ns.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < ns.size(); ++i) work(i);
    return entries;
  }
  std::vector<std::exception_ptr> errors(ns.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < ns.size(); i += workers) {
        try {
          work(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return entries;
}

void write_spectrum_csv(std::ostream& os, const SpectrumResult& spec, const ClassifiedSpectrum& cls) {
  os << "re,im,class,residual\n";
  char buf[160];
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const Complex z = spec.eigenvalues[i];
    if (spec.residuals.empty()) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%s,\n", z.real(), z.imag(), to_string(cls.labels[i]).c_str());
    } else {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%s,%.6e\n", z.real(), z.imag(),
                    to_string(cls.labels[i]).c_str(), spec.residuals[i]);
    }
    os << buf;
  }
}

}  // namespace opencoh
