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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseLU>

#include "opencoh/linalg.hpp"
#include "opencoh/spectral.hpp"

namespace opencoh {

namespace {

using Index = Eigen::Index;

// Blocks small enough to diagonalise densely instead of factorising.

// Connected components of the symmetric sparsity pattern of m.
std::vector<std::vector<Index>> decoupled_blocks(const SparseMatrix& m) {
  const Index n = m.rows();
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (Index c = 0; c < m.outerSize(); ++c) {
    for (SparseMatrix::InnerIterator it(m, c); it; ++it) {
      const Index a = find(it.row());
      const Index b = find(it.col());
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Index>> blocks;
  std::vector<Index> label(n, -1);
  for (Index i = 0; i < n; ++i) {
    const Index r = find(i);
    if (label[r] < 0) {
      label[r] = static_cast<Index>(blocks.size());
      blocks.emplace_back();
    }
    blocks[label[r]].push_back(i);
  }
  return blocks;
}

SparseMatrix extract_block(const SparseMatrix& m, const std::vector<Index>& idx) {
  std::vector<Index> local(m.rows(), -1);
  for (std::size_t k = 0; k < idx.size(); ++k) local[idx[k]] = static_cast<Index>(k);
  std::vector<Eigen::Triplet<Complex>> entries;
  for (Index col : idx) {
    for (SparseMatrix::InnerIterator it(m, col); it; ++it) {
      entries.emplace_back(local[it.row()], local[col], it.value());
    }
  }
  SparseMatrix b(static_cast<Index>(idx.size()), static_cast<Index>(idx.size()));
  b.setFromTriplets(entries.begin(), entries.end());
  b.makeCompressed();
  return b;
}

// Swap adjacent diagonal entries k, k+1 of the upper-triangular t, updating z.
void swap_schur(DenseMatrix& t, DenseMatrix& z, Index k) {
  const Complex a = t(k, k);
  const Complex b = t(k + 1, k + 1);
  const Complex c = t(k, k + 1);
  Eigen::Vector2cd v(c, b - a);
  const double nv = v.norm();
  if (nv == 0.0) return;
  v /= nv;
  Eigen::Matrix2cd q;
  q << v(0), -std::conj(v(1)), v(1), std::conj(v(0));
  t.middleCols(k, 2) = t.middleCols(k, 2) * q;
  t.middleRows(k, 2) = q.adjoint() * t.middleRows(k, 2);
  z.middleCols(k, 2) = z.middleCols(k, 2) * q;
  t(k + 1, k) = 0.0;
}

struct RitzPair {
  Complex value;
  ComplexVector vector;
  double residual;
};

// Krylov–Schur iteration for the eigenvalues of `b` nearest `shift`.
std::vector<RitzPair> shift_invert_krylov_schur(const SparseMatrix& b, Complex shift, const TargetedOptions& opts) {
  const Index n = b.rows();
  const Index nev = std::min<Index>(opts.nev, n - 1);
  const Index m = std::min<Index>(std::max<Index>(opts.krylov_dim, 2 * nev + 1), n);

  // A shift sitting exactly on an eigenvalue makes S − σ singular; nudge it
  // off the axis and retry.
  Eigen::SparseLU<SparseMatrix> lu;
  const Complex nudge = 1e-7 * std::max(1.0, std::abs(shift)) * Complex(1.0, 1.0);
  for (int attempt = 0;; ++attempt) {
    SparseMatrix shifted = b;
    for (Index i = 0; i < n; ++i) shifted.coeffRef(i, i) -= shift;
    shifted.makeCompressed();
    lu.compute(shifted);
    if (lu.info() == Eigen::Success) break;
    if (attempt == 3) {
      throw std::runtime_error("targeted_spectrum: sparse LU of (S - sigma) failed near sigma = " +
                               std::to_string(shift.real()) + " + " + std::to_string(shift.imag()) + "i");
    }
    shift += nudge * std::pow(10.0, attempt);
  }

  DenseMatrix v = DenseMatrix::Zero(n, m + 1);
  DenseMatrix h = DenseMatrix::Zero(m + 1, m);
  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> normal;
  for (Index i = 0; i < n; ++i) v(i, 0) = Complex(normal(rng), normal(rng));
  v.col(0).normalize();

  Index kept = 0;
  std::vector<RitzPair> result;
  for (int restart = 0; restart <= opts.max_restarts; ++restart) {
    for (Index j = kept; j < m; ++j) {
      ComplexVector w = lu.solve(v.col(j));
      for (int pass = 0; pass < 2; ++pass) {
        ComplexVector coef = v.leftCols(j + 1).adjoint() * w;
        w -= v.leftCols(j + 1) * coef;
        h.col(j).head(j + 1) += coef;
      }
      const double beta = w.norm();
      h(j + 1, j) = beta;
      if (beta < 1e-14) {
        // Invariant subspace: continue with a fresh orthogonal direction.
        ComplexVector r(n);
        for (Index i = 0; i < n; ++i) r(i) = Complex(normal(rng), normal(rng));
        for (int pass = 0; pass < 2; ++pass) r -= v.leftCols(j + 1) * (v.leftCols(j + 1).adjoint() * r);
        v.col(j + 1) = r.normalized();
        h(j + 1, j) = 0.0;
      } else {
        v.col(j + 1) = w / beta;
      }
    }

    Eigen::ComplexSchur<DenseMatrix> schur(h.topRows(m));
    DenseMatrix t = schur.matrixT();
    DenseMatrix z = schur.matrixU();
    // Bubble the largest |theta| (nearest the shift) to the front.
    for (Index i = 0; i < m; ++i) {
      Index best = i;
      for (Index k = i + 1; k < m; ++k) {
        if (std::abs(t(k, k)) > std::abs(t(best, best))) best = k;
      }
      for (Index k = best; k > i; --k) swap_schur(t, z, k - 1);
    }

    // Ritz pairs of the wanted block.
    Eigen::ComplexEigenSolver<DenseMatrix> small(t.topLeftCorner(nev, nev));
    result.clear();
    Index converged = 0;
    const DenseMatrix basis = v.leftCols(m) * z.leftCols(nev);
    for (Index i = 0; i < nev; ++i) {
      const Complex theta = small.eigenvalues()(i);
      if (std::abs(theta) == 0.0) continue;
      ComplexVector x = basis * small.eigenvectors().col(i);
      x.normalize();
      const Complex lambda = shift + 1.0 / theta;
      const double res = (b * x - lambda * x).norm();
      if (res <= opts.tol) ++converged;
      result.push_back({lambda, std::move(x), res});
    }
    if (converged >= nev || restart == opts.max_restarts) break;

    const Index keep = std::min<Index>(m - 1, nev + (m - nev) / 2);
    const ComplexVector tail = h(m, m - 1) * z.row(m - 1).transpose();
    DenseMatrix new_v = DenseMatrix::Zero(n, m + 1);
    new_v.leftCols(keep) = v.leftCols(m) * z.leftCols(keep);
    new_v.col(keep) = v.col(m);
    v = std::move(new_v);
    h.setZero();
    h.topLeftCorner(keep, keep) = t.topLeftCorner(keep, keep);
    h.row(keep).head(keep) = tail.head(keep).transpose();
    kept = keep;
  }
  std::erase_if(result, [&](const RitzPair& p) { return p.residual > opts.tol; });
  return result;
}

}  // namespace

SpectrumResult targeted_spectrum(const Superoperator& s, const TargetedOptions& opts) {
  if (opts.shifts.empty()) throw std::invalid_argument("targeted_spectrum: no shifts given");
  if (opts.nev < 1 || opts.krylov_dim < 3) throw std::invalid_argument("targeted_spectrum: bad Krylov sizes");
  const SparseMatrix& full = s.explicit_matrix();
  const Index n = full.rows();

  std::vector<std::vector<Index>> blocks;
  if (opts.split_blocks) {
    blocks = decoupled_blocks(full);
  } else {
    blocks.emplace_back(n);
    std::iota(blocks.front().begin(), blocks.front().end(), Index{0});
  }

  // Candidates stay block-local until the global selection below.
  struct Found {
    Complex value;
    ComplexVector local;
    double residual;
    std::size_t block;
  };
  std::vector<Found> found;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const auto& idx = blocks[bi];
    const SparseMatrix b = extract_block(full, idx);
    const Index bn = b.rows();
    if (bn <= opts.dense_block_limit) {
      linalg::GeneralEigen eig = linalg::eig_general(DenseMatrix(b), true);
      std::vector<Index> order(eig.values.size());
      std::iota(order.begin(), order.end(), Index{0});
      std::vector<bool> taken(eig.values.size(), false);
      for (Complex shift : opts.shifts) {
        std::sort(order.begin(), order.end(), [&](Index a, Index c) {
          return std::abs(eig.values[a] - shift) < std::abs(eig.values[c] - shift);
        });
        for (Index k = 0; k < std::min<Index>(opts.nev, bn); ++k) {
          if (taken[order[k]]) continue;
          ComplexVector x = eig.vectors.col(order[k]).normalized();
          const double res = (b * x - eig.values[order[k]] * x).norm();
          if (res <= opts.tol) {
            taken[order[k]] = true;
            found.push_back({eig.values[order[k]], std::move(x), res, bi});
          }
        }
      }
      continue;
    }
    for (Complex shift : opts.shifts) {
      for (auto& p : shift_invert_krylov_schur(b, shift, opts)) {
        found.push_back({p.value, std::move(p.vector), p.residual, bi});
      }
    }
  }

  // Keep the nev candidates nearest to each shift over all blocks.
  std::vector<bool> keep(found.size(), false);
  std::vector<std::size_t> order(found.size());
  for (Complex shift : opts.shifts) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
      return std::abs(found[a].value - shift) < std::abs(found[c].value - shift);
    });
    for (std::size_t k = 0; k < std::min<std::size_t>(static_cast<std::size_t>(opts.nev), order.size()); ++k) {
      keep[order[k]] = true;
    }
  }
  std::vector<Found> selected;
  for (std::size_t k = 0; k < found.size(); ++k) {
    if (keep[k]) selected.push_back(std::move(found[k]));
  }
  std::stable_sort(selected.begin(), selected.end(), [](const Found& a, const Found& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });

  SpectrumResult out;
  const double dedup = 1e-9 * std::max(1.0, full.norm() / std::sqrt(static_cast<double>(n)));
  std::vector<std::size_t> kept_blocks;
  std::vector<ComplexVector> kept_local;
  for (auto& f : selected) {
    bool duplicate = false;
    // Same eigenvalue and numerically parallel eigenvector: counted once.
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (kept_blocks[k] == f.block && std::abs(out.eigenvalues[k] - f.value) <= dedup &&
          std::abs(kept_local[k].dot(f.local)) > 1.0 - 1e-8) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    out.eigenvalues.push_back(f.value);
    out.residuals.push_back(f.residual);
    kept_blocks.push_back(f.block);
    kept_local.push_back(std::move(f.local));
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto& idx = blocks[kept_blocks[k]];
    ComplexVector y = ComplexVector::Zero(n);
    for (std::size_t j = 0; j < idx.size(); ++j) y(idx[j]) = kept_local[k](static_cast<Index>(j));
    out.right_eigenvectors.push_back(std::move(y));
  }
  return out;
}

}  // namespace opencoh
