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

#include "opencoh/linalg.hpp"

#include <stdexcept>
#include <string>

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace opencoh::linalg {

GeneralEigen eig_general(DenseMatrix a, bool want_vectors) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eig_general: matrix must be square");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  GeneralEigen out;
  if (n == 0) return out;
  std::vector<Complex> w(static_cast<std::size_t>(n));
  DenseMatrix vr;
  if (want_vectors) vr.resize(n, n);
  Complex dummy{};
  const lapack_int info =
      LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', want_vectors ? 'V' : 'N', n, a.data(), n, w.data(), &dummy,
                    1, want_vectors ? vr.data() : &dummy, want_vectors ? n : 1);
  if (info != 0) {
    throw std::runtime_error("zgeev failed with info = " + std::to_string(info) + " on a " +
                             std::to_string(n) + "x" + std::to_string(n) +
                             " matrix (info > 0: QR iteration did not converge)");
  }
  out.values = std::move(w);
  out.vectors = std::move(vr);
  return out;
}

Svd svd(DenseMatrix a) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  const lapack_int k = std::min(m, n);
  Svd out;
  out.singular_values.resize(k);
  out.u.resize(m, k);
  DenseMatrix vh(k, n);
  if (k == 0) {
    out.v.resize(n, 0);
    return out;
  }
  const lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'S', m, n, a.data(), m,
                                         out.singular_values.data(), out.u.data(), m, vh.data(), k);
  if (info != 0) {
    throw std::runtime_error("zgesdd failed with info = " + std::to_string(info));
  }
  out.v = vh.adjoint();
  return out;
}

DenseMatrix null_space(const DenseMatrix& a, double rel_tol) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0 || a.norm() == 0.0) return DenseMatrix::Identity(n, n);
  Svd s = svd(a);
  const double cutoff = rel_tol * s.singular_values(0);
  Eigen::Index rank = 0;
  while (rank < s.singular_values.size() && s.singular_values(rank) > cutoff) ++rank;
  if (a.rows() >= n) return s.v.rightCols(n - rank);
  // Wide matrix: the thin SVD misses part of the kernel, so complete the basis.
  return orthogonal_complement(s.v.leftCols(rank), n);
}

DenseMatrix orthogonal_complement(const DenseMatrix& q, Eigen::Index dim) {
  if (q.cols() == 0) return DenseMatrix::Identity(dim, dim);
  DenseMatrix projector = DenseMatrix::Identity(dim, dim) - q * q.adjoint();
  Svd s = svd(projector);
  const Eigen::Index keep = dim - q.cols();
  return s.u.leftCols(keep);
}

}  // namespace opencoh::linalg
