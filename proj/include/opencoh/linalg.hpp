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

#include <vector>

#include "opencoh/hilbert.hpp"

// Thin wrappers over LAPACK for the dense kernels that dominate runtime.
namespace opencoh::linalg {

struct GeneralEigen {
  std::vector<Complex> values;
  DenseMatrix vectors;  // columns; empty unless requested
};

/// All eigenvalues (and optionally right eigenvectors) of a general complex
/// square matrix. Throws std::runtime_error if the QR iteration fails.
GeneralEigen eig_general(DenseMatrix a, bool want_vectors);

struct Svd {
  Eigen::VectorXd singular_values;  // descending
  DenseMatrix u;                    // m x k
  DenseMatrix v;                    // n x k, k = min(m, n)
};

/// Thin SVD a = u diag(s) v^H.
Svd svd(DenseMatrix a);

/// Orthonormal basis of the numerical kernel of `a`: right singular vectors
/// whose singular value is at or below rel_tol * s_max. An all-zero matrix
/// has the whole space as kernel.
DenseMatrix null_space(const DenseMatrix& a, double rel_tol);

/// Orthonormal basis of the orthogonal complement of span(columns of q),
/// where q has orthonormal columns.
DenseMatrix orthogonal_complement(const DenseMatrix& q, Eigen::Index dim);

}  // namespace opencoh::linalg
