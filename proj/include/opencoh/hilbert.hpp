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

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace opencoh {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

inline constexpr Complex kI{0.0, 1.0};

/// Largest Hilbert-space dimension any builder will accept.
inline constexpr std::int64_t kMaxHilbertDim = std::int64_t{1} << 16;

/// Dense d x d algebra (SVDs, Hermitian eigensolves) is refused above this.
inline constexpr Eigen::Index kDenseDimCap = 4096;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Tensor product of `n_sites` identical local spaces. Site 1 is the
/// most-significant factor of the basis index.
class HilbertSpace {
 public:
  HilbertSpace(int n_sites, int local_dim, std::int64_t max_dim = kMaxHilbertDim);

  int n_sites() const { return n_sites_; }
  int local_dim() const { return local_dim_; }
  Eigen::Index dim() const { return dim_; }

  bool operator==(const HilbertSpace&) const = default;

 private:
  int n_sites_;
  int local_dim_;
  Eigen::Index dim_;
};

/// Complex sparse operator on a HilbertSpace. Entries with magnitude at or
/// below the drop tolerance are never stored.
class SparseOperator {
 public:
  SparseOperator(HilbertSpace space, SparseMatrix matrix, double drop_tol = 0.0);

  static SparseOperator identity(const HilbertSpace& space);
  static SparseOperator zero(const HilbertSpace& space);
  static SparseOperator from_dense(const HilbertSpace& space, const DenseMatrix& m,
                                   double drop_tol = 0.0);

  const HilbertSpace& space() const { return space_; }
  const SparseMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return space_.dim(); }
  Eigen::Index nnz() const { return matrix_.nonZeros(); }

  DenseMatrix dense() const { return DenseMatrix(matrix_); }
  SparseOperator adjoint() const;
  ComplexVector apply(const ComplexVector& v) const;

  /// Frobenius norm.
  double norm() const;
  bool is_hermitian(double tol = 0.0) const;

  SparseOperator& operator+=(const SparseOperator& other);
  SparseOperator& operator-=(const SparseOperator& other);
  SparseOperator& operator*=(Complex s);

 private:
  HilbertSpace space_;
  SparseMatrix matrix_;
};

SparseOperator operator+(SparseOperator a, const SparseOperator& b);
SparseOperator operator-(SparseOperator a, const SparseOperator& b);
SparseOperator operator-(const SparseOperator& a);
SparseOperator operator*(Complex s, SparseOperator a);
SparseOperator operator*(SparseOperator a, Complex s);
SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);

/// a ⊗ b; both factors must share the local dimension, site counts add.
SparseOperator kron(const SparseOperator& a, const SparseOperator& b);
SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);
SparseOperator anticommutator(const SparseOperator& a, const SparseOperator& b);

ComplexVector apply(const SparseOperator& op, const ComplexVector& v);

enum class LocalOp { kSx, kSy, kSz, kSp, kSm, kIdentity };

/// 2x2 Pauli-type matrices in the basis (|↑⟩, |↓⟩). sp = |↑⟩⟨↓|, sm = |↓⟩⟨↑|.
DenseMatrix local_matrix(LocalOp op);
LocalOp parse_local_op(const std::string& name);

/// 1 ⊗ ... ⊗ local ⊗ ... ⊗ 1 with `local` at 1-based `site`.
SparseOperator site_operator(LocalOp op, int site, const HilbertSpace& space);
SparseOperator site_operator(const DenseMatrix& local, int site, const HilbertSpace& space);

/// Kronecker product with `locals[j]` on site j+1; `locals.size()` must
/// equal n_sites and every entry must be local_dim x local_dim.
SparseOperator site_chain(const std::vector<DenseMatrix>& locals, const HilbertSpace& space);

/// Plain-text coordinate format: a "dim <d>" header followed by one
/// "row col re im" line per stored entry. Values are printed with 17
/// significant digits so that reading back is bit-exact.
void write_coordinate(std::ostream& os, const SparseMatrix& m);
void write_coordinate(std::ostream& os, const DenseMatrix& m);
SparseMatrix read_coordinate(std::istream& is);

}  // namespace opencoh
