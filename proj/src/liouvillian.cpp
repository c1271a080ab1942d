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

#include "opencoh/liouvillian.hpp"

#include <stdexcept>
#include <string>

namespace opencoh {

namespace {

using Triplet = Eigen::Triplet<Complex>;

// (a ⊗ b) entries appended to `out` with a scalar prefactor.
void append_kron(const SparseMatrix& a, const SparseMatrix& b, Complex scale, std::vector<Triplet>& out) {
  for (Eigen::Index ca = 0; ca < a.outerSize(); ++ca) {
    for (SparseMatrix::InnerIterator ia(a, ca); ia; ++ia) {
      for (Eigen::Index cb = 0; cb < b.outerSize(); ++cb) {
        for (SparseMatrix::InnerIterator ib(b, cb); ib; ++ib) {
          out.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                           scale * ia.value() * ib.value());
        }
      }
    }
  }
}

}  // namespace

Lindbladian::Lindbladian(SparseOperator hamiltonian, LindbladSet jumps)
    : hamiltonian_(std::move(hamiltonian)), jumps_(std::move(jumps)) {
  jumps_.check_space(hamiltonian_.space());
  SparseMatrix decay(dim(), dim());
  for (const auto& l : jumps_.ops) {
    SparseMatrix ld = l.matrix().adjoint();
    decay += ld * l.matrix();
    jump_adjoints_.push_back(std::move(ld));
  }
  effective_ = hamiltonian_.matrix() - kI * decay;
  effective_.makeCompressed();
  effective_adjoint_ = effective_.adjoint();
}

DenseMatrix Lindbladian::operator()(const DenseMatrix& rho) const {
  if (rho.rows() != dim() || rho.cols() != dim()) {
    throw DimensionError("Lindbladian: density matrix is " + std::to_string(rho.rows()) + "x" +
                         std::to_string(rho.cols()) + ", expected dim " + std::to_string(dim()));
  }
  // −i(H_eff ρ − ρ H_eff†) with H_eff = H − iK reproduces −i[H,ρ] − {K,ρ}.
  DenseMatrix out = -kI * (effective_ * rho);
  out.noalias() += kI * (rho * effective_adjoint_);
  for (std::size_t k = 0; k < jumps_.ops.size(); ++k) {
    DenseMatrix lr = jumps_.ops[k].matrix() * rho;
    out.noalias() += 2.0 * (lr * jump_adjoints_[k]);
  }
  return out;
}

const SparseMatrix& Superoperator::explicit_matrix() const {
  if (!matrix) {
    throw std::logic_error("superoperator for dim " + std::to_string(dim()) +
                           " was assembled matrix-free; no explicit matrix available");
  }
  return *matrix;
}

Superoperator assemble_superoperator(const SparseOperator& hamiltonian, const LindbladSet& jumps,
                                     const AssemblyOptions& opts) {
  Lindbladian gen(hamiltonian, jumps);
  const Eigen::Index d = hamiltonian.dim();
  if (d > opts.explicit_dim_cap) {
    if (opts.require_matrix) {
      throw DimensionError("assemble_superoperator: d = " + std::to_string(d) +
                           " exceeds the explicit-matrix cap " + std::to_string(opts.explicit_dim_cap));
    }
    return {std::move(gen), std::nullopt};
  }
  SparseMatrix id(d, d);
  id.setIdentity();
  const SparseMatrix& h = hamiltonian.matrix();
  std::vector<Triplet> entries;
  append_kron(id, h, -kI, entries);
  append_kron(SparseMatrix(h.transpose()), id, kI, entries);
  for (const auto& op : jumps.ops) {
    const SparseMatrix& l = op.matrix();
    const SparseMatrix ll = SparseMatrix(l.adjoint()) * l;
    append_kron(SparseMatrix(l.conjugate()), l, 2.0, entries);
    append_kron(id, ll, -1.0, entries);
    append_kron(SparseMatrix(ll.transpose()), id, -1.0, entries);
  }
  SparseMatrix s(d * d, d * d);
  s.setFromTriplets(entries.begin(), entries.end());
  s.prune([](Eigen::Index, Eigen::Index, const Complex& v) { return v != Complex(0.0); });
  s.makeCompressed();
  return {std::move(gen), std::move(s)};
}

DenseMatrix apply_lindbladian(const SparseOperator& hamiltonian, const LindbladSet& jumps,
                              const DenseMatrix& rho) {
  return Lindbladian(hamiltonian, jumps)(rho);
}

ComplexVector apply_matrix_free(const Superoperator& s, const ComplexVector& vec_rho) {
  const Eigen::Index d = s.dim();
  if (vec_rho.size() != d * d) {
    throw DimensionError("apply_matrix_free: vector length " + std::to_string(vec_rho.size()) +
                         " != d^2 = " + std::to_string(d * d));
  }
  return vectorize(s.generator(devectorize(vec_rho, d)));
}

ComplexVector vectorize(const DenseMatrix& rho) {
  return Eigen::Map<const ComplexVector>(rho.data(), rho.size());
}

DenseMatrix devectorize(const ComplexVector& v, Eigen::Index dim) {
  if (v.size() != dim * dim) {
    throw DimensionError("devectorize: length " + std::to_string(v.size()) + " is not " +
                         std::to_string(dim) + "^2");
  }
  return Eigen::Map<const DenseMatrix>(v.data(), dim, dim);
}

}  // namespace opencoh
