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

#include "opencoh/hilbert.hpp"

#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace opencoh {

namespace {

using Triplet = Eigen::Triplet<Complex>;

SparseMatrix kron_matrix(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  std::vector<Triplet> entries;
  entries.reserve(static_cast<std::size_t>(a.nonZeros()) * static_cast<std::size_t>(b.nonZeros()));
  for (Eigen::Index ca = 0; ca < a.outerSize(); ++ca) {
    for (SparseMatrix::InnerIterator ia(a, ca); ia; ++ia) {
      for (Eigen::Index cb = 0; cb < b.outerSize(); ++cb) {
        for (SparseMatrix::InnerIterator ib(b, cb); ib; ++ib) {
          entries.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                               ia.value() * ib.value());
        }
      }
    }
  }
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

void prune(SparseMatrix& m, double drop_tol) {
  m.prune([drop_tol](Eigen::Index, Eigen::Index, const Complex& v) { return std::abs(v) > drop_tol; });
  m.makeCompressed();
}

void require_same_space(const SparseOperator& a, const SparseOperator& b, const char* what) {
  if (!(a.space() == b.space())) {
    throw DimensionError(std::string(what) + ": operands live on different Hilbert spaces (dim " +
                         std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

HilbertSpace::HilbertSpace(int n_sites, int local_dim, std::int64_t max_dim)
    : n_sites_(n_sites), local_dim_(local_dim), dim_(1) {
  if (n_sites < 1 || local_dim < 1) {
    throw DimensionError("HilbertSpace: n_sites and local_dim must be positive");
  }
  std::int64_t d = 1;
  for (int i = 0; i < n_sites; ++i) {
    if (d > max_dim / local_dim) {
      throw DimensionError("HilbertSpace: " + std::to_string(local_dim) + "^" + std::to_string(n_sites) +
                           " exceeds the dimension cap " + std::to_string(max_dim));
    }
    d *= local_dim;
  }
  dim_ = static_cast<Eigen::Index>(d);
}

SparseOperator::SparseOperator(HilbertSpace space, SparseMatrix matrix, double drop_tol)
    : space_(space), matrix_(std::move(matrix)) {
  if (matrix_.rows() != space_.dim() || matrix_.cols() != space_.dim()) {
    throw DimensionError("SparseOperator: matrix is " + std::to_string(matrix_.rows()) + "x" +
                         std::to_string(matrix_.cols()) + " but the space has dim " +
                         std::to_string(space_.dim()));
  }
  prune(matrix_, drop_tol);
}

SparseOperator SparseOperator::identity(const HilbertSpace& space) {
  SparseMatrix m(space.dim(), space.dim());
  m.setIdentity();
  return {space, std::move(m)};
}

SparseOperator SparseOperator::zero(const HilbertSpace& space) {
  return {space, SparseMatrix(space.dim(), space.dim())};
}

SparseOperator SparseOperator::from_dense(const HilbertSpace& space, const DenseMatrix& m,
                                          double drop_tol) {
  return {space, m.sparseView(), drop_tol};
}

SparseOperator SparseOperator::adjoint() const {
  return {space_, SparseMatrix(matrix_.adjoint())};
}

ComplexVector SparseOperator::apply(const ComplexVector& v) const {
  if (v.size() != dim()) {
    throw DimensionError("apply: vector length " + std::to_string(v.size()) +
                         " does not match operator dim " + std::to_string(dim()));
  }
  return matrix_ * v;
}

double SparseOperator::norm() const { return matrix_.norm(); }

bool SparseOperator::is_hermitian(double tol) const {
  return SparseMatrix(matrix_ - SparseMatrix(matrix_.adjoint())).norm() <= tol;
}

SparseOperator& SparseOperator::operator+=(const SparseOperator& other) {
  require_same_space(*this, other, "add");
  matrix_ += other.matrix_;
  prune(matrix_, 0.0);
  return *this;
}

SparseOperator& SparseOperator::operator-=(const SparseOperator& other) {
  require_same_space(*this, other, "subtract");
  matrix_ -= other.matrix_;
  prune(matrix_, 0.0);
  return *this;
}

SparseOperator& SparseOperator::operator*=(Complex s) {
  matrix_ *= s;
  prune(matrix_, 0.0);
  return *this;
}

SparseOperator operator+(SparseOperator a, const SparseOperator& b) { return a += b; }
SparseOperator operator-(SparseOperator a, const SparseOperator& b) { return a -= b; }
SparseOperator operator-(const SparseOperator& a) { return Complex(-1.0) * a; }
SparseOperator operator*(Complex s, SparseOperator a) { return a *= s; }
SparseOperator operator*(SparseOperator a, Complex s) { return a *= s; }

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  require_same_space(a, b, "multiply");
  return {a.space(), SparseMatrix(a.matrix() * b.matrix())};
}

SparseOperator kron(const SparseOperator& a, const SparseOperator& b) {
  if (a.space().local_dim() != b.space().local_dim()) {
    throw DimensionError("kron: factors have different local dimensions");
  }
  HilbertSpace space(a.space().n_sites() + b.space().n_sites(), a.space().local_dim());
  return {space, kron_matrix(a.matrix(), b.matrix())};
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) { return a * b - b * a; }

SparseOperator anticommutator(const SparseOperator& a, const SparseOperator& b) {
  return a * b + b * a;
}

ComplexVector apply(const SparseOperator& op, const ComplexVector& v) { return op.apply(v); }

DenseMatrix local_matrix(LocalOp op) {
  DenseMatrix m = DenseMatrix::Zero(2, 2);
  switch (op) {
    case LocalOp::kSx:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case LocalOp::kSy:
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case LocalOp::kSz:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    case LocalOp::kSp:
      m(0, 1) = 1.0;
      break;
    case LocalOp::kSm:
      m(1, 0) = 1.0;
      break;
    case LocalOp::kIdentity:
      m.setIdentity();
      break;
  }
  return m;
}

LocalOp parse_local_op(const std::string& name) {
  if (name == "sx") return LocalOp::kSx;
  if (name == "sy") return LocalOp::kSy;
  if (name == "sz") return LocalOp::kSz;
  if (name == "sp") return LocalOp::kSp;
  if (name == "sm") return LocalOp::kSm;
  if (name == "identity") return LocalOp::kIdentity;
  throw std::invalid_argument("unknown local operator '" + name +
                              "' (expected sx, sy, sz, sp, sm or identity)");
}

SparseOperator site_chain(const std::vector<DenseMatrix>& locals, const HilbertSpace& space) {
  if (static_cast<int>(locals.size()) != space.n_sites()) {
    throw DimensionError("site_chain: expected " + std::to_string(space.n_sites()) +
                         " local factors, got " + std::to_string(locals.size()));
  }
  SparseMatrix acc(1, 1);
  acc.insert(0, 0) = 1.0;
  for (const auto& local : locals) {
    if (local.rows() != space.local_dim() || local.cols() != space.local_dim()) {
      throw DimensionError("site_chain: local operator is " + std::to_string(local.rows()) + "x" +
                           std::to_string(local.cols()) + ", local_dim is " +
                           std::to_string(space.local_dim()));
    }
    SparseMatrix l = local.sparseView();
    prune(l, 0.0);
    acc = kron_matrix(acc, l);
  }
  return {space, std::move(acc)};
}

SparseOperator site_operator(const DenseMatrix& local, int site, const HilbertSpace& space) {
  if (site < 1 || site > space.n_sites()) {
    throw DimensionError("site_operator: site " + std::to_string(site) + " outside 1.." +
                         std::to_string(space.n_sites()));
  }
  std::vector<DenseMatrix> locals(space.n_sites(),
                                  DenseMatrix::Identity(space.local_dim(), space.local_dim()));
  locals[site - 1] = local;
  return site_chain(locals, space);
}

SparseOperator site_operator(LocalOp op, int site, const HilbertSpace& space) {
  if (op == LocalOp::kIdentity) {
    if (site < 1 || site > space.n_sites()) {
      throw DimensionError("site_operator: site out of range");
    }
    return SparseOperator::identity(space);
  }
  return site_operator(local_matrix(op), site, space);
}

void write_coordinate(std::ostream& os, const SparseMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("write_coordinate: matrix must be square");
  os << "dim " << m.rows() << '\n';
  char buf[128];
  for (Eigen::Index c = 0; c < m.outerSize(); ++c) {
    for (SparseMatrix::InnerIterator it(m, c); it; ++it) {
      std::snprintf(buf, sizeof(buf), "%lld %lld %.17g %.17g\n", static_cast<long long>(it.row()),
                    static_cast<long long>(it.col()), it.value().real(), it.value().imag());
      os << buf;
    }
  }
}

void write_coordinate(std::ostream& os, const DenseMatrix& m) {
  SparseMatrix s = m.sparseView();
  prune(s, 0.0);
  write_coordinate(os, s);
}

SparseMatrix read_coordinate(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("read_coordinate: empty input");
  std::istringstream header(line);
  std::string tag;
  long long dim = -1;
  if (!(header >> tag >> dim) || tag != "dim" || dim < 1) {
    throw std::runtime_error("read_coordinate: expected header 'dim <d>', got '" + line + "'");
  }
  std::vector<Triplet> entries;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    long long r = -1;
    long long c = -1;
    double re = 0.0;
    double im = 0.0;
    std::string extra;
    if (!(row >> r >> c >> re >> im) || (row >> extra)) {
      throw std::runtime_error("read_coordinate: malformed entry on line " + std::to_string(lineno));
    }
    if (r < 0 || c < 0 || r >= dim || c >= dim) {
      throw std::runtime_error("read_coordinate: index out of range on line " + std::to_string(lineno));
    }
    entries.emplace_back(r, c, Complex(re, im));
  }
  SparseMatrix m(dim, dim);
  m.setFromTriplets(entries.begin(), entries.end());
  m.makeCompressed();
  return m;
}

}  // namespace opencoh
