// Copyright 2026 The qblotto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qblotto/tensor.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "qblotto/error.h"

namespace qblotto {

namespace {

std::string ShapeString(std::size_t rows, std::size_t cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

void RequireSameShape(const ComplexMatrix& a, const ComplexMatrix& b,
                      const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimension,
                std::string(what) + ": shape mismatch, expected " +
                    ShapeString(a.rows(), a.cols()) + " but got " +
                    ShapeString(b.rows(), b.cols()));
  }
}

void RequireSquare(const ComplexMatrix& a, const char* what) {
  if (!a.is_square()) {
    throw Error(ErrorCode::kDimension, std::string(what) +
                                           ": expected a square matrix, got " +
                                           ShapeString(a.rows(), a.cols()));
  }
}

// Offsets of every multi-index over the selected factors into the full
// composite index, enumerated in mixed-radix order of the selection.
std::vector<std::size_t> FactorOffsets(const TensorDims& dims,
                                       const std::vector<bool>& selected) {
  const auto factors = dims.factors();
  std::vector<std::size_t> strides(factors.size());
  std::size_t stride = 1;
  for (std::size_t f = factors.size(); f-- > 0;) {
    strides[f] = stride;
    stride *= factors[f];
  }

  std::vector<std::size_t> offsets{0};
  for (std::size_t f = 0; f < factors.size(); ++f) {
    if (!selected[f]) continue;
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * factors[f]);
    for (std::size_t base : offsets) {
      for (std::size_t i = 0; i < factors[f]; ++i) {
        next.push_back(base + i * strides[f]);
      }
    }
    offsets = std::move(next);
  }
  return offsets;
}

std::vector<bool> KeepMask(const TensorDims& dims,
                           std::span<const std::size_t> keep) {
  std::vector<bool> mask(dims.num_factors(), false);
  for (std::size_t k : keep) {
    if (k < 1 || k > dims.num_factors()) {
      throw Error(ErrorCode::kDimension,
                  "partial trace: factor index " + std::to_string(k) +
                      " out of range 1.." +
                      std::to_string(dims.num_factors()) + " for dims " +
                      dims.ToString());
    }
    mask[k - 1] = true;
  }
  return mask;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kDimension,
                "matrix " + ShapeString(rows_, cols_) + " needs " +
                    std::to_string(rows_ * cols_) + " entries, got " +
                    std::to_string(entries_.size()));
  }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::kDimension, "ragged matrix literal");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::Identity(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::Diagonal(std::span<const Complex> diagonal) {
  ComplexMatrix m(diagonal.size(), diagonal.size());
  for (std::size_t i = 0; i < diagonal.size(); ++i) m(i, i) = diagonal[i];
  return m;
}

ComplexMatrix ComplexMatrix::Projector(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw Error(ErrorCode::kDimension, "projector index " +
                                           std::to_string(index) +
                                           " out of range for dim " +
                                           std::to_string(dim));
  }
  ComplexMatrix m(dim, dim);
  m(index, index) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  RequireSameShape(*this, other, "matrix addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] += other.entries_[i];
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  RequireSameShape(*this, other, "matrix subtraction");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] -= other.entries_[i];
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimension,
                "matrix product: " + ShapeString(a.rows(), a.cols()) +
                    " times " + ShapeString(b.rows(), b.cols()));
  }
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

TensorDims::TensorDims(std::vector<std::size_t> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw Error(ErrorCode::kDimension, "tensor dims need at least one factor");
  }
  std::size_t non_qubit = 0;
  for (std::size_t f : factors_) {
    if (f == 0) {
      throw Error(ErrorCode::kDimension, "tensor factor of size 0 in " +
                                             ToString());
    }
    if (f != 2) ++non_qubit;
    if (total_ > kMaxDimension / f) {
      throw Error(ErrorCode::kDimension,
                  "composite dimension of " + ToString() +
                      " exceeds the limit " + std::to_string(kMaxDimension));
    }
    total_ *= f;
  }
  if (non_qubit > 1) {
    throw Error(ErrorCode::kDimension,
                "at most one tensor factor may differ from 2, got " +
                    ToString());
  }
}

TensorDims TensorDims::ForGame(std::size_t num_players,
                               std::size_t num_battlefields) {
  if (num_players >= 8 * sizeof(std::size_t) ||
      (std::size_t{1} << num_players) > kMaxDimension / std::max<std::size_t>(
                                                            num_battlefields, 1)) {
    throw Error(ErrorCode::kDimension,
                "game with " + std::to_string(num_players) + " players and " +
                    std::to_string(num_battlefields) +
                    " battlefields exceeds the dimension limit 2^20");
  }
  std::vector<std::size_t> factors(num_players, 2);
  factors.push_back(num_battlefields);
  return TensorDims(std::move(factors));
}

std::size_t TensorDims::factor(std::size_t index) const {
  if (index < 1 || index > factors_.size()) {
    throw Error(ErrorCode::kDimension,
                "factor index " + std::to_string(index) + " out of range 1.." +
                    std::to_string(factors_.size()));
  }
  return factors_[index - 1];
}

std::string TensorDims::ToString() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out << ',';
    out << factors_[i];
  }
  out << ']';
  return out.str();
}

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::Basis(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw Error(ErrorCode::kDimension, "basis index " + std::to_string(index) +
                                           " out of range for dim " +
                                           std::to_string(dim));
  }
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(std::move(amps));
}

double StateVector::SquaredNorm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum;
}

Complex StateVector::Inner(const StateVector& other) const {
  if (other.dim() != dim()) {
    throw Error(ErrorCode::kDimension, "inner product of dims " +
                                           std::to_string(dim()) + " and " +
                                           std::to_string(other.dim()));
  }
  Complex sum{};
  for (std::size_t i = 0; i < dim(); ++i) {
    sum += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  }
  return sum;
}

ComplexMatrix StateVector::OuterProduct() const {
  if (dim() > kMaxDenseDimension) {
    throw Error(ErrorCode::kDimension,
                "density matrix of dim " + std::to_string(dim()) +
                    " exceeds the dense limit " +
                    std::to_string(kMaxDenseDimension));
  }
  ComplexMatrix rho(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      rho(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
    }
  }
  return rho;
}

ComplexMatrix Kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  ComplexMatrix c(rows, cols);
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Complex s = a(i1, j1);
      if (s == Complex{}) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          c(i1 * b.rows() + i2, j1 * b.cols() + j2) = s * b(i2, j2);
        }
      }
    }
  }
  return c;
}

ComplexMatrix Kron(std::span<const ComplexMatrix> operands) {
  ComplexMatrix result = ComplexMatrix::Identity(1);
  for (const auto& op : operands) result = Kron(result, op);
  return result;
}

StateVector Kron(const StateVector& a, const StateVector& b) {
  std::vector<Complex> amps;
  amps.reserve(a.dim() * b.dim());
  for (const auto& x : a.amplitudes()) {
    for (const auto& y : b.amplitudes()) amps.push_back(x * y);
  }
  return StateVector(std::move(amps));
}

ComplexMatrix Dagger(const ComplexMatrix& a) {
  ComplexMatrix d(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) d(j, i) = std::conj(a(i, j));
  }
  return d;
}

Complex Trace(const ComplexMatrix& a) {
  RequireSquare(a, "trace");
  Complex sum{};
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

ComplexMatrix Commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

StateVector Apply(const ComplexMatrix& op, const StateVector& psi) {
  if (op.cols() != psi.dim()) {
    throw Error(ErrorCode::kDimension,
                "apply: operator " + ShapeString(op.rows(), op.cols()) +
                    " on state of dim " + std::to_string(psi.dim()));
  }
  std::vector<Complex> out(op.rows());
  for (std::size_t i = 0; i < op.rows(); ++i) {
    Complex sum{};
    for (std::size_t j = 0; j < op.cols(); ++j) sum += op(i, j) * psi[j];
    out[i] = sum;
  }
  return StateVector(std::move(out));
}

double MaxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b) {
  RequireSameShape(a, b, "comparison");
  double worst = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    worst = std::max(worst, std::abs(ea[i] - eb[i]));
  }
  return worst;
}

double MaxAbsDiff(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimension, "comparison of states with dims " +
                                           std::to_string(a.dim()) + " and " +
                                           std::to_string(b.dim()));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

double MaxAbs(const ComplexMatrix& a) {
  double worst = 0.0;
  for (const auto& e : a.entries()) worst = std::max(worst, std::abs(e));
  return worst;
}

bool ApproxEqual(const ComplexMatrix& a, const ComplexMatrix& b, double eps) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return MaxAbsDiff(a, b) <= eps;
}

double UnitarityDefect(const ComplexMatrix& u) {
  RequireSquare(u, "unitarity check");
  return MaxAbsDiff(Dagger(u) * u, ComplexMatrix::Identity(u.rows()));
}

double HermiticityDefect(const ComplexMatrix& a) {
  RequireSquare(a, "hermiticity check");
  return MaxAbsDiff(a, Dagger(a));
}

ComplexMatrix PartialTrace(const ComplexMatrix& rho, const TensorDims& dims,
                           std::span<const std::size_t> keep) {
  if (!rho.is_square() || rho.rows() != dims.total()) {
    throw Error(ErrorCode::kDimension,
                "partial trace: expected a " + std::to_string(dims.total()) +
                    "x" + std::to_string(dims.total()) +
                    " matrix for dims " + dims.ToString() + ", got " +
                    ShapeString(rho.rows(), rho.cols()));
  }
  const std::vector<bool> kept = KeepMask(dims, keep);
  std::vector<bool> traced(kept.size());
  std::transform(kept.begin(), kept.end(), traced.begin(),
                 [](bool k) { return !k; });
  const auto kept_offsets = FactorOffsets(dims, kept);
  const auto traced_offsets = FactorOffsets(dims, traced);

  const std::size_t d = kept_offsets.size();
  ComplexMatrix result(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      Complex sum{};
      for (std::size_t t : traced_offsets) {
        sum += rho(kept_offsets[a] + t, kept_offsets[b] + t);
      }
      result(a, b) = sum;
    }
  }
  return result;
}

ComplexMatrix ReducedDensityMatrix(const StateVector& psi,
                                   const TensorDims& dims,
                                   std::span<const std::size_t> keep) {
  if (psi.dim() != dims.total()) {
    throw Error(ErrorCode::kDimension,
                "reduced density matrix: expected a state of dim " +
                    std::to_string(dims.total()) + " for dims " +
                    dims.ToString() + ", got " + std::to_string(psi.dim()));
  }
  const std::vector<bool> kept = KeepMask(dims, keep);
  std::vector<bool> traced(kept.size());
  std::transform(kept.begin(), kept.end(), traced.begin(),
                 [](bool k) { return !k; });
  const auto kept_offsets = FactorOffsets(dims, kept);
  const auto traced_offsets = FactorOffsets(dims, traced);

  const std::size_t d = kept_offsets.size();
  ComplexMatrix result(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      Complex sum{};
      for (std::size_t t : traced_offsets) {
        sum += psi[kept_offsets[a] + t] * std::conj(psi[kept_offsets[b] + t]);
      }
      result(a, b) = sum;
    }
  }
  return result;
}

double Expectation(const ComplexMatrix& op, const ComplexMatrix& rho,
                   double imag_tolerance) {
  RequireSquare(op, "expectation");
  RequireSameShape(op, rho, "expectation");
  // tr(op * rho) = sum_ij op(i,j) rho(j,i)
  Complex sum{};
  for (std::size_t i = 0; i < op.rows(); ++i) {
    for (std::size_t j = 0; j < op.cols(); ++j) sum += op(i, j) * rho(j, i);
  }
  if (std::abs(sum.imag()) > imag_tolerance) {
    std::ostringstream msg;
    msg << "expectation value has imaginary part " << sum.imag()
        << " beyond tolerance " << imag_tolerance;
    throw Error(ErrorCode::kNumericalIntegrity, msg.str());
  }
  return sum.real();
}

}  // namespace qblotto
