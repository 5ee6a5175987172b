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

// Dense complex linear algebra with tensor-factor structure.
//
// Composite spaces are ordered as factor 1 (most significant) through factor
// m (least significant), so a basis index is the mixed-radix number
// (i_1 i_2 ... i_m). All user-facing factor indices are 1-based.

#ifndef QBLOTTO_TENSOR_H_
#define QBLOTTO_TENSOR_H_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qblotto {

using Complex = std::complex<double>;

// Default tolerance for invariant checks.
inline constexpr double kDefaultEps = 1e-10;

// Largest composite dimension accepted for any game.
inline constexpr std::size_t kMaxDimension = std::size_t{1} << 20;

// Largest dimension for which full dense operators (and density matrices)
// are materialized. State-level routines are not subject to this cap.
inline constexpr std::size_t kMaxDenseDimension = std::size_t{1} << 12;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  // Zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  // Row-major entries; entries.size() must equal rows * cols.
  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::vector<Complex> entries);
  // Row-wise literal, e.g. {{0, 1}, {-1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix Identity(std::size_t dim);
  static ComplexMatrix Diagonal(std::span<const Complex> diagonal);
  // |index><index| on a dim-dimensional space (0-based index).
  static ComplexMatrix Projector(std::size_t dim, std::size_t index);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);

  // Exact entrywise equality. Numerical code should use ApproxEqual.
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

// Factor dimensions of a composite space. At most one factor may differ
// from 2; in a game that factor is the battlefield register and comes last.
class TensorDims {
 public:
  explicit TensorDims(std::vector<std::size_t> factors);

  // [2] * num_players followed by [num_battlefields].
  static TensorDims ForGame(std::size_t num_players,
                            std::size_t num_battlefields);

  std::span<const std::size_t> factors() const { return factors_; }
  std::size_t num_factors() const { return factors_.size(); }
  // 1-based.
  std::size_t factor(std::size_t index) const;
  std::size_t total() const { return total_; }

  std::string ToString() const;

 private:
  std::vector<std::size_t> factors_;
  std::size_t total_ = 1;
};

class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<Complex> amplitudes);

  static StateVector Basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> mutable_amplitudes() { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double SquaredNorm() const;
  // <this|other>
  Complex Inner(const StateVector& other) const;
  // |this><this|
  ComplexMatrix OuterProduct() const;

 private:
  std::vector<Complex> amplitudes_;
};

ComplexMatrix Kron(const ComplexMatrix& a, const ComplexMatrix& b);
// Left-to-right Kronecker product of all operands; empty input yields [1].
ComplexMatrix Kron(std::span<const ComplexMatrix> operands);
StateVector Kron(const StateVector& a, const StateVector& b);

ComplexMatrix Dagger(const ComplexMatrix& a);
Complex Trace(const ComplexMatrix& a);
ComplexMatrix Commutator(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector Apply(const ComplexMatrix& op, const StateVector& psi);

// Largest entrywise |a - b|. Shapes must agree.
double MaxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b);
double MaxAbsDiff(const StateVector& a, const StateVector& b);
double MaxAbs(const ComplexMatrix& a);
bool ApproxEqual(const ComplexMatrix& a, const ComplexMatrix& b,
                 double eps = kDefaultEps);

// max |U^dagger U - I|
double UnitarityDefect(const ComplexMatrix& u);
// max |A - A^dagger|
double HermiticityDefect(const ComplexMatrix& a);

// Traces out every factor not listed in `keep` (1-based, any order,
// duplicates ignored). Kept factors appear in their original order.
ComplexMatrix PartialTrace(const ComplexMatrix& rho, const TensorDims& dims,
                           std::span<const std::size_t> keep);

// PartialTrace(|psi><psi|, dims, keep) without forming the full density
// matrix.
ComplexMatrix ReducedDensityMatrix(const StateVector& psi,
                                   const TensorDims& dims,
                                   std::span<const std::size_t> keep);

// Re tr(op * rho). Throws kNumericalIntegrity if |Im tr(op * rho)| exceeds
// imag_tolerance.
double Expectation(const ComplexMatrix& op, const ComplexMatrix& rho,
                   double imag_tolerance = kDefaultEps);

}  // namespace qblotto

#endif  // QBLOTTO_TENSOR_H_
