// Copyright 2026 The tempcorr Authors
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

#ifndef TEMPCORR_MATRIX_HPP
#define TEMPCORR_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tempcorr {

using Complex = std::complex<double>;

/// Numerical tolerances shared by the whole library. All work happens on
/// dense matrices of modest size at double precision.
namespace tol {
inline constexpr double kHerm = 1e-9;
inline constexpr double kTrace = 1e-9;
inline constexpr double kTracePreserving = 1e-9;
inline constexpr double kPsd = 1e-9;
inline constexpr double kZero = 1e-12;
inline constexpr double kNormalization = 1e-9;
}  // namespace tol

/// Square, dense, row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
  /// |i><j| in dimension dim.
  static ComplexMatrix unit(std::size_t dim, std::size_t i, std::size_t j);
  /// |psi><psi|.
  static ComplexMatrix outer(std::span<const Complex> psi);
  static ComplexMatrix diagonal(std::span<const double> diag);

  std::size_t dim() const noexcept { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  bool all_finite() const;
  /// max |A - A^dagger| over entries.
  double hermiticity_defect() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// max_ij |a_ij - b_ij|; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// K rho K^dagger.
ComplexMatrix sandwich(const ComplexMatrix& k, const ComplexMatrix& rho);

/// Block-diagonal direct sum.
ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks);

/// Real eigenvalues of a Hermitian matrix in ascending order. 2x2 uses the
/// closed form; larger sizes use cyclic Jacobi on the real symmetric
/// embedding [[Re, -Im], [Im, Re]], whose spectrum is that of the input with
/// every eigenvalue doubled.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm(const ComplexMatrix& h);

}  // namespace tempcorr

#endif  // TEMPCORR_MATRIX_HPP
