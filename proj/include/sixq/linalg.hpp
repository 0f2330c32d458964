// Copyright 2026 The sixq authors
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

#ifndef SIXQ_LINALG_HPP
#define SIXQ_LINALG_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace sixq {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Default tolerance for equality and unitarity checks.
inline constexpr double kDefaultTol = 1e-10;

/// Probabilities below this are treated as an unreachable branch.
inline constexpr double kZeroProb = 1e-14;

bool all_finite(const CVector& v);

/// Kronecker product of amplitude vectors: entry (i*|b|+j) = a_i * b_j.
CVector tensor_product(const CVector& a, const CVector& b);

/// <a|b>, conjugate-linear in the first argument.
Complex inner_product(const CVector& a, const CVector& b);

double norm(const CVector& v);

/// v scaled to unit norm. Throws if the norm is numerically zero.
CVector normalized(const CVector& v);

CVector scaled(const CVector& v, Complex factor);
CVector add(const CVector& a, const CVector& b);

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, CVector entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const CVector& entries() const { return entries_; }

  /// Conjugate transpose.
  ComplexMatrix dagger() const;

  /// Matrix-vector product; requires cols() == v.size().
  CVector apply(const CVector& v) const;

  ComplexMatrix operator*(const ComplexMatrix& other) const;
  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;
  ComplexMatrix scaled_by(Complex factor) const;

  /// Largest entrywise |difference| against another matrix of equal shape.
  double max_abs_diff(const ComplexMatrix& other) const;

  /// Largest entrywise magnitude.
  double max_abs() const;

  bool finite() const { return all_finite(entries_); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  CVector entries_;
};

/// |ket><bra|
ComplexMatrix outer_product(const CVector& ket, const CVector& bra);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace sixq

#endif  // SIXQ_LINALG_HPP
