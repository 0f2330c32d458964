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

#include "sixq/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace sixq {

bool all_finite(const CVector& v) {
  for (const Complex& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

CVector tensor_product(const CVector& a, const CVector& b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("tensor_product: empty operand");
  }
  CVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i * b.size() + j] = a[i] * b[j];
    }
  }
  return out;
}

Complex inner_product(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("inner_product: length mismatch");
  }
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += std::conj(a[i]) * b[i];
  }
  return acc;
}

double norm(const CVector& v) {
  double acc = 0.0;
  for (const Complex& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

CVector normalized(const CVector& v) {
  double n = norm(v);
  if (n < kZeroProb) {
    throw std::runtime_error("normalized: vector has numerically zero norm");
  }
  return scaled(v, Complex{1.0 / n, 0.0});
}

CVector scaled(const CVector& v, Complex factor) {
  CVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
  return out;
}

CVector add(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("add: length mismatch");
  }
  CVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, CVector entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("ComplexMatrix: entry count != rows*cols");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Complex{1.0, 0.0};
  return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out.at(c, r) = std::conj(at(r, c));
    }
  }
  return out;
}

CVector ComplexMatrix::apply(const CVector& v) const {
  if (cols_ != v.size()) {
    throw std::invalid_argument("apply: dimension mismatch");
  }
  CVector out(rows_, Complex{0.0, 0.0});
  for (std::size_t r = 0; r < rows_; ++r) {
    Complex acc{0.0, 0.0};
    for (std::size_t c = 0; c < cols_; ++c) acc += at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  if (cols_ != other.rows_) {
    throw std::invalid_argument("operator*: dimension mismatch");
  }
  ComplexMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      Complex a = at(r, k);
      if (a == Complex{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        out.at(r, c) += a * other.at(k, c);
      }
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("operator+: shape mismatch");
  }
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] + other.entries_[i];
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("operator-: shape mismatch");
  }
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] - other.entries_[i];
  }
  return out;
}

ComplexMatrix ComplexMatrix::scaled_by(Complex factor) const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] * factor;
  }
  return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
  }
  return worst;
}

double ComplexMatrix::max_abs() const {
  double worst = 0.0;
  for (const Complex& z : entries_) worst = std::max(worst, std::abs(z));
  return worst;
}

ComplexMatrix outer_product(const CVector& ket, const CVector& bra) {
  ComplexMatrix out(ket.size(), bra.size());
  for (std::size_t r = 0; r < ket.size(); ++r) {
    for (std::size_t c = 0; c < bra.size(); ++c) {
      out.at(r, c) = ket[r] * std::conj(bra[c]);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out.at(ar * b.rows() + br, ac * b.cols() + bc) =
              a.at(ar, ac) * b.at(br, bc);
        }
      }
    }
  }
  return out;
}

}  // namespace sixq
