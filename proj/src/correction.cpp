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

#include "sixq/correction.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace sixq {

namespace {

void check_orthonormal(const std::vector<CVector>& states, double tol,
                       const char* what) {
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = 0; j < states.size(); ++j) {
      Complex g = inner_product(states[i], states[j]);
      Complex expect = (i == j) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      if (std::abs(g - expect) > tol) {
        throw std::invalid_argument(std::string(what) +
                                    ": states are not orthonormal");
      }
    }
  }
}

const std::array<ComplexMatrix, 4>& pauli_matrices() {
  static const std::array<ComplexMatrix, 4> paulis = [] {
    ComplexMatrix id = ComplexMatrix::identity(2);
    ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
    x.at(0, 1) = 1.0;
    x.at(1, 0) = 1.0;
    y.at(0, 1) = Complex{0.0, -1.0};
    y.at(1, 0) = Complex{0.0, 1.0};
    z.at(0, 0) = 1.0;
    z.at(1, 1) = -1.0;
    return std::array<ComplexMatrix, 4>{id, x, y, z};
  }();
  return paulis;
}

constexpr const char* kPauliNames[4] = {"I", "X", "Y", "Z"};

}  // namespace

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("is_unitary: matrix is not square");
  }
  ComplexMatrix product = m.dagger() * m;
  return product.max_abs_diff(ComplexMatrix::identity(m.rows())) <= tol;
}

ComplexMatrix basis_change(const std::vector<CVector>& source,
                           const std::vector<CVector>& target, double tol) {
  if (source.empty() || source.size() != target.size()) {
    throw std::invalid_argument("basis_change: list sizes differ or are empty");
  }
  std::size_t dim = source[0].size();
  if (source.size() != dim) {
    throw std::invalid_argument("basis_change: lists must span the full space");
  }
  for (const CVector& v : source) {
    if (v.size() != dim) {
      throw std::invalid_argument("basis_change: ragged source list");
    }
  }
  for (const CVector& v : target) {
    if (v.size() != dim) {
      throw std::invalid_argument("basis_change: ragged target list");
    }
  }
  check_orthonormal(source, tol, "basis_change source");
  check_orthonormal(target, tol, "basis_change target");

  ComplexMatrix u(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    u = u + outer_product(target[i], source[i]);
  }
  return u;
}

std::optional<std::string> pauli_tensor_factorization(const ComplexMatrix& m,
                                                      double tol) {
  if (m.rows() != m.cols()) return std::nullopt;
  int k = 0;
  while ((std::size_t{1} << k) < m.rows()) ++k;
  if ((std::size_t{1} << k) != m.rows()) return std::nullopt;

  static const std::array<std::pair<Complex, const char*>, 4> phases = {{
      {Complex{1.0, 0.0}, ""},
      {Complex{-1.0, 0.0}, "-"},
      {Complex{0.0, 1.0}, "i"},
      {Complex{0.0, -1.0}, "-i"},
  }};

  std::size_t combos = std::size_t{1} << (2 * k);
  for (std::size_t combo = 0; combo < combos; ++combo) {
    ComplexMatrix candidate = ComplexMatrix::identity(1);
    std::string name;
    for (int q = 0; q < k; ++q) {
      int p = static_cast<int>((combo >> (2 * (k - 1 - q))) & 3u);
      candidate = kron(candidate, pauli_matrices()[p]);
      if (q > 0) name += "(x)";
      name += kPauliNames[p];
    }
    for (const auto& [phase, phase_name] : phases) {
      if (m.max_abs_diff(candidate.scaled_by(phase)) <= tol) {
        return std::string(phase_name) + name;
      }
    }
  }
  return std::nullopt;
}

CorrectionUnitary derive_correction_from_probes(
    const std::function<std::optional<PureState>(const PureState& probe)>&
        collapse_for_probe,
    int input_qubits, const BranchId& branch, double tol) {
  std::size_t dim = std::size_t{1} << input_qubits;
  std::vector<CVector> collapses;
  std::vector<CVector> targets;
  for (std::size_t j = 0; j < dim; ++j) {
    CVector ket(dim, Complex{0.0, 0.0});
    ket[j] = 1.0;
    std::optional<PureState> collapse =
        collapse_for_probe(PureState(input_qubits, ket));
    if (!collapse.has_value()) {
      throw NonCorrectableBranch(branch.str() +
                                 ": probe input reaches this path with zero "
                                 "probability");
    }
    if (collapse->dim() != dim) {
      throw std::invalid_argument(branch.str() +
                                  ": receiver dimension != input dimension");
    }
    collapses.push_back(collapse->amps());
    targets.push_back(ket);
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Complex g = inner_product(collapses[i], collapses[j]);
      Complex expect = (i == j) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      if (std::abs(g - expect) > tol) {
        throw NonCorrectableBranch(branch.str() +
                                   ": probe collapses are not orthonormal");
      }
    }
  }

  CorrectionUnitary result;
  result.dim = dim;
  result.matrix = basis_change(collapses, targets, tol);
  result.branch = branch;
  if (!is_unitary(result.matrix, tol)) {
    // basis_change certifies this already; double failure means the tol
    // arguments disagree.
    throw NonCorrectableBranch(branch.str() + ": derived matrix not unitary");
  }
  result.pauli_factorization = pauli_tensor_factorization(result.matrix, 1e-9);
  return result;
}

}  // namespace sixq
