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

#include "sixq/measurement.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace sixq {

namespace {

std::string bits_string(std::size_t value, int width) {
  std::string out(width, '0');
  for (int i = 0; i < width; ++i) {
    if ((value >> (width - 1 - i)) & 1u) out[i] = '1';
  }
  return out;
}

// Sign patterns for a ket quadruple k1..k4, in row-variant order
// (odd row upper, odd lower, even upper, even lower). Together with the
// leading +k1 they are the even sign group, so the four elements built on
// one quadruple are mutually orthogonal.
constexpr std::array<std::array<double, 3>, 4> kQuadSigns = {{
    {+1.0, +1.0, +1.0},
    {+1.0, -1.0, -1.0},
    {-1.0, +1.0, -1.0},
    {-1.0, -1.0, +1.0},
}};

OrthonormalBasis quadruple_basis(std::string id, int n_qubits,
                                 const std::vector<std::array<int, 4>>& quads) {
  OrthonormalBasis basis;
  basis.id = std::move(id);
  basis.n_qubits = n_qubits;
  std::size_t dim = std::size_t{1} << n_qubits;
  for (std::size_t row_pair = 0; row_pair < quads.size(); ++row_pair) {
    for (int pattern = 0; pattern < 4; ++pattern) {
      CVector v(dim, Complex{0.0, 0.0});
      v[quads[row_pair][0]] = 0.5;
      for (int t = 0; t < 3; ++t) {
        v[quads[row_pair][t + 1]] = 0.5 * kQuadSigns[pattern][t];
      }
      int row = static_cast<int>(row_pair) * 2 + (pattern / 2) + 1;
      char variant = (pattern % 2 == 0) ? '+' : '-';
      basis.elements.emplace_back(n_qubits, std::move(v));
      basis.labels.push_back("r" + std::to_string(row) + variant);
    }
  }
  return basis;
}

void append_missing_kets(OrthonormalBasis& basis) {
  std::size_t dim = std::size_t{1} << basis.n_qubits;
  std::vector<bool> used(dim, false);
  for (const PureState& e : basis.elements) {
    for (std::size_t i = 0; i < dim; ++i) {
      if (std::abs(e.amp(i)) > 1e-12) used[i] = true;
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (used[i]) continue;
    CVector v(dim, Complex{0.0, 0.0});
    v[i] = 1.0;
    basis.elements.emplace_back(basis.n_qubits, std::move(v));
    basis.labels.push_back("k" + bits_string(i, basis.n_qubits));
  }
}

void check_measured_qubits(const PureState& state,
                           const std::vector<int>& measured_qubits,
                           const OrthonormalBasis& basis) {
  if (static_cast<int>(measured_qubits.size()) != basis.n_qubits) {
    throw std::invalid_argument("measure: qubit list size != basis qubit count");
  }
  if (static_cast<int>(measured_qubits.size()) >= state.n_qubits() + 1) {
    throw std::invalid_argument("measure: more qubits than the state has");
  }
  std::vector<bool> seen(state.n_qubits() + 1, false);
  for (int q : measured_qubits) {
    if (q < 1 || q > state.n_qubits()) {
      throw std::invalid_argument("measure: qubit index out of range");
    }
    if (seen[q]) throw std::invalid_argument("measure: duplicate qubit index");
    seen[q] = true;
  }
  if (!basis.complete()) {
    throw std::invalid_argument("measure: basis is not complete");
  }
}

struct MeasureSplit {
  int n;
  std::vector<int> measured;   // 1-based, in basis-label order
  std::vector<int> remaining;  // 1-based, ascending

  MeasureSplit(int n_qubits, const std::vector<int>& measured_qubits)
      : n(n_qubits), measured(measured_qubits) {
    std::vector<bool> is_measured(n + 1, false);
    for (int q : measured) is_measured[q] = true;
    for (int q = 1; q <= n; ++q) {
      if (!is_measured[q]) remaining.push_back(q);
    }
  }

  static int bit_of(std::size_t index, int qubit, int n) {
    return static_cast<int>((index >> (n - qubit)) & 1u);
  }

  std::size_t measured_index(std::size_t global) const {
    std::size_t out = 0;
    for (int q : measured) out = (out << 1) | bit_of(global, q, n);
    return out;
  }

  std::size_t remaining_index(std::size_t global) const {
    std::size_t out = 0;
    for (int q : remaining) out = (out << 1) | bit_of(global, q, n);
    return out;
  }
};

MeasurementOutcome make_outcome(const PureState& state, const MeasureSplit& split,
                                const OrthonormalBasis& basis,
                                std::size_t element_index) {
  const PureState& element = basis.elements[element_index];
  std::size_t rem_dim = state.dim() >> basis.n_qubits;
  CVector residual(rem_dim, Complex{0.0, 0.0});
  for (std::size_t g = 0; g < state.dim(); ++g) {
    Complex amp = state.amp(g);
    if (amp == Complex{0.0, 0.0}) continue;
    residual[split.remaining_index(g)] +=
        std::conj(element.amp(split.measured_index(g))) * amp;
  }
  MeasurementOutcome outcome;
  outcome.index = element_index;
  outcome.label = basis.labels[element_index];
  double n = norm(residual);
  outcome.probability = n * n;
  if (outcome.probability > kZeroProb && !split.remaining.empty()) {
    outcome.collapsed =
        PureState(static_cast<int>(split.remaining.size()),
                  scaled(residual, Complex{1.0 / n, 0.0}));
  }
  return outcome;
}

}  // namespace

double OrthonormalBasis::gram_deviation() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      Complex g = inner_product(elements[i].amps(), elements[j].amps());
      Complex expect = (i == j) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      worst = std::max(worst, std::abs(g - expect));
    }
  }
  return worst;
}

double OrthonormalBasis::completeness_deviation() const {
  std::size_t dim = std::size_t{1} << n_qubits;
  ComplexMatrix sum(dim, dim);
  for (const PureState& e : elements) {
    sum = sum + outer_product(e.amps(), e.amps());
  }
  return sum.max_abs_diff(ComplexMatrix::identity(dim));
}

std::size_t OrthonormalBasis::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  throw std::invalid_argument("basis " + id + ": no element labeled " + label);
}

OrthonormalBasis generalized_bell_basis_6() {
  OrthonormalBasis basis;
  basis.id = "generalized-bell-6";
  basis.n_qubits = 6;
  const double amp = 1.0 / std::sqrt(8.0);
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      CVector v(64, Complex{0.0, 0.0});
      for (std::size_t i = 0; i < 8; ++i) {
        double sign = (std::popcount(b & i) % 2 == 0) ? 1.0 : -1.0;
        v[i * 8 + (i ^ a)] = sign * amp;
      }
      basis.elements.emplace_back(6, std::move(v));
      basis.labels.push_back(bits_string(a, 3) + bits_string(b, 3));
    }
  }
  return basis;
}

OrthonormalBasis table1_basis() {
  // Ket quadruples over (input 1, input 2, channel 1, channel 2).
  return quadruple_basis("table1", 4,
                         {{0b0000, 0b1001, 0b0111, 0b1110},
                          {0b0001, 0b1000, 0b0110, 0b1111},
                          {0b0011, 0b1010, 0b0100, 0b1101},
                          {0b0010, 0b1011, 0b0101, 0b1100}});
}

OrthonormalBasis table4_basis() {
  OrthonormalBasis basis =
      quadruple_basis("table4", 5,
                      {{0b00000, 0b10001, 0b01011, 0b11010},
                       {0b00010, 0b10011, 0b01101, 0b11100},
                       {0b00110, 0b10111, 0b01001, 0b11000},
                       {0b00100, 0b10101, 0b01010, 0b11011}});
  append_missing_kets(basis);
  return basis;
}

OrthonormalBasis table6_basis() {
  OrthonormalBasis basis =
      quadruple_basis("table6", 5,
                      {{0b00000, 0b10001, 0b01011, 0b11010},
                       {0b00101, 0b10100, 0b01111, 0b11110},
                       {0b00110, 0b10111, 0b01010, 0b11011},
                       {0b00100, 0b10101, 0b01001, 0b11000}});
  append_missing_kets(basis);
  return basis;
}

OrthonormalBasis bell_basis() {
  OrthonormalBasis basis;
  basis.id = "bell";
  basis.n_qubits = 2;
  basis.elements = {bell(BellKind::PhiPlus), bell(BellKind::PhiMinus),
                    bell(BellKind::PsiPlus), bell(BellKind::PsiMinus)};
  basis.labels = {"phi+", "phi-", "psi+", "psi-"};
  return basis;
}

OrthonormalBasis computational_basis(int k) {
  if (k < 1) {
    throw std::invalid_argument("computational_basis: need k >= 1");
  }
  OrthonormalBasis basis;
  basis.id = "computational-" + std::to_string(k);
  basis.n_qubits = k;
  std::size_t dim = std::size_t{1} << k;
  for (std::size_t i = 0; i < dim; ++i) {
    CVector v(dim, Complex{0.0, 0.0});
    v[i] = 1.0;
    basis.elements.emplace_back(k, std::move(v));
    basis.labels.push_back(bits_string(i, k));
  }
  return basis;
}

OrthonormalBasis hadamard_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  OrthonormalBasis basis;
  basis.id = "hadamard";
  basis.n_qubits = 1;
  basis.elements.emplace_back(1, CVector{s, s});
  basis.elements.emplace_back(1, CVector{s, -s});
  basis.labels = {"h+", "h-"};
  return basis;
}

std::vector<MeasurementOutcome> measure_enumerate(
    const PureState& state, const std::vector<int>& measured_qubits,
    const OrthonormalBasis& basis) {
  check_measured_qubits(state, measured_qubits, basis);
  MeasureSplit split(state.n_qubits(), measured_qubits);
  std::vector<MeasurementOutcome> outcomes;
  outcomes.reserve(basis.size());
  for (std::size_t e = 0; e < basis.size(); ++e) {
    outcomes.push_back(make_outcome(state, split, basis, e));
  }
  return outcomes;
}

MeasurementOutcome project_outcome(const PureState& state,
                                   const std::vector<int>& measured_qubits,
                                   const OrthonormalBasis& basis,
                                   std::size_t element_index) {
  check_measured_qubits(state, measured_qubits, basis);
  if (element_index >= basis.size()) {
    throw std::invalid_argument("project_outcome: element index out of range");
  }
  MeasureSplit split(state.n_qubits(), measured_qubits);
  return make_outcome(state, split, basis, element_index);
}

MeasurementOutcome measure_sample(const PureState& state,
                                  const std::vector<int>& measured_qubits,
                                  const OrthonormalBasis& basis,
                                  std::uint64_t seed) {
  std::vector<MeasurementOutcome> outcomes =
      measure_enumerate(state, measured_qubits, basis);
  std::mt19937_64 engine(seed);
  double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  double acc = 0.0;
  for (MeasurementOutcome& outcome : outcomes) {
    acc += outcome.probability;
    if (u < acc && outcome.probability > kZeroProb) {
      return std::move(outcome);
    }
  }
  // Accumulated rounding can leave u just past the total; return the last
  // reachable outcome.
  for (auto it = outcomes.rbegin(); it != outcomes.rend(); ++it) {
    if (it->probability > kZeroProb) return std::move(*it);
  }
  throw std::runtime_error("measure_sample: no outcome has positive probability");
}

std::string dump_basis(const OrthonormalBasis& basis) {
  std::string out;
  char buf[64];
  for (std::size_t e = 0; e < basis.size(); ++e) {
    out += basis.labels[e];
    for (std::size_t i = 0; i < basis.elements[e].dim(); ++i) {
      Complex z = basis.elements[e].amp(i);
      std::snprintf(buf, sizeof(buf), " %.17g,%.17g", z.real(), z.imag());
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace sixq
