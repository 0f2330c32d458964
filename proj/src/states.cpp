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

#include "sixq/states.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sixq {

namespace {

constexpr double kNormGuard = 1e-8;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

struct SignedBell {
  double sign;
  BellKind kind;
};

// The eight blocks of the channel state, one per three-bit prefix c:
// |c> (s0 |0> bell0 + s1 |1> bell1). zeta_c is the bracket alone,
// renormalized by 1/sqrt2.
constexpr std::array<std::array<SignedBell, 2>, 8> kZetaBlocks = {{
    {{{+1.0, BellKind::PhiPlus}, {+1.0, BellKind::PsiPlus}}},    // 000
    {{{+1.0, BellKind::PsiMinus}, {-1.0, BellKind::PhiMinus}}},  // 001
    {{{+1.0, BellKind::PsiPlus}, {-1.0, BellKind::PhiPlus}}},    // 010
    {{{+1.0, BellKind::PhiMinus}, {+1.0, BellKind::PsiMinus}}},  // 011
    {{{-1.0, BellKind::PsiMinus}, {-1.0, BellKind::PhiMinus}}},  // 100
    {{{-1.0, BellKind::PhiPlus}, {+1.0, BellKind::PsiPlus}}},    // 101
    {{{+1.0, BellKind::PhiMinus}, {-1.0, BellKind::PsiMinus}}},  // 110
    {{{+1.0, BellKind::PsiPlus}, {+1.0, BellKind::PhiPlus}}},    // 111
}};

struct SignedBellComp {
  double sign;
  BellKind kind;
  int comp;  // two-bit computational ket on the trailing pair
};

constexpr std::array<std::array<SignedBellComp, 4>, 4> kEtaTerms = {{
    {{{+1.0, BellKind::PhiMinus, 0},
      {+1.0, BellKind::PhiPlus, 3},
      {+1.0, BellKind::PsiPlus, 1},
      {+1.0, BellKind::PsiMinus, 2}}},
    {{{-1.0, BellKind::PsiMinus, 0},
      {-1.0, BellKind::PsiPlus, 3},
      {+1.0, BellKind::PhiPlus, 1},
      {+1.0, BellKind::PhiMinus, 2}}},
    {{{+1.0, BellKind::PhiPlus, 0},
      {-1.0, BellKind::PhiMinus, 3},
      {-1.0, BellKind::PsiMinus, 1},
      {+1.0, BellKind::PsiPlus, 2}}},
    {{{-1.0, BellKind::PsiPlus, 0},
      {+1.0, BellKind::PsiMinus, 3},
      {+1.0, BellKind::PhiPlus, 2},
      {-1.0, BellKind::PhiMinus, 1}}},
}};

CVector unnormalized_zeta_block(int prefix) {
  CVector block(8, Complex{0.0, 0.0});
  for (int lead = 0; lead < 2; ++lead) {
    const SignedBell& sb = kZetaBlocks[prefix][lead];
    const CVector b = bell(sb.kind).amps();
    for (int j = 0; j < 4; ++j) {
      block[lead * 4 + j] += sb.sign * b[j];
    }
  }
  return block;
}

// Portable Box-Muller on top of mt19937_64; std::normal_distribution is
// implementation-defined, which would break cross-platform determinism.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = unit_open();
    double u2 = unit_open();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  double unit_open() {
    // In (0, 1], so the logarithm stays finite.
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace

PureState::PureState(int n_qubits, CVector amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits_ < 1) {
    throw std::invalid_argument("PureState: need at least one qubit");
  }
  if (amps_.size() != (std::size_t{1} << n_qubits_)) {
    throw std::invalid_argument("PureState: amplitude count != 2^n");
  }
  if (!all_finite(amps_)) {
    throw std::invalid_argument("PureState: non-finite amplitude");
  }
  if (std::abs(norm(amps_) - 1.0) > kNormGuard) {
    throw std::invalid_argument("PureState: not normalized");
  }
}

PureState PureState::from_unnormalized(int n_qubits, const CVector& amplitudes) {
  return PureState(n_qubits, normalized(amplitudes));
}

PureState tensor(const PureState& a, const PureState& b) {
  return PureState(a.n_qubits() + b.n_qubits(),
                   tensor_product(a.amps(), b.amps()));
}

double fidelity(const PureState& a, const PureState& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("fidelity: qubit count mismatch");
  }
  return std::norm(inner_product(a.amps(), b.amps()));
}

PureState bell(BellKind kind) {
  CVector v(4, Complex{0.0, 0.0});
  switch (kind) {
    case BellKind::PhiPlus:
      v[0] = kInvSqrt2;
      v[3] = kInvSqrt2;
      break;
    case BellKind::PhiMinus:
      v[0] = kInvSqrt2;
      v[3] = -kInvSqrt2;
      break;
    case BellKind::PsiPlus:
      v[1] = kInvSqrt2;
      v[2] = kInvSqrt2;
      break;
    case BellKind::PsiMinus:
      v[1] = kInvSqrt2;
      v[2] = -kInvSqrt2;
      break;
  }
  return PureState(2, std::move(v));
}

PureState borras() {
  CVector v(64, Complex{0.0, 0.0});
  for (int prefix = 0; prefix < 8; ++prefix) {
    CVector block = unnormalized_zeta_block(prefix);
    for (int j = 0; j < 8; ++j) {
      v[prefix * 8 + j] = 0.25 * block[j];
    }
  }
  return PureState(6, std::move(v));
}

PureState zeta(const std::string& label) {
  if (label.size() != 3 || label.find_first_not_of("01") != std::string::npos) {
    throw std::invalid_argument("zeta: label must be three bits");
  }
  int prefix = (label[0] - '0') * 4 + (label[1] - '0') * 2 + (label[2] - '0');
  return PureState(3, scaled(unnormalized_zeta_block(prefix), kInvSqrt2));
}

PureState zeta_indexed(int i) {
  if (i < 1 || i > 8) {
    throw std::invalid_argument("zeta_indexed: index must be in 1..8");
  }
  return PureState(3, scaled(unnormalized_zeta_block(i - 1), kInvSqrt2));
}

PureState eta(int i) {
  if (i < 1 || i > 4) {
    throw std::invalid_argument("eta: index must be in 1..4");
  }
  CVector v(16, Complex{0.0, 0.0});
  for (const SignedBellComp& term : kEtaTerms[i - 1]) {
    const CVector b = bell(term.kind).amps();
    for (int j = 0; j < 4; ++j) {
      v[j * 4 + term.comp] += 0.5 * term.sign * b[j];
    }
  }
  return PureState(4, std::move(v));
}

PureState random_state(int n_qubits, std::uint64_t seed) {
  if (n_qubits < 1) {
    throw std::invalid_argument("random_state: need at least one qubit");
  }
  GaussianSource gauss(seed);
  CVector v(std::size_t{1} << n_qubits);
  for (Complex& z : v) {
    double re = gauss.next();
    double im = gauss.next();
    z = Complex{re, im};
  }
  return PureState(n_qubits, normalized(v));
}

PureState CoefficientQuad::as_state() const {
  return PureState(2, CVector{c00, c01, c10, c11});
}

CoefficientQuad CoefficientQuad::from_state(const PureState& s) {
  if (s.n_qubits() != 2) {
    throw std::invalid_argument("CoefficientQuad: need a two-qubit state");
  }
  return CoefficientQuad{s.amp(0), s.amp(1), s.amp(2), s.amp(3)};
}

CoefficientQuad CoefficientQuad::random(std::uint64_t seed) {
  return from_state(random_state(2, seed));
}

CoefficientQuad CoefficientQuad::basis(int k) {
  if (k < 0 || k > 3) {
    throw std::invalid_argument("CoefficientQuad::basis: index must be 0..3");
  }
  CVector v(4, Complex{0.0, 0.0});
  v[k] = Complex{1.0, 0.0};
  return CoefficientQuad{v[0], v[1], v[2], v[3]};
}

}  // namespace sixq
