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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sixq/correction.hpp"
#include "sixq/measurement.hpp"
#include "sixq/protocols.hpp"

using namespace sixq;

namespace {

double max_abs_diff(const CVector& a, const CVector& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

CVector ket(std::size_t dim, std::size_t index, double sign = 1.0) {
  CVector v(dim, Complex{0.0, 0.0});
  v[index] = sign;
  return v;
}

// Applies the branch correction to the receiver state reached by `input`.
double corrected_fidelity(ProtocolKind kind, const PureState& input,
                          std::size_t alice_index, std::size_t bob_index,
                          const CorrectionUnitary& correction) {
  PostBob post = post_bob_state(kind, input, alice_index, bob_index);
  REQUIRE(post.state.has_value());
  PureState output(input.n_qubits(), correction.matrix.apply(post.state->amps()));
  return fidelity(input, output);
}

}  // namespace

TEST_CASE("is_unitary") {
  CHECK(is_unitary(ComplexMatrix::identity(4)));
  ComplexMatrix stretch(2, 2);
  stretch.at(0, 0) = 1.0;
  stretch.at(1, 1) = 2.0;
  CHECK_FALSE(is_unitary(stretch));
  CHECK_THROWS_AS(is_unitary(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("basis_change") {
  SUBCASE("identity when source equals target") {
    std::vector<CVector> kets{ket(2, 0), ket(2, 1)};
    ComplexMatrix u = basis_change(kets, kets);
    CHECK(u.max_abs_diff(ComplexMatrix::identity(2)) < 1e-15);
  }

  SUBCASE("swap gives a bit flip") {
    ComplexMatrix u = basis_change({ket(2, 1), ket(2, 0)},
                                   {ket(2, 0), ket(2, 1)});
    CHECK(u.at(0, 1) == Complex{1.0, 0.0});
    CHECK(u.at(1, 0) == Complex{1.0, 0.0});
    CHECK(is_unitary(u, 1e-14));
  }

  SUBCASE("zeta basis to computational kets undoes the teleport collapse") {
    std::vector<CVector> source;
    std::vector<CVector> target;
    for (int c = 0; c < 8; ++c) {
      source.push_back(zeta_indexed(c + 1).amps());
      target.push_back(ket(8, c));
    }
    ComplexMatrix u = basis_change(source, target);
    CHECK(is_unitary(u, 1e-12));

    PureState input = random_state(3, 17);
    CVector collapse(8, Complex{0.0, 0.0});
    for (int c = 0; c < 8; ++c) {
      for (int j = 0; j < 8; ++j) {
        collapse[j] += input.amp(c) * zeta_indexed(c + 1).amp(j);
      }
    }
    CHECK(max_abs_diff(u.apply(collapse), input.amps()) < 1e-12);
  }

  SUBCASE("rejects non-orthonormal input") {
    std::vector<CVector> slanted{ket(2, 0), {1.0 / std::sqrt(2.0),
                                             1.0 / std::sqrt(2.0)}};
    std::vector<CVector> kets{ket(2, 0), ket(2, 1)};
    CHECK_THROWS_AS(basis_change(slanted, kets), std::invalid_argument);
  }

  SUBCASE("rejects a partial span") {
    CHECK_THROWS_AS(basis_change({ket(4, 0)}, {ket(4, 1)}),
                    std::invalid_argument);
  }
}

TEST_CASE("pauli tensor factorization") {
  ComplexMatrix x(2, 2, {0.0, 1.0, 1.0, 0.0});
  ComplexMatrix z(2, 2, {1.0, 0.0, 0.0, -1.0});
  ComplexMatrix y(2, 2,
                  {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0});

  CHECK(pauli_tensor_factorization(kron(x, z)) == "X(x)Z");
  CHECK(pauli_tensor_factorization(ComplexMatrix::identity(4)) == "I(x)I");
  CHECK(pauli_tensor_factorization(kron(y, x).scaled_by(Complex{0.0, -1.0})) ==
        "-iY(x)X");
  CHECK(pauli_tensor_factorization(kron(kron(x, x), z).scaled_by(-1.0)) ==
        "-X(x)X(x)Z");

  ComplexMatrix cyclic(4, 4);
  cyclic.at(1, 0) = 1.0;
  cyclic.at(2, 1) = 1.0;
  cyclic.at(3, 2) = 1.0;
  cyclic.at(0, 3) = 1.0;
  CHECK_FALSE(pauli_tensor_factorization(cyclic).has_value());
}

TEST_CASE("teleportation branch corrections") {
  SUBCASE("the diagonal branch fixes the zeta expansion") {
    const CorrectionUnitary& u =
        derive_branch_correction("teleport3", "000000", "-");
    CHECK(u.dim == 8);
    CHECK(is_unitary(u.matrix, 1e-10));

    PureState basis_input(3, ket(8, 0));
    PostBob post =
        post_bob_state(ProtocolKind::Teleport3, basis_input, 0, 0);
    REQUIRE(post.state.has_value());
    CHECK(max_abs_diff(post.state->amps(), zeta("000").amps()) < 1e-12);
    CHECK(corrected_fidelity(ProtocolKind::Teleport3, basis_input, 0, 0, u) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("every branch is unitary and input-independent") {
    OrthonormalBasis basis = generalized_bell_basis_6();
    for (std::size_t a = 0; a < 64; ++a) {
      const CorrectionUnitary& u =
          derive_branch_correction("teleport3", basis.labels[a], "-");
      CHECK(is_unitary(u.matrix, 1e-10));
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        PureState input = random_state(3, 2000 + 10 * a + seed);
        CHECK(corrected_fidelity(ProtocolKind::Teleport3, input, a, 0, u) >=
              1.0 - 1e-10);
      }
    }
  }
}

TEST_CASE("first sharing protocol: Bell-branch collapse states") {
  // Alice row 1 upper, Bob phi+: the four probe inputs collapse Charlie to
  // |11>, |00>, |01>, |10> with positive signs. (The reference table carries
  // -gamma |00> here; the projection gives +.)
  std::size_t alice_index = 0;
  std::size_t bob_phi_plus = 0;
  struct Expectation {
    int probe;  // canonical coefficient index
    std::size_t ket_index;
  };
  for (const Expectation& expect :
       {Expectation{0, 3}, Expectation{1, 0}, Expectation{2, 1},
        Expectation{3, 2}}) {
    PureState probe = CoefficientQuad::basis(expect.probe).as_state();
    PostBob post = post_bob_state(ProtocolKind::Qsts1Bell, probe, alice_index,
                                  bob_phi_plus);
    REQUIRE(post.state.has_value());
    CHECK(max_abs_diff(post.state->amps(), ket(4, expect.ket_index)) < 1e-12);
  }
}

TEST_CASE("second sharing protocol: computational-branch collapse states") {
  // Family IV, Alice row 3 upper, Bob |0>: probes land on
  // psi+, -phi+, phi-, -psi- (canonical coefficient order c00, c01, c10, c11).
  std::size_t alice_index = 4;  // r3+
  struct Expectation {
    int probe;
    BellKind kind;
    double sign;
  };
  for (const Expectation& expect :
       {Expectation{0, BellKind::PsiPlus, 1.0},
        Expectation{1, BellKind::PhiPlus, -1.0},
        Expectation{2, BellKind::PhiMinus, 1.0},
        Expectation{3, BellKind::PsiMinus, -1.0}}) {
    PureState probe = CoefficientQuad::basis(expect.probe).as_state();
    PostBob post =
        post_bob_state(ProtocolKind::Qsts2TableIV, probe, alice_index, 0);
    REQUIRE(post.state.has_value());
    CHECK(max_abs_diff(post.state->amps(),
                       scaled(bell(expect.kind).amps(),
                              Complex{expect.sign, 0.0})) < 1e-12);
  }
}

TEST_CASE("all sharing-protocol corrections are unitary and input-independent") {
  struct Sweep {
    const char* protocol;
    ProtocolKind kind;
    std::size_t alice_count;
  };
  for (const Sweep& sweep :
       {Sweep{"qsts1-bell", ProtocolKind::Qsts1Bell, 16},
        Sweep{"qsts1-computational", ProtocolKind::Qsts1Computational, 16},
        Sweep{"qsts2-iv", ProtocolKind::Qsts2TableIV, 16},
        Sweep{"qsts2-vi", ProtocolKind::Qsts2TableVI, 16}}) {
    const OrthonormalBasis& alice = alice_basis(sweep.kind);
    const OrthonormalBasis& bob = *bob_basis_of(sweep.kind);
    for (std::size_t a = 0; a < sweep.alice_count; ++a) {
      for (std::size_t b = 0; b < bob.size(); ++b) {
        const CorrectionUnitary& u = derive_branch_correction(
            sweep.protocol, alice.labels[a], bob.labels[b]);
        CHECK(u.dim == 4);
        CHECK(is_unitary(u.matrix, 1e-10));
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
          PureState input =
              CoefficientQuad::random(3000 + 100 * a + 10 * b + seed).as_state();
          CHECK(corrected_fidelity(sweep.kind, input, a, b, u) >= 1.0 - 1e-10);
        }
      }
    }
  }
}

TEST_CASE("filler branches are not correctable") {
  CHECK_THROWS_AS(derive_branch_correction("qsts2-iv", "k00001", "0"),
                  NonCorrectableBranch);
  CHECK_THROWS_AS(derive_branch_correction("qsts2-vi", "k00001", "h+"),
                  NonCorrectableBranch);
}

TEST_CASE("derive_correction_from_probes flags zero-probability paths") {
  auto dead_end = [](const PureState&) -> std::optional<PureState> {
    return std::nullopt;
  };
  CHECK_THROWS_AS(
      derive_correction_from_probes(dead_end, 1, BranchId{"x", "y", "z"}),
      NonCorrectableBranch);
}

TEST_CASE("derive_correction_from_probes flags information loss") {
  // Every probe collapses to the same state: nothing to invert.
  auto constant = [](const PureState&) -> std::optional<PureState> {
    return PureState(1, CVector{1.0, 0.0});
  };
  CHECK_THROWS_AS(
      derive_correction_from_probes(constant, 1, BranchId{"x", "y", "z"}),
      NonCorrectableBranch);
}
