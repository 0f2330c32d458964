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

#include <algorithm>
#include <cmath>

#include "sixq/entanglement.hpp"

using namespace sixq;

TEST_CASE("partial trace of a Bell pair is maximally mixed") {
  DensityMatrix reduced = partial_trace(bell(BellKind::PhiPlus), {1});
  CHECK(reduced.matrix().max_abs_diff(
            ComplexMatrix::identity(2).scaled_by(0.5)) < 1e-15);
}

TEST_CASE("partial trace of a product state is pure") {
  PureState zero_zero(2, {1.0, 0.0, 0.0, 0.0});
  DensityMatrix reduced = partial_trace(zero_zero, {2});
  CHECK(reduced.matrix().at(0, 0) == Complex{1.0, 0.0});
  CHECK(std::abs(reduced.matrix().at(1, 1)) == 0.0);
}

TEST_CASE("partial trace argument checks") {
  PureState s = random_state(3, 4);
  CHECK_THROWS_AS(partial_trace(s, {}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(s, {0}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(s, {4}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(s, {1, 1}), std::invalid_argument);
}

TEST_CASE("every small marginal of the channel is maximally mixed") {
  PureState channel = borras();
  CHECK(mixedness_report(channel, 1) < 1e-12);
  CHECK(mixedness_report(channel, 2) < 1e-12);
  CHECK(mixedness_report(channel, 3) < 1e-12);
}

TEST_CASE("mixedness of a product state") {
  PureState basis_state(3, [] {
    CVector v(8, Complex{0.0, 0.0});
    v[0] = 1.0;
    return v;
  }());
  CHECK(mixedness_report(basis_state, 1) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("purity") {
  PureState zero(1, {1.0, 0.0});
  CHECK(purity(DensityMatrix::from_pure(zero)) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(purity(DensityMatrix::maximally_mixed(2)) ==
        doctest::Approx(0.25).epsilon(1e-14));
  CHECK(purity(partial_trace(borras(), {2, 5})) ==
        doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("concurrence") {
  CHECK(concurrence(DensityMatrix::from_pure(bell(BellKind::PhiPlus))) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(concurrence(DensityMatrix::from_pure(bell(BellKind::PsiMinus))) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(concurrence(DensityMatrix::maximally_mixed(2)) <= 1e-10);

  PureState product(2, {1.0, 0.0, 0.0, 0.0});
  CHECK(concurrence(DensityMatrix::from_pure(product)) <= 1e-10);

  SUBCASE("channel marginals are separable") {
    PureState channel = borras();
    for (int q = 2; q <= 6; ++q) {
      CHECK(concurrence(partial_trace(channel, {1, q})) <= 1e-10);
    }
  }

  SUBCASE("rejects non-PSD input") {
    ComplexMatrix bad(4, 4);
    bad.at(0, 0) = 1.5;
    bad.at(1, 1) = -0.5;
    CHECK_THROWS_AS(concurrence(DensityMatrix(2, bad)), std::invalid_argument);
  }

  SUBCASE("rejects wrong dimension") {
    CHECK_THROWS_AS(concurrence(DensityMatrix::maximally_mixed(1)),
                    std::invalid_argument);
  }
}

TEST_CASE("one-tangle") {
  PureState product(3, [] {
    CVector v(8, Complex{0.0, 0.0});
    v[0] = 1.0;
    return v;
  }());
  CHECK(one_tangle(product, 1) == doctest::Approx(0.0));
  CHECK(one_tangle(bell(BellKind::PhiPlus), 1) ==
        doctest::Approx(1.0).epsilon(1e-12));

  PureState channel = borras();
  for (int q = 1; q <= 6; ++q) {
    CHECK(one_tangle(channel, q) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("monogamy reports") {
  SUBCASE("channel: all pairwise tangles vanish, slack is one") {
    PureState channel = borras();
    for (int focus = 1; focus <= 6; ++focus) {
      MonogamyReport report = monogamy_check(channel, focus);
      CHECK(report.pairwise_tangles.size() == 5);
      for (double tangle : report.pairwise_tangles) CHECK(tangle <= 1e-10);
      CHECK(report.one_tangle == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(report.slack == doctest::Approx(1.0).epsilon(1e-10));
    }
  }

  SUBCASE("a Bell pair saturates the bound") {
    PureState state = tensor(bell(BellKind::PhiPlus), PureState(1, {1.0, 0.0}));
    MonogamyReport report = monogamy_check(state, 1);
    CHECK(report.pairwise_tangles[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(report.pairwise_tangles[1] <= 1e-10);
    CHECK(report.one_tangle == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(report.slack) <= 1e-9);
  }

  SUBCASE("a product state has nothing to bound") {
    PureState product(3, [] {
      CVector v(8, Complex{0.0, 0.0});
      v[0] = 1.0;
      return v;
    }());
    MonogamyReport report = monogamy_check(product, 1);
    CHECK(report.one_tangle == doctest::Approx(0.0));
    CHECK(std::abs(report.slack) <= 1e-10);
  }

  CHECK_THROWS_AS(monogamy_check(borras(), 7), std::invalid_argument);
}

TEST_CASE("Schmidt symmetry of pure bipartitions") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PureState state = random_state(5, 900 + seed);
    std::vector<int> left{1, 3};
    std::vector<int> right{2, 4, 5};
    std::vector<double> ev_left = partial_trace(state, left).eigenvalues();
    std::vector<double> ev_right = partial_trace(state, right).eigenvalues();
    // Compare the nonzero spectra (descending).
    std::sort(ev_left.rbegin(), ev_left.rend());
    std::sort(ev_right.rbegin(), ev_right.rend());
    for (std::size_t i = 0; i < ev_left.size(); ++i) {
      CHECK(ev_left[i] == doctest::Approx(ev_right[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("partial trace preserves trace and positivity") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PureState state = random_state(4, 700 + seed);
    DensityMatrix reduced = partial_trace(state, {2, 4});
    Complex trace{0.0, 0.0};
    for (std::size_t i = 0; i < reduced.dim(); ++i) {
      trace += reduced.matrix().at(i, i);
    }
    CHECK(std::abs(trace - Complex{1.0, 0.0}) < 1e-12);
    CHECK(reduced.is_positive_semidefinite(1e-10));
  }
}

TEST_CASE("density matrix from a density matrix input") {
  DensityMatrix rho = DensityMatrix::from_pure(borras());
  DensityMatrix direct = partial_trace(rho, {1, 4});
  DensityMatrix via_state = partial_trace(borras(), {1, 4});
  CHECK(direct.matrix().max_abs_diff(via_state.matrix()) < 1e-12);
}

TEST_CASE("density matrix validation") {
  ComplexMatrix not_hermitian(2, 2);
  not_hermitian.at(0, 1) = 1.0;
  not_hermitian.at(0, 0) = 1.0;
  CHECK_THROWS_AS(DensityMatrix(1, not_hermitian), std::invalid_argument);

  ComplexMatrix bad_trace = ComplexMatrix::identity(2);
  CHECK_THROWS_AS(DensityMatrix(1, bad_trace), std::invalid_argument);

  ComplexMatrix wrong_shape = ComplexMatrix::identity(3);
  CHECK_THROWS_AS(DensityMatrix(1, wrong_shape), std::invalid_argument);
}
