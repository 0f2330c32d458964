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
#include <random>

#include "sixq/linalg.hpp"
#include "sixq/states.hpp"

using namespace sixq;

namespace {

CVector random_vector(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  auto unit = [&] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };
  CVector v(size);
  for (Complex& z : v) z = Complex{unit() - 0.5, unit() - 0.5};
  return v;
}

double max_abs_diff(const CVector& a, const CVector& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("tensor product of computational kets") {
  CVector zero{1.0, 0.0};
  CVector out = tensor_product(zero, zero);
  CHECK(out == CVector{1.0, 0.0, 0.0, 0.0});

  const double s = 1.0 / std::sqrt(2.0);
  CVector plus{s, s};
  out = tensor_product(plus, zero);
  CHECK(max_abs_diff(out, CVector{s, 0.0, s, 0.0}) == 0.0);
}

TEST_CASE("tensor product reproduces a channel block") {
  // |000> (x) phi+ populates exactly indices 0 and 3 of the two-qubit factor.
  CVector ket000(8, Complex{0.0, 0.0});
  ket000[0] = 1.0;
  CVector out = tensor_product(ket000, bell(BellKind::PhiPlus).amps());
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i == 0 || i == 3) {
      CHECK(std::abs(out[i] - Complex{s, 0.0}) < 1e-15);
    } else {
      CHECK(std::abs(out[i]) == 0.0);
    }
  }
}

TEST_CASE("tensor product is associative entrywise") {
  CVector a = random_vector(4, 11);
  CVector b = random_vector(3, 12);
  CVector c = random_vector(5, 13);
  // Index arithmetic is exact; the entries themselves see one rounding of
  // the complex products on each side.
  CHECK(max_abs_diff(tensor_product(tensor_product(a, b), c),
                     tensor_product(a, tensor_product(b, c))) < 1e-15);

  // With dyadic entries both sides are bit-identical.
  CVector d{1.0, -0.5};
  CVector e{0.25, 2.0, -1.0};
  CVector f{0.5, -2.0};
  CHECK(tensor_product(tensor_product(d, e), f) ==
        tensor_product(d, tensor_product(e, f)));
}

TEST_CASE("tensor product rejects empty operands") {
  CHECK_THROWS_AS(tensor_product({}, {Complex{1.0, 0.0}}), std::invalid_argument);
}

TEST_CASE("inner product basics") {
  CHECK(inner_product({1.0, 0.0}, {0.0, 1.0}) == Complex{0.0, 0.0});

  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(inner_product({s, s}, {s, s}) - Complex{1.0, 0.0}) < 1e-15);

  CHECK(std::abs(inner_product(zeta("000").amps(), zeta("001").amps())) <
        1e-15);

  CHECK_THROWS_AS(inner_product({1.0}, {1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("inner product is conjugate-linear in the first argument") {
  CVector a = random_vector(6, 21);
  CVector b = random_vector(6, 22);
  Complex factor{0.3, -1.2};
  Complex lhs = inner_product(scaled(a, factor), b);
  Complex rhs = std::conj(factor) * inner_product(a, b);
  CHECK(std::abs(lhs - rhs) < 1e-12);

  Complex self = inner_product(a, a);
  CHECK(self.imag() == 0.0);
  CHECK(self.real() >= 0.0);
}

TEST_CASE("Cauchy-Schwarz holds on random vectors") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CVector a = random_vector(8, 100 + seed);
    CVector b = random_vector(8, 200 + seed);
    CHECK(std::abs(inner_product(a, b)) <= norm(a) * norm(b) + 1e-12);
  }
}

TEST_CASE("apply_operator basics") {
  ComplexMatrix id = ComplexMatrix::identity(4);
  CVector v = random_vector(4, 31);
  CHECK(max_abs_diff(id.apply(v), v) == 0.0);

  ComplexMatrix x(2, 2);
  x.at(0, 1) = 1.0;
  x.at(1, 0) = 1.0;
  CHECK(x.apply({1.0, 0.0}) == CVector{0.0, 1.0});

  CHECK_THROWS_AS(x.apply(v), std::invalid_argument);
}

TEST_CASE("unitary application preserves norm") {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix h(2, 2, {s, s, s, -s});
  ComplexMatrix x(2, 2, {0.0, 1.0, 1.0, 0.0});
  ComplexMatrix u = kron(h, x);
  CVector v = random_vector(4, 41);
  CHECK(norm(u.apply(v)) == doctest::Approx(norm(v)).epsilon(1e-12));

  // dagger(U) U acts as the identity.
  ComplexMatrix round_trip = u.dagger() * u;
  CHECK(max_abs_diff(round_trip.apply(v), v) < 1e-12);
}

TEST_CASE("dagger") {
  ComplexMatrix id = ComplexMatrix::identity(3);
  CHECK(id.dagger().max_abs_diff(id) == 0.0);

  ComplexMatrix m(2, 2);
  m.at(0, 1) = Complex{0.0, 1.0};
  ComplexMatrix d = m.dagger();
  CHECK(d.at(0, 1) == Complex{0.0, 0.0});
  CHECK(d.at(1, 0) == Complex{0.0, -1.0});

  // An exact involution.
  CVector entries = random_vector(12, 51);
  ComplexMatrix r(3, 4, entries);
  CHECK(r.dagger().dagger().max_abs_diff(r) == 0.0);
}

TEST_CASE("matrix product and outer product") {
  CVector ket{1.0, 0.0};
  CVector bra{0.0, 1.0};
  ComplexMatrix op = outer_product(ket, bra);  // |0><1|
  CHECK(op.at(0, 1) == Complex{1.0, 0.0});
  CHECK(op.apply({0.0, 1.0}) == CVector{1.0, 0.0});

  ComplexMatrix shape_a(2, 3);
  ComplexMatrix shape_b(2, 3);
  CHECK_THROWS_AS(shape_a * shape_b, std::invalid_argument);
}

TEST_CASE("finiteness guard") {
  CHECK(all_finite({Complex{1.0, 2.0}}));
  CHECK_FALSE(all_finite({Complex{1.0, std::nan("")}}));
  CHECK_FALSE(all_finite({Complex{INFINITY, 0.0}}));
}
