#include <doctest.h>

#include <cmath>
#include <random>

#include "abeta/carath.hpp"
#include "abeta/extremal.hpp"
#include "abeta/functionals.hpp"

using namespace abeta;

namespace {

constexpr cplx I(0.0, 1.0);

CoeffSeq seq(double beta, std::vector<cplx> a) { return CoeffSeq(BetaParam(beta), std::move(a)); }

}  // namespace

TEST_CASE("hankel2") {
  const BetaParam b0(0.0);
  const auto f1 = extremal_coeffs(ExtremalId::kFtilde1, b0, 6);
  // a_2 = i, a_3 = -2/3, a_4 = -i/2.
  CHECK(std::abs(hankel2(f1, 2) - 1.0 / 18.0) <= 1e-15);
  CHECK(hankel2(seq(0.0, {0.0, 0.0, 0.0}), 2) == cplx(0.0));
  const auto f = extremal_coeffs(ExtremalId::kFtilde, b0, 6);
  CHECK(std::abs(hankel2(f, 1, 0.0) - 2.0 / 3.0) <= 1e-15);
  CHECK_THROWS_AS(hankel2(f, 5), Error);
}

TEST_CASE("toeplitz3") {
  CHECK(toeplitz3(seq(0.0, {0.0, 0.0})) == cplx(1.0));
  const auto f1 = extremal_coeffs(ExtremalId::kFtilde1, BetaParam(0.0), 3);
  CHECK(std::abs(toeplitz3(f1) - 35.0 / 9.0) <= 1e-14);
  const auto f = extremal_coeffs(ExtremalId::kFtilde, BetaParam(0.0), 3);
  CHECK(std::abs(toeplitz3(f) + 1.0 / 9.0) <= 1e-14);
}

TEST_CASE("hermitian_t31") {
  CHECK(hermitian_t31(seq(0.0, {0.0, 0.0})) == 1.0);
  const auto f3 = extremal_coeffs(ExtremalId::kFtilde3, BetaParam(0.0), 3);
  CHECK(std::abs(hermitian_t31(f3) + 0.125) <= 1e-14);
  CHECK(std::abs(hermitian_t31(seq(0.0, {1.0, 1.0}))) <= 1e-15);
}

TEST_CASE("hermitian_t2n") {
  const auto f1 = extremal_coeffs(ExtremalId::kFtilde1, BetaParam(0.0), 4);
  // Index n = 2 pairs a_2 = i with a_3 = -2/3.
  CHECK(std::abs(hermitian_t2n(f1, 2) + 13.0 / 9.0) <= 1e-14);
  CHECK(hermitian_t2n(seq(0.3, {0.5, 0.5}), 2) == cplx(0.0));
  const auto f = extremal_coeffs(ExtremalId::kFtilde, BetaParam(1.0), 5);
  CHECK(hermitian_t2n(f, 3) == cplx(0.0));
}

TEST_CASE("zalcman") {
  for (double b : {0.0, 0.4, 1.0}) {
    const auto f2 = extremal_coeffs(ExtremalId::kFtilde2, BetaParam(b), 4);
    CHECK(std::abs(zalcman(f2, 2, 3) + 2.0 / (4 - 3 * b)) <= 1e-15);
  }
  CHECK(zalcman(seq(0.0, {0.0, 0.0, 0.0}), 2, 3) == cplx(0.0));
  const auto f = extremal_coeffs(ExtremalId::kFtilde, BetaParam(0.0), 3);
  CHECK(std::abs(zalcman(f, 2, 2) - 1.0 / 3.0) <= 1e-15);
}

TEST_CASE("coeff_diff_power") {
  const auto f = extremal_coeffs(ExtremalId::kFtilde, BetaParam(0.0), 4);
  CHECK(std::abs(coeff_diff_power(f, 2, 1) + 1.0 / 3.0) <= 1e-15);
  CHECK(std::abs(coeff_diff_power(f, 2, 2) + 5.0 / 9.0) <= 1e-15);
  const auto eq = seq(0.2, {0.3 + 0.1 * I, 0.3 + 0.1 * I});
  for (int N = 1; N <= 4; ++N) CHECK(coeff_diff_power(eq, 2, N) == cplx(0.0));
}

TEST_CASE("property: T31 is real and agrees with the 3x3 Hermitian determinant") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const cplx a2(u(rng), u(rng));
    const cplx a3(u(rng), u(rng));
    // det [[1, a2, a3], [conj a2, 1, a2], [conj a3, conj a2, 1]]
    const cplx det = 1.0 * (1.0 - a2 * std::conj(a2)) - a2 * (std::conj(a2) - a2 * std::conj(a3)) +
                     a3 * (std::conj(a2) * std::conj(a2) - std::conj(a3));
    REQUIRE(std::abs(det.imag()) <= 1e-14);
    REQUIRE(std::abs(hermitian_t31(seq(0.5, {a2, a3})) - det.real()) <= 1e-13);
  }
}

TEST_CASE("property: hankel2 is linear in mu") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const auto a = seq(0.5, {cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng))});
    const double mu = 2 * (u(rng) + 1);
    const cplx expected = hankel2(a, 2, 0.0) - mu * a.a(3) * a.a(3);
    REQUIRE(std::abs(hankel2(a, 2, mu) - expected) <= 1e-14);
  }
}
