#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "abeta/carath.hpp"
#include "abeta/extremal.hpp"

using namespace abeta;
using std::numbers::pi;

namespace {

constexpr cplx I(0.0, 1.0);

// ftilde(-1) from 40-digit quadrature, beta = 0, 0.1, ..., 0.9.
constexpr double kAtMinusOne[] = {
    -0.38629436111989061883, -0.359391516994975126,   -0.3302701266008896209,
    -0.29871095947972623664, -0.26449272108575818817, -0.22741127776021876233,
    -0.18731496730781643873, -0.14416589184843609594, -0.098138472266119739821,
    -0.049754801499506499127};

}  // namespace

TEST_CASE("ftilde_coeff examples") {
  CHECK(ftilde_coeff(BetaParam(0.0), 2) == 1.0);
  CHECK(ftilde_coeff(BetaParam(1.0), 7) == 2.0);
  CHECK(ftilde_coeff(BetaParam(0.5), 3) == 1.0);
  CHECK_THROWS_AS(ftilde_coeff(BetaParam(0.5), 1), Error);
}

TEST_CASE("ftilde_eval examples and frozen values") {
  const BetaParam b0(0.0);
  const double r = 0.5;
  const auto half = ftilde_eval(b0, r);
  CHECK(half.method == EvalMethod::kSeries);
  CHECK(std::abs(half.value - (-r - 2 * std::log(1 - r))) <= 1e-12);
  CHECK(half.abs_error_bound <= 1e-12);

  CHECK(ftilde_eval(BetaParam(0.7), 0.0).value == cplx(0.0));

  const auto minus_one = ftilde_eval(b0, -1.0);
  CHECK(minus_one.method == EvalMethod::kQuadrature);
  CHECK(std::abs(minus_one.value - (1 - 2 * std::log(2.0))) <= 1e-12);

  // beta = 1/2: H(z) = -2(z + log(1-z))/z^2.
  const double hb = -2 * (r + std::log(1 - r)) / (r * r);
  CHECK(std::abs(ftilde_eval(BetaParam(0.5), r).value - r * (-1 + 2 * hb)) <= 1e-12);

  // 40-digit quadrature references.
  CHECK(std::abs(ftilde_eval(BetaParam(0.25), 0.3 + 0.4 * I).value -
                 cplx(0.10048244104804343038, 0.67100947761023349751)) <= 1e-12);
  const auto near_edge = ftilde_eval(BetaParam(0.6), 0.97 * I);
  CHECK(near_edge.method == EvalMethod::kQuadrature);
  CHECK(std::abs(near_edge.value - cplx(-0.86099890559102091282, 0.3445559588202167716)) <= 1e-12);
  const auto boundary = ftilde_eval(BetaParam(0.3), std::polar(1.0, 2.0));
  CHECK(std::abs(boundary.value - cplx(-0.63752630309938117286, 0.12453685163190943843)) <= 1e-12);

  const auto one = ftilde_eval(BetaParam(1.0), 0.5);
  CHECK(one.method == EvalMethod::kClosedForm);
  CHECK(std::abs(one.value - 1.5) <= 1e-15);
}

TEST_CASE("ftilde_eval domain errors") {
  const BetaParam b(0.4);
  CHECK_THROWS_AS(ftilde_eval(b, 1.0), Error);
  CHECK_THROWS_AS(ftilde_eval(b, 1.0001), Error);
  CHECK_THROWS_AS(ftilde_eval(b, 0.5, 1e-16), Error);
  CHECK_THROWS_AS(ftilde_eval_series(b, -1.0), Error);
  try {
    ftilde_eval(b, 1.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDomain);
  }
}

TEST_CASE("ftilde at -1: quadrature and Euler-accelerated series") {
  CHECK(ftilde_at_minus1(BetaParam(1.0)) == 0.0);
  CHECK(ftilde_at_minus1_euler(BetaParam(1.0)) == 0.0);
  for (int k = 0; k < 10; ++k) {
    const BetaParam beta(k / 10.0);
    const double quad = ftilde_at_minus1(beta);
    const double euler = ftilde_at_minus1_euler(beta);
    CHECK(quad < 0.0);
    CHECK(std::abs(quad - kAtMinusOne[k]) <= 1e-12);
    CHECK(std::abs(euler - kAtMinusOne[k]) <= 1e-12);
  }
  const double mid = ftilde_at_minus1(BetaParam(0.5));
  CHECK(mid > -0.386294);
  CHECK(mid < 0.0);
}

TEST_CASE("extremal_coeffs examples") {
  for (double b : {0.0, 0.3, 1.0}) {
    const auto f2 = extremal_coeffs(ExtremalId::kFtilde2, BetaParam(b), 4);
    CHECK(std::abs(f2.a(2)) == 0.0);
    CHECK(std::abs(f2.a(3)) == 0.0);
    CHECK(std::abs(f2.a(4) - 2.0 / (4 - 3 * b)) <= 1e-15);
  }
  const auto f3 = extremal_coeffs(ExtremalId::kFtilde3, BetaParam(0.0), 3);
  CHECK(std::abs(f3.a(2) - 0.5 * std::sqrt(3.5)) <= 1e-15);
  CHECK(std::abs(f3.a(3) - 0.5) <= 1e-15);

  const auto f1 = extremal_coeffs(ExtremalId::kFtilde1, BetaParam(0.0), 3);
  CHECK(std::abs(f1.a(2) - I) <= 1e-15);
  CHECK(std::abs(f1.a(3) + 2.0 / 3.0) <= 1e-15);

  // ftilde3 coefficients for general beta.
  for (double b : {0.2, 0.5, 0.8, 1.0}) {
    const auto a = extremal_coeffs(ExtremalId::kFtilde3, BetaParam(b), 3);
    const double c = std::sqrt((2 * b * b - 8 * b + 7) / (2 - b * b));
    CHECK(std::abs(a.a(2) - c / (2 - b)) <= 1e-14);
    CHECK(std::abs(a.a(3) - (1 - 2 * b) / (2 - b * b)) <= 1e-14);
  }
}

TEST_CASE("series_divide") {
  // 1/(1 - z) = 1 + z + z^2 + ...
  const auto geo = series_divide({1.0}, {1.0, -1.0}, 5);
  for (const auto& q : geo) CHECK(q == cplx(1.0));
  // (1 + z)/(1 - z) = 1 + 2z + 2z^2 + ...
  const auto kernel = series_divide({1.0, 1.0}, {1.0, -1.0}, 4);
  CHECK(kernel[0] == cplx(1.0));
  CHECK(kernel[3] == cplx(2.0));
  CHECK_THROWS_AS(series_divide({1.0}, {0.0, 1.0}, 3), Error);
}

TEST_CASE("property: extremal generating functions are Caratheodory") {
  for (auto id : {ExtremalId::kFtilde, ExtremalId::kFtilde1, ExtremalId::kFtilde2,
                  ExtremalId::kFtilde3}) {
    for (int k = 0; k < 10; ++k) {
      const BetaParam beta(k / 10.0);
      const auto a = extremal_coeffs(id, beta, 9);
      std::vector<cplx> p;
      for (int n = 2; n <= 9; ++n) p.push_back(a.a(n) * beta.weight(n));
      REQUIRE(psd_check(p));
    }
  }
  for (int k = 0; k <= 10; ++k) CHECK(ftilde3_parameter(BetaParam(k / 10.0)) <= 2.0);
}

TEST_CASE("property: extremal_coeffs(FTILDE) equals ftilde_coeff") {
  for (int k = 0; k <= 10; ++k) {
    const BetaParam beta(k / 10.0);
    const auto a = extremal_coeffs(ExtremalId::kFtilde, beta, 16);
    for (int n = 2; n <= 16; ++n) REQUIRE(a.a(n) == cplx(ftilde_coeff(beta, n)));
  }
}

TEST_CASE("property: series and quadrature agree") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const BetaParam beta(0.95 * u(rng));
    const cplx z = std::polar(0.9 * std::sqrt(u(rng)), 2 * pi * u(rng));
    const auto s = ftilde_eval_series(beta, z, 1e-13);
    const auto q = ftilde_eval_quadrature(beta, z, 1e-13);
    REQUIRE(std::abs(s.value - q.value) <= 1e-10);
  }
}

TEST_CASE("property: ftilde(r) increases on (0, 1)") {
  for (int k = 0; k <= 10; ++k) {
    const BetaParam beta(k / 10.0);
    double prev = 0.0;
    for (int i = 1; i < 100; ++i) {
      const double v = ftilde_eval(beta, i / 100.0).value.real();
      REQUIRE(v > prev);
      prev = v;
    }
  }
}
