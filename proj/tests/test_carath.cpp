#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "abeta/carath.hpp"
#include "abeta/extremal.hpp"

using namespace abeta;
using std::numbers::pi;

namespace {

constexpr cplx I(0.0, 1.0);

bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

// Independent oracle for eval_f: integrate p(t^{1-beta} z) over t with
// Boost's Gauss-Kronrod rule, separately on real and imaginary parts.
cplx eval_f_by_quadrature(double beta, const HerglotzMeasure& mu, cplx z) {
  using boost::math::quadrature::gauss_kronrod;
  auto p_at = [&](double t) { return mu.value(std::pow(t, 1.0 - beta) * z); };
  const double re = gauss_kronrod<double, 61>::integrate(
      [&](double t) { return p_at(t).real(); }, 0.0, 1.0, 15, 1e-12);
  const double im = gauss_kronrod<double, 61>::integrate(
      [&](double t) { return p_at(t).imag(); }, 0.0, 1.0, 15, 1e-12);
  return z * cplx(re, im);
}

}  // namespace

TEST_CASE("BetaParam rejects values outside [0, 1]") {
  CHECK_NOTHROW(BetaParam(0.0));
  CHECK_NOTHROW(BetaParam(1.0));
  CHECK_THROWS_AS(BetaParam(-1e-9), Error);
  CHECK_THROWS_AS(BetaParam(1.0 + 1e-12), Error);
  CHECK_THROWS_AS(BetaParam(std::nan("")), Error);
}

TEST_CASE("HerglotzMeasure validation") {
  CHECK_THROWS_AS(HerglotzMeasure({}), Error);
  CHECK_THROWS_AS(HerglotzMeasure({{0.0, 0.5}}), Error);
  CHECK_THROWS_AS(HerglotzMeasure({{0.0, 1.5}, {1.0, -0.5}}), Error);
  CHECK_THROWS_AS(HerglotzMeasure({{2 * pi, 1.0}}), Error);
  CHECK_NOTHROW(HerglotzMeasure({{0.0, 0.5}, {pi, 0.5 + 5e-13}}));
}

TEST_CASE("carath_coeffs examples") {
  const auto kernel = carath_coeffs(HerglotzMeasure({{0.0, 1.0}}), 3);
  for (const auto& p : kernel) CHECK(near(p, 2.0, 1e-15));

  const auto sym = carath_coeffs(HerglotzMeasure({{0.0, 0.5}, {pi, 0.5}}), 2);
  CHECK(near(sym[0], 0.0, 1e-15));
  CHECK(near(sym[1], 2.0, 1e-15));

  const auto rot = carath_coeffs(HerglotzMeasure({{pi / 2, 1.0}}), 3);
  CHECK(near(rot[0], 2.0 * I, 1e-15));
  CHECK(near(rot[1], -2.0, 1e-15));
  CHECK(near(rot[2], -2.0 * I, 1e-15));

  CHECK_THROWS_AS(carath_coeffs(HerglotzMeasure({{0.0, 1.0}}), 0), Error);
}

TEST_CASE("libera_expand examples") {
  auto [p2, p3] = libera_expand(LiberaTriple(2.0, 0.3 + 0.2 * I, -0.5));
  CHECK(near(p2, 2.0, 1e-15));
  CHECK(near(p3, 2.0, 1e-15));

  std::tie(p2, p3) = libera_expand(LiberaTriple(0.0, 1.0, 0.0));
  CHECK(near(p2, 2.0, 1e-15));
  CHECK(near(p3, 0.0, 1e-15));

  std::tie(p2, p3) = libera_expand(LiberaTriple(0.0, 0.0, 1.0));
  CHECK(near(p2, 0.0, 1e-15));
  CHECK(near(p3, 2.0, 1e-15));

  CHECK_THROWS_AS(LiberaTriple(2.1, 0.0, 0.0), Error);
  CHECK_THROWS_AS(LiberaTriple(0.0, 1.01, 0.0), Error);
  CHECK_THROWS_AS(LiberaTriple(0.0, 0.0, 1.01 * I), Error);
}

TEST_CASE("psd_check examples") {
  const std::vector<cplx> kernel = {2.0, 2.0, 2.0};
  CHECK(psd_check(kernel));
  const std::vector<cplx> too_big = {3.0};
  CHECK_FALSE(psd_check(too_big));
  // Atoms at +-pi/2 with weight 1/2: p = (0, -2, 0). The example (0, 2, 0)
  // is atoms at 0 and pi, which is also PSD.
  const std::vector<cplx> half = {0.0, 2.0, 0.0};
  CHECK(psd_check(half));
  const std::vector<cplx> quarter = {0.0, -2.0, 0.0};
  CHECK(psd_check(quarter));
  // |p1| <= 2 but not jointly realisable: p = (2, 0).
  const std::vector<cplx> bad = {2.0, 0.0};
  CHECK_FALSE(psd_check(bad));
  CHECK_THROWS_AS(psd_check(std::vector<cplx>{}), Error);
}

TEST_CASE("to_abeta_coeffs examples") {
  const std::vector<cplx> two = {2.0, 2.0};
  auto a = to_abeta_coeffs(BetaParam(0.0), two);
  CHECK(near(a.a(2), 1.0, 1e-15));
  CHECK(near(a.a(3), 2.0 / 3.0, 1e-15));
  a = to_abeta_coeffs(BetaParam(1.0), two);
  CHECK(near(a.a(2), 2.0, 1e-15));
  CHECK(near(a.a(3), 2.0, 1e-15));
  const std::vector<cplx> rot = {2.0 * I, -2.0};
  a = to_abeta_coeffs(BetaParam(0.5), rot);
  CHECK(near(a.a(2), 4.0 * I / 3.0, 1e-15));
  CHECK(near(a.a(3), -1.0, 1e-15));
  CHECK(a.a(1) == cplx(1.0));
  CHECK_THROWS_AS(a.a(4), Error);
}

TEST_CASE("sample_measure") {
  const auto one = sample_measure(42, 1);
  CHECK(one.atoms().size() == 1);
  CHECK(one.atoms()[0].weight == doctest::Approx(1.0).epsilon(1e-12));

  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    const auto mu = sample_measure(seed, 1, 2.0);
    double off_zero = 0.0;
    for (const auto& atom : mu.atoms()) {
      const double dist = std::min(atom.theta, 2 * pi - atom.theta);
      off_zero += atom.weight * dist;
    }
    CHECK(off_zero < 1e-6);
  }

  const auto constrained = sample_measure(7, 3, 0.5);
  const cplx p1 = carath_coeffs(constrained, 1)[0];
  CHECK(std::abs(p1.imag()) <= 1e-9);
  CHECK(std::abs(p1.real() - 0.5) <= 1e-9);

  CHECK_THROWS_AS(sample_measure(1, 0), Error);
  CHECK_THROWS_AS(sample_measure(1, 2, 2.5), Error);

  // Deterministic for a fixed seed.
  const auto x = sample_measure(123, 4, -1.3);
  const auto y = sample_measure(123, 4, -1.3);
  REQUIRE(x.atoms().size() == y.atoms().size());
  for (std::size_t k = 0; k < x.atoms().size(); ++k) {
    CHECK(x.atoms()[k].theta == y.atoms()[k].theta);
    CHECK(x.atoms()[k].weight == y.atoms()[k].weight);
  }
}

TEST_CASE("constrained sampler hits every target on a grid") {
  for (int i = 0; i <= 40; ++i) {
    const double target = -2.0 + 0.1 * i;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const auto mu = sample_measure(seed, 1 + static_cast<int>(seed % 5), target);
      const cplx p1 = carath_coeffs(mu, 1)[0];
      REQUIRE(std::abs(p1 - target) <= 1e-9);
    }
  }
}

TEST_CASE("eval_f examples") {
  const BetaParam b0(0.0);
  const HerglotzMeasure kernel({{0.0, 1.0}});
  CHECK(near(eval_f(BetaParam(0.3), kernel, 0.4), ftilde_eval(BetaParam(0.3), 0.4).value, 1e-12));
  CHECK(near(eval_f(b0, sample_measure(3, 3), 0.0), 0.0, 0.0));

  // beta = 0: ftilde(r) = -r - 2 ln(1 - r).
  auto closed = [](double r) { return -r - 2.0 * std::log(1.0 - r); };
  const HerglotzMeasure sym({{0.0, 0.5}, {pi, 0.5}});
  CHECK(near(eval_f(b0, sym, 0.5), 0.5 * closed(0.5) - 0.5 * closed(-0.5), 1e-13));
  CHECK(near(eval_f(b0, sym, 0.5), eval_f_by_quadrature(0.0, sym, 0.5), 1e-12));

  // beta = 1 is z p(z).
  const auto mu = sample_measure(5, 3);
  const cplx z = 0.3 - 0.5 * I;
  CHECK(near(eval_f(BetaParam(1.0), mu, z), z * mu.value(z), 1e-15));

  CHECK_THROWS_AS(eval_f(b0, kernel, 1.0), Error);
  CHECK_THROWS_AS(eval_f(b0, kernel, 0.6 + 0.8 * I), Error);
}

TEST_CASE("property: sampled coefficients are Caratheodory data") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto mu = sample_measure(seed, 1 + static_cast<int>(seed % 6));
    const auto p = carath_coeffs(mu, 8);
    for (const auto& pn : p) REQUIRE(std::abs(pn) <= 2.0 + 1e-15);
    REQUIRE(psd_check(p));
  }
}

TEST_CASE("property: Libera expansion yields PSD (p1, p2, p3)") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto disk = [&](double radius) {
    return std::polar(radius * std::sqrt(u(rng)), 2 * pi * u(rng));
  };
  for (int i = 0; i < 1000; ++i) {
    const LiberaTriple t(2.0 * u(rng), disk(1.0), disk(1.0));
    const auto [p2, p3] = libera_expand(t);
    REQUIRE(std::abs(p2) <= 2.0 + 1e-12);
    REQUIRE(std::abs(p3) <= 2.0 + 1e-12);
    const std::vector<cplx> p = {t.p1, p2, p3};
    REQUIRE(psd_check(p));
  }
}

TEST_CASE("property: to_abeta_coeffs round trip") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const BetaParam beta(static_cast<double>(seed % 11) / 10.0);
    const auto p = carath_coeffs(sample_measure(seed, 3), 7);
    const auto a = to_abeta_coeffs(beta, p);
    REQUIRE(a.max_index() == 8);
    for (int n = 2; n <= 8; ++n) {
      const cplx back = a.a(n) * beta.weight(n);
      REQUIRE(std::abs(back - p[static_cast<std::size_t>(n - 2)]) <=
              4 * std::numeric_limits<double>::epsilon() * std::abs(p[static_cast<std::size_t>(n - 2)]) + 1e-300);
      REQUIRE(std::abs(a.a(n)) <= 2.0 / beta.weight(n) + 1e-12);
    }
  }
}

TEST_CASE("property: eval_f matches quadrature of the integral representation") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double beta = 0.9 * u(rng);
    const auto mu = sample_measure(1000 + static_cast<std::uint64_t>(i), 1 + i % 4);
    const cplx z = std::polar(0.9 * u(rng), 2 * pi * u(rng));
    const cplx closed = eval_f(BetaParam(beta), mu, z);
    const cplx quad = eval_f_by_quadrature(beta, mu, z);
    REQUIRE(std::abs(closed - quad) <= 1e-9);
  }
}
