#include "abeta/bounds.hpp"

#include <cmath>
#include <string>

#include "abeta/extremal.hpp"
#include "abeta/functionals.hpp"

namespace abeta {

namespace {

double sq(double x) { return x * x; }

void require_n(int n, int min_n) {
  if (n < min_n) throw Error(ErrorCode::kDomain, "n must be >= " + std::to_string(min_n));
}

}  // namespace

std::string_view to_string(Sharpness s) {
  switch (s) {
    case Sharpness::kSharpClaimed:
      return "SHARP_CLAIMED";
    case Sharpness::kSharpVerified:
      return "SHARP_VERIFIED";
    case Sharpness::kAttainmentOpen:
      return "ATTAINMENT_OPEN";
  }
  return "?";
}

double coeff_bound(BetaParam beta, int n) {
  require_n(n, 2);
  return 2.0 / beta.weight(n);
}

double hankel_mu_bound(BetaParam beta, int n, double mu) {
  require_n(n, 1);
  if (!(mu >= 0.0)) throw Error(ErrorCode::kDomain, "mu must be >= 0");
  return 4.0 / (beta.weight(n) * beta.weight(n + 2)) + 4.0 * mu / sq(beta.weight(n + 1));
}

double hankel2_bound(BetaParam beta, int n) {
  require_n(n, 1);
  const double b = beta.value();
  const double nn = n;
  const double numerator =
      4.0 * ((2 * nn * nn - 1) * b * b - (4 * nn * nn + 4 * nn - 2) * b + 2 * nn * nn + 4 * nn + 1);
  return numerator / (beta.weight(n) * beta.weight(n + 2) * sq(beta.weight(n + 1)));
}

double zalcman_bound(BetaParam beta) { return 2.0 / (4.0 - 3.0 * beta.value()); }

double toeplitz2_bound(BetaParam beta, int n) {
  require_n(n, 1);
  return 4.0 * (1.0 / sq(beta.weight(n)) + 1.0 / sq(beta.weight(n + 1)));
}

double toeplitz3_abs_bound(BetaParam beta) {
  const double b = beta.value();
  const double numerator = 4 * std::pow(b, 4) - 28 * std::pow(b, 3) + 101 * b * b - 196 * b + 140;
  return numerator / (sq(3 - 2 * b) * sq(b - 2));
}

double hermitian_t31_switch() { return (10.0 - std::sqrt(10.0)) / 9.0; }

double hermitian_t31_upper(BetaParam beta) {
  const double b = beta.value();
  if (b <= hermitian_t31_switch()) return 1.0;
  const double numerator = 4 * std::pow(b, 4) - 28 * std::pow(b, 3) + 37 * b * b - 4 * b - 4;
  return numerator / (sq(3 - 2 * b) * sq(2 - b));
}

double hermitian_t31_lower(BetaParam beta) {
  const double b = beta.value();
  const double denominator = std::pow(b, 4) - 4 * std::pow(b, 3) + 2 * b * b + 8 * b - 8;
  // Negative on [0, 1]: -8 at 0, -1 at 1, derivative 4b^3 - 12b^2 + 4b + 8 > 0.
  if (std::abs(denominator) < 1e-12) {
    throw Error(ErrorCode::kDomain, "T31 lower bound denominator vanishes");
  }
  return 1.0 - (4 * b - 9) / denominator;
}

double coeff_diff_bound(BetaParam beta, int n, int power, double p) {
  require_n(n, 2);
  if (power < 1) throw Error(ErrorCode::kDomain, "N must be >= 1");
  if (!(p >= -2.0 && p <= 2.0)) throw Error(ErrorCode::kDomain, "p must lie in [-2, 2]");
  const double sigma = std::pow(beta.weight(n), power);
  const double pN = std::pow(p, power);
  const double twoN = std::pow(2.0, power);
  if (beta.is_one()) {
    const double radicand = 2.0 - std::pow(2.0, 1 - power) * pN;
    if (radicand < 0.0) throw Error(ErrorCode::kDomain, "negative radicand");
    return twoN * std::sqrt(radicand) / sigma;
  }
  const double mu = std::pow(beta.weight(n + 1), power);
  const double sigma_n = std::pow(sigma, n);
  const double mu_n = std::pow(mu, n);
  const double mu_n1 = mu_n * mu;
  const double first = 2.0 * (sigma_n - mu_n) *
                       (0.5 * twoN * sigma * sigma + 0.5 * twoN * mu * mu - sigma * mu * pN) /
                       ((sigma - mu) * sigma * mu_n1);
  const double second = sigma_n * std::abs(twoN * mu - sigma * pN) / (sigma * mu_n1);
  return first + second;
}

Envelope growth_envelope(BetaParam beta, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorCode::kDomain, "growth envelope needs 0 <= r < 1");
  if (r == 0.0) return {0.0, 0.0};
  const double upper = ftilde_eval(beta, r).value.real();
  const double lower = -ftilde_eval(beta, -r).value.real();
  return {lower, upper};
}

Envelope re_fz_envelope(BetaParam beta, double r) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::kDomain, "Re(f/z) envelope needs 0 < r < 1");
  const auto g = growth_envelope(beta, r);
  return {g.lower / r, g.upper / r};
}

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> registry = {
      {TheoremId::kCoeff, "coeff", BoundSide::kUpper, "|a_n| <= 2/(n-(n-1)b)"},
      {TheoremId::kHankelMu, "hankel-mu", BoundSide::kUpper, "|a_n a_{n+2} - mu a_{n+1}^2|"},
      {TheoremId::kH2, "h2", BoundSide::kUpper, "|H_2(n)|"},
      {TheoremId::kZalcman23, "zalcman", BoundSide::kUpper, "|J_{2,3}| <= 2/(4-3b)"},
      {TheoremId::kT2n, "t2n", BoundSide::kUpper, "|a_n^2 - a_{n+1}^2|"},
      {TheoremId::kT3Abs, "t3", BoundSide::kUpper, "|T_3(1)|"},
      {TheoremId::kT31Upper, "t31-upper", BoundSide::kUpper, "T_{3,1} upper"},
      {TheoremId::kT31Lower, "t31-lower", BoundSide::kLower, "T_{3,1} lower"},
      {TheoremId::kCoeffDiff, "coeff-diff", BoundSide::kUpper, "|a_{n+1}^N - a_n^N|, p_1 = p"},
      {TheoremId::kGrowthUpper, "growth-upper", BoundSide::kUpper, "|f(z)| <= ftilde(r)"},
      {TheoremId::kGrowthLower, "growth-lower", BoundSide::kLower, "|f(z)| >= -ftilde(-r)"},
      {TheoremId::kReFzUpper, "re-fz-upper", BoundSide::kUpper, "Re f(z)/z <= ftilde(r)/r"},
      {TheoremId::kReFzLower, "re-fz-lower", BoundSide::kLower, "Re f(z)/z >= -ftilde(-r)/r"},
  };
  return registry;
}

const TheoremInfo& theorem_info(TheoremId id) {
  for (const auto& info : theorem_registry()) {
    if (info.id == id) return info;
  }
  throw Error(ErrorCode::kDomain, "unknown theorem id");
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (const auto& info : theorem_registry()) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

double bound_value(TheoremId id, BetaParam beta, const BoundParams& params) {
  switch (id) {
    case TheoremId::kCoeff:
      return coeff_bound(beta, params.n);
    case TheoremId::kHankelMu:
      return hankel_mu_bound(beta, params.n, params.mu);
    case TheoremId::kH2:
      return hankel2_bound(beta, params.n);
    case TheoremId::kZalcman23:
      return zalcman_bound(beta);
    case TheoremId::kT2n:
      return toeplitz2_bound(beta, params.n);
    case TheoremId::kT3Abs:
      return toeplitz3_abs_bound(beta);
    case TheoremId::kT31Upper:
      return hermitian_t31_upper(beta);
    case TheoremId::kT31Lower:
      return hermitian_t31_lower(beta);
    case TheoremId::kCoeffDiff:
      return coeff_diff_bound(beta, params.n, params.power, params.p);
    case TheoremId::kGrowthUpper:
      return growth_envelope(beta, params.r).upper;
    case TheoremId::kGrowthLower:
      return growth_envelope(beta, params.r).lower;
    case TheoremId::kReFzUpper:
      return re_fz_envelope(beta, params.r).upper;
    case TheoremId::kReFzLower:
      return re_fz_envelope(beta, params.r).lower;
  }
  throw Error(ErrorCode::kDomain, "unknown theorem id");
}

std::optional<Witness> bound_witness(TheoremId id, BetaParam beta, const BoundParams& params) {
  constexpr int kOrder = 12;
  const int order = std::max(kOrder, params.n + 3);
  switch (id) {
    case TheoremId::kCoeff: {
      const auto a = extremal_coeffs(ExtremalId::kFtilde, beta, order);
      return Witness{"ftilde", std::abs(a.a(params.n))};
    }
    case TheoremId::kHankelMu:
    case TheoremId::kH2: {
      const double mu = id == TheoremId::kH2 ? 1.0 : params.mu;
      const auto a = extremal_coeffs(ExtremalId::kFtilde1, beta, order);
      return Witness{"ftilde1", std::abs(hankel2(a, params.n, mu))};
    }
    case TheoremId::kZalcman23: {
      const auto a = extremal_coeffs(ExtremalId::kFtilde2, beta, order);
      return Witness{"ftilde2", std::abs(zalcman(a, 2, 3))};
    }
    case TheoremId::kT2n: {
      const auto a = extremal_coeffs(ExtremalId::kFtilde1, beta, order);
      return Witness{"ftilde1", std::abs(hermitian_t2n(a, params.n))};
    }
    case TheoremId::kT3Abs: {
      const auto a = extremal_coeffs(ExtremalId::kFtilde1, beta, order);
      return Witness{"ftilde1", std::abs(toeplitz3(a))};
    }
    case TheoremId::kT31Upper: {
      if (beta.value() <= hermitian_t31_switch()) {
        return Witness{"identity", hermitian_t31(CoeffSeq(beta, {0.0, 0.0}))};
      }
      const auto a = extremal_coeffs(ExtremalId::kFtilde, beta, order);
      return Witness{"ftilde", hermitian_t31(a)};
    }
    case TheoremId::kT31Lower: {
      const auto a = extremal_coeffs(ExtremalId::kFtilde3, beta, order);
      return Witness{"ftilde3", hermitian_t31(a)};
    }
    case TheoremId::kCoeffDiff: {
      if (!beta.is_one() && params.p == 2.0) {
        const auto a = extremal_coeffs(ExtremalId::kFtilde, beta, order);
        return Witness{"ftilde", std::abs(coeff_diff_power(a, params.n, params.power))};
      }
      if (beta.is_one() && params.p == -2.0 && params.power % 2 == 1) {
        // -ftilde(-z) has coefficients (-1)^{n-1} ftilde_n and p_1 = -2.
        auto raw = extremal_coeffs(ExtremalId::kFtilde, beta, order).raw();
        for (std::size_t k = 0; k < raw.size(); k += 2) raw[k] = -raw[k];
        return Witness{"-ftilde(-z)",
                       std::abs(coeff_diff_power(CoeffSeq(beta, raw), params.n, params.power))};
      }
      return std::nullopt;
    }
    case TheoremId::kGrowthUpper:
      return Witness{"ftilde at z = r", std::abs(ftilde_eval(beta, params.r).value)};
    case TheoremId::kGrowthLower:
      return Witness{"ftilde at z = -r", std::abs(ftilde_eval(beta, -params.r).value)};
    case TheoremId::kReFzUpper:
      return Witness{"ftilde at z = r", (ftilde_eval(beta, params.r).value / params.r).real()};
    case TheoremId::kReFzLower:
      return Witness{"ftilde at z = -r",
                     (ftilde_eval(beta, -params.r).value / (-params.r)).real()};
  }
  return std::nullopt;
}

BoundValue evaluate_bound(TheoremId id, BetaParam beta, const BoundParams& params) {
  const double value = bound_value(id, beta, params);
  Sharpness sharp = Sharpness::kAttainmentOpen;
  if (const auto w = bound_witness(id, beta, params); w && std::abs(w->value - value) <= 1e-9) {
    sharp = Sharpness::kSharpVerified;
  }
  return {std::string(theorem_info(id).name), value, sharp};
}

}  // namespace abeta
