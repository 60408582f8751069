#include "abeta/extremal.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "abeta/carath.hpp"
#include "abeta/numerics.hpp"

namespace abeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kMinTolerance = 1e-14;

void check_disk(cplx z, bool closed) {
  const double r = std::abs(z);
  if (closed ? r > 1.0 : r >= 1.0) {
    throw Error(ErrorCode::kDomain, "ftilde argument outside the disk");
  }
  if (z == cplx(1.0, 0.0)) throw Error(ErrorCode::kDomain, "ftilde has a pole at z = 1");
}

void check_tolerance(double tol) {
  if (!(tol >= kMinTolerance)) {
    throw Error(ErrorCode::kDomain, "tolerance below the attainable 1e-14");
  }
}

EvalResult closed_form_beta_one(cplx z) {
  const cplx value = z * (1.0 + z) / (1.0 - z);
  return {value, 8.0 * kEps * (std::abs(value) + 1.0), EvalMethod::kClosedForm};
}

}  // namespace

std::string_view to_string(ExtremalId id) {
  switch (id) {
    case ExtremalId::kFtilde:
      return "ftilde";
    case ExtremalId::kFtilde1:
      return "ftilde1";
    case ExtremalId::kFtilde2:
      return "ftilde2";
    case ExtremalId::kFtilde3:
      return "ftilde3";
  }
  return "?";
}

std::string_view to_string(EvalMethod method) {
  switch (method) {
    case EvalMethod::kSeries:
      return "SERIES";
    case EvalMethod::kQuadrature:
      return "QUADRATURE";
    case EvalMethod::kClosedForm:
      return "CLOSED_FORM";
  }
  return "?";
}

double ftilde_coeff(BetaParam beta, int n) {
  if (n < 2) throw Error(ErrorCode::kDomain, "ftilde_coeff needs n >= 2");
  return 2.0 / beta.weight(n);
}

EvalResult ftilde_eval_series(BetaParam beta, cplx z, double tol) {
  check_tolerance(tol);
  check_disk(z, false);
  const double r = std::abs(z);
  if (r == 0.0) return {0.0, 0.0, EvalMethod::kSeries};

  // Neumaier-compensated complex sum of z + sum_{n>=2} c_n z^n. The weights
  // n - (n-1) beta are nondecreasing in n, so the tail after index K is at most
  // c_{K+1} r^{K+1} / (1 - r).
  cplx sum = z;
  cplx compensation = 0.0;
  cplx power = z;
  double rounding = 2.0 * r;  // sum over terms of (3n + 4)|t_n|, scaled by eps at the end
  double r_power = r;
  double tail = std::numeric_limits<double>::infinity();
  constexpr int kMaxTerms = 20000;
  for (int n = 2; n <= kMaxTerms; ++n) {
    power *= z;
    r_power *= r;
    const cplx term = ftilde_coeff(beta, n) * power;
    const cplx t = sum + term;
    const auto add_comp = [](double s, double x, double total) {
      return std::abs(s) >= std::abs(x) ? (s - total) + x : (x - total) + s;
    };
    compensation += cplx(add_comp(sum.real(), term.real(), t.real()),
                         add_comp(sum.imag(), term.imag(), t.imag()));
    sum = t;
    rounding += (3.0 * n + 4.0) * std::abs(term);
    tail = 2.0 / beta.weight(n + 1) * r_power * r / (1.0 - r);
    if (tail <= 0.25 * tol) break;
  }
  const double bound = tail + kEps * (rounding + 2.0 * std::abs(sum));
  if (bound > tol) {
    throw Error(ErrorCode::kLimit, "series error bound exceeds the requested tolerance");
  }
  return {sum + compensation, bound, EvalMethod::kSeries};
}

EvalResult ftilde_eval_quadrature(BetaParam beta, cplx z, double tol) {
  check_tolerance(tol);
  check_disk(z, true);
  if (z == 0.0) return {0.0, 0.0, EvalMethod::kQuadrature};
  // ftilde(z) = z(-1 + 2 int_0^1 w(u)/(1 - z u) du) with u = t^{1-beta} and
  // density w(u) = u^{1/(1-beta) - 1} / (1-beta).
  const double e = 1.0 - beta.value();
  const double exponent = 1.0 / e - 1.0;
  auto integrand = [&](double u) -> cplx {
    const double density = (exponent == 0.0 ? 1.0 : std::pow(u, exponent)) / e;
    return density / (1.0 - z * u);
  };
  const double scale = 2.0 * std::abs(z);
  const auto quad = numerics::integrate(integrand, 0.0, 1.0, 0.5 * tol / scale, 20000);
  const double bound = scale * quad.abs_error + 16.0 * kEps * std::abs(z) *
                                                    (1.0 + 2.0 * std::abs(quad.value));
  if (!quad.converged || bound > tol) {
    throw Error(ErrorCode::kLimit, "quadrature did not reach the requested tolerance");
  }
  return {z * (-1.0 + 2.0 * quad.value), bound, EvalMethod::kQuadrature};
}

EvalResult ftilde_eval(BetaParam beta, cplx z, double tol) {
  check_tolerance(tol);
  check_disk(z, true);
  if (beta.is_one()) return closed_form_beta_one(z);
  if (std::abs(z) <= kSeriesRadius) {
    try {
      return ftilde_eval_series(beta, z, tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kLimit) throw;
    }
  }
  return ftilde_eval_quadrature(beta, z, tol);
}

double ftilde_at_minus1(BetaParam beta) {
  if (beta.is_one()) return 0.0;
  return ftilde_eval_quadrature(beta, -1.0, 1e-13).value.real();
}

double ftilde_at_minus1_euler(BetaParam beta) {
  if (beta.is_one()) return 0.0;
  // sum_{k>=0} (-1)^k x_k = sum_{j>=0} (-1)^j (Delta^j x)_0 / 2^{j+1},
  // with x_k = c_{k+2}.
  constexpr int kTerms = 64;
  std::vector<double> diff(kTerms);
  for (int k = 0; k < kTerms; ++k) diff[static_cast<std::size_t>(k)] = ftilde_coeff(beta, k + 2);
  double sum = 0.0;
  double scale = 0.5;
  for (int j = 0; j < kTerms; ++j) {
    const double term = (j % 2 == 0 ? 1.0 : -1.0) * diff[0] * scale;
    sum += term;
    if (std::abs(term) < 1e-18) break;
    for (int k = 0; k + 1 < kTerms - j; ++k) {
      diff[static_cast<std::size_t>(k)] =
          diff[static_cast<std::size_t>(k) + 1] - diff[static_cast<std::size_t>(k)];
    }
    scale *= 0.5;
  }
  return -1.0 + sum;
}

double ftilde3_parameter(BetaParam beta) {
  const double b = beta.value();
  return std::sqrt((2.0 * b * b - 8.0 * b + 7.0) / (2.0 - b * b));
}

std::vector<cplx> series_divide(const std::vector<cplx>& num, const std::vector<cplx>& den,
                                int order) {
  if (den.empty() || den.front() == 0.0) {
    throw Error(ErrorCode::kDomain, "series divisor must have a nonzero constant term");
  }
  std::vector<cplx> q(static_cast<std::size_t>(order), 0.0);
  for (int n = 0; n < order; ++n) {
    cplx acc = n < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(n)] : 0.0;
    for (int k = 1; k <= n && k < static_cast<int>(den.size()); ++k) {
      acc -= den[static_cast<std::size_t>(k)] * q[static_cast<std::size_t>(n - k)];
    }
    q[static_cast<std::size_t>(n)] = acc / den.front();
  }
  return q;
}

std::vector<cplx> extremal_p_coeffs(ExtremalId id, BetaParam beta, int count) {
  std::vector<cplx> p(static_cast<std::size_t>(count), 0.0);
  switch (id) {
    case ExtremalId::kFtilde:
      std::fill(p.begin(), p.end(), 2.0);
      break;
    case ExtremalId::kFtilde1: {
      cplx rot = 1.0;
      for (auto& pn : p) {
        rot *= cplx(0.0, 1.0);
        pn = 2.0 * cplx(std::round(rot.real()), std::round(rot.imag()));
      }
      break;
    }
    case ExtremalId::kFtilde2:
      for (int n = 3; n <= count; n += 3) p[static_cast<std::size_t>(n - 1)] = 2.0;
      break;
    case ExtremalId::kFtilde3: {
      const double c = ftilde3_parameter(beta);
      if (c > 2.0) throw Error(ErrorCode::kDomain, "ftilde3 parameter exceeds 2");
      const auto q = series_divide({1.0, 0.0, -1.0}, {1.0, -c, 1.0}, count + 1);
      std::copy(q.begin() + 1, q.end(), p.begin());
      break;
    }
  }
  return p;
}

CoeffSeq extremal_coeffs(ExtremalId id, BetaParam beta, int max_index) {
  if (max_index < 2) throw Error(ErrorCode::kDomain, "extremal_coeffs needs max_index >= 2");
  const auto p = extremal_p_coeffs(id, beta, max_index - 1);
  return to_abeta_coeffs(beta, p);
}

}  // namespace abeta
