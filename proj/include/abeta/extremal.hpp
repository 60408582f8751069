#pragma once

// The four extremal members of A_beta used as sharpness witnesses, and
// certified evaluation of ftilde(z) = z(-1 + 2 2F1(1, 1/(1-b); (2-b)/(1-b); z)).

#include <string_view>
#include <vector>

#include "abeta/beta.hpp"
#include "abeta/coeff_seq.hpp"

namespace abeta {

enum class ExtremalId {
  kFtilde,   // generated by (1+z)/(1-z)
  kFtilde1,  // generated by (1+iz)/(1-iz)
  kFtilde2,  // generated by (1+z^3)/(1-z^3)
  kFtilde3,  // generated by (1-z^2)/(1-cz+z^2)
};

std::string_view to_string(ExtremalId id);

enum class EvalMethod { kSeries, kQuadrature, kClosedForm };

std::string_view to_string(EvalMethod method);

struct EvalResult {
  cplx value;
  double abs_error_bound;
  EvalMethod method;
};

/// Radius up to which ftilde_eval sums the Taylor series.
inline constexpr double kSeriesRadius = 0.95;

/// 2 / (n - (n-1) beta), the n-th coefficient of ftilde (n >= 2).
double ftilde_coeff(BetaParam beta, int n);

/// ftilde(z) for |z| <= 1, z != 1, to absolute accuracy `tol`.
///
/// Uses the truncated series with explicit tail and rounding bounds when
/// |z| <= 0.95 and that bound meets `tol`, otherwise adaptive quadrature of
/// z * int_0^1 (1 + z u)/(1 - z u) dt with u = t^{1-beta}. beta = 1 uses the
/// closed form z(1+z)/(1-z). Throws DOMAIN for z = 1, |z| > 1, or tol < 1e-14.
EvalResult ftilde_eval(BetaParam beta, cplx z, double tol = 1e-12);

/// Series route only; requires |z| < 1. Throws LIMIT when the bound exceeds tol.
EvalResult ftilde_eval_series(BetaParam beta, cplx z, double tol = 1e-12);

/// Quadrature route only; requires |z| <= 1 and z != 1.
EvalResult ftilde_eval_quadrature(BetaParam beta, cplx z, double tol = 1e-12);

/// ftilde(-1) by quadrature; 0 at beta = 1, negative otherwise.
double ftilde_at_minus1(BetaParam beta);

/// ftilde(-1) = -1 + sum_{n>=2} (-1)^n 2/(n-(n-1)beta) summed with the Euler
/// transform. Independent of the quadrature route; beta = 1 returns 0.
double ftilde_at_minus1_euler(BetaParam beta);

/// c = sqrt((2b^2 - 8b + 7)/(2 - b^2)), the middle coefficient in ftilde3's
/// generating function. Equals 2cos(phi) for the half-weight atoms at +-phi.
double ftilde3_parameter(BetaParam beta);

/// p_1..p_count of the Caratheodory function generating `id`.
std::vector<cplx> extremal_p_coeffs(ExtremalId id, BetaParam beta, int count);

/// a_2..a_max_index of the extremal function.
CoeffSeq extremal_coeffs(ExtremalId id, BetaParam beta, int max_index);

/// Coefficients of num/den to `order` terms (den[0] != 0).
std::vector<cplx> series_divide(const std::vector<cplx>& num, const std::vector<cplx>& den,
                                int order);

}  // namespace abeta
