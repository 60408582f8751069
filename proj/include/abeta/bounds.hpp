#pragma once

// Closed-form right-hand sides of the coefficient, determinant, difference and
// growth estimates for A_beta, plus a registry that pairs each with its
// extremal witness.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abeta/beta.hpp"

namespace abeta {

enum class Sharpness { kSharpClaimed, kSharpVerified, kAttainmentOpen };

std::string_view to_string(Sharpness s);

struct BoundValue {
  std::string theorem_id;
  double value;
  Sharpness sharp;
};

/// (n - (n-1) beta)^{-1} * 2.
double coeff_bound(BetaParam beta, int n);

/// Triangle-inequality bound on |a_n a_{n+2} - mu a_{n+1}^2|.
double hankel_mu_bound(BetaParam beta, int n, double mu);

/// Bound on |H_2(n)|; identical to hankel_mu_bound(beta, n, 1).
double hankel2_bound(BetaParam beta, int n);

/// Bound on |J_{2,3}| = |a_2 a_3 - a_4|.
double zalcman_bound(BetaParam beta);

/// Bound on |a_n^2 - a_{n+1}^2|.
double toeplitz2_bound(BetaParam beta, int n);

/// Bound on |T_3(1)|.
double toeplitz3_abs_bound(BetaParam beta);

/// (10 - sqrt 10)/9, where the two branches of the T_{3,1} upper bound meet.
double hermitian_t31_switch();

double hermitian_t31_upper(BetaParam beta);
double hermitian_t31_lower(BetaParam beta);

/// Bound on |a_{n+1}^N - a_n^N| over members with real p_1 = p.
double coeff_diff_bound(BetaParam beta, int n, int power, double p);

struct Envelope {
  double lower;
  double upper;
};

/// (-ftilde(-r), ftilde(r)), the range of |f(z)| on |z| = r. Requires 0 <= r < 1.
Envelope growth_envelope(BetaParam beta, double r);

/// growth_envelope / r, the range of Re(f(z)/z) on |z| = r. Requires 0 < r < 1.
Envelope re_fz_envelope(BetaParam beta, double r);

// ---------------------------------------------------------------------------
// Registry

enum class TheoremId {
  kCoeff,
  kHankelMu,
  kH2,
  kZalcman23,
  kT2n,
  kT3Abs,
  kT31Upper,
  kT31Lower,
  kCoeffDiff,
  kGrowthUpper,
  kGrowthLower,
  kReFzUpper,
  kReFzLower,
};

/// Which side of the functional the bound controls.
enum class BoundSide { kUpper, kLower };

struct BoundParams {
  int n = 2;
  double mu = 1.0;
  int power = 1;   // N in the coefficient-difference estimate
  double p = 2.0;  // real p_1 for the coefficient-difference estimate
  double r = 0.5;  // radius for the growth envelopes
};

struct TheoremInfo {
  TheoremId id;
  std::string_view name;  // CLI spelling, e.g. "h2"
  BoundSide side;
  std::string_view statement;
};

const std::vector<TheoremInfo>& theorem_registry();
const TheoremInfo& theorem_info(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);

/// Bound value without any sharpness analysis (flag SHARP_CLAIMED).
double bound_value(TheoremId id, BetaParam beta, const BoundParams& params);

struct Witness {
  std::string description;
  double value;  // functional value of the witness, signed where the bound is signed
};

/// The extremal function offered as attaining the bound, evaluated at these
/// parameters, or nullopt where no attainment is asserted (e.g. the
/// coefficient difference away from its sharp p).
std::optional<Witness> bound_witness(TheoremId id, BetaParam beta, const BoundParams& params);

/// Bound value with sharpness decided by the witness: SHARP_VERIFIED when it
/// reproduces the value to 1e-9, ATTAINMENT_OPEN otherwise.
BoundValue evaluate_bound(TheoremId id, BetaParam beta, const BoundParams& params);

}  // namespace abeta
