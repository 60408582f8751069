#pragma once

// Randomized and grid-based checks of the bounds over sampled members of A_beta.

#include <cstdint>
#include <string>
#include <vector>

#include "abeta/beta.hpp"
#include "abeta/bounds.hpp"

namespace abeta {

/// Absolute tolerance for bound validity.
inline constexpr double kValidityTolerance = 1e-9;

struct VerifyReport {
  std::string theorem_id;
  double beta = 0.0;
  BoundParams params;
  BoundSide side = BoundSide::kUpper;
  int samples = 0;
  /// Most extreme functional value seen (the minimum for lower bounds).
  double max_observed = 0.0;
  double bound = 0.0;
  /// bound - max_observed for upper bounds, max_observed - bound for lower.
  double attainment_gap = 0.0;
  std::string witness;
  int violations = 0;
  Sharpness sharp = Sharpness::kAttainmentOpen;
  std::string note;
};

/// Samples `n_samples` atomic measures (with real p_1 = params.p for the
/// coefficient difference), evaluates the functional behind `id` and compares
/// with its bound. The theorem's extremal function joins as a designated
/// extra sample. Sample i draws from its own seed derived from (seed, i), so
/// the report does not depend on thread count.
VerifyReport verify_bound(TheoremId id, BetaParam beta, const BoundParams& params, int n_samples,
                          std::uint64_t seed);

/// F(p, rho) over p in [0, 2], rho in [0, 1]: the triangle-inequality majorant
/// of |J_{2,3}| after the Libera substitution.
double zalcman_surface(BetaParam beta, double p, double rho);

struct SurfaceMax {
  double max_value;
  double p;
  double rho;
};

/// Grid scan of zalcman_surface with `grid_steps` cells per axis, then
/// golden-section refinement around the best node.
SurfaceMax scan_zalcman_surface(BetaParam beta, int grid_steps);

/// g_1(p, y): lower majorant of T_{3,1} in terms of p = p_1 and y = |zeta|.
double t31_lower_surface(BetaParam beta, double p, double y);

/// sqrt((2b^2 - 8b + 7)/(2 - b^2)), the critical point of g_1(., 1).
double t31_lower_critical_point(BetaParam beta);

struct T31SurfaceReport {
  double beta = 0.0;
  int grid_points = 0;
  int derivative_violations = 0;  // grid nodes with dg1/dy >= 0
  double argmin_p = 0.0;
  double expected_p = 0.0;
  double min_value = 0.0;
  double bound = 0.0;
  bool passed = false;  // all three checks at 1e-6 location, 1e-9 value
};

T31SurfaceReport verify_t31_lower_surface(BetaParam beta);

struct AngularCheck {
  double r = 0.0;
  int argmin_index = 0;      // on the theta grid
  int grid_size = 0;
  bool at_pi = false;        // within one cell of theta = pi
  int monotone_breaks = 0;   // steps against "decreasing on [0,pi], increasing on [pi,2pi]"
};

struct GrowthReport {
  double beta = 0.0;
  int samples = 0;
  int checks = 0;
  int violations = 0;
  double worst_upper_excess = 0.0;  // max(|f| - ftilde(r)), should be <= 0
  double worst_lower_excess = 0.0;  // max(-ftilde(-r) - |f|), should be <= 0
  double closest_upper_touch = 0.0; // min over the f = ftilde witness of ftilde(r) - |f|
  std::vector<AngularCheck> angular;
};

/// Envelope containment of |f(z)| and Re(f(z)/z) for sampled members at
/// z = r e^{i theta} (`angles` equispaced theta per radius), plus the location
/// of the angular minimum of |ftilde(r e^{i theta})| on a `theta_grid` grid.
GrowthReport verify_growth(BetaParam beta, int n_samples, std::uint64_t seed,
                           const std::vector<double>& r_grid, int angles = 32,
                           int theta_grid = 720);

}  // namespace abeta

namespace abeta {

/// One (theorem, parameter set) cell of the validity sweep.
struct SweepCell {
  TheoremId id;
  BoundParams params;
};

/// Parameter cells checked per beta by the full sweep: coefficient n = 2..5;
/// Hankel-mu n = 1..3 with mu in {0, 0.5, 1, 2}; H_2(n) and |a_n^2 - a_{n+1}^2|
/// for n = 1..3; J_{2,3}; T_3(1); both T_{3,1} bounds; and the coefficient
/// difference for n = 2..4, N = 1..3, p in {-2, -1, 0, 1, 2}.
std::vector<SweepCell> default_sweep_cells();

/// Beta grid of the full sweep: {0, 0.25, 0.5, 0.75, 1}.
std::vector<double> default_sweep_betas();

/// verify_bound over every cell and beta, in a fixed order.
std::vector<VerifyReport> full_sweep(int n_samples, std::uint64_t seed);

}  // namespace abeta
