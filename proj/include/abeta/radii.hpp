#pragma once

// Bohr and Bohr-Rogosinski radii of A_beta as roots of transcendental
// equations in ftilde.

#include <string>
#include <vector>

#include "abeta/beta.hpp"

namespace abeta {

struct RadiusEquation {
  enum class Kind { kBohr, kRogosinski };
  Kind kind = Kind::kBohr;
  int m = 1;
  int N = 1;  // tail start, Rogosinski only

  static RadiusEquation bohr(int m) { return {Kind::kBohr, m, 1}; }
  static RadiusEquation rogosinski(int m, int N) { return {Kind::kRogosinski, m, N}; }

  /// "BOHR(m)" or "ROGOSINSKI(m,N)".
  std::string label() const;
};

struct RadiusResult {
  double radius;
  double residual;
  double lo;
  double hi;
  int iterations;
  std::vector<double> trace;
  RadiusEquation equation;
};

/// Rogosinski radii are only computed for tail starts N <= 64.
inline constexpr int kMaxRogosinskiN = 64;

/// -ftilde(-1), the lower bound on the distance from 0 to the boundary of f(D).
/// Requires beta < 1.
double distance_lower(BetaParam beta);

/// Left-hand side of the radius equation at r; negative at r = 0 and
/// increasing in r.
double radius_equation_value(BetaParam beta, const RadiusEquation& eq, double r);

/// Smallest root in (0, 1) of r^m + ftilde(r) - r + ftilde(-1) = 0.
RadiusResult bohr_radius(BetaParam beta, int m);

/// Root in (0, 1) of ftilde(r^m) + ftilde(r) - fhat_N(r) + ftilde(-1) = 0, where
/// fhat_N is the degree N-1 Taylor polynomial of ftilde (0 for N = 1).
RadiusResult rogosinski_radius(BetaParam beta, int m, int N);

RadiusResult solve_radius(BetaParam beta, const RadiusEquation& eq);

struct CurvePoint {
  double beta;
  double radius;
};

/// Radius for each grid value, in grid order. Grid values must lie in [0, 1).
/// Points are solved concurrently; output order matches the input.
std::vector<CurvePoint> radius_curve(const RadiusEquation& eq, const std::vector<double>& grid);

}  // namespace abeta

namespace abeta {

struct PublishedRadius {
  double beta;
  double radius;
};

/// Published Bohr radii (m = 1) for seven beta values, as printed (rounded).
const std::vector<PublishedRadius>& table1_published();

/// Allowed |computed - published| given the printed digits.
inline constexpr double kTable1Tolerance = 1e-4;

}  // namespace abeta
