#pragma once

// Small numerical kernels shared by the evaluators: adaptive Gauss-Kronrod
// quadrature for real or complex integrands and a bracketed hybrid root finder.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <vector>

#include "abeta/error.hpp"

namespace abeta::numerics {

template <class T>
struct QuadResult {
  T value{};
  double abs_error = 0.0;
  int intervals = 0;
  bool converged = false;
};

namespace detail {

// 15-point Kronrod abscissae (descending, last is the centre) and weights, with
// the embedded 7-point Gauss weights on the odd-indexed nodes.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct Panel {
  double a, b;
  T value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class T, class F>
Panel<T> gauss_kronrod_15(const F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T f_centre = f(centre);
  T kronrod = f_centre * kWgk[7];
  T gauss = f_centre * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const T pair = f(centre - dx) + f(centre + dx);
    kronrod += pair * kWgk[j];
    if (j % 2 == 1) gauss += pair * kWg[j / 2];
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive G7K15 quadrature of f over [a, b].
///
/// The reported error is the sum of |K15 - G7| over the final panels, which
/// overestimates the true error once the integrand is resolved.
template <class F>
auto integrate(const F& f, double a, double b, double abs_tol, int max_panels = 4000)
    -> QuadResult<decltype(f(a))> {
  using T = decltype(f(a));
  std::priority_queue<detail::Panel<T>> panels;
  panels.push(detail::gauss_kronrod_15<T>(f, a, b));
  T total = panels.top().value;
  double error = panels.top().error;
  int count = 1;
  while (error > abs_tol && count < max_panels) {
    const auto worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = detail::gauss_kronrod_15<T>(f, worst.a, mid);
    auto right = detail::gauss_kronrod_15<T>(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }
  // Re-sum from the panels to drop the drift from incremental updates.
  T sum{};
  double err = 0.0;
  std::vector<detail::Panel<T>> all;
  all.reserve(panels.size());
  while (!panels.empty()) {
    all.push_back(panels.top());
    panels.pop();
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
  for (const auto& p : all) {
    sum += p.value;
    err += p.error;
  }
  return {sum, err, count, err <= abs_tol};
}

struct RootResult {
  double root = 0.0;
  double residual = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
  std::vector<double> trace;  // successive iterates
};

struct RootOptions {
  double residual_tol = 1e-10;
  double width_tol = 1e-12;
  int max_iterations = 200;
};

/// Root of a continuous f on [lo, hi] with f(lo) < 0 < f(hi) or the reverse.
///
/// Illinois-modified false position steps, falling back to bisection whenever
/// two consecutive steps fail to halve the bracket. Stops once the bracket is
/// narrower than width_tol and the midpoint residual is below residual_tol;
/// the returned root is the midpoint of the final bracket.
RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     const RootOptions& options = {});

}  // namespace abeta::numerics
