#include "abeta/numerics.hpp"

#include <string>

namespace abeta::numerics {

RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     const RootOptions& options) {
  if (!(lo < hi)) throw Error(ErrorCode::kDomain, "empty bracket");
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (std::signbit(f_lo) == std::signbit(f_hi) && f_lo != 0.0 && f_hi != 0.0) {
    throw Error(ErrorCode::kNoRoot, "no sign change on [" + std::to_string(lo) + ", " +
                                        std::to_string(hi) + "]");
  }

  RootResult result;
  // Illinois bookkeeping: which end was retained by the previous step.
  int retained = 0;
  int slow_steps = 0;
  double width = hi - lo;
  for (int it = 1; it <= options.max_iterations; ++it) {
    result.iterations = it;
    double x;
    const bool bisect = slow_steps >= 2;
    if (bisect || f_hi == f_lo) {
      x = 0.5 * (lo + hi);
      slow_steps = 0;
    } else {
      x = lo - f_lo * (hi - lo) / (f_hi - f_lo);
      if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    }
    const double fx = f(x);
    result.trace.push_back(x);
    if (fx == 0.0) {
      // Exact hit; shrink the bracket around x so the midpoint stays at x.
      const double h = 0.25 * options.width_tol;
      lo = std::max(lo, x - h);
      hi = std::min(hi, x + h);
      f_lo = f(lo);
      f_hi = f(hi);
      break;
    }
    if (std::signbit(fx) == std::signbit(f_lo)) {
      lo = x;
      f_lo = fx;
      if (retained == +1) f_hi *= 0.5;
      retained = +1;
    } else {
      hi = x;
      f_hi = fx;
      if (retained == -1) f_lo *= 0.5;
      retained = -1;
    }
    const double new_width = hi - lo;
    slow_steps = new_width > 0.5 * width ? slow_steps + 1 : 0;
    width = new_width;
    if (width <= options.width_tol) {
      const double mid = 0.5 * (lo + hi);
      if (std::abs(f(mid)) <= options.residual_tol) break;
    }
  }
  result.lo = lo;
  result.hi = hi;
  result.root = 0.5 * (lo + hi);
  result.residual = f(result.root);
  if (!(hi - lo <= options.width_tol) || std::abs(result.residual) > options.residual_tol) {
    throw Error(ErrorCode::kNoRoot, "root finder did not converge within " +
                                        std::to_string(options.max_iterations) + " iterations");
  }
  return result;
}

}  // namespace abeta::numerics
