#include "abeta/radii.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "abeta/extremal.hpp"
#include "abeta/numerics.hpp"

namespace abeta {

namespace {

constexpr double kEvalTol = 1e-13;

void require_below_one(BetaParam beta) {
  if (beta.is_one()) {
    throw Error(ErrorCode::kDomain,
                "beta = 1 gives distance -ftilde(-1) = 0 and a degenerate radius");
  }
}

double ftilde_real(BetaParam beta, double r) { return ftilde_eval(beta, r, kEvalTol).value.real(); }

// Taylor polynomial z + sum_{n=2}^{N-1} c_n z^n, zero for N = 1.
double partial_sum(BetaParam beta, int N, double r) {
  if (N <= 1) return 0.0;
  double sum = r;
  double power = r;
  for (int n = 2; n <= N - 1; ++n) {
    power *= r;
    sum += ftilde_coeff(beta, n) * power;
  }
  return sum;
}

double equation_value(BetaParam beta, const RadiusEquation& eq, double r, double at_minus1) {
  if (eq.kind == RadiusEquation::Kind::kBohr) {
    return std::pow(r, eq.m) + ftilde_real(beta, r) - r + at_minus1;
  }
  return ftilde_real(beta, std::pow(r, eq.m)) + ftilde_real(beta, r) - partial_sum(beta, eq.N, r) +
         at_minus1;
}

}  // namespace

std::string RadiusEquation::label() const {
  if (kind == Kind::kBohr) return "BOHR(" + std::to_string(m) + ")";
  return "ROGOSINSKI(" + std::to_string(m) + "," + std::to_string(N) + ")";
}

double distance_lower(BetaParam beta) {
  require_below_one(beta);
  return -ftilde_at_minus1(beta);
}

double radius_equation_value(BetaParam beta, const RadiusEquation& eq, double r) {
  return equation_value(beta, eq, r, ftilde_at_minus1(beta));
}

RadiusResult solve_radius(BetaParam beta, const RadiusEquation& eq) {
  require_below_one(beta);
  if (eq.m < 1) throw Error(ErrorCode::kDomain, "m must be >= 1");
  if (eq.kind == RadiusEquation::Kind::kRogosinski) {
    if (eq.N < 1) throw Error(ErrorCode::kDomain, "N must be >= 1");
    if (eq.N > kMaxRogosinskiN) {
      throw Error(ErrorCode::kLimit, "N above " + std::to_string(kMaxRogosinskiN));
    }
  }
  const double at_minus1 = ftilde_at_minus1(beta);
  auto equation = [&](double r) { return equation_value(beta, eq, r, at_minus1); };

  // Every term apart from ftilde(-1) is a nonnegative-coefficient series
  // vanishing at 0, so the equation increases from ftilde(-1) < 0 and has a
  // unique root. Walk the upper end toward 1 until the sign changes.
  double hi = 0.5;
  while (equation(hi) <= 0.0) {
    hi = 1.0 - 0.5 * (1.0 - hi);
    if (hi > 0.95) throw Error(ErrorCode::kNoRoot, "no sign change below r = 0.95");
  }
  const auto root = numerics::find_root(equation, 0.0, hi);

  // The derivative must be positive at the root for the uniqueness argument.
  const double h = 1e-7;
  if (!(equation(root.root + h) > equation(root.root - h))) {
    throw Error(ErrorCode::kNoRoot, "equation not increasing at the computed root");
  }
  return {root.root, root.residual, root.lo, root.hi, root.iterations, root.trace, eq};
}

RadiusResult bohr_radius(BetaParam beta, int m) { return solve_radius(beta, RadiusEquation::bohr(m)); }

RadiusResult rogosinski_radius(BetaParam beta, int m, int N) {
  return solve_radius(beta, RadiusEquation::rogosinski(m, N));
}

std::vector<CurvePoint> radius_curve(const RadiusEquation& eq, const std::vector<double>& grid) {
  if (grid.empty()) throw Error(ErrorCode::kDomain, "empty beta grid");
  std::vector<BetaParam> betas;
  betas.reserve(grid.size());
  for (double b : grid) {
    betas.emplace_back(b);
    require_below_one(betas.back());
  }
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, grid.size());
  std::vector<CurvePoint> out(grid.size());
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < grid.size(); i += workers) {
        out[i] = {grid[i], solve_radius(betas[i], eq).radius};
      }
    }));
  }
  for (auto& job : jobs) job.get();
  return out;
}

}  // namespace abeta

namespace abeta {

const std::vector<PublishedRadius>& table1_published() {
  static const std::vector<PublishedRadius> rows = {
      {0.1, 0.267139}, {0.2, 0.24766},  {0.3, 0.22655},    {0.5, 0.178366},
      {0.7, 0.119726}, {0.8, 0.085113}, {0.9, 0.0457777},
  };
  return rows;
}

}  // namespace abeta
