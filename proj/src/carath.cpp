#include "abeta/carath.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "abeta/extremal.hpp"

namespace abeta {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

}  // namespace

HerglotzMeasure::HerglotzMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw Error(ErrorCode::kDomain, "measure needs at least one atom");
  double total = 0.0;
  for (const auto& atom : atoms_) {
    if (!(atom.theta >= 0.0 && atom.theta < kTwoPi)) {
      throw Error(ErrorCode::kDomain, "atom angle outside [0, 2pi): " + std::to_string(atom.theta));
    }
    if (!(atom.weight >= 0.0)) {
      throw Error(ErrorCode::kDomain, "negative atom weight " + std::to_string(atom.weight));
    }
    total += atom.weight;
  }
  if (std::abs(total - 1.0) > kWeightTolerance) {
    throw Error(ErrorCode::kDomain, "weights sum to " + std::to_string(total) + ", not 1");
  }
}

cplx HerglotzMeasure::value(cplx z) const {
  cplx sum = 0.0;
  for (const auto& atom : atoms_) {
    const cplx w = std::polar(1.0, atom.theta) * z;
    sum += atom.weight * (1.0 + w) / (1.0 - w);
  }
  return sum;
}

LiberaTriple::LiberaTriple(cplx p1_, cplx x_, cplx z_) : p1(p1_), x(x_), z(z_) {
  if (std::abs(p1) > 2.0 || std::abs(x) > 1.0 || std::abs(z) > 1.0) {
    throw Error(ErrorCode::kDomain, "Libera triple needs |p1| <= 2, |x| <= 1, |z| <= 1");
  }
}

std::vector<cplx> carath_coeffs(const HerglotzMeasure& mu, int count) {
  if (count < 1) throw Error(ErrorCode::kDomain, "coefficient count must be >= 1");
  std::vector<cplx> p(static_cast<std::size_t>(count), 0.0);
  for (const auto& atom : mu.atoms()) {
    for (int n = 1; n <= count; ++n) {
      // polar() per index keeps |p_n| <= 2 without drift from repeated products.
      p[static_cast<std::size_t>(n - 1)] += 2.0 * atom.weight * std::polar(1.0, n * atom.theta);
    }
  }
  return p;
}

std::pair<cplx, cplx> libera_expand(const LiberaTriple& t) {
  const cplx p1 = t.p1;
  const cplx x = t.x;
  const cplx rest = 4.0 - p1 * p1;
  const cplx p2 = 0.5 * (p1 * p1 + x * rest);
  const cplx p3 = 0.25 * (p1 * p1 * p1 + 2.0 * x * p1 * rest - x * x * p1 * rest +
                          2.0 * t.z * (1.0 - std::norm(x)) * rest);
  return {p2, p3};
}

bool psd_check(std::span<const cplx> p) {
  if (p.empty()) throw Error(ErrorCode::kLength, "psd_check needs at least p_1");
  const auto size = static_cast<Eigen::Index>(p.size() + 1);
  Eigen::MatrixXcd toeplitz(size, size);
  for (Eigen::Index row = 0; row < size; ++row) {
    for (Eigen::Index col = 0; col < size; ++col) {
      const auto offset = col - row;
      if (offset == 0) {
        toeplitz(row, col) = 2.0;
      } else if (offset > 0) {
        toeplitz(row, col) = p[static_cast<std::size_t>(offset - 1)];
      } else {
        toeplitz(row, col) = std::conj(p[static_cast<std::size_t>(-offset - 1)]);
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(toeplitz, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -1e-10;
}

CoeffSeq to_abeta_coeffs(BetaParam beta, std::span<const cplx> p) {
  std::vector<cplx> a;
  a.reserve(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    const int n = static_cast<int>(k) + 2;
    a.push_back(p[k] / beta.weight(n));
  }
  return CoeffSeq(beta, std::move(a));
}

HerglotzMeasure sample_measure(std::uint64_t seed, int atom_count, std::optional<double> real_p1) {
  if (atom_count < 1) throw Error(ErrorCode::kDomain, "atom count must be >= 1");
  if (real_p1 && !(*real_p1 >= -2.0 && *real_p1 <= 2.0)) {
    throw Error(ErrorCode::kDomain, "real p1 target must lie in [-2, 2]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> gamma1(1.0);

  constexpr int kMaxAttempts = 100;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Atom> atoms;
    atoms.reserve(static_cast<std::size_t>(atom_count) + 2);
    double total = 0.0;
    for (int k = 0; k < atom_count; ++k) {
      const double w = gamma1(rng);
      atoms.push_back({angle(rng), w});
      total += w;
    }
    for (auto& atom : atoms) atom.weight /= total;

    if (!real_p1) return HerglotzMeasure(std::move(atoms));

    const double target = *real_p1;
    cplx free_p1 = 0.0;
    for (const auto& atom : atoms) free_p1 += 2.0 * atom.weight * std::polar(1.0, atom.theta);

    // Pair mass w must satisfy |target - (1-w) free_p1| <= 2w. The slack is
    // convex in w and nonpositive at w = 1, so the feasible set is [w_min, 1].
    auto slack = [&](double w) { return std::abs(target - (1.0 - w) * free_p1) - 2.0 * w; };
    double w_min = 0.0;
    if (slack(0.0) > 0.0) {
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (slack(mid) > 0.0 ? lo : hi) = mid;
      }
      w_min = hi;
    }
    const double pair_mass = w_min + (1.0 - w_min) * (1.0 - unit(rng));  // in (w_min, 1]
    const cplx deficit = target - (1.0 - pair_mass) * free_p1;
    const double cos_phi = std::clamp(deficit.real() / (2.0 * pair_mass), -1.0, 1.0);
    const double phi = std::acos(cos_phi);
    const double sin_phi = std::sin(phi);
    const double split = sin_phi > 1e-300 ? deficit.imag() / (2.0 * sin_phi) : 0.0;
    double w_plus = 0.5 * (pair_mass + split);
    double w_minus = 0.5 * (pair_mass - split);
    if (w_plus < -1e-12 || w_minus < -1e-12) continue;
    w_plus = std::max(w_plus, 0.0);
    w_minus = std::max(w_minus, 0.0);

    for (auto& atom : atoms) atom.weight *= 1.0 - pair_mass;
    atoms.push_back({wrap_angle(phi), w_plus});
    atoms.push_back({wrap_angle(-phi), w_minus});
    double mass = 0.0;
    for (const auto& atom : atoms) mass += atom.weight;
    for (auto& atom : atoms) atom.weight /= mass;

    HerglotzMeasure mu(std::move(atoms));
    const cplx p1 = carath_coeffs(mu, 1).front();
    if (std::abs(p1.imag()) <= 1e-9 && std::abs(p1.real() - target) <= 1e-9) return mu;
  }
  throw Error(ErrorCode::kConstraintInfeasible,
              "could not realise real p1 = " + std::to_string(*real_p1) + " after " +
                  std::to_string(kMaxAttempts) + " attempts");
}

cplx eval_f(BetaParam beta, const HerglotzMeasure& mu, cplx z) {
  if (!(std::abs(z) < 1.0)) throw Error(ErrorCode::kDomain, "eval_f needs |z| < 1");
  if (beta.is_one()) return z * mu.value(z);
  cplx sum = 0.0;
  for (const auto& atom : mu.atoms()) {
    if (atom.weight == 0.0) continue;
    const cplx rotation = std::polar(1.0, atom.theta);
    sum += atom.weight * std::conj(rotation) * ftilde_eval(beta, rotation * z, 1e-13).value;
  }
  return sum;
}

}  // namespace abeta
