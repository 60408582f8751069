#pragma once

// Caratheodory-class data: finite Herglotz measures, the Libera-Zlotkiewicz
// parametrization of (p2, p3), and the map p -> a onto A_beta coefficients.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "abeta/beta.hpp"
#include "abeta/coeff_seq.hpp"

namespace abeta {

struct Atom {
  double theta;   // radians in [0, 2*pi)
  double weight;  // >= 0
};

/// Probability measure on the circle with finitely many atoms. The induced
/// Caratheodory function is p(z) = sum_k w_k (1 + e^{i t_k} z) / (1 - e^{i t_k} z).
class HerglotzMeasure {
 public:
  static constexpr double kWeightTolerance = 1e-12;

  /// Validates atom angles, nonnegative weights and unit total mass.
  explicit HerglotzMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }

  /// p(z) for |z| < 1.
  cplx value(cplx z) const;

 private:
  std::vector<Atom> atoms_;
};

/// (p1, x, z) with |p1| <= 2, |x| <= 1, |z| <= 1.
struct LiberaTriple {
  LiberaTriple(cplx p1, cplx x, cplx z);

  cplx p1;
  cplx x;
  cplx z;
};

/// p_1..p_M with p_n = 2 sum_k w_k e^{i n t_k}.
std::vector<cplx> carath_coeffs(const HerglotzMeasure& mu, int count);

/// (p2, p3) from the Libera-Zlotkiewicz formulas. These describe Caratheodory
/// data when p1 is real in [0, 2], the normalization reached by a rotation.
std::pair<cplx, cplx> libera_expand(const LiberaTriple& t);

/// Caratheodory-Toeplitz test: the Hermitian Toeplitz matrix with diagonal 2
/// and superdiagonals p_1..p_M has no eigenvalue below -1e-10.
bool psd_check(std::span<const cplx> p);

/// a_n = p_{n-1} / (n - (n-1) beta) for n = 2..M, given p_1..p_{M-1}.
/// The caller is responsible for p being Caratheodory data (see psd_check).
CoeffSeq to_abeta_coeffs(BetaParam beta, std::span<const cplx> p);

/// Random atomic measure with `atom_count` free atoms.
///
/// With `real_p1` set, a conjugate pair of atoms is appended whose placement
/// makes p_1 real and equal to the target; the split between free and pair
/// mass is drawn from the feasible range. Retries up to 100 times before
/// failing with CONSTRAINT_INFEASIBLE.
HerglotzMeasure sample_measure(std::uint64_t seed, int atom_count,
                               std::optional<double> real_p1 = std::nullopt);

/// f(z) = z * int_0^1 p(t^{1-beta} z) dt for the member of A_beta generated by mu,
/// evaluated as a mixture of rotated copies of the extremal function.
/// At beta = 1 this is z p(z). Requires |z| < 1.
cplx eval_f(BetaParam beta, const HerglotzMeasure& mu, cplx z);

}  // namespace abeta
