#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "abeta/beta.hpp"
#include "abeta/error.hpp"

namespace abeta {

using cplx = std::complex<double>;

/// Taylor coefficients a_2..a_M of a normalized member f(z) = z + a_2 z^2 + ...
/// of A_beta. The leading coefficient a_1 = 1 is implicit.
class CoeffSeq {
 public:
  CoeffSeq(BetaParam beta, std::vector<cplx> a2_onward)
      : beta_(beta), coeffs_(std::move(a2_onward)) {}

  const BetaParam& beta() const noexcept { return beta_; }

  /// Largest index n for which a_n is available.
  int max_index() const noexcept { return static_cast<int>(coeffs_.size()) + 1; }

  /// a_n for n >= 1, with a_1 = 1.
  cplx a(int n) const {
    if (n == 1) return 1.0;
    if (n < 1 || n > max_index()) {
      throw Error(ErrorCode::kLength, "coefficient a_" + std::to_string(n) +
                                          " not available (have up to a_" +
                                          std::to_string(max_index()) + ")");
    }
    return coeffs_[static_cast<std::size_t>(n - 2)];
  }

  const std::vector<cplx>& raw() const noexcept { return coeffs_; }

 private:
  BetaParam beta_;
  std::vector<cplx> coeffs_;
};

}  // namespace abeta
