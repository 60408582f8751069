#pragma once

#include <cmath>
#include <string>

#include "abeta/error.hpp"

namespace abeta {

/// Filtration parameter of the class A_beta, validated to lie in [0, 1].
///
/// beta = 0 is the bounded-turning class Re f' > 0; beta = 1 is Re f(z)/z > 0.
/// Operations that divide by (1 - beta) check `is_one()` themselves.
class BetaParam {
 public:
  explicit BetaParam(double beta) : value_(beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) {
      throw Error(ErrorCode::kDomain, "beta must lie in [0, 1], got " + std::to_string(beta));
    }
  }

  double value() const noexcept { return value_; }
  bool is_one() const noexcept { return value_ == 1.0; }

  /// n - (n - 1) beta, the divisor linking p_{n-1} to a_n.
  double weight(int n) const noexcept { return n - (n - 1) * value_; }

  friend bool operator==(const BetaParam&, const BetaParam&) = default;

 private:
  double value_;
};

}  // namespace abeta
