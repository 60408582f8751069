#include "abeta/functionals.hpp"

#include <cmath>

namespace abeta {

namespace {

cplx ipow(cplx x, int k) {
  cplx r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

cplx hankel2(const CoeffSeq& a, int n, double mu) {
  if (n < 1) throw Error(ErrorCode::kDomain, "hankel2 needs n >= 1");
  if (!(mu >= 0.0)) throw Error(ErrorCode::kDomain, "hankel2 needs mu >= 0");
  const cplx mid = a.a(n + 1);
  return a.a(n) * a.a(n + 2) - mu * mid * mid;
}

cplx toeplitz3(const CoeffSeq& a) {
  const cplx a2 = a.a(2);
  const cplx a3 = a.a(3);
  const cplx a2sq = a2 * a2;
  return 1.0 - 2.0 * a2sq + 2.0 * a2sq * a3 - a3 * a3;
}

double hermitian_t31(const CoeffSeq& a) {
  const cplx a2 = a.a(2);
  const cplx a3 = a.a(3);
  return 1.0 - 2.0 * std::norm(a2) + 2.0 * (a2 * a2 * std::conj(a3)).real() - std::norm(a3);
}

cplx hermitian_t2n(const CoeffSeq& a, int n) {
  if (n < 1) throw Error(ErrorCode::kDomain, "hermitian_t2n needs n >= 1");
  const cplx x = a.a(n);
  const cplx y = a.a(n + 1);
  return x * x - y * y;
}

cplx zalcman(const CoeffSeq& a, int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::kDomain, "zalcman needs n, m >= 1");
  return a.a(n) * a.a(m) - a.a(n + m - 1);
}

cplx coeff_diff_power(const CoeffSeq& a, int n, int power) {
  if (n < 1 || power < 1) throw Error(ErrorCode::kDomain, "coeff_diff_power needs n, N >= 1");
  return ipow(a.a(n + 1), power) - ipow(a.a(n), power);
}

}  // namespace abeta
