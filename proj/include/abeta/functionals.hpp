#pragma once

// Coefficient functionals on a CoeffSeq (a_1 = 1 implicit). Values are
// returned signed; callers take moduli where the bound is on |.|.

#include "abeta/coeff_seq.hpp"

namespace abeta {

/// a_n a_{n+2} - mu a_{n+1}^2; mu = 1 gives the Hankel determinant H_2(n).
cplx hankel2(const CoeffSeq& a, int n, double mu = 1.0);

/// Toeplitz determinant T_3(1) = 1 - 2a_2^2 + 2a_2^2 a_3 - a_3^2 (no conjugation).
cplx toeplitz3(const CoeffSeq& a);

/// Hermitian-Toeplitz determinant T_{3,1} = 1 - 2|a_2|^2 + 2Re(a_2^2 conj(a_3)) - |a_3|^2.
double hermitian_t31(const CoeffSeq& a);

/// Second-order determinant a_n^2 - a_{n+1}^2.
cplx hermitian_t2n(const CoeffSeq& a, int n);

/// Generalized Zalcman functional a_n a_m - a_{n+m-1}.
cplx zalcman(const CoeffSeq& a, int n, int m);

/// a_{n+1}^N - a_n^N.
cplx coeff_diff_power(const CoeffSeq& a, int n, int power);

}  // namespace abeta
