#pragma once

#include "mesplit/linalg.hpp"

namespace mesplit {

bool is_prime(long long n);

// Qudit dimension with a recorded primality check. The shift/phase/Fourier
// operators below accept composite d; the codeword encoding does not.
struct QuditDim {
  int d = 2;
  bool prime_checked = false;

  static QuditDim of(int d);  // DomainError if d < 2
};

// omega = exp(2*pi*i/d)
cd omega(const QuditDim& dim);

// omega^(t mod d); the exponent is reduced in integer arithmetic so large
// indices cannot drift.
cd omega_pow(const QuditDim& dim, long long t);

CMatrix pauli_x(const QuditDim& dim);  // X|k> = |k+1 mod d>
CMatrix pauli_z(const QuditDim& dim);  // Z|k> = omega^k |k>
CMatrix fourier(const QuditDim& dim);  // F[j,k] = omega^(j*k)/sqrt(d)

// X^a Z^b for 0 <= a,b < d, assembled entrywise: (X^a Z^b)[k+a, k] =
// omega^(b*k). IndexOutOfRange when a or b is outside [0, d).
CMatrix weyl(const QuditDim& dim, int a, int b);

}  // namespace mesplit
