#include "mesplit/qudit.hpp"

#include <numbers>

namespace mesplit {

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long long p = 3; p * p <= n; p += 2)
    if (n % p == 0) return false;
  return true;
}

QuditDim QuditDim::of(int d) {
  if (d < 2) throw DomainError("qudit dimension must be at least 2");
  return QuditDim{d, is_prime(d)};
}

cd omega(const QuditDim& dim) {
  return std::polar(1.0, 2.0 * std::numbers::pi / dim.d);
}

cd omega_pow(const QuditDim& dim, long long t) {
  long long r = t % dim.d;
  if (r < 0) r += dim.d;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / dim.d);
}

CMatrix pauli_x(const QuditDim& dim) {
  CMatrix m(dim.d, dim.d);
  for (int k = 0; k < dim.d; ++k) m((k + 1) % dim.d, k) = 1.0;
  return m;
}

CMatrix pauli_z(const QuditDim& dim) {
  CMatrix m(dim.d, dim.d);
  for (int k = 0; k < dim.d; ++k) m(k, k) = omega_pow(dim, k);
  return m;
}

CMatrix fourier(const QuditDim& dim) {
  CMatrix m(dim.d, dim.d);
  const double s = 1.0 / std::sqrt(static_cast<double>(dim.d));
  for (int j = 0; j < dim.d; ++j)
    for (int k = 0; k < dim.d; ++k)
      m(j, k) = s * omega_pow(dim, static_cast<long long>(j) * k);
  return m;
}

CMatrix weyl(const QuditDim& dim, int a, int b) {
  if (a < 0 || a >= dim.d || b < 0 || b >= dim.d)
    throw IndexOutOfRange("weyl exponents must lie in [0, d)");
  CMatrix m(dim.d, dim.d);
  for (int k = 0; k < dim.d; ++k)
    m((k + a) % dim.d, k) = omega_pow(dim, static_cast<long long>(b) * k);
  return m;
}

}  // namespace mesplit
