#pragma once

#include "ncb/rational.hpp"

#include <string>

namespace ncb {

// The two-dimensional algebra C[x]/(x^2): (a',a'')(b',b'') =
// (a'b', a'b'' + a''b'), unit (1,0), with (0,1) nilpotent. Isomorphic to
// 2x2 upper-triangular Toeplitz matrices.
struct DualScalar {
  Rational prime;
  Rational double_prime;

  DualScalar() : prime(0), double_prime(0) {}
  DualScalar(Rational p, Rational pp) : prime(std::move(p)), double_prime(std::move(pp)) {}

  static DualScalar unit() { return DualScalar(Rational(1), Rational(0)); }

  bool operator==(const DualScalar& o) const {
    return prime == o.prime && double_prime == o.double_prime;
  }

  DualScalar& operator+=(const DualScalar& o) {
    prime += o.prime;
    double_prime += o.double_prime;
    return *this;
  }
  DualScalar& operator-=(const DualScalar& o) {
    prime -= o.prime;
    double_prime -= o.double_prime;
    return *this;
  }

  friend DualScalar operator+(DualScalar a, const DualScalar& b) { return a += b; }
  friend DualScalar operator-(DualScalar a, const DualScalar& b) { return a -= b; }
  friend DualScalar operator*(const DualScalar& a, const DualScalar& b) {
    return DualScalar(a.prime * b.prime, a.prime * b.double_prime + a.double_prime * b.prime);
  }

  bool is_zero() const { return prime == 0 && double_prime == 0; }

  // Invertible iff the first component is nonzero.
  bool invertible() const { return prime != 0; }
  DualScalar inverse() const {
    if (!invertible()) throw std::domain_error("DualScalar: (0, a'') is not invertible");
    return DualScalar(1 / prime, -double_prime / (prime * prime));
  }
};

inline DualScalar dual_mul(const DualScalar& a, const DualScalar& b) { return a * b; }

inline DualScalar dual_pow(const DualScalar& base, int exp) {
  if (exp < 0) throw std::domain_error("dual_pow: negative exponent");
  DualScalar acc = DualScalar::unit();
  for (int i = 0; i < exp; ++i) acc = acc * base;
  return acc;
}

inline std::string to_string(const DualScalar& d) {
  return "(" + rat_str(d.prime) + "," + rat_str(d.double_prime) + ")";
}

}  // namespace ncb
