#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ncb {

// Exact rational scalar. All arithmetic in this library is exact; there is
// no floating point anywhere on a value path.
using Rational = mpq_class;

inline Rational rat_pow(const Rational& base, int exp) {
  if (exp < 0) throw std::domain_error("rat_pow: negative exponent");
  Rational acc(1);
  for (int i = 0; i < exp; ++i) acc *= base;
  return acc;
}

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
inline Rational rat_parse(std::string_view text) {
  std::string s(text);
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("rat_parse: empty rational literal");
  s = s.substr(first, last - first + 1);
  mpq_t raw;
  mpq_init(raw);
  if (mpq_set_str(raw, s.c_str(), 10) != 0) {
    mpq_clear(raw);
    throw std::invalid_argument("rat_parse: bad rational literal '" + s + "'");
  }
  if (mpz_sgn(mpq_denref(raw)) == 0) {
    mpq_clear(raw);
    throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
  }
  Rational r(raw);
  mpq_clear(raw);
  r.canonicalize();
  return r;
}

// Canonical "p/q" (or plain "p" for integers).
inline std::string rat_str(const Rational& r) { return r.get_str(); }

// Deterministic source of small rationals for randomized exact checks.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng_);
  }

  // Small rational with numerator in [-6, 6] and denominator in [1, 4].
  Rational rational() {
    Rational r(integer(-6, 6), integer(1, 4));
    r.canonicalize();
    return r;
  }

  // Small nonzero rational.
  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (r != 0) return r;
    }
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ncb
