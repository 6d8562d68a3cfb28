#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncb/embed.hpp"
#include "ncb/series.hpp"

using namespace ncb;

namespace {

SeriesB rand_b(Rng& rng, int order) {
  SeriesB f(order);
  for (int k = 1; k <= order; ++k) f.set_coeff(k, DualScalar(rng.rational(), rng.rational()));
  return f;
}

}  // namespace

TEST_CASE("dual scalar algebra") {
  const DualScalar x(Rational(3), Rational(7));
  CHECK(DualScalar::unit() * x == x);
  CHECK(DualScalar(Rational(0), Rational(1)) * DualScalar(Rational(0), Rational(1)) == DualScalar());
  CHECK(dual_mul({Rational(2), Rational(3)}, {Rational(4), Rational(5)}) ==
        DualScalar(Rational(8), Rational(22)));
  CHECK(x * x.inverse() == DualScalar::unit());
  CHECK_THROWS_AS(DualScalar(Rational(0), Rational(2)).inverse(), std::domain_error);
}

TEST_CASE("series discipline") {
  CHECK_THROWS_AS(SeriesA(0), std::domain_error);
  SeriesA f(3), g(4);
  CHECK_THROWS_AS(boxconv_a(f, g), std::domain_error);
  CHECK_THROWS_AS(f.coeff(4), std::domain_error);
  CHECK(f.truncate(2).order() == 2);
}

TEST_CASE("boxconv_a low orders and unit") {
  Rng rng(2);
  const SeriesA ones = zeta_a(3);
  const SeriesA cat = boxconv_a(ones, ones);
  CHECK(cat.coeff(1) == 1);
  CHECK(cat.coeff(2) == 2);
  CHECK(cat.coeff(3) == 5);
  for (int s = 0; s < 5; ++s) {
    SeriesA f(6);
    for (int k = 1; k <= 6; ++k) f.set_coeff(k, rng.rational());
    CHECK(boxconv_a(f, delta_a(6)) == f);
    CHECK(boxconv_a(delta_a(6), f) == f);
  }
}

TEST_CASE("boxconv_a_dual projects onto boxconv_a on first components") {
  Rng rng(4);
  const SeriesB f = rand_b(rng, 5);
  const SeriesB g = rand_b(rng, 5);
  const SeriesB fg = boxconv_a_dual(f, g);
  SeriesA f1(5), g1(5);
  for (int k = 1; k <= 5; ++k) {
    f1.set_coeff(k, f.coeff(k).prime);
    g1.set_coeff(k, g.coeff(k).prime);
  }
  const SeriesA fg1 = boxconv_a(f1, g1);
  for (int k = 1; k <= 5; ++k) CHECK(fg.coeff(k).prime == fg1.coeff(k));
  CHECK(boxconv_a_dual(f, delta_b(5)) == f);

  // ((1,1)z) boxconv ((1,0)z) at order 2: coefficient 1 = (1,1), 2 = (0,0)
  SeriesB a(2), b(2);
  a.set_coeff(1, DualScalar(Rational(1), Rational(1)));
  b.set_coeff(1, DualScalar::unit());
  const SeriesB ab = boxconv_a_dual(a, b);
  CHECK(ab.coeff(1) == DualScalar(Rational(1), Rational(1)));
  CHECK(ab.coeff(2) == DualScalar());
}

TEST_CASE("boxconv_b first order and Theorem 5.3 on samples") {
  Rng rng(6);
  // m = 1: gamma'_1 = a'_1 b'_1 and gamma''_1 = a''_1 b'_1 + a'_1 b''_1
  for (int s = 0; s < 10; ++s) {
    const SeriesB f = rand_b(rng, 1);
    const SeriesB g = rand_b(rng, 1);
    const SeriesB fg = boxconv_b(f, g);
    CHECK(fg.coeff(1).prime == f.coeff(1).prime * g.coeff(1).prime);
    CHECK(fg.coeff(1).double_prime ==
          f.coeff(1).double_prime * g.coeff(1).prime + f.coeff(1).prime * g.coeff(1).double_prime);
    CHECK(fg.coeff(1) == f.coeff(1) * g.coeff(1));
  }
  for (int s = 0; s < 10; ++s) {
    const SeriesB f = rand_b(rng, 5);
    const SeriesB g = rand_b(rng, 5);
    CHECK(boxconv_b(f, g) == boxconv_a_dual(f, g));
    CHECK(boxconv_b(f, delta_b(5)) == f);
  }
}

TEST_CASE("boxconv_b inverses") {
  CHECK(boxconv_b_inverse(delta_b(4)) == delta_b(4));
  Rng rng(8);
  for (int s = 0; s < 10; ++s) {
    SeriesB f = rand_b(rng, 5);
    f.set_coeff(1, DualScalar(Rational(1), rng.rational()));
    const SeriesB inv = boxconv_b_inverse(f);
    CHECK(boxconv_b(f, inv) == delta_b(5));
    CHECK(boxconv_b(inv, f) == delta_b(5));
  }
  CHECK_NOTHROW(boxconv_b_inverse(zeta_b(5)));
  SeriesB bad(3);
  bad.set_coeff(1, DualScalar(Rational(0), Rational(1)));
  CHECK_THROWS_AS(boxconv_b_inverse(bad), std::domain_error);
}

TEST_CASE("multiplicative functions u_alpha") {
  Rng rng(10);
  SeriesA alpha(3);
  for (int k = 1; k <= 3; ++k) alpha.set_coeff(k, rng.rational());
  CHECK(u_alpha_a(alpha, Permutation(3)) == rat_pow(alpha.coeff(1), 3));
  CHECK(u_alpha_a(alpha, parse_permutation("(1,2)", 3)) == alpha.coeff(1) * alpha.coeff(2));
  CHECK_THROWS_AS(u_alpha_a(alpha, Permutation(4)), std::domain_error);

  SeriesB beta = rand_b(rng, 2);
  CHECK(u_alpha_b(beta, SignedPermutation(2)) == rat_pow(beta.coeff(1).prime, 2));
  CHECK(u_alpha_b(beta, omega_b(2)) == beta.coeff(2).double_prime);

  // the W_2 obstruction relation holds for every u_alpha
  const auto tau1 = parse_signed_permutation("(1,-1)", 2);
  const auto tau2 = parse_signed_permutation("(2,-2)", 2);
  const auto tau = compose(tau1, tau2);
  for (int s = 0; s < 10; ++s) {
    const SeriesB a = rand_b(rng, 2);
    CHECK(u_alpha_b(a, SignedPermutation(2)) * u_alpha_b(a, tau) ==
          u_alpha_b(a, tau1) * u_alpha_b(a, tau2));
  }
}

TEST_CASE("bridge check at n = 3 with seeded samples") {
  Rng rng(7);
  for (int s = 0; s < 20; ++s) {
    CHECK(bridge_check_b(rand_b(rng, 3), rand_b(rng, 3), 3));
  }
}

TEST_CASE("u_alpha is multiplicative over disjoint invariant supports") {
  // u_a(s_1 ... s_k) u_a(eps)^{k-1} = u_a(s_1) ... u_a(s_k)
  Rng rng(13);
  const std::vector<std::pair<SignedPermutation, SignedPermutation>> instances = {
      {parse_signed_permutation("(1,-1)", 3), parse_signed_permutation("(2,3)(-2,-3)", 3)},
      {parse_signed_permutation("(1,2)(-1,-2)", 3), parse_signed_permutation("(3,-3)", 3)},
      {parse_signed_permutation("(1,-1)", 3), parse_signed_permutation("(2,-3)(-2,3)", 3)},
  };
  for (const auto& [s1, s2] : instances) {
    for (int s = 0; s < 5; ++s) {
      const SeriesB a = rand_b(rng, 3);
      CHECK(u_alpha_b(a, compose(s1, s2)) * u_alpha_b(a, SignedPermutation(3)) ==
            u_alpha_b(a, s1) * u_alpha_b(a, s2));
    }
  }
}

TEST_CASE("single-variable dictionaries") {
  // kappa = (0,1,0,...) gives the pair-partition counts m_2 = 1, m_4 = 2
  std::vector<Rational> kappa{Rational(0), Rational(1), Rational(0), Rational(0)};
  const auto m = moments_from_cumulants_a(kappa);
  CHECK(m == std::vector<Rational>{Rational(0), Rational(1), Rational(0), Rational(2)});
  CHECK(cumulants_from_moments_a(m) == kappa);
  // kappa = (1,0,0,...): every moment is 1
  const auto ones = moments_from_cumulants_a({Rational(1), Rational(0), Rational(0)});
  CHECK(ones == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
}

TEST_CASE("series literals round trip") {
  const SeriesA f = parse_series_a("[1, 2, \"5/3\"]");
  CHECK(f.coeff(3) == Rational(5, 3));
  CHECK(parse_series_a(to_string(f)) == f);
  const SeriesB g = parse_series_b("[[1,0],[2,\"3/2\"]]");
  CHECK(g.coeff(2) == DualScalar(Rational(2), Rational(3, 2)));
  CHECK(parse_series_b(to_string(g)) == g);
  CHECK_THROWS_AS(parse_series_a("[]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_series_b("[1,2]"), std::invalid_argument);
}
