#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncb/cayley.hpp"
#include "ncb/embed.hpp"
#include "ncb/rational.hpp"

#include <set>

using namespace ncb;

TEST_CASE("composition convention: right factor acts first") {
  const auto a = parse_permutation("(1,2)(3,4)", 4);
  const auto c = parse_permutation("(1,2,3,4)", 4);
  CHECK(to_cycle_string(compose(a, c)) == "(2,4)");
  CHECK(compose(a, Permutation(4)) == a);
  CHECK(compose(Permutation(4), a) == a);
}

TEST_CASE("(ab)^{-1} = b^{-1} a^{-1} on random samples") {
  Rng rng(11);
  const auto group = all_elements_b(3);
  for (int s = 0; s < 25; ++s) {
    const auto& a = group[static_cast<std::size_t>(rng.integer(0, static_cast<long>(group.size()) - 1))];
    const auto& b = group[static_cast<std::size_t>(rng.integer(0, static_cast<long>(group.size()) - 1))];
    CHECK(compose(a, b).inverse() == compose(b.inverse(), a.inverse()));
  }
}

TEST_CASE("word length formulas") {
  CHECK(word_length(Permutation(5)) == 0);
  CHECK(word_length(SignedPermutation(4)) == 0);
  const auto t = parse_permutation("(1,3,4)(2,6)(5)", 6);
  CHECK(word_length(t) == 3);
  const auto tau = parse_signed_permutation("(1,-1)(2,-2)", 2);
  CHECK(word_length(tau) == 2);
  CHECK(word_length(omega_b(3)) == 3);
  CHECK(word_length(gamma_b(3)) == 2);
  CHECK(word_length(long_cycle_a(5)) == 4);
}

TEST_CASE("order examples") {
  const auto group3 = all_elements_b(3);
  for (const auto& b : group3) CHECK(leq(SignedPermutation(3), b));
  // gamma <= omega via omega = gamma (n,-n)
  const auto g = gamma_b(2);
  const auto om = omega_b(2);
  CHECK(leq(g, om));
  CHECK(compose(g, parse_signed_permutation("(2,-2)", 2)) == om);
  // a <= b implies |a| <= |b|
  Rng rng(5);
  for (int s = 0; s < 40; ++s) {
    const auto& a = group3[static_cast<std::size_t>(rng.integer(0, 47))];
    const auto& b = group3[static_cast<std::size_t>(rng.integer(0, 47))];
    if (leq(a, b)) CHECK(word_length(a) <= word_length(b));
  }
  CHECK_THROWS_AS(leq(Permutation(3), Permutation(4)), std::domain_error);
}

TEST_CASE("length axioms on random samples in S_5 and W_3") {
  Rng rng(19);
  const auto s5 = all_elements_a(5);
  for (int s = 0; s < 30; ++s) {
    const auto& a = s5[static_cast<std::size_t>(rng.integer(0, 119))];
    const auto& b = s5[static_cast<std::size_t>(rng.integer(0, 119))];
    CHECK(word_length(compose(a, b)) <= word_length(a) + word_length(b));
    CHECK(word_length(a.inverse()) == word_length(a));
    CHECK(word_length(compose(compose(b.inverse(), a), b)) == word_length(a));
  }
  const auto w3 = all_elements_b(3);
  for (int s = 0; s < 30; ++s) {
    const auto& a = w3[static_cast<std::size_t>(rng.integer(0, 47))];
    const auto& b = w3[static_cast<std::size_t>(rng.integer(0, 47))];
    CHECK(word_length(compose(a, b)) <= word_length(a) + word_length(b));
    CHECK(word_length(a.inverse()) == word_length(a));
    CHECK(word_length(compose(compose(b.inverse(), a), b)) == word_length(a));
  }
}

TEST_CASE("covers: generators cover the identity; case (d) structurally") {
  for (const auto& r : transpositions(4)) CHECK(covers(Permutation(4), r));
  for (const auto& r : reflections(3)) CHECK(covers(SignedPermutation(3), r));
  // case (d): a has the non-invariant orbit {1,-2}; multiplying by
  // (1,2)(-1,-2) replaces {1,-2}, {-1,2} by the invariant {1,-1}, {2,-2}
  const auto a = parse_signed_permutation("(1,-2)(-1,2)", 2);
  const auto rho = parse_signed_permutation("(1,2)(-1,-2)", 2);
  const auto b = compose(a, rho);
  CHECK(b == parse_signed_permutation("(1,-1)(2,-2)", 2));
  CHECK(covers(a, b));
  CHECK(word_length(b) == word_length(a) + 1);
  // non-example: rho applied to the identity twice over the same orbit
  CHECK_FALSE(covers(a, a));
}

TEST_CASE("cover characterizations agree exhaustively in W_2") {
  const auto group = all_elements_b(2);
  for (const auto& a : group) {
    for (const auto& b : group) {
      CHECK(covers(a, b) == (leq(a, b) && word_length(b) == word_length(a) + 1));
    }
  }
}

TEST_CASE("intervals by BFS match the whole-group filter for n <= 3") {
  for (const auto& b : all_elements_a(3)) {
    std::set<Permutation> expected;
    for (const auto& x : all_elements_a(3)) {
      if (leq(x, b)) expected.insert(x);
    }
    const auto got = interval(b);
    CHECK(std::set<Permutation>(got.begin(), got.end()) == expected);
    CHECK(got.size() == expected.size());
  }
  for (const auto& b : all_elements_b(2)) {
    std::set<SignedPermutation> expected;
    for (const auto& x : all_elements_b(2)) {
      if (leq(x, b)) expected.insert(x);
    }
    const auto got = interval(b);
    CHECK(std::set<SignedPermutation>(got.begin(), got.end()) == expected);
  }
  CHECK(interval(Permutation(4)).size() == 1);
  CHECK(interval(long_cycle_a(4)).size() == 14);
  CHECK(interval(omega_b(2)).size() == 6);
}

TEST_CASE("orbit censuses") {
  const auto id_census = orbit_census(Permutation(5));
  CHECK(id_census.k == std::vector<int>{5, 0, 0, 0, 0});
  const auto om = orbit_census(omega_b(2));
  CHECK(om.k == std::vector<int>{0, 0});
  CHECK(om.l == std::vector<int>{0, 1});
  const auto tau = orbit_census(parse_signed_permutation("(1,-1)(2,-2)", 2));
  CHECK(tau.k == std::vector<int>{0, 0});
  CHECK(tau.l == std::vector<int>{2, 0});
  // census masses add up to the ground set
  for (const auto& t : all_elements_b(3)) {
    const auto cen = orbit_census(t);
    int mass = 0;
    for (int m = 1; m <= 3; ++m) mass += m * (2 * cen.k[m - 1] + 2 * cen.l[m - 1]);
    CHECK(mass == 6);
  }
}

TEST_CASE("type B cycle factorization") {
  CHECK_THROWS_AS(cycle_factorization_b(SignedPermutation(3)), std::domain_error);
  const auto single = cycle_factorization_b(omega_b(3));
  CHECK(single.factors.size() == 1);
  CHECK(single.factors[0] == omega_b(3));

  const auto tau = parse_signed_permutation("(1,-1)(2,-2)", 2);
  const auto fact = cycle_factorization_b(tau);
  REQUIRE(fact.factors.size() == 2);
  CHECK(fact.factors[0] == parse_signed_permutation("(1,-1)", 2));
  CHECK(fact.factors[1] == parse_signed_permutation("(2,-2)", 2));
  CHECK(word_length(fact.factors[0]) + word_length(fact.factors[1]) == word_length(tau));

  for (const auto& sigma : interval(omega_b(3))) {
    if (sigma.is_identity()) continue;
    const auto f = cycle_factorization_b(sigma);
    int total = 0;
    SignedPermutation prod(3);
    for (const auto& fj : f.factors) {
      total += word_length(fj);
      prod = compose(prod, fj);
    }
    CHECK(total == word_length(sigma));
    CHECK(prod == sigma);
  }
}

TEST_CASE("interval factorization kinds and counts") {
  const auto whole = interval_factorize(omega_b(3));
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].kind == FactorKind::B);
  CHECK(whole[0].lattice_order == 3);

  const auto ga = interval_factorize(gamma_b(3));
  REQUIRE(ga.size() == 1);
  CHECK(ga[0].kind == FactorKind::A);
  CHECK(ga[0].lattice_order == 3);

  CHECK_THROWS_AS(interval_factorize(SignedPermutation(3)), std::domain_error);
  CHECK_THROWS_AS(interval_factorize(parse_signed_permutation("(1,-1)(2,-2)", 2)),
                  std::domain_error);  // not below omega
}

TEST_CASE("restricted convolution basics") {
  Rng rng(3);
  GroupFunction<Permutation> u(3), v(3);
  for (const auto& t : all_elements_a(3)) {
    u.set(t, rng.rational());
    v.set(t, rng.rational());
  }
  const auto uv = restricted_convolution(u, v);
  const Permutation e(3);
  CHECK(uv.at(e) == u.at(e) * v.at(e));
  for (const auto& r : transpositions(3)) {
    CHECK(uv.at(r) == u.at(e) * v.at(r) + u.at(r) * v.at(e));
  }
  const auto u_again = restricted_convolution(u, chi_e<Permutation>(3));
  for (const auto& t : all_elements_a(3)) CHECK(u_again.at(t) == u.at(t));
  GroupFunction<Permutation> wrong(4);
  CHECK_THROWS_AS(restricted_convolution_at(u, wrong, e), std::domain_error);
}

TEST_CASE("cycle notation parses and prints consistently") {
  CHECK(to_cycle_string(Permutation(4)) == "()");
  CHECK(parse_permutation("()", 4) == Permutation(4));
  CHECK(parse_permutation(" (1, 3 ,4) (2,6) ", 6) == parse_permutation("(1,3,4)(2,6)", 6));
  for (const auto& t : all_elements_b(2)) {
    CHECK(parse_signed_permutation(to_cycle_string(t), 2) == t);
  }
  CHECK_THROWS_AS(parse_signed_permutation("(1,2)", 2), std::invalid_argument);  // breaks symmetry
  CHECK_THROWS_AS(parse_permutation("(1,1)", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("(1,5)", 4), std::invalid_argument);
  CHECK(permutation_from_json(to_json_string(parse_permutation("(1,3,4)(2,6)", 6))) ==
        parse_permutation("(1,3,4)(2,6)", 6));
  const auto tau = parse_signed_permutation("(1,2,-1,-2)", 2);
  CHECK(signed_permutation_from_json(to_json_string(tau)) == tau);
}
