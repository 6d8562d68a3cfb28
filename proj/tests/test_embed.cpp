#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncb/embed.hpp"

#include <set>

using namespace ncb;

TEST_CASE("distinguished elements") {
  CHECK(to_cycle_string(long_cycle_a(4)) == "(1,2,3,4)");
  CHECK(to_cycle_string(omega_b(2)) == "(1,2,-1,-2)");
  CHECK(to_cycle_string(gamma_b(2)) == "(1,2)(-1,-2)");
  for (int n = 1; n <= 5; ++n) {
    CHECK(word_length(long_cycle_a(n)) == n - 1);
    CHECK(word_length(omega_b(n)) == n);
    CHECK(leq(gamma_b(n), omega_b(n)));
  }
}

TEST_CASE("iota on blocks") {
  CHECK(iota_a(NCPartitionA::discrete(4)).is_identity());
  CHECK(iota_a(NCPartitionA::full(4)) == long_cycle_a(4));
  CHECK(iota_a(parse_nca("{(1,2),(3,4)}")) == parse_permutation("(1,2)(3,4)", 4));
  CHECK(iota_b(NCPartitionB::discrete(3)).is_identity());
  CHECK(iota_b(NCPartitionB::full(3)) == omega_b(3));
  CHECK(iota_b(parse_ncb("{(1,2,-1,-2),(3,4),(-3,-4)}")) ==
        parse_signed_permutation("(1,2,-1,-2)(3,4)(-3,-4)", 4));
}

TEST_CASE("Kreweras via the group: iota(Kr(p)) = iota(p)^{-1} c") {
  const auto p = parse_nca("{(1,2),(3,4)}");
  CHECK(iota_a(kreweras(p)) == compose(iota_a(p).inverse(), long_cycle_a(4)));
  CHECK(iota_a(kreweras(p)) == parse_permutation("(2,4)", 4));
  for (const auto& q : enumerate_nca(4)) {
    CHECK(iota_a(kreweras(q)) == compose(iota_a(q).inverse(), long_cycle_a(4)));
    CHECK(iota_a(kreweras(q, KrewerasSide::Left)) == compose(long_cycle_a(4), iota_a(q).inverse()));
  }
}

TEST_CASE("length identity |iota(pi)| + |iota(Kr(pi))| = n over NC^(B)(3)") {
  for (const auto& pi : enumerate_ncb(3)) {
    const auto t = iota_b(pi);
    const auto tk = iota_b(kreweras(pi));
    CHECK(compose(t, tk) == omega_b(3));
    CHECK(word_length(t) + word_length(tk) == 3);
  }
}

TEST_CASE("round trips and interval validation") {
  CHECK(iota_inverse(Permutation(4)) == NCPartitionA::discrete(4));
  CHECK(iota_inverse(long_cycle_a(4)) == NCPartitionA::full(4));
  for (const auto& pi : enumerate_ncb(4)) CHECK(iota_inverse(iota_b(pi)) == pi);
  for (const auto& p : enumerate_nca(5)) CHECK(iota_inverse(iota_a(p)) == p);
  // the reversed long cycle has full length but differs from c, so it sits
  // outside [e, c]
  CHECK_THROWS_AS(iota_inverse(parse_permutation("(1,3,2)", 3)), std::domain_error);
  CHECK_THROWS_AS(iota_inverse(parse_signed_permutation("(1,-1)(2,-2)", 2)), std::domain_error);
}

TEST_CASE("iota_gamma maps onto [eps,gamma]") {
  CHECK(iota_gamma(NCPartitionA::full(3)) == gamma_b(3));
  CHECK(iota_gamma(NCPartitionA::discrete(3)).is_identity());
  std::set<SignedPermutation> image;
  for (const auto& p : enumerate_nca(3)) image.insert(iota_gamma(p));
  const auto box = interval(gamma_b(3));
  CHECK(image == std::set<SignedPermutation>(box.begin(), box.end()));
  CHECK(image.size() == 5);  // Catalan(3)
  CHECK(doubled(parse_nca("{(1,2),(3)}")) == parse_ncb("{(1,2),(3),(-1,-2),(-3)}"));
}
