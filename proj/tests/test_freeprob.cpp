#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncb/formal_space.hpp"
#include "ncb/freeprob.hpp"
#include "ncb/matrix_space.hpp"

using namespace ncb;

namespace {

SeriesB rand_b(Rng& rng, int order) {
  SeriesB f(order);
  for (int k = 1; k <= order; ++k) f.set_coeff(k, DualScalar(rng.rational(), rng.rational()));
  return f;
}

FormalSpaceB random_table_space(Rng& rng, int pairs, int bound) {
  FormalSpaceB proto =
      FormalSpaceB::from_cumulants(std::vector<SeriesB>(static_cast<std::size_t>(pairs), SeriesB(1)));
  std::map<FormalSpaceB::Word, Rational> phi_table;
  std::map<FormalSpaceB::VWord, Rational> f_table;
  for (const auto& w : proto.words_up_to(bound)) phi_table.emplace(w, rng.rational());
  for (const auto& vw : proto.vwords_up_to(bound)) f_table.emplace(vw, rng.rational());
  return FormalSpaceB::from_moment_tables(pairs, bound, std::move(phi_table), std::move(f_table));
}

}  // namespace

TEST_CASE("matrix space moments and the sign example") {
  MatrixSpaceA space(2);
  const auto d = space.diagonal({Rational(1), Rational(-1)});
  CHECK(space.phi(d) == 0);
  CHECK(space.phi(space.mul(d, d)) == 1);
  CHECK(cumulant_a(space, {d}) == 0);
  CHECK(cumulant_a(space, {d, d}) == 1);
  CHECK(cumulant_a(space, {d, d, d}) == 0);
  CHECK(cumulant_a(space, {d, d, d, d}) == -1);
  CHECK_THROWS_AS(cumulant_a(space, {}), std::domain_error);
}

TEST_CASE("linking algebra product") {
  Rng rng(3);
  FormalSpaceB space = random_table_space(rng, 2, 4);
  const auto [a1, x1] = space.pair(0);
  const auto [a2, x2] = space.pair(1);
  const auto single = linking_product(space, {{a1, x1}});
  CHECK(single.first == a1);
  CHECK(single.second == x1);
  const auto unit_act = linking_product(space, {{space.unit(), space.zero_vector()}, {a1, x1}});
  CHECK(unit_act.first == a1);
  CHECK(unit_act.second == x1);
  const auto two = linking_product(space, {{a1, x1}, {a2, x2}});
  CHECK(two.first == space.mul(a1, a2));
  CHECK(two.second == space.vadd(space.act_left(a1, x2), space.act_right(x1, a2)));
}

TEST_CASE("kappa^(B) low orders on random moment tables") {
  Rng rng(5);
  FormalSpaceB space = random_table_space(rng, 2, 5);
  const auto [a1, x1] = space.pair(0);
  const auto [a2, x2] = space.pair(1);
  const DualScalar k1 = cumulant_b(space, {{a1, x1}});
  CHECK(k1 == DualScalar(space.phi(a1), space.f(x1)));
  const DualScalar k2 = cumulant_b(space, {{a1, x1}, {a2, x2}});
  CHECK(k2.prime == space.phi(space.mul(a1, a2)) - space.phi(a1) * space.phi(a2));
  CHECK(k2.double_prime == space.f(space.act_left(a1, x2)) - space.phi(a1) * space.f(x2) +
                               space.f(space.act_right(x1, a2)) - space.f(x1) * space.phi(a2));
  // Theorem 6.4 on a handful of tuples
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::pair<FormalSpaceB::Element, FormalSpaceB::Vector>> pairs;
    for (int i = 0; i < n; ++i) pairs.push_back(space.pair(static_cast<int>(rng.integer(0, 1))));
    CHECK(cumulant_b(space, pairs) == cumulant_b_componentwise(space, pairs));
  }
}

TEST_CASE("vanishing with a scalar argument") {
  Rng rng(9);
  FormalSpaceB space = random_table_space(rng, 2, 4);
  const auto one = space.unit();
  const auto g = space.generator(0);
  const auto xi = space.vector_generator(1);
  CHECK(cumulant_a(space, {g, space.scale(Rational(7, 2), one)}) == 0);
  CHECK(cumulant_a_prime(space, {space.scale(Rational(2), one)}, xi, 2) == 0);
  CHECK(cumulant_a_prime(space, {space.scale(Rational(2), one), g}, xi, 2) == 0);
}

TEST_CASE("moment tables are total and bounded") {
  Rng rng(1);
  FormalSpaceB space = random_table_space(rng, 2, 3);
  CHECK(space.degree_bound() == 3);
  CHECK_THROWS_AS(space.word_moment({0, 1, 0, 1}), std::domain_error);  // beyond the bound
  std::map<FormalSpaceB::Word, Rational> phi_table{{FormalSpaceB::Word{0}, Rational(1)}};
  CHECK_THROWS_AS(FormalSpaceB::from_moment_tables(1, 2, phi_table, {}), std::invalid_argument);
  CHECK_THROWS_AS(space.set_word_moment({0, 0, 0, 0, 0}, Rational(1)), std::domain_error);
}

TEST_CASE("cumulant-generated space recovers its prescription") {
  Rng rng(12);
  const SeriesB presc = rand_b(rng, 5);
  const FormalSpaceB space = FormalSpaceB::from_cumulants({presc});
  CHECK(space.cumulant_mode());
  CHECK(r_transform_b(space, space.pair(0), 5) == presc);
  CHECK(moment_series_b(space, space.pair(0), 5) ==
        boxconv_b(presc, zeta_b(5)));
  // materialized copy has identical moments
  const FormalSpaceB table = space.materialized(4);
  for (const auto& w : table.words_up_to(4)) CHECK(table.word_moment(w) == space.word_moment(w));
  for (const auto& vw : table.vwords_up_to(4)) CHECK(table.vword_moment(vw) == space.vword_moment(vw));
}

TEST_CASE("free pairs: construction, checks, sum and product") {
  Rng rng(21);
  const SeriesB r1 = rand_b(rng, 4);
  const SeriesB r2 = rand_b(rng, 4);
  const FormalSpaceB space = make_free_pair(r1, r2, 4);
  const FreenessReport cert = mixed_cumulant_check(space, 4);
  CHECK(cert.pass);
  CHECK(free_independence_moment_check(space, 4).pass);

  const auto [r_sum, r_prod] = r_sum_product(space, cert, 4);
  CHECK(r_sum == r1 + r2);
  CHECK(r_prod == boxconv_b(r1, r2));

  // certificate is consumed, not assumed
  FreenessReport stale = cert;
  stale.depth = 2;
  CHECK_THROWS_AS(r_sum_product(space, stale, 4), std::domain_error);
  FreenessReport failed = cert;
  failed.pass = false;
  CHECK_THROWS_AS(r_sum_product(space, failed, 4), std::domain_error);
  CHECK_THROWS_AS(make_free_pair(r1, SeriesB(3), 3), std::domain_error);
  CHECK_THROWS_AS(make_free_pair(r1, r2, 6), std::domain_error);
}

TEST_CASE("perturbed spaces fail both checks with a witness") {
  Rng rng(30);
  FormalSpaceB bad = make_free_pair(rand_b(rng, 3), rand_b(rng, 3), 3).materialized(3);
  bad.set_vword_moment({{0}, 1, {}}, bad.vword_moment({{0}, 1, {}}) + 1);
  const FreenessReport mc = mixed_cumulant_check(bad, 3);
  CHECK_FALSE(mc.pass);
  CHECK_FALSE(mc.witness.empty());
  const FreenessReport fm = free_independence_moment_check(bad, 3);
  CHECK_FALSE(fm.pass);
  CHECK_FALSE(fm.witness.empty());
}

TEST_CASE("moment series against direct powers") {
  Rng rng(17);
  FormalSpaceB space = random_table_space(rng, 1, 6);
  const auto couple = space.pair(0);
  const SeriesB m = moment_series_b(space, couple, 3);
  // expand (a,xi)^3 by hand through the linking product
  const auto cube = linking_product(space, {couple, couple, couple});
  CHECK(m.coeff(3) == DualScalar(space.phi(cube.first), space.f(cube.second)));
  CHECK(m.coeff(1) == DualScalar(space.phi(couple.first), space.f(couple.second)));
}
