#include "ncb/verify.hpp"

#include "ncb/cayley.hpp"
#include "ncb/embed.hpp"
#include "ncb/formal_space.hpp"
#include "ncb/freeprob.hpp"
#include "ncb/matrix_space.hpp"
#include "ncb/partition.hpp"
#include "ncb/series.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

namespace ncb {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

mpz_class catalan(unsigned long n) { return binom(2 * n, n) / (n + 1); }

SeriesA random_series_a(Rng& rng, int order) {
  SeriesA f(order);
  for (int k = 1; k <= order; ++k) f.set_coeff(k, rng.rational());
  return f;
}

SeriesB random_series_b(Rng& rng, int order, bool invertible_lead = false) {
  SeriesB f(order);
  for (int k = 1; k <= order; ++k) f.set_coeff(k, DualScalar(rng.rational(), rng.rational()));
  if (invertible_lead) f.set_coeff(1, DualScalar(rng.nonzero_rational(), rng.rational()));
  return f;
}

FormalSpaceB random_moment_space(Rng& rng, int pairs, int bound) {
  FormalSpaceB proto = FormalSpaceB::from_cumulants(
      std::vector<SeriesB>(static_cast<std::size_t>(pairs), SeriesB(1)));
  std::map<FormalSpaceB::Word, Rational> phi_table;
  std::map<FormalSpaceB::VWord, Rational> f_table;
  for (const auto& w : proto.words_up_to(bound)) phi_table.emplace(w, rng.rational());
  for (const auto& vw : proto.vwords_up_to(bound)) f_table.emplace(vw, rng.rational());
  return FormalSpaceB::from_moment_tables(pairs, bound, std::move(phi_table), std::move(f_table));
}

// Crossing test for a family of blocks given by positions on a line:
// two blocks cross iff their merged position sequence alternates >= 3 times.
bool family_noncrossing(const std::vector<std::vector<int>>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      std::vector<std::pair<int, int>> merged;
      for (int x : blocks[i]) merged.emplace_back(x, 0);
      for (int x : blocks[j]) merged.emplace_back(x, 1);
      std::sort(merged.begin(), merged.end());
      int switches = 0;
      for (std::size_t k = 1; k < merged.size(); ++k) {
        if (merged[k].second != merged[k - 1].second) ++switches;
      }
      if (switches >= 3) return false;
    }
  }
  return true;
}

// p on the ground copies and q on the complement copies of the interleaved
// order J (Right: ground before complement at each index) or J' (Left).
template <class P>
bool union_noncrossing(const P& p, const P& q, KrewerasSide side) {
  GroundOrder order(std::is_same_v<P, NCPartitionA> ? GroundOrder::Kind::A : GroundOrder::Kind::B,
                    p.n());
  std::vector<std::vector<int>> fam;
  const int off_ground = side == KrewerasSide::Right ? 0 : 1;
  const int off_comp = side == KrewerasSide::Right ? 1 : 0;
  for (const Block& b : p.blocks()) {
    std::vector<int> positions;
    for (int x : b) positions.push_back(2 * order.rank(x) + off_ground);
    fam.push_back(std::move(positions));
  }
  for (const Block& b : q.blocks()) {
    std::vector<int> positions;
    for (int x : b) positions.push_back(2 * order.rank(x) + off_comp);
    fam.push_back(std::move(positions));
  }
  return family_noncrossing(fam);
}

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& msg) {
    if (ok) {
      ok = false;
      detail = msg;
    }
  }
  void expect(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
  }
};

using Clock = std::chrono::steady_clock;

VerificationReport finish(const std::string& id, const std::string& params, const Check& c,
                          const std::string& summary, Clock::time_point start) {
  VerificationReport rep;
  rep.property = id;
  rep.params = params;
  rep.pass = c.ok;
  rep.detail = c.ok ? summary : c.detail;
  rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

// ---------------------------------------------------------------------------
// property implementations
// ---------------------------------------------------------------------------

VerificationReport verify_cardinalities(const VerifyParams& params) {
  const auto start = Clock::now();
  const int na = params.n > 0 ? params.n : 10;
  const int nb = std::min(na, 8);
  Check c;
  for (int n = 1; n <= na && c.ok; ++n) {
    long count = 0;
    for_each_nca(n, [&](const NCPartitionA&) { ++count; });
    c.expect(mpz_class(count) == catalan(static_cast<unsigned long>(n)),
             "card NC^(A)(" + std::to_string(n) + ") = " + std::to_string(count));
  }
  for (int n = 1; n <= nb && c.ok; ++n) {
    long count = 0;
    for_each_ncb(n, [&](const NCPartitionB&) { ++count; });
    c.expect(mpz_class(count) == binom(2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n)),
             "card NC^(B)(" + std::to_string(n) + ") = " + std::to_string(count));
  }
  return finish("cardinalities", "nA=" + std::to_string(na) + " nB=" + std::to_string(nb), c,
                "Catalan and central binomial counts match", start);
}

VerificationReport verify_abs_cover(const VerifyParams& params) {
  const auto start = Clock::now();
  const int max_n = params.n > 0 ? params.n : 6;
  Check c;
  for (int n = 1; n <= max_n && c.ok; ++n) {
    std::set<NCPartitionB> all;
    for_each_nca(n, [&](const NCPartitionA& p) {
      if (!c.ok) return;
      const auto fiber = abs_fiber(p);
      c.expect(static_cast<int>(fiber.size()) == n + 1,
               "fiber of " + to_string(p) + " has size " + std::to_string(fiber.size()));
      for (const NCPartitionB& pi : fiber) {
        c.expect(abs_map(pi) == p, "abs_map mismatch in fiber of " + to_string(p));
        c.expect(all.insert(pi).second, "fibers overlap at " + to_string(pi));
      }
    });
    c.expect(mpz_class(static_cast<long>(all.size())) ==
                 binom(2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n)),
             "fibers do not cover NC^(B)(" + std::to_string(n) + ")");
  }
  return finish("abs-cover", "n<=" + std::to_string(max_n), c,
                "Abs is an (n+1)-to-1 cover and fibers partition NC^(B)(n)", start);
}

VerificationReport verify_kreweras(const VerifyParams& params) {
  const auto start = Clock::now();
  const int max_n = params.n > 0 ? params.n : 5;
  Check c;
  for (int n = 1; n <= max_n && c.ok; ++n) {
    const auto& all = nca_cache(n);
    for (const NCPartitionA& p : all) {
      const NCPartitionA kr = kreweras(p);
      c.expect(kreweras(kr, KrewerasSide::Left) == p, "Kr'(Kr(p)) != p at " + to_string(p));
      c.expect(kreweras(kreweras(p, KrewerasSide::Left)) == p, "Kr(Kr'(p)) != p at " + to_string(p));
      c.expect(p.block_count() + kr.block_count() == n + 1,
               "blno(p) + blno(Kr(p)) != n+1 at " + to_string(p));
      if (!c.ok) break;
    }
    // order reversal
    for (const NCPartitionA& p : all) {
      for (const NCPartitionA& q : all) {
        if (refinement_leq(p, q) != refinement_leq(kreweras(q), kreweras(p))) {
          c.fail("Kr not order reversing at " + to_string(p) + ", " + to_string(q));
        }
      }
      if (!c.ok) break;
    }
    // maximality (the defining property) for small n
    if (c.ok && n <= 5) {
      for (const NCPartitionA& p : all) {
        const NCPartitionA kr = kreweras(p);
        c.expect(union_noncrossing(p, kr, KrewerasSide::Right), "p ∪ Kr(p) crosses at " + to_string(p));
        for (const NCPartitionA& q : all) {
          if (union_noncrossing(p, q, KrewerasSide::Right) && !refinement_leq(q, kr)) {
            c.fail("Kr(p) is not maximal at " + to_string(p) + " (q = " + to_string(q) + ")");
          }
        }
        const NCPartitionA krl = kreweras(p, KrewerasSide::Left);
        c.expect(union_noncrossing(p, krl, KrewerasSide::Left), "p ∪ Kr'(p) crosses at " + to_string(p));
        for (const NCPartitionA& q : all) {
          if (union_noncrossing(p, q, KrewerasSide::Left) && !refinement_leq(q, krl)) {
            c.fail("Kr'(p) is not maximal at " + to_string(p));
          }
        }
        if (!c.ok) break;
      }
    }
  }
  for (int n = 1; n <= max_n && c.ok; ++n) {
    for_each_ncb(n, [&](const NCPartitionB& pi) {
      if (!c.ok) return;
      const NCPartitionB kr = kreweras(pi);
      c.expect(kreweras(kr, KrewerasSide::Left) == pi, "type B Kr'(Kr(pi)) != pi at " + to_string(pi));
      c.expect(pi.block_count() + kr.block_count() == 2 * n + 1,
               "blno identity (1.4) fails at " + to_string(pi));
      c.expect(pi.zero_block().has_value() != kr.zero_block().has_value(),
               "zero-block XOR fails at " + to_string(pi));
      c.expect(kreweras(abs_map(pi)) == abs_map(kr), "Kr∘Abs != Abs∘Kr at " + to_string(pi));
    });
  }
  // type B order reversal on the n = 4 lattice (70 elements)
  if (c.ok) {
    const auto all = enumerate_ncb(std::min(max_n, 4));
    std::vector<NCPartitionB> complements;
    complements.reserve(all.size());
    for (const auto& pi : all) complements.push_back(kreweras(pi));
    for (std::size_t i = 0; i < all.size() && c.ok; ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (refinement_leq(all[i], all[j]) != refinement_leq(complements[j], complements[i])) {
          c.fail("type B Kr not order reversing at " + to_string(all[i]) + ", " + to_string(all[j]));
          break;
        }
      }
    }
  }
  return finish("kreweras", "n<=" + std::to_string(max_n), c,
                "complement identities, block counts, order reversal, Abs compatibility", start);
}

VerificationReport verify_lattice_ops(const VerifyParams& params) {
  const auto start = Clock::now();
  const int max_n = params.n > 0 ? params.n : 5;
  Check c;
  for (int n = 1; n <= max_n && c.ok; ++n) {
    const auto& all = nca_cache(n);
    for (const NCPartitionA& p : all) {
      c.expect(meet(p, NCPartitionA::full(n)) == p, "meet unit law fails");
      c.expect(join(p, NCPartitionA::discrete(n)) == p, "join unit law fails");
    }
    for (std::size_t i = 0; i < all.size() && c.ok; ++i) {
      for (std::size_t j = i; j < all.size() && c.ok; ++j) {
        const NCPartitionA& p = all[i];
        const NCPartitionA& q = all[j];
        const NCPartitionA m = meet(p, q);
        const NCPartitionA jn = join(p, q);
        for (const NCPartitionA& r : all) {
          const bool below = refinement_leq(r, p) && refinement_leq(r, q);
          if (below && !refinement_leq(r, m)) c.fail("meet not maximal lower bound");
          const bool above = refinement_leq(p, r) && refinement_leq(q, r);
          if (above && !refinement_leq(jn, r)) c.fail("join not minimal upper bound");
          if (!c.ok) break;
        }
        c.expect(refinement_leq(m, p) && refinement_leq(m, q), "meet not a lower bound");
        c.expect(refinement_leq(p, jn) && refinement_leq(q, jn), "join not an upper bound");
      }
    }
  }
  // type B closure under meet/join on a midsize case
  if (c.ok) {
    const auto allb = enumerate_ncb(std::min(max_n, 3));
    for (const NCPartitionB& p : allb) {
      for (const NCPartitionB& q : allb) {
        meet(p, q);  // constructors revalidate inversion invariance
        join(p, q);
      }
    }
  }
  return finish("lattice-ops", "n<=" + std::to_string(max_n), c,
                "meet/join agree with brute-force lattice extrema", start);
}

VerificationReport verify_word_length(const VerifyParams& params) {
  const auto start = Clock::now();
  (void)params;
  Check c;

  // BFS distance oracle, exhaustive in S_4.
  {
    const auto group = all_elements_a(4);
    const auto gens = transpositions(4);
    std::map<Permutation, int> dist{{Permutation(4), 0}};
    std::vector<Permutation> frontier{Permutation(4)};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& a : frontier) {
        for (const auto& r : gens) {
          Permutation b = compose(a, r);
          if (!dist.count(b)) {
            dist[b] = dist[a] + 1;
            next.push_back(std::move(b));
          }
        }
      }
      frontier = std::move(next);
    }
    for (const auto& t : group) {
      c.expect(dist.at(t) == word_length(t),
               "S_4 length formula disagrees with BFS at " + to_cycle_string(t));
    }
    for (const auto& a : group) {
      for (const auto& b : group) {
        c.expect(word_length(compose(a, b)) <= word_length(a) + word_length(b), "S_4 subadditivity");
        c.expect(word_length(compose(compose(a.inverse(), b), a)) == word_length(b),
                 "S_4 conjugation invariance");
        if (!c.ok) break;
      }
      c.expect(word_length(a.inverse()) == word_length(a), "S_4 inverse invariance");
      if (!c.ok) break;
    }
  }

  // Same in W_3, plus the cover case analysis against length + order.
  {
    const auto group = all_elements_b(3);
    const auto gens = reflections(3);
    std::map<SignedPermutation, int> dist{{SignedPermutation(3), 0}};
    std::vector<SignedPermutation> frontier{SignedPermutation(3)};
    while (!frontier.empty()) {
      std::vector<SignedPermutation> next;
      for (const auto& a : frontier) {
        for (const auto& r : gens) {
          SignedPermutation b = compose(a, r);
          if (!dist.count(b)) {
            dist[b] = dist[a] + 1;
            next.push_back(std::move(b));
          }
        }
      }
      frontier = std::move(next);
    }
    for (const auto& t : group) {
      c.expect(dist.at(t) == word_length(t),
               "W_3 length formula disagrees with BFS at " + to_cycle_string(t));
    }
    auto invariant_orbits = [](const SignedPermutation& t) {
      int count = 0;
      for (const auto& orb : orbits(t)) {
        std::set<int> s(orb.begin(), orb.end());
        if (std::all_of(orb.begin(), orb.end(), [&](int x) { return s.count(-x); })) ++count;
      }
      return count;
    };
    for (const auto& a : group) {
      for (const auto& b : group) {
        const bool structural = covers(a, b);
        const bool by_order = leq(a, b) && word_length(b) == word_length(a) + 1;
        if (structural != by_order) {
          c.fail("cover case analysis disagrees at " + to_cycle_string(a) + " -> " +
                 to_cycle_string(b));
        }
        if (leq(a, b) && invariant_orbits(b) < invariant_orbits(a)) {
          c.fail("invariant orbit count drops along <= at " + to_cycle_string(a));
        }
        if (!c.ok) break;
      }
      if (!c.ok) break;
    }
  }

  // W_2 length axioms, exhaustive; S_4 cover agreement.
  {
    const auto group = all_elements_b(2);
    for (const auto& a : group) {
      c.expect(word_length(a.inverse()) == word_length(a), "W_2 inverse invariance");
      for (const auto& b : group) {
        c.expect(word_length(compose(a, b)) <= word_length(a) + word_length(b), "W_2 subadditivity");
        c.expect(word_length(compose(compose(a.inverse(), b), a)) == word_length(b),
                 "W_2 conjugation invariance");
      }
    }
    const auto sgroup = all_elements_a(4);
    for (const auto& a : sgroup) {
      for (const auto& b : sgroup) {
        const bool structural = covers(a, b);
        const bool by_order = leq(a, b) && word_length(b) == word_length(a) + 1;
        if (structural != by_order) c.fail("S_4 cover characterizations disagree");
        if (!c.ok) break;
      }
      if (!c.ok) break;
    }
  }

  return finish("word-length", "S_4, W_3 exhaustive", c,
                "length = BFS distance; covers match length+order; axioms hold", start);
}

VerificationReport verify_embedding(const VerifyParams& params) {
  const auto start = Clock::now();
  const int max_na = params.n > 0 ? params.n : 5;
  const int max_nb = std::min(max_na, 4);
  Check c;

  for (int n = 1; n <= max_na && c.ok; ++n) {
    const auto& all = nca_cache(n);
    const Permutation cyc = long_cycle_a(n);
    std::set<Permutation> image;
    for (const NCPartitionA& p : all) {
      const Permutation t = iota_a(p);
      image.insert(t);
      c.expect(leq(t, cyc), "iota(p) outside [e,c] at " + to_string(p));
      c.expect(iota_inverse(t) == p, "iota round trip fails at " + to_string(p));
      c.expect(compose(iota_a(p).inverse(), cyc) == iota_a(kreweras(p)),
               "Eq. iota(Kr(p)) = iota(p)^{-1} c fails at " + to_string(p));
      c.expect(compose(cyc, iota_a(p).inverse()) == iota_a(kreweras(p, KrewerasSide::Left)),
               "Eq. iota(Kr'(p)) = c iota(p)^{-1} fails at " + to_string(p));
    }
    const auto box = interval(cyc);
    c.expect(image.size() == box.size() &&
                 std::set<Permutation>(box.begin(), box.end()) == image,
             "iota(NC^(A)) != [e,c] at n=" + std::to_string(n));
    for (const NCPartitionA& p : all) {
      for (const NCPartitionA& q : all) {
        if (refinement_leq(p, q) != leq(iota_a(p), iota_a(q))) {
          c.fail("order isomorphism fails at " + to_string(p) + " vs " + to_string(q));
        }
      }
      if (!c.ok) break;
    }
  }

  for (int n = 1; n <= max_nb && c.ok; ++n) {
    const auto all = enumerate_ncb(n);
    const SignedPermutation om = omega_b(n);
    std::set<SignedPermutation> image;
    for (const NCPartitionB& pi : all) {
      const SignedPermutation t = iota_b(pi);
      image.insert(t);
      c.expect(leq(t, om), "iota(pi) outside [eps,omega] at " + to_string(pi));
      c.expect(iota_inverse(t) == pi, "type B round trip fails at " + to_string(pi));
      const SignedPermutation tk = iota_b(kreweras(pi));
      c.expect(compose(t, tk) == om, "iota(pi) iota(Kr(pi)) != omega at " + to_string(pi));
      c.expect(word_length(t) + word_length(tk) == n,
               "length identity |iota(pi)| + |iota(Kr(pi))| != n at " + to_string(pi));
    }
    const auto box = interval(om);
    c.expect(image.size() == box.size() &&
                 std::set<SignedPermutation>(box.begin(), box.end()) == image,
             "iota(NC^(B)) != [eps,omega] at n=" + std::to_string(n));
    for (const NCPartitionB& p : all) {
      for (const NCPartitionB& q : all) {
        if (refinement_leq(p, q) != leq(iota_b(p), iota_b(q))) {
          c.fail("type B order isomorphism fails at " + to_string(p) + " vs " + to_string(q));
        }
      }
      if (!c.ok) break;
    }
  }

  // gamma: [eps,gamma] ≅ NC^(A)(n) through iota_gamma.
  for (int n = 1; n <= max_nb && c.ok; ++n) {
    const auto& all = nca_cache(n);
    const SignedPermutation g = gamma_b(n);
    c.expect(leq(g, omega_b(n)), "gamma not below omega");
    std::set<SignedPermutation> image;
    for (const NCPartitionA& p : all) image.insert(iota_gamma(p));
    const auto box = interval(g);
    c.expect(image.size() == box.size() &&
                 std::set<SignedPermutation>(box.begin(), box.end()) == image,
             "iota_gamma(NC^(A)) != [eps,gamma] at n=" + std::to_string(n));
    for (const NCPartitionA& p : all) {
      for (const NCPartitionA& q : all) {
        if (refinement_leq(p, q) != leq(iota_gamma(p), iota_gamma(q))) {
          c.fail("iota_gamma order isomorphism fails");
        }
      }
      if (!c.ok) break;
    }
    c.expect(iota_gamma(NCPartitionA::full(n)) == g, "iota_gamma(1_n) != gamma");
    c.expect(iota_gamma(NCPartitionA::discrete(n)).is_identity(), "iota_gamma(0_n) != eps");
  }

  return finish("embedding",
                "nA<=" + std::to_string(max_na) + " nB<=" + std::to_string(max_nb), c,
                "iota is an order isomorphism onto [e,c], [eps,omega], [eps,gamma]", start);
}

VerificationReport verify_interval_factorization(const VerifyParams& params) {
  const auto start = Clock::now();
  const int nb = params.n > 0 ? params.n : 4;
  Check c;

  // Type A, Eq. [e,b] ≅ prod NC^(A)(card F_j) inside [e,c] of S_5.
  {
    const int n = std::min(nb + 1, 5);
    for (const Permutation& b : interval(long_cycle_a(n))) {
      if (b.is_identity()) continue;
      mpz_class predicted(1);
      for (const auto& orb : orbits(b)) {
        if (orb.size() >= 2) predicted *= catalan(orb.size());
      }
      c.expect(mpz_class(static_cast<long>(interval(b).size())) == predicted,
               "S interval cardinality mismatch at " + to_cycle_string(b));
      // orbit containment along <=
      for (const Permutation& a : interval(b)) {
        std::vector<int> owner(static_cast<std::size_t>(n), -1);
        int id = 0;
        for (const auto& orb : orbits(b)) {
          for (int x : orb) owner[static_cast<std::size_t>(x - 1)] = id;
          ++id;
        }
        for (const auto& orb : orbits(a)) {
          for (int x : orb) {
            if (owner[static_cast<std::size_t>(x - 1)] != owner[static_cast<std::size_t>(orb[0] - 1)]) {
              c.fail("orbit of a not inside an orbit of b in S_" + std::to_string(n));
            }
          }
        }
        if (!c.ok) break;
      }
      if (!c.ok) break;
    }
  }

  // Type B on [eps, omega] of W_nb.
  const SignedPermutation om = omega_b(nb);
  const auto box = interval(om);
  for (const SignedPermutation& tau : box) {
    if (tau.is_identity()) continue;

    int invariant = 0;
    for (const auto& orb : orbits(tau)) {
      std::set<int> s(orb.begin(), orb.end());
      if (std::all_of(orb.begin(), orb.end(), [&](int x) { return s.count(-x); })) ++invariant;
    }
    c.expect(invariant <= 1, "element of [eps,omega] with two invariant orbits");

    const auto factors = interval_factorize(tau);
    mpz_class predicted(1);
    for (const auto& f : factors) {
      predicted *= f.kind == FactorKind::A
                       ? catalan(static_cast<unsigned long>(f.lattice_order))
                       : binom(2 * static_cast<unsigned long>(f.lattice_order),
                               static_cast<unsigned long>(f.lattice_order));
    }
    const auto sub = interval(tau);
    c.expect(mpz_class(static_cast<long>(sub.size())) == predicted,
             "interval cardinality != factor product at " + to_cycle_string(tau));

    // factorization: restriction to the supports reconstructs each sigma,
    // lands in [eps, tau_j], and lengths add
    const auto fact = cycle_factorization_b(tau);
    int total_len = 0;
    for (const auto& tj : fact.factors) total_len += word_length(tj);
    c.expect(total_len == word_length(tau), "factor lengths do not add at " + to_cycle_string(tau));

    for (const SignedPermutation& sigma : sub) {
      SignedPermutation product(nb);
      int len_sum = 0;
      for (std::size_t j = 0; j < fact.factors.size(); ++j) {
        std::set<int> support(fact.supports[j].begin(), fact.supports[j].end());
        std::vector<int> img(static_cast<std::size_t>(nb));
        for (int i = 1; i <= nb; ++i) img[i - 1] = support.count(i) ? sigma(i) : i;
        SignedPermutation sj(nb, std::move(img));
        c.expect(leq(sj, fact.factors[j]), "restriction not below its factor");
        len_sum += word_length(sj);
        product = compose(product, sj);
      }
      // moved points of sigma outside all supports would break the product
      c.expect(product == sigma, "per-support factors do not reconstruct sigma");
      c.expect(len_sum == word_length(sigma), "restriction lengths do not add");
      if (!c.ok) break;
    }
    if (!c.ok) break;
  }
  return finish("interval-factorization", "W_" + std::to_string(nb) + ", S_5", c,
                "intervals factor as products of NC lattices with matching cardinalities", start);
}

VerificationReport verify_restricted_convolution(const VerifyParams& params) {
  const auto start = Clock::now();
  Rng rng(params.seed);
  Check c;

  // associativity + unit on S_3 with random sparse rational functions
  {
    const auto group = all_elements_a(3);
    auto random_fn = [&] {
      GroupFunction<Permutation> u(3);
      for (const auto& t : group) u.set(t, rng.rational());
      return u;
    };
    for (int s = 0; s < 3 && c.ok; ++s) {
      const auto u = random_fn(), v = random_fn(), w = random_fn();
      const auto uv_w = restricted_convolution(restricted_convolution(u, v), w);
      const auto u_vw = restricted_convolution(u, restricted_convolution(v, w));
      for (const auto& t : group) {
        c.expect(uv_w.at(t) == u_vw.at(t), "S_3 associativity fails");
      }
      const auto unit = chi_e<Permutation>(3);
      const auto u1 = restricted_convolution(u, unit);
      const auto u2 = restricted_convolution(unit, u);
      for (const auto& t : group) {
        c.expect(u1.at(t) == u.at(t) && u2.at(t) == u.at(t), "S_3 unit law fails");
      }
      const auto uv = restricted_convolution(u, v);
      c.expect(uv.at(Permutation(3)) == u.at(Permutation(3)) * v.at(Permutation(3)),
               "(u*v)(e) != u(e)v(e)");
      for (const auto& r : transpositions(3)) {
        c.expect(uv.at(r) == u.at(Permutation(3)) * v.at(r) + u.at(r) * v.at(Permutation(3)),
                 "(u*v)(x) != u(e)v(x) + u(x)v(e) for a generator");
      }
    }
  }
  // same on W_2
  {
    const auto group = all_elements_b(2);
    auto random_fn = [&] {
      GroupFunction<SignedPermutation> u(2);
      for (const auto& t : group) u.set(t, rng.rational());
      return u;
    };
    for (int s = 0; s < 3 && c.ok; ++s) {
      const auto u = random_fn(), v = random_fn(), w = random_fn();
      const auto uv_w = restricted_convolution(restricted_convolution(u, v), w);
      const auto u_vw = restricted_convolution(u, restricted_convolution(v, w));
      for (const auto& t : group) c.expect(uv_w.at(t) == u_vw.at(t), "W_2 associativity fails");
      const auto unit = chi_e<SignedPermutation>(2);
      const auto u1 = restricted_convolution(u, unit);
      for (const auto& t : group) c.expect(u1.at(t) == u.at(t), "W_2 unit law fails");
    }
  }
  return finish("restricted-convolution", "S_3, W_2 random functions", c,
                "restricted convolution is a unital associative product", start);
}

VerificationReport verify_bridge(const VerifyParams& params) {
  const auto start = Clock::now();
  const int max_n = params.n > 0 ? params.n : 4;
  const int samples = params.samples > 0 ? params.samples : 20;
  Rng rng(params.seed);
  Check c;

  // Type A: u_alpha *_r u_beta = u_{alpha boxconv beta} on all of S_3.
  {
    const auto group = all_elements_a(3);
    for (int s = 0; s < samples && c.ok; ++s) {
      const SeriesA alpha = random_series_a(rng, 3);
      const SeriesA beta = random_series_a(rng, 3);
      const SeriesA gamma = boxconv_a(alpha, beta);
      GroupFunction<Permutation> u(3), v(3);
      for (const auto& t : group) {
        u.set(t, u_alpha_a(alpha, t));
        v.set(t, u_alpha_a(beta, t));
      }
      for (const auto& t : group) {
        c.expect(restricted_convolution_at(u, v, t) == u_alpha_a(gamma, t),
                 "type A multiplicative bridge fails on S_3");
      }
    }
  }

  for (int n = 2; n <= max_n && c.ok; ++n) {
    for (int s = 0; s < samples && c.ok; ++s) {
      const SeriesB alpha = random_series_b(rng, n);
      const SeriesB beta = random_series_b(rng, n);
      c.expect(bridge_check_b(alpha, beta, n),
               "bridge fails at n=" + std::to_string(n) + ", sample " + std::to_string(s));
    }
  }

  // Negative control on W_2: off the interval the identity breaks, while
  // the obstruction relation u(eps) u(tau) = u(tau_1) u(tau_2) always holds.
  if (c.ok) {
    const SignedPermutation tau1 = parse_signed_permutation("(1,-1)", 2);
    const SignedPermutation tau2 = parse_signed_permutation("(2,-2)", 2);
    const SignedPermutation tau = compose(tau1, tau2);
    c.expect(!leq(tau, omega_b(2)), "negative control element unexpectedly inside [eps,omega]");
    bool violated = false;
    for (int s = 0; s < std::max(samples, 20); ++s) {
      const SeriesB alpha = random_series_b(rng, 2);
      const SeriesB beta = random_series_b(rng, 2);
      c.expect(u_alpha_b(alpha, SignedPermutation(2)) * u_alpha_b(alpha, tau) ==
                   u_alpha_b(alpha, tau1) * u_alpha_b(alpha, tau2),
               "obstruction relation fails for a u_alpha");
      const SeriesB gamma = boxconv_b(alpha, beta);
      GroupFunction<SignedPermutation> u(2), v(2);
      for (const auto& t : all_elements_b(2)) {
        u.set(t, u_alpha_b(alpha, t));
        v.set(t, u_alpha_b(beta, t));
      }
      if (restricted_convolution_at(u, v, tau) != u_alpha_b(gamma, tau)) violated = true;
    }
    c.expect(violated, "negative control: convolution matched u_gamma off the interval for all samples");
  }

  return finish("bridge",
                "n=2.." + std::to_string(max_n) + " samples=" + std::to_string(samples) +
                    " seed=" + std::to_string(params.seed),
                c, "(u_a *_r u_b)|[eps,omega] = u_{a boxconv_b b}|[eps,omega]", start);
}

VerificationReport verify_theorem_5_3(const VerifyParams& params) {
  const auto start = Clock::now();
  const int order = params.order > 0 ? params.order : 7;
  const int samples = params.samples > 0 ? params.samples : 50;
  Rng rng(params.seed);
  Check c;
  for (int s = 0; s < samples && c.ok; ++s) {
    const SeriesB f = random_series_b(rng, order);
    const SeriesB g = random_series_b(rng, order);
    const SeriesB direct = boxconv_b(f, g);
    const SeriesB dual = boxconv_a_dual(f, g);
    for (int k = 1; k <= order; ++k) {
      if (!(direct.coeff(k) == dual.coeff(k))) {
        c.fail("NC^(B) summation and dual type-A summation disagree at order " + std::to_string(k) +
               ", sample " + std::to_string(s));
        break;
      }
    }
  }
  return finish("theorem-5-3",
                "order=" + std::to_string(order) + " samples=" + std::to_string(samples) +
                    " seed=" + std::to_string(params.seed),
                c, "boxconv_b = boxconv_a over the dual algebra, coefficient by coefficient", start);
}

VerificationReport verify_boxconv_algebra(const VerifyParams& params) {
  const auto start = Clock::now();
  const int order = params.order > 0 ? params.order : 5;
  const int samples = params.samples > 0 ? params.samples : 20;
  Rng rng(params.seed);
  Check c;

  for (int s = 0; s < samples && c.ok; ++s) {
    const SeriesB f = random_series_b(rng, order);
    const SeriesB g = random_series_b(rng, order);
    const SeriesB h = random_series_b(rng, order);
    c.expect(boxconv_b(boxconv_b(f, g), h) == boxconv_b(f, boxconv_b(g, h)),
             "boxconv_b associativity fails");
    c.expect(boxconv_b(f, delta_b(order)) == f && boxconv_b(delta_b(order), f) == f,
             "Delta' unit law fails");
    const SeriesA fa = random_series_a(rng, order);
    const SeriesA ga = random_series_a(rng, order);
    const SeriesA ha = random_series_a(rng, order);
    c.expect(boxconv_a(boxconv_a(fa, ga), ha) == boxconv_a(fa, boxconv_a(ga, ha)),
             "boxconv_a associativity fails");
    c.expect(boxconv_a(fa, delta_a(order)) == fa, "Delta unit law fails");
    // truncation consistency
    c.expect(boxconv_b(f, g).truncate(order - 1) == boxconv_b(f.truncate(order - 1), g.truncate(order - 1)),
             "truncation consistency fails");
  }

  // zeta' inverse and random inverses round trip
  if (c.ok) {
    const SeriesB zinv = boxconv_b_inverse(zeta_b(order));
    c.expect(boxconv_b(zeta_b(order), zinv) == delta_b(order) &&
                 boxconv_b(zinv, zeta_b(order)) == delta_b(order),
             "zeta' inverse fails to round trip");
    for (int s = 0; s < samples && c.ok; ++s) {
      SeriesB f = random_series_b(rng, order, /*invertible_lead=*/true);
      const SeriesB inv = boxconv_b_inverse(f);
      c.expect(boxconv_b(f, inv) == delta_b(order) && boxconv_b(inv, f) == delta_b(order),
               "boxconv_b inverse fails to round trip");
    }
  }

  // counting identities against the enumeration
  if (c.ok) {
    SeriesB ones(order);
    SeriesB ones_dual(order);
    for (int k = 1; k <= order; ++k) {
      ones.set_coeff(k, DualScalar::unit());
      ones_dual.set_coeff(k, DualScalar(Rational(1), Rational(1)));
    }
    const SeriesB counts = boxconv_b(ones, ones);
    const SeriesB zcounts = boxconv_b(ones_dual, ones);
    for (int k = 1; k <= order; ++k) {
      c.expect(counts.coeff(k).prime == Rational(catalan(static_cast<unsigned long>(k))) &&
                   counts.coeff(k).double_prime == 0,
               "all-(1,0) convolution does not count NC^(A)");
      long with_zero = 0;
      for_each_ncb(k, [&](const NCPartitionB& pi) { with_zero += pi.zero_block().has_value(); });
      c.expect(zcounts.coeff(k).double_prime == Rational(with_zero),
               "zero-block count mismatch at order " + std::to_string(k));
      c.expect(mpz_class(2 * with_zero) == binom(2 * static_cast<unsigned long>(k),
                                                 static_cast<unsigned long>(k)),
               "zero-block partitions are not half of NC^(B)");
    }
  }

  return finish("boxconv-algebra",
                "order=" + std::to_string(order) + " samples=" + std::to_string(samples) +
                    " seed=" + std::to_string(params.seed),
                c, "associativity, units, inverses, truncation, counting identities", start);
}

VerificationReport verify_eq_5_4(const VerifyParams& params) {
  const auto start = Clock::now();
  const int samples = params.samples > 0 ? params.samples : 10;
  Rng rng(params.seed);
  Check c;
  for (int s = 0; s < samples && c.ok; ++s) {
    const SeriesA a = random_series_a(rng, 3);
    const SeriesA b = random_series_a(rng, 3);
    const SeriesA g = boxconv_a(a, b);
    const Rational a1 = a.coeff(1), a2 = a.coeff(2), a3 = a.coeff(3);
    const Rational b1 = b.coeff(1), b2 = b.coeff(2), b3 = b.coeff(3);
    c.expect(g.coeff(1) == a1 * b1, "gamma_1 formula fails");
    c.expect(g.coeff(2) == a2 * b1 * b1 + a1 * a1 * b2, "gamma_2 formula fails");
    c.expect(g.coeff(3) == a3 * b1 * b1 * b1 + 3 * a1 * a2 * b1 * b2 + a1 * a1 * a1 * b3,
             "gamma_3 formula fails");
  }
  // all-ones sanity: (1,1,1) boxconv (1,1,1) = (1,2,5)
  if (c.ok) {
    const SeriesA ones = zeta_a(3);
    const SeriesA g = boxconv_a(ones, ones);
    c.expect(g.coeff(1) == 1 && g.coeff(2) == 2 && g.coeff(3) == 5, "Catalan sanity check fails");
  }
  return finish("eq-5-4", "samples=" + std::to_string(samples) + " seed=" + std::to_string(params.seed),
                c, "printed order-1..3 coefficients match the closed formulas", start);
}

// kappa^(A')_p as a block product, vector slot at `vslot` (1-based).
Rational kappa_prime_partition(const FormalSpaceB& space,
                               const std::vector<FormalSpaceB::Element>& algebra,
                               const FormalSpaceB::Vector& xi, int vslot, const NCPartitionA& p) {
  Rational acc(1);
  for (const Block& blk : p.blocks()) {
    const bool has_vec = std::find(blk.begin(), blk.end(), vslot) != blk.end();
    if (has_vec) {
      std::vector<FormalSpaceB::Element> sub;
      int pos = 0, at = 0;
      for (int e : blk) {
        if (e == vslot) {
          at = pos;
        } else {
          sub.push_back(algebra[static_cast<std::size_t>(e < vslot ? e - 1 : e - 2)]);
        }
        ++pos;
      }
      acc *= cumulant_a_prime(space, sub, xi, at + 1);
    } else {
      std::vector<FormalSpaceB::Element> sub;
      for (int e : blk) sub.push_back(algebra[static_cast<std::size_t>(e < vslot ? e - 1 : e - 2)]);
      acc *= cumulant_a(space, sub);
    }
  }
  return acc;
}

VerificationReport verify_cumulant_engine(const VerifyParams& params) {
  const auto start = Clock::now();
  const int order = params.order > 0 ? params.order : 6;
  Rng rng(params.seed);
  Check c;

  // Explicit low-order formulas on the matrix oracle space.
  {
    MatrixSpaceA space(3);
    for (int s = 0; s < 3 && c.ok; ++s) {
      const auto a1 = space.random_element(rng);
      const auto a2 = space.random_element(rng);
      const auto a3 = space.random_element(rng);
      auto phi = [&](const MatrixSpaceA::Element& x) { return space.phi(x); };
      c.expect(cumulant_a(space, {a1}) == phi(a1), "kappa_1 formula fails");
      c.expect(cumulant_a(space, {a1, a2}) == phi(space.mul(a1, a2)) - phi(a1) * phi(a2),
               "kappa_2 formula fails");
      const Rational k3 = phi(space.mul(space.mul(a1, a2), a3)) -
                          phi(a1) * phi(space.mul(a2, a3)) - phi(a2) * phi(space.mul(a1, a3)) -
                          phi(space.mul(a1, a2)) * phi(a3) + 2 * phi(a1) * phi(a2) * phi(a3);
      c.expect(cumulant_a(space, {a1, a2, a3}) == k3, "kappa_3 five-term formula fails");
    }
    // diag(1,-1): moments alternate 0,1,0,1; cumulants 0,1,0,-1
    MatrixSpaceA two(2);
    const auto d = two.diagonal({Rational(1), Rational(-1)});
    c.expect(cumulant_a(two, {d}) == 0, "diag example kappa_1");
    c.expect(cumulant_a(two, {d, d}) == 1, "diag example kappa_2");
    c.expect(cumulant_a(two, {d, d, d}) == 0, "diag example kappa_3");
    c.expect(cumulant_a(two, {d, d, d, d}) == -1, "diag example kappa_4");
  }

  // Single-variable moment <-> cumulant round trips at the requested order.
  for (int s = 0; s < 5 && c.ok; ++s) {
    std::vector<Rational> kappa, moments;
    for (int k = 0; k < order; ++k) kappa.push_back(rng.rational());
    c.expect(cumulants_from_moments_a(moments_from_cumulants_a(kappa)) == kappa,
             "type A round trip (cumulants first) fails");
    for (int k = 0; k < order; ++k) moments.push_back(rng.rational());
    c.expect(moments_from_cumulants_a(cumulants_from_moments_a(moments)) == moments,
             "type A round trip (moments first) fails");
    const SeriesB m = random_series_b(rng, order);
    c.expect(moments_from_cumulants_b(cumulants_from_moments_b(m)) == m,
             "type B round trip fails");
  }
  // pair-partition and constant-cumulant examples
  if (c.ok) {
    std::vector<Rational> semicircle{Rational(0), Rational(1), Rational(0), Rational(0),
                                     Rational(0), Rational(0)};
    const auto m = moments_from_cumulants_a(semicircle);
    c.expect(m[1] == 1 && m[3] == 2 && m[0] == 0 && m[2] == 0, "pair-partition count fails");
    std::vector<Rational> free_poisson_like{Rational(1), Rational(0), Rational(0)};
    const auto ones = moments_from_cumulants_a(free_poisson_like);
    c.expect(ones[0] == 1 && ones[1] == 1 && ones[2] == 1, "all-singleton moments fail");
  }

  // The formal space: explicit (6.5)-(6.7), Theorem 6.4, recurrence (6.14),
  // Corollary 6.3, multilinearity — on random moment tables.
  const int depth = 5;
  FormalSpaceB space = random_moment_space(rng, 2, depth + 1);
  const auto g1 = space.generator(0);
  const auto g2 = space.generator(1);
  const auto x1 = space.vector_generator(0);
  const auto x2 = space.vector_generator(1);

  if (c.ok) {
    const DualScalar k1 = cumulant_b(space, {{g1, x1}});
    c.expect(k1.prime == space.phi(g1) && k1.double_prime == space.f(x1), "Eq. (6.5) fails");
    const DualScalar k2 = cumulant_b(space, {{g1, x1}, {g2, x2}});
    const Rational first = space.phi(space.mul(g1, g2)) - space.phi(g1) * space.phi(g2);
    const Rational second = space.f(space.act_left(g1, x2)) - space.phi(g1) * space.f(x2) +
                            space.f(space.act_right(x1, g2)) - space.f(x1) * space.phi(g2);
    c.expect(k2 == DualScalar(first, second), "Eq. (6.6) fails");
    c.expect(cumulant_a_prime(space, {g2}, x1, 1) ==
                 space.f(space.act_right(x1, g2)) - space.f(x1) * space.phi(g2),
             "Eq. (6.7) first formula fails");
    c.expect(cumulant_a_prime(space, {g1}, x2, 2) ==
                 space.f(space.act_left(g1, x2)) - space.phi(g1) * space.f(x2),
             "Eq. (6.7) second formula fails");
    // kappa^(A')_{3;2}(a, xi, a') five-term expansion
    const Rational k32 = space.f(space.act_right(space.act_left(g1, x2), g2)) -
                         space.phi(g1) * space.f(space.act_right(x2, g2)) -
                         space.f(x2) * space.phi(space.mul(g1, g2)) -
                         space.f(space.act_left(g1, x2)) * space.phi(g2) +
                         2 * space.phi(g1) * space.f(x2) * space.phi(g2);
    c.expect(cumulant_a_prime(space, {g1, g2}, x2, 2) == k32, "kappa^(A')_{3;2} expansion fails");
  }

  // Theorem 6.4: dual recursion equals the componentwise description.
  for (int n = 1; n <= depth && c.ok; ++n) {
    for (int s = 0; s < 4 && c.ok; ++s) {
      std::vector<std::pair<FormalSpaceB::Element, FormalSpaceB::Vector>> pairs;
      for (int i = 0; i < n; ++i) pairs.push_back(space.pair(static_cast<int>(rng.integer(0, 1))));
      const DualScalar via_recursion = cumulant_b(space, pairs);
      const DualScalar via_components = cumulant_b_componentwise(space, pairs);
      c.expect(via_recursion == via_components,
               "Theorem 6.4 differential test fails at n=" + std::to_string(n));
    }
  }

  // Moment formula reconstruction: summing block cumulants over the NC
  // lattice recovers phi (scalar path) and E (dual path) from the tables.
  for (int n = 1; n <= order && c.ok; ++n) {
    std::vector<FormalSpaceB::Element> args;
    for (int i = 0; i < n; ++i) args.push_back(space.generator(static_cast<int>(rng.integer(0, 1))));
    Rational lhs(0);
    for (const NCPartitionA& p : nca_cache(n)) {
      Rational term(1);
      for (const Block& blk : p.blocks()) {
        std::vector<FormalSpaceB::Element> sub;
        for (int e : blk) sub.push_back(args[static_cast<std::size_t>(e) - 1]);
        term *= cumulant_a(space, sub);
      }
      lhs += term;
    }
    c.expect(lhs == phi_of_product(space, args), "Eq. (4.2) reconstruction fails");
  }
  for (int n = 1; n <= depth && c.ok; ++n) {
    std::vector<std::pair<FormalSpaceB::Element, FormalSpaceB::Vector>> pairs;
    for (int i = 0; i < n; ++i) pairs.push_back(space.pair(static_cast<int>(rng.integer(0, 1))));
    DualScalar lhs;
    for (const NCPartitionA& p : nca_cache(n)) {
      DualScalar term = DualScalar::unit();
      for (const Block& blk : p.blocks()) {
        std::vector<std::pair<FormalSpaceB::Element, FormalSpaceB::Vector>> sub;
        for (int e : blk) sub.push_back(pairs[static_cast<std::size_t>(e) - 1]);
        term = term * cumulant_b(space, sub);
      }
      lhs += term;
    }
    c.expect(lhs == expectation_b(space, pairs), "Eq. (6.3) reconstruction fails");
  }

  // Recurrence (6.14) with and without a vector slot.
  for (int n = 3; n <= depth && c.ok; ++n) {
    for (int s = 0; s < 3 && c.ok; ++s) {
      const int r = static_cast<int>(rng.integer(1, n - 1));  // group positions r, r+1
      // all-algebra instance
      {
        std::vector<FormalSpaceB::Element> args;
        for (int i = 0; i < n; ++i) args.push_back(space.generator(static_cast<int>(rng.integer(0, 1))));
        std::vector<FormalSpaceB::Element> merged;
        for (int i = 0; i < n; ++i) {
          if (i == r - 1) {
            merged.push_back(space.mul(args[static_cast<std::size_t>(i)],
                                       args[static_cast<std::size_t>(i) + 1]));
            ++i;
          } else {
            merged.push_back(args[static_cast<std::size_t>(i)]);
          }
        }
        Rational rhs = cumulant_a(space, args);
        for (const NCPartitionA& p : nca_cache(n)) {
          if (p.block_count() != 2) continue;
          const Block& b0 = p.blocks()[0];
          const bool separated = (std::find(b0.begin(), b0.end(), r) != b0.end()) !=
                                 (std::find(b0.begin(), b0.end(), r + 1) != b0.end());
          if (!separated) continue;
          Rational term(1);
          for (const Block& blk : p.blocks()) {
            std::vector<FormalSpaceB::Element> sub;
            for (int e : blk) sub.push_back(args[static_cast<std::size_t>(e) - 1]);
            term *= cumulant_a(space, sub);
          }
          rhs += term;
        }
        c.expect(cumulant_a(space, merged) == rhs, "recurrence (6.14), algebra case, fails");
      }
      // vector instance: put xi at a slot not adjacent to the merge only if
      // possible; merging across the vector slot is exercised when m = r.
      {
        const int m = static_cast<int>(rng.integer(1, n));
        std::vector<FormalSpaceB::Element> algebra;
        for (int i = 0; i < n - 1; ++i) {
          algebra.push_back(space.generator(static_cast<int>(rng.integer(0, 1))));
        }
        const FormalSpaceB::Vector xi = space.vector_generator(static_cast<int>(rng.integer(0, 1)));

        // lhs: merge positions r, r+1 of the mixed tuple
        Rational lhs;
        if (m == r || m == r + 1) {
          // product of an algebra element and the vector stays a vector
          const int other = m == r ? r + 1 : r;
          const FormalSpaceB::Element& a = algebra[static_cast<std::size_t>(other > m ? other - 2 : other - 1)];
          const FormalSpaceB::Vector merged_vec =
              m == r ? space.act_right(xi, a) : space.act_left(a, xi);
          std::vector<FormalSpaceB::Element> rest;
          for (int i = 1; i <= n; ++i) {
            if (i == m || i == other) continue;
            rest.push_back(algebra[static_cast<std::size_t>(i > m ? i - 2 : i - 1)]);
          }
          lhs = cumulant_a_prime(space, rest, merged_vec, r);
        } else {
          std::vector<FormalSpaceB::Element> rest;
          for (int i = 1; i <= n; ++i) {
            if (i == m) continue;
            const FormalSpaceB::Element& a = algebra[static_cast<std::size_t>(i > m ? i - 2 : i - 1)];
            if (i == r) {
              rest.push_back(space.mul(a, algebra[static_cast<std::size_t>(i + 1 > m ? i - 1 : i)]));
            } else if (i == r + 1) {
              continue;
            } else {
              rest.push_back(a);
            }
          }
          lhs = cumulant_a_prime(space, rest, xi, m > r + 1 ? m - 1 : m);
        }

        Rational rhs = cumulant_a_prime(space, algebra, xi, m);
        for (const NCPartitionA& p : nca_cache(n)) {
          if (p.block_count() != 2) continue;
          const Block& b0 = p.blocks()[0];
          const bool separated = (std::find(b0.begin(), b0.end(), r) != b0.end()) !=
                                 (std::find(b0.begin(), b0.end(), r + 1) != b0.end());
          if (!separated) continue;
          rhs += kappa_prime_partition(space, algebra, xi, m, p);
        }
        c.expect(lhs == rhs, "recurrence (6.14), vector case, fails");
      }
    }
  }

  // Corollary 6.3 and multilinearity.
  if (c.ok) {
    const FormalSpaceB::Element scalar = space.scale(rng.nonzero_rational(), space.unit());
    for (int n = 2; n <= depth && c.ok; ++n) {
      for (int pos = 1; pos <= n && c.ok; ++pos) {
        std::vector<FormalSpaceB::Element> args;
        for (int i = 0; i < n; ++i) {
          args.push_back(i == pos - 1 ? scalar : space.generator(static_cast<int>(rng.integer(0, 1))));
        }
        c.expect(cumulant_a(space, args) == 0, "Eq. (6.16): kappa^(A) with scalar argument");
        for (int m = 1; m <= n && c.ok; ++m) {
          if (m == pos) continue;
          std::vector<FormalSpaceB::Element> algebra;
          for (int i = 1; i <= n; ++i) {
            if (i == m) continue;
            algebra.push_back(i == pos ? scalar : space.generator(static_cast<int>(rng.integer(0, 1))));
          }
          c.expect(cumulant_a_prime(space, algebra, x1, m) == 0,
                   "Corollary 6.3: kappa^(A') with scalar argument");
        }
      }
    }
    // multilinearity probe in a random slot
    const Rational s1 = rng.rational(), s2 = rng.rational();
    const FormalSpaceB::Element combo =
        space.add(space.scale(s1, g1), space.scale(s2, g2));
    c.expect(cumulant_a(space, {g1, combo, g2}) ==
                 s1 * cumulant_a(space, {g1, g1, g2}) + s2 * cumulant_a(space, {g1, g2, g2}),
             "kappa^(A) multilinearity fails");
    const FormalSpaceB::Vector vcombo = space.vadd(space.vscale(s1, x1), space.vscale(s2, x2));
    c.expect(cumulant_a_prime(space, {g1, g2}, vcombo, 2) ==
                 s1 * cumulant_a_prime(space, {g1, g2}, x1, 2) +
                     s2 * cumulant_a_prime(space, {g1, g2}, x2, 2),
             "kappa^(A') multilinearity fails");
  }

  return finish("cumulant-engine",
                "order=" + std::to_string(order) + " depth=5 seed=" + std::to_string(params.seed), c,
                "low-order formulas, round trips, Theorem 6.4, recurrence, vanishing", start);
}

VerificationReport verify_moment_r_transform(const VerifyParams& params) {
  const auto start = Clock::now();
  const int order = params.order > 0 ? params.order : 6;
  Rng rng(params.seed);
  Check c;

  for (int s = 0; s < 4 && c.ok; ++s) {
    // single-pair space with random prescribed cumulants
    const SeriesB presc = random_series_b(rng, order);
    const FormalSpaceB space = FormalSpaceB::from_cumulants({presc});
    const auto couple = space.pair(0);
    const SeriesB m = moment_series_b(space, couple, order);
    const SeriesB r = r_transform_b(space, couple, order);
    c.expect(r == presc, "prescribed R-transform is not recovered");
    c.expect(m == boxconv_b(r, zeta_b(order)), "M = R boxconv_b zeta' fails");
    c.expect(cumulants_from_moments_b(m) == r, "R from M via the zeta' inverse fails");

    // type A specialization: xi = 0 kills the second components and
    // reproduces M_a = R_a boxconv_a zeta.
    const std::pair<FormalSpaceB::Element, FormalSpaceB::Vector> plain{space.generator(0),
                                                                       space.zero_vector()};
    const SeriesB ma = moment_series_b(space, plain, order);
    const SeriesB ra = r_transform_b(space, plain, order);
    SeriesA ma1(order), ra1(order);
    for (int k = 1; k <= order; ++k) {
      c.expect(ma.coeff(k).double_prime == 0 && ra.coeff(k).double_prime == 0,
               "xi = 0 leaves a nonzero second component");
      ma1.set_coeff(k, ma.coeff(k).prime);
      ra1.set_coeff(k, ra.coeff(k).prime);
    }
    c.expect(ma1 == boxconv_a(ra1, zeta_a(order)), "type A specialization M = R boxconv zeta fails");

    // order-2 second component expands over the three zero-block elements
    // of NC^(B)(2)
    const auto& a = couple.first;
    const auto& xi = couple.second;
    const Rational lhs = space.f(space.vadd(space.act_left(a, xi), space.act_right(xi, a)));
    const Rational term_full = cumulant_a_prime(space, {a}, xi, 1) + cumulant_a_prime(space, {a}, xi, 2);
    const Rational term_left = cumulant_a_prime(space, {}, xi, 1) * cumulant_a(space, {a});
    const Rational term_right = cumulant_a(space, {a}) * cumulant_a_prime(space, {}, xi, 1);
    c.expect(lhs == term_full + term_left + term_right, "Remark 6.5 expansion fails");
    c.expect(lhs == m.coeff(2).double_prime, "Remark 6.5 vs moment coefficient fails");
    // the zero-block partitions contribute exactly these three terms
    c.expect(term_full == r.coeff(2).double_prime, "{(1,2,-1,-2)} contribution mismatch");
    c.expect(term_left == r.coeff(1).double_prime * r.coeff(1).prime,
             "{(1,-1),(2),(-2)} contribution mismatch");
    c.expect(term_right == r.coeff(1).prime * r.coeff(1).double_prime,
             "{(1),(-1),(2,-2)} contribution mismatch");
  }

  // the identity also holds for every marked pair of a two-pair free space
  if (c.ok) {
    const SeriesB r1 = random_series_b(rng, order);
    const SeriesB r2 = random_series_b(rng, order);
    const FormalSpaceB space = make_free_pair(r1, r2, order);
    for (int j = 0; j < 2; ++j) {
      const auto couple = space.pair(j);
      c.expect(moment_series_b(space, couple, order) ==
                   boxconv_b(r_transform_b(space, couple, order), zeta_b(order)),
               "M = R boxconv_b zeta' fails for a marked pair");
    }
  }

  return finish("moment-r-transform",
                "order=" + std::to_string(order) + " seed=" + std::to_string(params.seed), c,
                "M = R boxconv_b zeta', type A projection, Remark 6.5 expansion", start);
}

VerificationReport verify_freeness(const VerifyParams& params) {
  const auto start = Clock::now();
  const int depth = params.order > 0 ? params.order : 5;
  Rng rng(params.seed);
  Check c;

  // make_free_pair output passes both characterizations and recovers its
  // prescriptions.
  const SeriesB r1 = random_series_b(rng, depth);
  const SeriesB r2 = random_series_b(rng, depth);
  const FormalSpaceB space = make_free_pair(r1, r2, depth);
  {
    const FreenessReport mc = mixed_cumulant_check(space, depth);
    c.expect(mc.pass, "mixed_cumulant_check fails on a free pair: " + mc.witness);
    const FreenessReport fm = free_independence_moment_check(space, depth);
    c.expect(fm.pass, "moment check fails on a free pair: " + fm.witness);
    c.expect(r_transform_b(space, space.pair(0), depth) == r1, "pair 1 R-transform mismatch");
    c.expect(r_transform_b(space, space.pair(1), depth) == r2, "pair 2 R-transform mismatch");
  }

  // Corollary 7.2 equivalence: positive instances...
  const int depth_eq = 4;
  for (int s = 0; s < 10 && c.ok; ++s) {
    const FormalSpaceB sp = make_free_pair(random_series_b(rng, depth_eq), random_series_b(rng, depth_eq),
                                           depth_eq);
    const bool cumulant_side = mixed_cumulant_check(sp, depth_eq).pass;
    const bool moment_side = free_independence_moment_check(sp, depth_eq).pass;
    c.expect(cumulant_side && moment_side, "a constructed free pair fails a freeness check");
  }
  // ...and perturbed negative instances, where both verdicts must flip.
  for (int s = 0; s < 5 && c.ok; ++s) {
    FormalSpaceB sp = make_free_pair(random_series_b(rng, depth_eq), random_series_b(rng, depth_eq),
                                     depth_eq)
                          .materialized(depth_eq);
    switch (s % 3) {
      case 0:
        // f(g1 x2) away from phi(g1) f(x2)
        sp.set_vword_moment({{0}, 1, {}}, sp.vword_moment({{0}, 1, {}}) + 1);
        break;
      case 1:
        sp.set_vword_moment({{}, 0, {1}}, sp.vword_moment({{}, 0, {1}}) + Rational(1, 2));
        break;
      default:
        sp.set_word_moment({0, 1}, sp.word_moment({0, 1}) + Rational(1, 3));
        break;
    }
    const FreenessReport mc = mixed_cumulant_check(sp, depth_eq);
    const FreenessReport fm = free_independence_moment_check(sp, depth_eq);
    c.expect(!mc.pass, "perturbed space still passes the cumulant check");
    c.expect(!fm.pass, "perturbed space still passes the moment check");
  }

  // Type A projection: zero second components make f vanish identically,
  // and the checks reduce to classical freeness; perturbing a mixed phi
  // moment breaks them.
  if (c.ok) {
    SeriesB p1 = random_series_b(rng, depth_eq);
    SeriesB p2 = random_series_b(rng, depth_eq);
    for (int k = 1; k <= depth_eq; ++k) {
      p1.set_coeff(k, DualScalar(p1.coeff(k).prime, Rational(0)));
      p2.set_coeff(k, DualScalar(p2.coeff(k).prime, Rational(0)));
    }
    const FormalSpaceB sp = make_free_pair(p1, p2, depth_eq);
    c.expect(sp.f(sp.vector_generator(0)) == 0, "V = 0 projection has nonzero f");
    c.expect(mixed_cumulant_check(sp, depth_eq).pass, "type A projection fails cumulant check");
    FormalSpaceB bad = sp.materialized(depth_eq);
    bad.set_word_moment({0, 1, 0, 1}, bad.word_moment({0, 1, 0, 1}) + 1);
    c.expect(!mixed_cumulant_check(bad, depth_eq).pass,
             "type A perturbation not detected by mixed cumulants");
    c.expect(!free_independence_moment_check(bad, depth_eq).pass,
             "type A perturbation not detected by alternating moments");
  }

  // Prop. 7.1 formulas directly on the space: already part of the moment
  // check; exercise the m != n zero case once more explicitly.
  if (c.ok) {
    const auto a1 = space.generator(0);
    const auto centered = space.add(a1, space.scale(-space.phi(a1), space.unit()));
    const Rational v = space.f(space.act_left(centered, space.vector_generator(1)));
    c.expect(v == 0, "Eq. (7.2) m=1, n=0 case fails");
    const auto b = space.generator(1);
    const auto cb = space.add(b, space.scale(-space.phi(b), space.unit()));
    const Rational w =
        space.f(space.act_right(space.act_left(centered, space.vector_generator(0)), cb));
    // m = n = 1 with labels (1, 1(xi), 2): delta_{1,2} = 0
    c.expect(w == 0, "Eq. (7.3) delta factor fails");
  }

  return finish("freeness",
                "depth=" + std::to_string(depth) + " seed=" + std::to_string(params.seed), c,
                "construction, both freeness characterizations, Corollary 7.2 equivalence", start);
}

VerificationReport verify_theorem_7_3(const VerifyParams& params) {
  const auto start = Clock::now();
  const int order = params.order > 0 ? params.order : 5;
  Rng rng(params.seed);
  Check c;

  for (int s = 0; s < 3 && c.ok; ++s) {
    const SeriesB r1 = random_series_b(rng, order);
    const SeriesB r2 = random_series_b(rng, order);
    const FormalSpaceB space = make_free_pair(r1, r2, order);
    const FreenessReport cert = mixed_cumulant_check(space, order);
    c.expect(cert.pass, "freeness certificate fails");
    if (!c.ok) break;
    const auto [r_sum, r_prod] = r_sum_product(space, cert, order);
    c.expect(r_sum == r1 + r2, "sum R-transform != R_1 + R_2");
    c.expect(r_prod == boxconv_b(r1, r2), "product R-transform != R_1 boxconv_b R_2");

    // intermediate identity (7.12): M = R_1 boxconv_b M_2
    const auto [a1, x1] = space.pair(0);
    const auto [a2, x2] = space.pair(1);
    const std::pair<FormalSpaceB::Element, FormalSpaceB::Vector> product{
        space.mul(a1, a2), space.vadd(space.act_left(a1, x2), space.act_right(x1, a2))};
    const SeriesB m = moment_series_b(space, product, order);
    const SeriesB m2 = moment_series_b(space, space.pair(1), order);
    c.expect(m == boxconv_b(r1, m2), "Eq. (7.12) M = R_1 boxconv_b M_2 fails");

    // type A projection: the first components obey R_{ab} = R_a boxconv_a R_b
    SeriesA first_prod(order), first_1(order), first_2(order);
    for (int k = 1; k <= order; ++k) {
      first_prod.set_coeff(k, r_prod.coeff(k).prime);
      first_1.set_coeff(k, r1.coeff(k).prime);
      first_2.set_coeff(k, r2.coeff(k).prime);
    }
    c.expect(first_prod == boxconv_a(first_1, first_2), "type A product projection fails");
  }

  // the concrete low-order example: R_1 = (1,1)z, R_2 = (1,0)z
  if (c.ok) {
    SeriesB r1(order), r2(order);
    r1.set_coeff(1, DualScalar(Rational(1), Rational(1)));
    r2.set_coeff(1, DualScalar::unit());
    const FormalSpaceB space = make_free_pair(r1, r2, order);
    const FreenessReport cert = mixed_cumulant_check(space, order);
    const auto [r_sum, r_prod] = r_sum_product(space, cert, order);
    SeriesB expected(order);
    expected.set_coeff(1, DualScalar(Rational(1), Rational(1)));
    c.expect(r_prod == expected, "rank-one product example fails");
    c.expect(r_sum == r1 + r2, "rank-one sum example fails");
  }

  return finish("theorem-7-3",
                "order=" + std::to_string(order) + " seed=" + std::to_string(params.seed), c,
                "sum and product R-transform theorems with the (7.12) intermediate step", start);
}

}  // namespace

const std::map<std::string, VerifyFn>& verify_registry() {
  static const std::map<std::string, VerifyFn> registry = {
      {"cardinalities", verify_cardinalities},
      {"abs-cover", verify_abs_cover},
      {"kreweras", verify_kreweras},
      {"lattice-ops", verify_lattice_ops},
      {"word-length", verify_word_length},
      {"embedding", verify_embedding},
      {"interval-factorization", verify_interval_factorization},
      {"restricted-convolution", verify_restricted_convolution},
      {"bridge", verify_bridge},
      {"theorem-5-3", verify_theorem_5_3},
      {"boxconv-algebra", verify_boxconv_algebra},
      {"eq-5-4", verify_eq_5_4},
      {"cumulant-engine", verify_cumulant_engine},
      {"moment-r-transform", verify_moment_r_transform},
      {"freeness", verify_freeness},
      {"theorem-7-3", verify_theorem_7_3},
  };
  return registry;
}

VerificationReport run_verify(const std::string& id, const VerifyParams& params) {
  const auto& reg = verify_registry();
  auto it = reg.find(id);
  if (it == reg.end()) {
    std::string known;
    for (const auto& [name, fn] : reg) {
      if (!known.empty()) known += ", ";
      known += name;
    }
    throw std::invalid_argument("unknown property '" + id + "'; known ids: " + known);
  }
  return it->second(params);
}

std::vector<std::string> verify_ids() {
  std::vector<std::string> ids;
  for (const auto& [name, fn] : verify_registry()) ids.push_back(name);
  return ids;
}

}  // namespace ncb
