#include "ncb/series.hpp"

#include "ncb/cayley.hpp"
#include "ncb/embed.hpp"
#include "ncb/partition.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace ncb {

namespace {

using json = nlohmann::json;

// Card lists of p and Kr(p), one entry per p in NC^(A)(n). Everything the
// type-A summation needs, precomputed once per n.
struct NcaShape {
  std::vector<int> p_cards;
  std::vector<int> kr_cards;
};

// Zero-block and pair-card data of pi and Kr(pi), one entry per pi in
// NC^(B)(m). Exactly one of zero_half / kr_zero_half is nonzero.
struct NcbShape {
  int zero_half = 0;               // card(Z)/2 when pi has a zero-block
  std::vector<int> pair_cards;     // card X per non-invariant pair of pi
  int kr_zero_half = 0;            // card(Z)/2 when Kr(pi) has the zero-block
  std::vector<int> kr_pair_cards;  // card Y per non-invariant pair of Kr(pi)
};

const std::vector<NcaShape>& nca_shapes(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<NcaShape>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<NcaShape> shapes;
  for_each_nca(n, [&](const NCPartitionA& p) {
    NcaShape s;
    for (const Block& b : p.blocks()) s.p_cards.push_back(static_cast<int>(b.size()));
    const NCPartitionA kr = kreweras(p);
    for (const Block& b : kr.blocks()) s.kr_cards.push_back(static_cast<int>(b.size()));
    shapes.push_back(std::move(s));
  });
  return cache.emplace(n, std::move(shapes)).first->second;
}

// Zero-block half-size (or 0) and the per-pair cards of a type-B partition.
std::pair<int, std::vector<int>> zero_and_pairs(const NCPartitionB& pi) {
  int zero_half = 0;
  std::vector<int> pairs;
  std::set<Block> consumed;
  for (const Block& b : pi.blocks()) {
    Block neg;
    for (int x : b) neg.push_back(-x);
    std::sort(neg.begin(), neg.end());
    Block self = b;
    std::sort(self.begin(), self.end());
    if (self == neg) {
      zero_half = static_cast<int>(b.size()) / 2;
      continue;
    }
    if (consumed.count(self)) continue;
    consumed.insert(neg);
    pairs.push_back(static_cast<int>(b.size()));
  }
  return {zero_half, pairs};
}

const std::vector<NcbShape>& ncb_shapes(int m) {
  static std::mutex mu;
  static std::map<int, std::vector<NcbShape>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<NcbShape> shapes;
  for_each_ncb(m, [&](const NCPartitionB& pi) {
    NcbShape s;
    auto [zero, pairs] = zero_and_pairs(pi);
    s.zero_half = zero;
    s.pair_cards = std::move(pairs);
    auto [kr_zero, kr_pairs] = zero_and_pairs(kreweras(pi));
    s.kr_zero_half = kr_zero;
    s.kr_pair_cards = std::move(kr_pairs);
    shapes.push_back(std::move(s));
  });
  return cache.emplace(m, std::move(shapes)).first->second;
}

// gamma_n of the type-A summation, over any commutative coefficient ring.
template <class Ring>
Ring conv_a_coeff(const std::vector<Ring>& alpha, const std::vector<Ring>& beta, int n,
                  const Ring& zero, const Ring& one) {
  Ring acc = zero;
  for (const NcaShape& s : nca_shapes(n)) {
    Ring term = one;
    for (int c : s.p_cards) term = term * alpha[static_cast<std::size_t>(c) - 1];
    for (int c : s.kr_cards) term = term * beta[static_cast<std::size_t>(c) - 1];
    acc += term;
  }
  return acc;
}

// Second component of the order-m coefficient of boxconv_b: the two
// zero-block summations over NC^(B)(m).
Rational conv_b_second_coeff(const SeriesB& f, const SeriesB& g, int m) {
  Rational acc(0);
  for (const NcbShape& s : ncb_shapes(m)) {
    Rational term(1);
    if (s.zero_half > 0) {
      for (int c : s.pair_cards) term *= f.coeff(c).prime;
      term *= f.coeff(s.zero_half).double_prime;
      for (int c : s.kr_pair_cards) term *= g.coeff(c).prime;
    } else {
      for (int c : s.pair_cards) term *= f.coeff(c).prime;
      term *= g.coeff(s.kr_zero_half).double_prime;
      for (int c : s.kr_pair_cards) term *= g.coeff(c).prime;
    }
    acc += term;
  }
  return acc;
}

void require_same_order(int a, int b) {
  if (a != b) throw std::domain_error("series truncation orders differ");
}

}  // namespace

SeriesA delta_a(int order) {
  SeriesA f(order);
  f.set_coeff(1, Rational(1));
  return f;
}

SeriesB delta_b(int order) {
  SeriesB f(order);
  f.set_coeff(1, DualScalar::unit());
  return f;
}

SeriesA zeta_a(int order) {
  SeriesA f(order);
  for (int k = 1; k <= order; ++k) f.set_coeff(k, Rational(1));
  return f;
}

SeriesB zeta_b(int order) {
  SeriesB f(order);
  for (int k = 1; k <= order; ++k) f.set_coeff(k, DualScalar::unit());
  return f;
}

SeriesA boxconv_a(const SeriesA& f, const SeriesA& g) {
  require_same_order(f.order(), g.order());
  SeriesA out(f.order());
  for (int n = 1; n <= f.order(); ++n) {
    out.set_coeff(n, conv_a_coeff<Rational>(f.coeffs(), g.coeffs(), n, Rational(0), Rational(1)));
  }
  return out;
}

SeriesB boxconv_a_dual(const SeriesB& f, const SeriesB& g) {
  require_same_order(f.order(), g.order());
  SeriesB out(f.order());
  for (int n = 1; n <= f.order(); ++n) {
    out.set_coeff(n, conv_a_coeff<DualScalar>(f.coeffs(), g.coeffs(), n, DualScalar(),
                                              DualScalar::unit()));
  }
  return out;
}

SeriesB boxconv_b(const SeriesB& f, const SeriesB& g) {
  require_same_order(f.order(), g.order());
  SeriesB out(f.order());
  std::vector<Rational> fp, gp;
  for (const DualScalar& d : f.coeffs()) fp.push_back(d.prime);
  for (const DualScalar& d : g.coeffs()) gp.push_back(d.prime);
  for (int m = 1; m <= f.order(); ++m) {
    out.set_coeff(m, DualScalar(conv_a_coeff<Rational>(fp, gp, m, Rational(0), Rational(1)),
                                conv_b_second_coeff(f, g, m)));
  }
  return out;
}

SeriesB boxconv_b_inverse(const SeriesB& f) {
  if (!f.coeff(1).invertible()) {
    throw std::domain_error("boxconv_b_inverse: order-1 coefficient not invertible (alpha'_1 = 0)");
  }
  const int N = f.order();
  SeriesB g(N);
  g.set_coeff(1, f.coeff(1).inverse());
  for (int m = 2; m <= N; ++m) {
    // With g_1..g_{m-1} fixed and g_m = 0, the order-m coefficient of
    // f boxconv_b g misses only the p = 0_m term alpha_1^m g_m; the target
    // coefficient of Delta' is 0.
    const SeriesB partial = boxconv_b(f, g);
    const DualScalar rest = partial.coeff(m);
    g.set_coeff(m, DualScalar() - rest * dual_pow(f.coeff(1), m).inverse());
  }
  return g;
}

Rational u_alpha_a(const SeriesA& alpha, const Permutation& t) {
  if (alpha.order() != t.n()) throw std::domain_error("u_alpha_a: need exactly n coefficients");
  const OrbitCensusA census = orbit_census(t);
  Rational acc(1);
  for (int m = 1; m <= t.n(); ++m) acc *= rat_pow(alpha.coeff(m), census.k[m - 1]);
  return acc;
}

Rational u_alpha_b(const SeriesB& alpha, const SignedPermutation& tau) {
  if (alpha.order() != tau.n()) throw std::domain_error("u_alpha_b: need exactly n coefficients");
  const OrbitCensusB census = orbit_census(tau);
  Rational acc(1);
  for (int m = 1; m <= tau.n(); ++m) {
    acc *= rat_pow(alpha.coeff(m).prime, census.k[m - 1]);
    acc *= rat_pow(alpha.coeff(m).double_prime, census.l[m - 1]);
  }
  return acc;
}

bool bridge_check_b(const SeriesB& alpha, const SeriesB& beta, int n) {
  if (alpha.order() != n || beta.order() != n) {
    throw std::domain_error("bridge_check_b: coefficient tuples must have n entries");
  }
  const SeriesB gamma = boxconv_b(alpha, beta);
  const std::vector<SignedPermutation> box = interval(omega_b(n));
  for (const SignedPermutation& tau : box) {
    Rational lhs(0);
    for (const SignedPermutation& sigma : box) {
      if (!leq(sigma, tau)) continue;
      lhs += u_alpha_b(alpha, sigma) * u_alpha_b(beta, compose(sigma.inverse(), tau));
    }
    if (lhs != u_alpha_b(gamma, tau)) return false;
  }
  return true;
}

std::vector<Rational> moments_from_cumulants_a(const std::vector<Rational>& kappa) {
  std::vector<Rational> moments;
  for (int n = 1; n <= static_cast<int>(kappa.size()); ++n) {
    Rational acc(0);
    for (const NcaShape& s : nca_shapes(n)) {
      Rational term(1);
      for (int c : s.p_cards) term *= kappa[static_cast<std::size_t>(c) - 1];
      acc += term;
    }
    moments.push_back(acc);
  }
  return moments;
}

std::vector<Rational> cumulants_from_moments_a(const std::vector<Rational>& moments) {
  std::vector<Rational> kappa;
  for (int n = 1; n <= static_cast<int>(moments.size()); ++n) {
    Rational rest(0);
    for (const NcaShape& s : nca_shapes(n)) {
      if (s.p_cards.size() == 1) continue;  // the p = 1_n term carries kappa_n itself
      Rational term(1);
      for (int c : s.p_cards) term *= kappa[static_cast<std::size_t>(c) - 1];
      rest += term;
    }
    kappa.push_back(moments[static_cast<std::size_t>(n) - 1] - rest);
  }
  return kappa;
}

SeriesB moments_from_cumulants_b(const SeriesB& r) { return boxconv_b(r, zeta_b(r.order())); }

SeriesB cumulants_from_moments_b(const SeriesB& m) {
  return boxconv_b(m, boxconv_b_inverse(zeta_b(m.order())));
}

namespace {

json rat_to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return json(r.get_num().get_si());
  return json(rat_str(r));
}

Rational rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return rat_parse(j.get<std::string>());
  throw std::invalid_argument("rational entries must be integers or 'p/q' strings");
}

}  // namespace

std::string to_string(const SeriesA& f) {
  json arr = json::array();
  for (const Rational& c : f.coeffs()) arr.push_back(rat_to_json(c));
  return arr.dump();
}

std::string to_string(const SeriesB& f) {
  json arr = json::array();
  for (const DualScalar& c : f.coeffs()) {
    arr.push_back(json::array({rat_to_json(c.prime), rat_to_json(c.double_prime)}));
  }
  return arr.dump();
}

SeriesA parse_series_a(std::string_view text) {
  json arr = json::parse(text);
  if (!arr.is_array() || arr.empty()) throw std::invalid_argument("series literal must be a non-empty array");
  std::vector<Rational> coeffs;
  for (const json& j : arr) coeffs.push_back(rat_from_json(j));
  return SeriesA(std::move(coeffs));
}

SeriesB parse_series_b(std::string_view text) {
  json arr = json::parse(text);
  if (!arr.is_array() || arr.empty()) throw std::invalid_argument("series literal must be a non-empty array");
  std::vector<DualScalar> coeffs;
  for (const json& j : arr) {
    if (!j.is_array() || j.size() != 2) {
      throw std::invalid_argument("type-B series entries are pairs [a', a'']");
    }
    coeffs.emplace_back(rat_from_json(j[0]), rat_from_json(j[1]));
  }
  return SeriesB(std::move(coeffs));
}

}  // namespace ncb
