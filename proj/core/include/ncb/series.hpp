#pragma once

#include "ncb/dual.hpp"
#include "ncb/permutation.hpp"
#include "ncb/rational.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncb {

// Power series without constant term, truncated at a fixed order N >= 1;
// coefficient k is the coefficient of z^k, 1-based. Operations reject
// operands of different truncation orders instead of padding.
template <class Coeff>
class Series {
 public:
  explicit Series(int order) : coeffs_(check_order(order)) {}
  explicit Series(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    check_order(static_cast<int>(coeffs_.size()));
  }

  int order() const { return static_cast<int>(coeffs_.size()); }
  const Coeff& coeff(int k) const { return coeffs_.at(check_index(k) - 1); }
  void set_coeff(int k, Coeff v) { coeffs_.at(check_index(k) - 1) = std::move(v); }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  // Discards coefficients above new_order.
  Series truncate(int new_order) const {
    if (new_order < 1 || new_order > order()) throw std::domain_error("bad truncation order");
    return Series(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + new_order));
  }

  bool operator==(const Series& o) const = default;

  Series& operator+=(const Series& o) {
    if (o.order() != order()) throw std::domain_error("series order mismatch");
    for (int k = 0; k < order(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }

 private:
  static int check_order(int order) {
    if (order < 1) throw std::domain_error("series order must be >= 1");
    return order;
  }
  int check_index(int k) const {
    if (k < 1 || k > order()) throw std::domain_error("series coefficient index out of range");
    return k;
  }

  std::vector<Coeff> coeffs_;
};

using SeriesA = Series<Rational>;    // Theta^(A) truncated
using SeriesB = Series<DualScalar>;  // Theta^(B) truncated

SeriesA delta_a(int order);  // Delta(z) = z, the unit of boxconv_a
SeriesB delta_b(int order);  // Delta'(z) = (1,0)z, the unit of boxconv_b
SeriesA zeta_a(int order);   // zeta(z) = sum z^n
SeriesB zeta_b(int order);   // zeta'(z) = sum (1,0) z^n

// Boxed convolution of type A: gamma_n = sum over p in NC^(A)(n) of
// (prod over blocks F of p of alpha_{card F}) times
// (prod over blocks E of Kr(p) of beta_{card E}).
SeriesA boxconv_a(const SeriesA& f, const SeriesA& g);

// The same summation with all products in the dual-number algebra.
SeriesB boxconv_a_dual(const SeriesB& f, const SeriesB& g);

// Boxed convolution of type B, computed by the literal summations over
// NC^(B)(m): the first components by the type-A sum, the second components
// by the two zero-block sums (zero-block in pi contributes alpha'', in
// Kr(pi) contributes beta''). Coincides with boxconv_a_dual; the two
// implementations are kept independent so that the identity between them
// is a checkable fact rather than an assumption.
SeriesB boxconv_b(const SeriesB& f, const SeriesB& g);

// Two-sided inverse with respect to boxconv_b, solved order by order from
// the triangular coefficient system. Requires the order-1 coefficient to be
// invertible in the dual algebra (first component nonzero).
SeriesB boxconv_b_inverse(const SeriesB& f);

// Multiplicative functions attached to a coefficient tuple:
//   u_alpha(t)   = prod_m alpha_m^{k_m(t)}              on S_n
//   u_alpha(tau) = prod_m (a'_m)^{k_m} (a''_m)^{l_m}    on W_n
// where the exponents come from orbit_census. alpha must have exactly n
// entries for the group of rank n.
Rational u_alpha_a(const SeriesA& alpha, const Permutation& t);
Rational u_alpha_b(const SeriesB& alpha, const SignedPermutation& tau);

// Checks (u_alpha *_r u_beta) = u_{alpha boxconv_b beta} on every element
// of [eps, omega] in W_n, by exact evaluation of both sides.
bool bridge_check_b(const SeriesB& alpha, const SeriesB& beta, int n);

// Single-variable moment/cumulant dictionaries.
//   moments_from_cumulants_a: m_n = sum over p in NC^(A)(n) of prod kappa_{card F}
//   cumulants_from_moments_a: the inverse, solved recursively
// Type B versions go through the convolution formula M = R boxconv zeta'.
std::vector<Rational> moments_from_cumulants_a(const std::vector<Rational>& kappa);
std::vector<Rational> cumulants_from_moments_a(const std::vector<Rational>& moments);
SeriesB moments_from_cumulants_b(const SeriesB& r);
SeriesB cumulants_from_moments_b(const SeriesB& m);

// Series literals are JSON arrays: [1,2,5] for type A,
// [[1,0],[2,3]] for type B; entries are integers or "p/q" strings.
std::string to_string(const SeriesA& f);
std::string to_string(const SeriesB& f);
SeriesA parse_series_a(std::string_view text);
SeriesB parse_series_b(std::string_view text);

}  // namespace ncb
