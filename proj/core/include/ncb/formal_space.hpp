#pragma once

#include "ncb/dual.hpp"
#include "ncb/rational.hpp"
#include "ncb/series.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace ncb {

// Concrete non-commutative probability space of type B over k generator
// pairs (g_i, x_i): the algebra of formal linear combinations of words in
// the g_i, acting on the span of words with one x slot. phi and f are
// prescribed in one of two modes:
//
//  - moment mode: explicit tables, total up to a degree bound; querying a
//    longer or missing word throws std::domain_error (never a silent 0).
//  - cumulant mode: generated from per-pair cumulant prescriptions R_i via
//    the moment formulas, with every mixed cumulant zero: a pure block of
//    cardinality c on pair i contributes R_i[c].prime, a block of
//    cardinality c through the vector slot contributes
//    R_i[c].double_prime / c (so the slot positions sum to the prescribed
//    second component), and blocks beyond the prescription order
//    contribute 0. By construction the pairs are freely independent and
//    pair i has R-transform R_i up to the prescription order.
class FormalSpaceB {
 public:
  using Word = std::vector<int>;  // generator ids, 0-based; empty = I

  struct VWord {
    Word pre;
    int xi = 0;  // pair id of the vector slot
    Word post;
    auto operator<=>(const VWord&) const = default;
  };

  using Element = std::map<Word, Rational>;
  using Vector = std::map<VWord, Rational>;

  static FormalSpaceB from_cumulants(std::vector<SeriesB> prescriptions);
  static FormalSpaceB from_moment_tables(int pair_count, int degree_bound,
                                         std::map<Word, Rational> phi_table,
                                         std::map<VWord, Rational> f_table);

  int pair_count() const { return pair_count_; }
  bool cumulant_mode() const { return !prescriptions_.empty(); }
  int degree_bound() const { return degree_bound_; }  // -1 when unbounded

  // -- algebra / bimodule structure --------------------------------------
  Element unit() const;
  Element zero() const;
  Element generator(int i) const;
  Vector vector_generator(int i) const;
  std::pair<Element, Vector> pair(int i) const;  // (g_i, x_i)

  Element mul(const Element& a, const Element& b) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(const Rational& r, const Element& a) const;
  Vector zero_vector() const;
  Vector vadd(const Vector& v, const Vector& w) const;
  Vector vscale(const Rational& r, const Vector& v) const;
  Vector act_left(const Element& a, const Vector& v) const;
  Vector act_right(const Vector& v, const Element& a) const;

  // -- expectations -------------------------------------------------------
  Rational phi(const Element& a) const;
  Rational f(const Vector& v) const;
  Rational word_moment(const Word& w) const;
  Rational vword_moment(const VWord& vw) const;

  // Table-mode copy with every moment up to `bound` filled in; starting
  // point for perturbed (non-free) variants.
  FormalSpaceB materialized(int bound) const;

  // Moment-mode only: overwrite a single table entry.
  void set_word_moment(const Word& w, Rational value);
  void set_vword_moment(const VWord& vw, Rational value);

  std::vector<Word> words_up_to(int length) const;
  std::vector<VWord> vwords_up_to(int length) const;  // total length incl. slot

 private:
  FormalSpaceB() = default;

  Rational cumulant_word_moment(const Word& w) const;
  Rational cumulant_vword_moment(const VWord& vw) const;

  int pair_count_ = 0;
  int degree_bound_ = -1;
  std::vector<SeriesB> prescriptions_;  // cumulant mode
  std::map<Word, Rational> phi_table_;  // moment mode
  std::map<VWord, Rational> f_table_;
  mutable std::map<Word, Rational> phi_memo_;  // cumulant mode
  mutable std::map<VWord, Rational> f_memo_;
};

// Two-generator space in cumulant mode with mixed cumulants vanishing and
// prescribed pure R-transforms; by the cumulant criterion the two marked
// pairs are freely independent of type B.
FormalSpaceB make_free_pair(const SeriesB& r1, const SeriesB& r2, int order);

struct FreenessReport {
  bool pass = false;
  int depth = 0;
  std::string witness;  // first violation, if any
};

// Evaluates every mixed cumulant over generator tuples up to the given
// depth: kappa^(B)_n on the pairs, kappa^(A)_n on the algebra generators,
// and every slot-wise kappa^(A')_n. Passes iff all vanish.
FreenessReport mixed_cumulant_check(const FormalSpaceB& space, int depth);

// Moment-side definition of type-B free independence: alternating centered
// products have phi = 0, and f on centered words around a vector slot obeys
// the delta-product formula (0 when the two sides have different lengths).
FreenessReport free_independence_moment_check(const FormalSpaceB& space, int depth);

// R-transforms of the sum and of the linking-algebra product of the two
// marked pairs of `space`. Requires a passing freeness certificate at depth
// at least `order`; by the sum/product theorems the results equal
// R_1 + R_2 and R_1 boxconv_b R_2.
std::pair<SeriesB, SeriesB> r_sum_product(const FormalSpaceB& space, const FreenessReport& cert,
                                          int order);

}  // namespace ncb
