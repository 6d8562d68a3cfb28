#pragma once

#include "ncb/permutation.hpp"
#include "ncb/rational.hpp"

#include <map>
#include <vector>

namespace ncb {

// Word length over the marked generating sets: all transpositions T_n for
// S_n, all reflections R_n = {(i,-i)} ∪ {(i,j)(-i,-j)} for W_n.
//   |t|   = n - (number of orbits of t)
//   |tau| = n - (number of pairs of orbits not invariant under inversion)
int word_length(const Permutation& t);
int word_length(const SignedPermutation& tau);

// Geodesic partial order: a <= b iff |a| + |a^{-1} b| = |b|.
bool leq(const Permutation& a, const Permutation& b);
bool leq(const SignedPermutation& a, const SignedPermutation& b);

// Cover relations, decided structurally: in S_n, b covers a iff a^{-1} b is
// a transposition joining two orbits of a; in W_n, iff a^{-1} b is a
// reflection falling in one of the four orbit configurations (a)-(d) that
// raise length by one. Equivalent to a <= b and |b| = |a| + 1.
bool covers(const Permutation& a, const Permutation& b);
bool covers(const SignedPermutation& a, const SignedPermutation& b);

// The interval [e, top], enumerated by breadth-first search over cover
// relations, restricted to elements <= top. Sorted by (length, images).
std::vector<Permutation> interval(const Permutation& top);
std::vector<SignedPermutation> interval(const SignedPermutation& top);

// Generating sets.
std::vector<Permutation> transpositions(int n);        // T_n, size C(n,2)
std::vector<SignedPermutation> reflections(int n);     // R_n, size n^2

// Whole groups (test oracles and whole-group convolutions only).
std::vector<Permutation> all_elements_a(int n);        // n! elements
std::vector<SignedPermutation> all_elements_b(int n);  // 2^n n! elements

// Orbit census. Type A: k[m-1] = number of orbits of cardinality m, so
// sum m*k_m = n. Type B: k[m-1] = number of PAIRS of non-inversion-invariant
// orbits of cardinality m (fixed points land in k_1), l[m-1] = number of
// inversion-invariant orbits of cardinality 2m; sum m*(2k_m + 2l_m) = 2n.
struct OrbitCensusA {
  std::vector<int> k;
};
struct OrbitCensusB {
  std::vector<int> k;
  std::vector<int> l;
};
OrbitCensusA orbit_census(const Permutation& t);
OrbitCensusB orbit_census(const SignedPermutation& tau);

// Cycle factorization of type B: commuting factors supported on the
// inversion-invariant sets Y_j built from the non-singleton orbits —
// unions X ∪ (-X) of non-invariant orbit pairs first, invariant orbits Z
// after, each group ordered by minimal support element. Word lengths add:
// |tau| = sum |factor_j|. Rejects the identity.
struct CycleFactorizationB {
  std::vector<SignedPermutation> factors;
  std::vector<std::vector<int>> supports;  // the sets Y_j, ground-sorted
};
CycleFactorizationB cycle_factorization_b(const SignedPermutation& tau);

// Structure of [eps, tau] for eps != tau <= omega: one lattice factor per
// cycle-factorization support — NC^(A)(card X) for a non-invariant pair
// X ∪ (-X), NC^(B)(card Z / 2) for the (at most one) invariant orbit Z.
// card(interval(tau)) is the product of the factor cardinalities.
enum class FactorKind { A, B };
struct IntervalFactor {
  std::vector<int> support;  // the set Y_j
  FactorKind kind;
  int lattice_order;  // card X (kind A) or card Z / 2 (kind B)
};
std::vector<IntervalFactor> interval_factorize(const SignedPermutation& tau);

// Finitely supported exact-scalar function on S_n or W_n (default value 0).
template <class Element>
class GroupFunction {
 public:
  explicit GroupFunction(int n) : n_(n) {}

  int n() const { return n_; }
  Rational at(const Element& x) const {
    auto it = values_.find(x);
    return it == values_.end() ? Rational(0) : it->second;
  }
  void set(const Element& x, Rational v) {
    if (x.n() != n_) throw std::domain_error("group function: element of wrong group");
    if (v == 0) {
      values_.erase(x);
    } else {
      values_[x] = std::move(v);
    }
  }
  const std::map<Element, Rational>& support() const { return values_; }

 private:
  int n_;
  std::map<Element, Rational> values_;
};

// chi_e, the unit of the restricted-convolution algebra.
template <class Element>
GroupFunction<Element> chi_e(int n) {
  GroupFunction<Element> u(n);
  u.set(Element(n), Rational(1));
  return u;
}

// (u *_r v)(a) = sum over geodesic factorizations bc = a, |b|+|c| = |a|,
// i.e. sum over b in [e, a] of u(b) v(b^{-1} a).
Rational restricted_convolution_at(const GroupFunction<Permutation>& u,
                                   const GroupFunction<Permutation>& v, const Permutation& a);
Rational restricted_convolution_at(const GroupFunction<SignedPermutation>& u,
                                   const GroupFunction<SignedPermutation>& v,
                                   const SignedPermutation& a);

// Full convolution, evaluated over the whole group (intended for the small
// groups used in tests; intervals keep each evaluation cheap).
GroupFunction<Permutation> restricted_convolution(const GroupFunction<Permutation>& u,
                                                  const GroupFunction<Permutation>& v);
GroupFunction<SignedPermutation> restricted_convolution(
    const GroupFunction<SignedPermutation>& u, const GroupFunction<SignedPermutation>& v);

}  // namespace ncb
