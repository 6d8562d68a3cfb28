#pragma once

#include "ncb/dual.hpp"
#include "ncb/partition.hpp"
#include "ncb/rational.hpp"
#include "ncb/series.hpp"

#include <concepts>
#include <map>
#include <utility>
#include <vector>

namespace ncb {

// Non-commutative probability space of type A: a unital algebra with a
// normalized linear expectation.
template <class S>
concept ProbSpaceA = requires(const S& s, const typename S::Element& a, const Rational& r) {
  { s.unit() } -> std::same_as<typename S::Element>;
  { s.mul(a, a) } -> std::same_as<typename S::Element>;
  { s.add(a, a) } -> std::same_as<typename S::Element>;
  { s.scale(r, a) } -> std::same_as<typename S::Element>;
  { s.phi(a) } -> std::same_as<Rational>;
};

// Type B adds a bimodule V with a linear functional f and the two-sided
// action a xi b.
template <class S>
concept ProbSpaceB = ProbSpaceA<S> &&
    requires(const S& s, const typename S::Element& a, const typename S::Vector& v,
             const Rational& r) {
      { s.zero_vector() } -> std::same_as<typename S::Vector>;
      { s.vadd(v, v) } -> std::same_as<typename S::Vector>;
      { s.vscale(r, v) } -> std::same_as<typename S::Vector>;
      { s.act_left(a, v) } -> std::same_as<typename S::Vector>;
      { s.act_right(v, a) } -> std::same_as<typename S::Vector>;
      { s.f(v) } -> std::same_as<Rational>;
    };

template <ProbSpaceA S>
Rational phi_of_product(const S& s, const std::vector<typename S::Element>& args) {
  typename S::Element acc = s.unit();
  for (const auto& a : args) acc = s.mul(acc, a);
  return s.phi(acc);
}

namespace detail {

// mask -> cumulant of the sub-tuple it selects, with the defining recursion
//   kappa(mask) = moment(mask) - sum over p != 1 of prod_F kappa(F)
// where p runs over non-crossing partitions of the selected positions.
// Value is any ring with +, -, *; Moment maps a position mask to the ring.
template <class Value, class Moment>
class CumulantSolver {
 public:
  CumulantSolver(int n, Moment moment) : n_(n), moment_(std::move(moment)) {}

  Value solve(std::uint32_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    std::vector<int> pos;
    for (int i = 0; i < n_; ++i) {
      if (mask & (std::uint32_t{1} << i)) pos.push_back(i);
    }
    Value acc = moment_(mask);
    if (pos.size() > 1) {
      for (const NCPartitionA& p : nca_cache(static_cast<int>(pos.size()))) {
        if (p.block_count() == 1) continue;
        Value term = solve(block_mask(p.blocks()[0], pos));
        for (std::size_t b = 1; b < p.blocks().size(); ++b) {
          term = term * solve(block_mask(p.blocks()[b], pos));
        }
        acc -= term;
      }
    }
    memo_.emplace(mask, acc);
    return acc;
  }

  Value solve_all() { return solve((std::uint32_t{1} << n_) - 1); }

 private:
  static std::uint32_t block_mask(const Block& block, const std::vector<int>& pos) {
    std::uint32_t m = 0;
    for (int e : block) m |= std::uint32_t{1} << pos[static_cast<std::size_t>(e) - 1];
    return m;
  }

  int n_;
  Moment moment_;
  std::map<std::uint32_t, Value> memo_;
};

}  // namespace detail

// kappa^(A)_n, the multilinear inversion of
//   phi(a_1...a_n) = sum over p in NC^(A)(n) of prod_F kappa_{card F}(args|F).
template <ProbSpaceA S>
Rational cumulant_a(const S& s, const std::vector<typename S::Element>& args) {
  const int n = static_cast<int>(args.size());
  if (n < 1) throw std::domain_error("cumulant_a: need n >= 1 arguments");
  auto moment = [&](std::uint32_t mask) {
    std::vector<typename S::Element> sub;
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) sub.push_back(args[static_cast<std::size_t>(i)]);
    }
    return phi_of_product(s, sub);
  };
  detail::CumulantSolver<Rational, decltype(moment)> solver(n, moment);
  return solver.solve_all();
}

// kappa^(A')_{n;m}: same combinatorics with the m-th argument a vector and
// f replacing phi on the block through it. algebra_args has n-1 entries;
// slot is 1-based.
template <ProbSpaceB S>
Rational cumulant_a_prime(const S& s, const std::vector<typename S::Element>& algebra_args,
                          const typename S::Vector& xi, int slot) {
  const int n = static_cast<int>(algebra_args.size()) + 1;
  if (slot < 1 || slot > n) throw std::domain_error("cumulant_a_prime: slot out of range");
  const int vslot = slot - 1;
  auto element_at = [&](int i) -> const typename S::Element& {
    return algebra_args[static_cast<std::size_t>(i < vslot ? i : i - 1)];
  };
  auto moment = [&](std::uint32_t mask) -> Rational {
    if (!(mask & (std::uint32_t{1} << vslot))) {
      std::vector<typename S::Element> sub;
      for (int i = 0; i < n; ++i) {
        if (mask & (std::uint32_t{1} << i)) sub.push_back(element_at(i));
      }
      return phi_of_product(s, sub);
    }
    typename S::Vector v = xi;
    for (int i = vslot - 1; i >= 0; --i) {
      if (mask & (std::uint32_t{1} << i)) v = s.act_left(element_at(i), v);
    }
    for (int i = vslot + 1; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) v = s.act_right(v, element_at(i));
    }
    return s.f(v);
  };
  detail::CumulantSolver<Rational, decltype(moment)> solver(n, moment);
  return solver.solve_all();
}

// Product in the linking algebra A x V:
//   (a_1,xi_1)...(a_n,xi_n) = (a_1...a_n, sum_m a_1...a_{m-1} xi_m a_{m+1}...a_n).
template <ProbSpaceB S>
std::pair<typename S::Element, typename S::Vector> linking_product(
    const S& s, const std::vector<std::pair<typename S::Element, typename S::Vector>>& pairs) {
  if (pairs.empty()) throw std::domain_error("linking_product: need n >= 1 factors");
  typename S::Element a = pairs.front().first;
  typename S::Vector v = pairs.front().second;
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    v = s.vadd(s.act_left(a, pairs[i].second), s.act_right(v, pairs[i].first));
    a = s.mul(a, pairs[i].first);
  }
  return {std::move(a), std::move(v)};
}

// E((a_1,xi_1)...(a_n,xi_n)) = (phi(prod), f(mixed sum)).
template <ProbSpaceB S>
DualScalar expectation_b(const S& s,
                         const std::vector<std::pair<typename S::Element, typename S::Vector>>& pairs) {
  auto [a, v] = linking_product(s, pairs);
  return DualScalar(s.phi(a), s.f(v));
}

// kappa^(B)_n: dual-number-valued cumulants inverting
//   sum over p of prod_F kappa^(B)_{card F}(pairs|F) = E(prod pairs),
// solved by the same recursion as cumulant_a but in the dual algebra.
template <ProbSpaceB S>
DualScalar cumulant_b(const S& s,
                      const std::vector<std::pair<typename S::Element, typename S::Vector>>& pairs) {
  const int n = static_cast<int>(pairs.size());
  if (n < 1) throw std::domain_error("cumulant_b: need n >= 1 arguments");
  auto moment = [&](std::uint32_t mask) {
    std::vector<std::pair<typename S::Element, typename S::Vector>> sub;
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) sub.push_back(pairs[static_cast<std::size_t>(i)]);
    }
    return expectation_b(s, sub);
  };
  detail::CumulantSolver<DualScalar, decltype(moment)> solver(n, moment);
  return solver.solve_all();
}

// The componentwise description:
//   kappa^(B)_n = ( kappa^(A)_n(a_1..a_n),
//                   sum_m kappa^(A')_n(a_1,..,xi_m,..,a_n) ).
// Kept as a second, independent evaluation path.
template <ProbSpaceB S>
DualScalar cumulant_b_componentwise(
    const S& s, const std::vector<std::pair<typename S::Element, typename S::Vector>>& pairs) {
  const int n = static_cast<int>(pairs.size());
  if (n < 1) throw std::domain_error("cumulant_b: need n >= 1 arguments");
  std::vector<typename S::Element> algebra;
  for (const auto& pr : pairs) algebra.push_back(pr.first);
  const Rational first = cumulant_a(s, algebra);
  Rational second(0);
  for (int m = 1; m <= n; ++m) {
    std::vector<typename S::Element> others;
    for (int i = 0; i < n; ++i) {
      if (i != m - 1) others.push_back(pairs[static_cast<std::size_t>(i)].first);
    }
    second += cumulant_a_prime(s, others, pairs[static_cast<std::size_t>(m) - 1].second, m);
  }
  return DualScalar(first, second);
}

// Moment series M(z) = sum E((a,xi)^n) z^n and R-transform
// R(z) = sum kappa^(B)_n((a,xi),...,(a,xi)) z^n, truncated at N.
// They satisfy M = R boxconv_b zeta'.
template <ProbSpaceB S>
SeriesB moment_series_b(const S& s,
                        const std::pair<typename S::Element, typename S::Vector>& couple, int order) {
  SeriesB m(order);
  typename S::Element a = couple.first;
  typename S::Vector v = couple.second;
  for (int k = 1; k <= order; ++k) {
    m.set_coeff(k, DualScalar(s.phi(a), s.f(v)));
    if (k < order) {
      v = s.vadd(s.act_left(a, couple.second), s.act_right(v, couple.first));
      a = s.mul(a, couple.first);
    }
  }
  return m;
}

template <ProbSpaceB S>
SeriesB r_transform_b(const S& s,
                      const std::pair<typename S::Element, typename S::Vector>& couple, int order) {
  SeriesB r(order);
  for (int k = 1; k <= order; ++k) {
    r.set_coeff(k, cumulant_b(s, std::vector<std::pair<typename S::Element, typename S::Vector>>(
                                     static_cast<std::size_t>(k), couple)));
  }
  return r;
}

}  // namespace ncb
