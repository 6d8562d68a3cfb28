#include "ncb/cayley.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ncb {

namespace {

int bkey(int x, int n) { return x > 0 ? x - 1 : n + (-x) - 1; }

// Orbit id of every point; type B ids are indexed by bkey.
std::vector<int> orbit_ids(const Permutation& t) {
  std::vector<int> id(static_cast<std::size_t>(t.n()), -1);
  int next = 0;
  for (int i = 1; i <= t.n(); ++i) {
    if (id[i - 1] >= 0) continue;
    for (int x = i; id[x - 1] < 0; x = t(x)) id[x - 1] = next;
    ++next;
  }
  return id;
}

std::vector<int> orbit_ids(const SignedPermutation& t) {
  const int n = t.n();
  std::vector<int> id(static_cast<std::size_t>(2 * n), -1);
  int next = 0;
  for (int r = 0; r < 2 * n; ++r) {
    const int start = r < n ? r + 1 : -(r - n + 1);
    if (id[bkey(start, n)] >= 0) continue;
    for (int x = start; id[bkey(x, n)] < 0; x = t(x)) id[bkey(x, n)] = next;
    ++next;
  }
  return id;
}

int invariant_orbit_count(const SignedPermutation& tau) {
  int count = 0;
  for (const auto& orb : orbits(tau)) {
    std::set<int> s(orb.begin(), orb.end());
    bool invariant = true;
    for (int x : orb) {
      if (!s.count(-x)) {
        invariant = false;
        break;
      }
    }
    if (invariant) ++count;
  }
  return count;
}

}  // namespace

int word_length(const Permutation& t) {
  return t.n() - static_cast<int>(orbits(t).size());
}

int word_length(const SignedPermutation& tau) {
  const int total = static_cast<int>(orbits(tau).size());
  const int invariant = invariant_orbit_count(tau);
  return tau.n() - (total - invariant) / 2;
}

bool leq(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::domain_error("leq: mismatched groups");
  return word_length(a) + word_length(compose(a.inverse(), b)) == word_length(b);
}

bool leq(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.n() != b.n()) throw std::domain_error("leq: mismatched groups");
  return word_length(a) + word_length(compose(a.inverse(), b)) == word_length(b);
}

bool covers(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::domain_error("covers: mismatched groups");
  const Permutation rho = compose(a.inverse(), b);
  int i = 0, j = 0, moved = 0;
  for (int x = 1; x <= rho.n(); ++x) {
    if (rho(x) != x) {
      ++moved;
      if (moved == 1) i = x;
      if (moved == 2) j = x;
    }
  }
  if (moved != 2 || rho(i) != j) return false;  // not a transposition
  const auto id = orbit_ids(a);
  return id[i - 1] != id[j - 1];
}

bool covers(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.n() != b.n()) throw std::domain_error("covers: mismatched groups");
  const int n = a.n();
  const SignedPermutation rho = compose(a.inverse(), b);

  std::vector<int> moved;
  for (int x = 1; x <= n; ++x) {
    if (rho(x) != x) moved.push_back(x);
  }
  const auto id = orbit_ids(a);
  auto same = [&](int x, int y) { return id[bkey(x, n)] == id[bkey(y, n)]; };

  if (moved.size() == 1) {
    // candidate (i,-i)
    const int i = moved.front();
    if (rho(i) != -i) return false;
    return !same(i, -i);  // case (a)
  }
  if (moved.size() != 2) return false;
  // candidate (i,j)(-i,-j) with |i| != |j|: rho swaps i with ±j
  const int i = moved[0];
  const int j = rho(i);
  if (std::abs(j) == i || rho(j) != i) return false;

  const bool p = same(i, -i);
  const bool q = same(j, -j);
  if (p && q) return false;
  if (p != q) return true;      // case (b)
  if (same(i, -j)) return true;  // case (d); the orbit is non-invariant since !p
  if (same(i, j)) return false;
  return true;  // case (c): no two of i, j, -i, -j share an orbit
}

namespace {

template <class Element>
std::vector<Element> interval_bfs(const Element& top, const std::vector<Element>& gens) {
  const int top_len = word_length(top);
  std::set<Element> seen;
  std::vector<Element> frontier{Element(top.n())};
  seen.insert(frontier.front());
  for (int len = 0; len < top_len; ++len) {
    std::vector<Element> next;
    for (const Element& a : frontier) {
      for (const Element& r : gens) {
        Element c = compose(a, r);
        if (word_length(c) != len + 1 || seen.count(c)) continue;
        if (!leq(c, top)) continue;
        seen.insert(c);
        next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Element> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Element& x, const Element& y) {
    const int lx = word_length(x), ly = word_length(y);
    if (lx != ly) return lx < ly;
    return x < y;
  });
  return out;
}

}  // namespace

std::vector<Permutation> interval(const Permutation& top) {
  return interval_bfs(top, transpositions(top.n()));
}

std::vector<SignedPermutation> interval(const SignedPermutation& top) {
  return interval_bfs(top, reflections(top.n()));
}

std::vector<Permutation> transpositions(int n) {
  std::vector<Permutation> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 1);
      std::swap(img[i - 1], img[j - 1]);
      out.emplace_back(n, std::move(img));
    }
  }
  return out;
}

std::vector<SignedPermutation> reflections(int n) {
  std::vector<SignedPermutation> out;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    img[i - 1] = -i;
    out.emplace_back(n, std::move(img));  // (i,-i)
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int sign : {1, -1}) {
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 1);
        img[i - 1] = sign * j;  // (i, sj)(-i, -sj)
        img[j - 1] = sign * i;
        out.emplace_back(n, std::move(img));
      }
    }
  }
  return out;
}

std::vector<Permutation> all_elements_a(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(n, img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<SignedPermutation> all_elements_b(int n) {
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (std::uint32_t signs = 0; signs < (std::uint32_t{1} << n); ++signs) {
      std::vector<int> img = base;
      for (int i = 0; i < n; ++i) {
        if (signs & (std::uint32_t{1} << i)) img[i] = -img[i];
      }
      out.emplace_back(n, std::move(img));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

OrbitCensusA orbit_census(const Permutation& t) {
  OrbitCensusA census;
  census.k.assign(static_cast<std::size_t>(t.n()), 0);
  for (const auto& orb : orbits(t)) census.k[orb.size() - 1] += 1;
  return census;
}

OrbitCensusB orbit_census(const SignedPermutation& tau) {
  const int n = tau.n();
  OrbitCensusB census;
  census.k.assign(static_cast<std::size_t>(n), 0);
  census.l.assign(static_cast<std::size_t>(n), 0);
  std::set<std::vector<int>> counted_mirrors;
  for (const auto& orb : orbits(tau)) {
    std::set<int> s(orb.begin(), orb.end());
    const bool invariant = std::all_of(orb.begin(), orb.end(), [&](int x) { return s.count(-x); });
    if (invariant) {
      census.l[orb.size() / 2 - 1] += 1;
      continue;
    }
    std::vector<int> self(orb.begin(), orb.end());
    std::sort(self.begin(), self.end());
    if (counted_mirrors.count(self)) continue;  // second half of a pair {X, -X}
    std::vector<int> mirror;
    for (int x : self) mirror.push_back(-x);
    std::sort(mirror.begin(), mirror.end());
    counted_mirrors.insert(mirror);
    census.k[orb.size() - 1] += 1;
  }
  return census;
}

CycleFactorizationB cycle_factorization_b(const SignedPermutation& tau) {
  if (tau.is_identity()) throw std::domain_error("cycle_factorization_b: identity has no factorization");
  const int n = tau.n();

  std::vector<std::vector<int>> pair_supports;
  std::vector<std::vector<int>> invariant_supports;
  std::set<std::vector<int>> consumed_mirrors;
  for (const auto& orb : orbits(tau)) {
    if (orb.size() < 2) continue;
    std::set<int> s(orb.begin(), orb.end());
    const bool invariant = std::all_of(orb.begin(), orb.end(), [&](int x) { return s.count(-x); });
    std::vector<int> self(orb.begin(), orb.end());
    std::sort(self.begin(), self.end());
    if (invariant) {
      invariant_supports.push_back(std::move(self));
      continue;
    }
    if (consumed_mirrors.count(self)) continue;  // mirror orbit of a processed pair
    std::vector<int> mirror;
    for (int x : self) mirror.push_back(-x);
    std::sort(mirror.begin(), mirror.end());
    consumed_mirrors.insert(mirror);
    std::vector<int> y = self;
    y.insert(y.end(), mirror.begin(), mirror.end());
    std::sort(y.begin(), y.end());
    pair_supports.push_back(std::move(y));
  }
  auto by_ground_min = [n](const std::vector<int>& a, const std::vector<int>& b) {
    auto ground_min = [n](const std::vector<int>& v) {
      int best = bkey(v.front(), n);
      for (int x : v) best = std::min(best, bkey(x, n));
      return best;
    };
    return ground_min(a) < ground_min(b);
  };
  std::sort(pair_supports.begin(), pair_supports.end(), by_ground_min);
  std::sort(invariant_supports.begin(), invariant_supports.end(), by_ground_min);

  CycleFactorizationB fact;
  auto add_factor = [&](const std::vector<int>& support) {
    std::set<int> s(support.begin(), support.end());
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) img[i - 1] = s.count(i) ? tau(i) : i;
    fact.factors.emplace_back(n, std::move(img));
    std::vector<int> y(support.begin(), support.end());
    std::sort(y.begin(), y.end(), [n](int a, int b) { return bkey(a, n) < bkey(b, n); });
    fact.supports.push_back(std::move(y));
  };
  for (const auto& y : pair_supports) add_factor(y);
  for (const auto& y : invariant_supports) add_factor(y);
  return fact;
}

std::vector<IntervalFactor> interval_factorize(const SignedPermutation& tau) {
  const int n = tau.n();
  SignedPermutation omega = [&] {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) img[i - 1] = i + 1;
    img[n - 1] = -1;
    return SignedPermutation(n, std::move(img));
  }();
  if (tau.is_identity()) throw std::domain_error("interval_factorize: tau must differ from the identity");
  if (!leq(tau, omega)) throw std::domain_error("interval_factorize: tau is not below omega");

  std::vector<IntervalFactor> out;
  const CycleFactorizationB fact = cycle_factorization_b(tau);
  for (std::size_t j = 0; j < fact.factors.size(); ++j) {
    const auto& y = fact.supports[j];
    bool single_invariant_orbit = false;
    for (const auto& orb : orbits(fact.factors[j])) {
      if (orb.size() == y.size()) single_invariant_orbit = true;
    }
    IntervalFactor f;
    f.support = y;
    f.kind = single_invariant_orbit ? FactorKind::B : FactorKind::A;
    // card X for a pair support X ∪ (-X), card Z / 2 for an invariant orbit
    f.lattice_order = static_cast<int>(y.size()) / 2;
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

template <class Element>
Rational convolution_at(const GroupFunction<Element>& u, const GroupFunction<Element>& v,
                        const Element& a) {
  if (u.n() != v.n()) throw std::domain_error("restricted convolution: mismatched groups");
  if (a.n() != u.n()) throw std::domain_error("restricted convolution: element of wrong group");
  Rational acc(0);
  for (const Element& b : interval(a)) {
    const Rational ub = u.at(b);
    if (ub == 0) continue;
    acc += ub * v.at(compose(b.inverse(), a));
  }
  return acc;
}

}  // namespace

Rational restricted_convolution_at(const GroupFunction<Permutation>& u,
                                   const GroupFunction<Permutation>& v, const Permutation& a) {
  return convolution_at(u, v, a);
}

Rational restricted_convolution_at(const GroupFunction<SignedPermutation>& u,
                                   const GroupFunction<SignedPermutation>& v,
                                   const SignedPermutation& a) {
  return convolution_at(u, v, a);
}

GroupFunction<Permutation> restricted_convolution(const GroupFunction<Permutation>& u,
                                                  const GroupFunction<Permutation>& v) {
  GroupFunction<Permutation> out(u.n());
  for (const Permutation& a : all_elements_a(u.n())) out.set(a, convolution_at(u, v, a));
  return out;
}

GroupFunction<SignedPermutation> restricted_convolution(
    const GroupFunction<SignedPermutation>& u, const GroupFunction<SignedPermutation>& v) {
  GroupFunction<SignedPermutation> out(u.n());
  for (const SignedPermutation& a : all_elements_b(u.n())) out.set(a, convolution_at(u, v, a));
  return out;
}

}  // namespace ncb
