#pragma once

#include "ncb/rational.hpp"

#include <stdexcept>
#include <vector>

namespace ncb {

// k x k rational matrices with phi = normalized trace. Concrete oracle
// space for the type-A cumulant arithmetic.
class MatrixSpaceA {
 public:
  using Element = std::vector<std::vector<Rational>>;

  explicit MatrixSpaceA(int k) : k_(k) {
    if (k < 1) throw std::domain_error("MatrixSpaceA needs k >= 1");
  }

  int dim() const { return k_; }

  Element unit() const {
    Element m(static_cast<std::size_t>(k_), std::vector<Rational>(static_cast<std::size_t>(k_), Rational(0)));
    for (int i = 0; i < k_; ++i) m[i][i] = 1;
    return m;
  }

  Element zero() const {
    return Element(static_cast<std::size_t>(k_), std::vector<Rational>(static_cast<std::size_t>(k_), Rational(0)));
  }

  Element diagonal(const std::vector<Rational>& entries) const {
    if (static_cast<int>(entries.size()) != k_) throw std::invalid_argument("diagonal needs k entries");
    Element m = zero();
    for (int i = 0; i < k_; ++i) m[i][i] = entries[static_cast<std::size_t>(i)];
    return m;
  }

  Element mul(const Element& a, const Element& b) const {
    Element out = zero();
    for (int i = 0; i < k_; ++i) {
      for (int l = 0; l < k_; ++l) {
        if (a[i][l] == 0) continue;
        for (int j = 0; j < k_; ++j) out[i][j] += a[i][l] * b[l][j];
      }
    }
    return out;
  }

  Element add(const Element& a, const Element& b) const {
    Element out = a;
    for (int i = 0; i < k_; ++i) {
      for (int j = 0; j < k_; ++j) out[i][j] += b[i][j];
    }
    return out;
  }

  Element scale(const Rational& r, const Element& a) const {
    Element out = a;
    for (auto& row : out) {
      for (auto& x : row) x *= r;
    }
    return out;
  }

  Rational phi(const Element& a) const {
    Rational tr(0);
    for (int i = 0; i < k_; ++i) tr += a[i][i];
    return tr / k_;
  }

  Element random_element(Rng& rng) const {
    Element m = zero();
    for (auto& row : m) {
      for (auto& x : row) x = rng.rational();
    }
    return m;
  }

 private:
  int k_;
};

}  // namespace ncb
