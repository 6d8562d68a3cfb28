#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ncb {

// Element of S_n acting on [n] = {1..n}.
class Permutation {
 public:
  explicit Permutation(int n);  // identity
  Permutation(int n, std::vector<int> images);

  int n() const { return n_; }
  int operator()(int i) const;  // image of i, 1 <= i <= n
  const std::vector<int>& images() const { return img_; }
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation& o) const = default;
  bool operator<(const Permutation& o) const;

 private:
  int n_;
  std::vector<int> img_;  // img_[i-1] = image of i
};

// Element of the hyperoctahedral group W_n: a permutation tau of
// [±n] = {1..n, -1..-n} with tau(-i) = -tau(i). Only the images of the
// positive half are stored.
class SignedPermutation {
 public:
  explicit SignedPermutation(int n);  // identity
  SignedPermutation(int n, std::vector<int> images_of_positive);

  int n() const { return n_; }
  int operator()(int x) const;  // x in ±[1..n]
  const std::vector<int>& images() const { return img_; }
  SignedPermutation inverse() const;
  bool is_identity() const;

  bool operator==(const SignedPermutation& o) const = default;
  bool operator<(const SignedPermutation& o) const;

 private:
  int n_;
  std::vector<int> img_;  // img_[i-1] = image of +i
};

// Composition acts right factor first: (a*b)(x) = a(b(x)). This is the
// convention under which right multiplication by a transposition joining
// two orbits implements a cover, and under which iota(Kr(p)) = iota(p)^{-1} c.
Permutation compose(const Permutation& a, const Permutation& b);
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

// Cycles in canonical form: each cycle starts at the smallest element of
// its orbit (ground order) and follows images; cycles sorted by that
// minimum; fixed points included.
std::vector<std::vector<int>> cycles(const Permutation& t);
std::vector<std::vector<int>> cycles(const SignedPermutation& t);

// Orbits as sorted sets (ground order), sorted by minimum.
std::vector<std::vector<int>> orbits(const Permutation& t);
std::vector<std::vector<int>> orbits(const SignedPermutation& t);

// Cycle notation, singletons omitted; the identity prints as "()".
// Parsing accepts whitespace anywhere and validates disjointness; signed
// input must satisfy the symmetry tau(-i) = -tau(i) once all written
// cycles are applied (mirror cycles are not implied).
std::string to_cycle_string(const Permutation& t);
std::string to_cycle_string(const SignedPermutation& t);
Permutation parse_permutation(std::string_view text, int n);
SignedPermutation parse_signed_permutation(std::string_view text, int n);

// JSON image-array form, e.g. {"group":"S","n":6,"images":[3,6,4,1,5,2]}.
std::string to_json_string(const Permutation& t);
std::string to_json_string(const SignedPermutation& t);
Permutation permutation_from_json(std::string_view text);
SignedPermutation signed_permutation_from_json(std::string_view text);

}  // namespace ncb
