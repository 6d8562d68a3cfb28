#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncb {

// A block is a set of ground-set elements, stored sorted by the ground order.
using Block = std::vector<int>;

// Total order on the ground set.
//   Type A: [n]  = {1 < 2 < ... < n}
//   Type B: [±n] = {1 < 2 < ... < n < -1 < -2 < ... < -n}
class GroundOrder {
 public:
  enum class Kind { A, B };

  GroundOrder(Kind kind, int n);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int size() const { return kind_ == Kind::A ? n_ : 2 * n_; }

  // 0-based position of x in the order; throws std::invalid_argument if x
  // is not a ground-set element.
  int rank(int x) const;
  int element(int rank) const;
  bool less(int a, int b) const { return rank(a) < rank(b); }
  bool contains(int x) const;
  std::vector<int> elements() const;

 private:
  Kind kind_;
  int n_;
};

// True iff no a < b < c < d (in the given order) has a ~ c and b ~ d in two
// different blocks. Throws std::invalid_argument if the blocks do not form a
// partition of the ground set.
bool is_noncrossing(const std::vector<Block>& blocks, const GroundOrder& order);

// Non-crossing partition of [n], canonical form: blocks sorted by minimum,
// elements ascending. Structural equality coincides with equality of
// partitions.
class NCPartitionA {
 public:
  NCPartitionA(int n, std::vector<Block> blocks);

  static NCPartitionA discrete(int n);  // 0_n, all singletons
  static NCPartitionA full(int n);      // 1_n, one block

  int n() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  bool operator==(const NCPartitionA& o) const = default;
  bool operator<(const NCPartitionA& o) const;

 private:
  struct Trusted {};
  NCPartitionA(Trusted, int n, std::vector<Block> blocks);
  friend class PartitionFactory;

  int n_;
  std::vector<Block> blocks_;
};

// Inversion-invariant non-crossing partition of [±n]. All 2n elements are
// stored explicitly; for every block X, -X is also a block, and at most one
// block satisfies X = -X (the zero-block).
class NCPartitionB {
 public:
  NCPartitionB(int n, std::vector<Block> blocks);

  static NCPartitionB discrete(int n);
  static NCPartitionB full(int n);

  int n() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  // The unique block X with X = -X, if present. Present iff the number of
  // blocks is odd.
  std::optional<Block> zero_block() const;

  bool operator==(const NCPartitionB& o) const = default;
  bool operator<(const NCPartitionB& o) const;

 private:
  struct Trusted {};
  NCPartitionB(Trusted, int n, std::vector<Block> blocks);
  friend class PartitionFactory;

  int n_;
  std::vector<Block> blocks_;
};

enum class KrewerasSide { Right, Left };

// Kreweras complement, computed through the interleaved orders: for the
// right complement each complement point sits immediately after its ground
// element (J = {1 < 1' < 2 < 2' < ...}); for the left version immediately
// before (J' = {1' < 1 < 2' < 2 < ...}). Two complement points fall in the
// same block exactly when no block of the input separates them around the
// circle. kreweras(p, Left) inverts kreweras(p, Right).
NCPartitionA kreweras(const NCPartitionA& p, KrewerasSide side = KrewerasSide::Right);
NCPartitionB kreweras(const NCPartitionB& p, KrewerasSide side = KrewerasSide::Right);

// Reverse-refinement order: p <= q iff every block of p lies inside a block
// of q. Throws std::domain_error on mismatched n.
bool refinement_leq(const NCPartitionA& p, const NCPartitionA& q);
bool refinement_leq(const NCPartitionB& p, const NCPartitionB& q);

// Lattice meet = common refinement (which is automatically non-crossing);
// lattice join = non-crossing closure of the partition-lattice join
// (crossing blocks are merged until none remain).
NCPartitionA meet(const NCPartitionA& p, const NCPartitionA& q);
NCPartitionA join(const NCPartitionA& p, const NCPartitionA& q);
NCPartitionB meet(const NCPartitionB& p, const NCPartitionB& q);
NCPartitionB join(const NCPartitionB& p, const NCPartitionB& q);

// Enumeration of NC^(A)(n), card = Catalan(n) = C(2n,n)/(n+1).
//
// Order: recursive decomposition by the block containing the smallest
// element. At each level the block through the minimum is {min} + a subset
// of the remaining elements, iterated in increasing binary-counter order
// (bit k of the counter selects the (k+1)-th smallest remaining element);
// the gaps it cuts are then filled recursively, rightmost gap varying
// fastest. The discrete partition comes first, the full partition last.
// The order is part of the interface and stable across versions.
void for_each_nca(int n, const std::function<void(const NCPartitionA&)>& fn);
std::vector<NCPartitionA> enumerate_nca(int n);

// Memoized enumeration, shared by the convolution and cumulant engines.
const std::vector<NCPartitionA>& nca_cache(int n);

// Enumeration of NC^(B)(n), card = C(2n,n): for each p in NC^(A)(n) in
// enumeration order, the n+1 elements of abs_fiber(p) in fiber order.
void for_each_ncb(int n, const std::function<void(const NCPartitionB&)>& fn);
std::vector<NCPartitionB> enumerate_ncb(int n);

// Blockwise absolute value: blocks of the result are {Abs(X) : X block of
// pi}, deduplicated. Always lands in NC^(A)(n).
NCPartitionA abs_map(const NCPartitionB& pi);

// The n+1 partitions pi with abs_map(pi) = p, one per block of p and of
// Kr(p): entry m-1 (1 <= m <= blno(p)) lifts the m-th block of p into the
// zero-block of pi; entry m-1 (blno(p) < m <= n+1) lifts block m - blno(p)
// of Kr(p) into the zero-block of Kr(pi).
std::vector<NCPartitionB> abs_fiber(const NCPartitionA& p);

// --- text / json forms ------------------------------------------------

// Text literals look like {(1,2),(3,4)} (type A) and
// {(1,2,-1,-2),(3,4),(-3,-4)} (type B); whitespace-insensitive on parse,
// canonical on print, so print-parse round trips are bit exact.
std::string to_string(const NCPartitionA& p);
std::string to_string(const NCPartitionB& p);
NCPartitionA parse_nca(std::string_view text);
NCPartitionB parse_ncb(std::string_view text);

// JSON form: {"n":4,"type":"A","blocks":[[1,2],[3,4]]}.
std::string to_json_string(const NCPartitionA& p);
std::string to_json_string(const NCPartitionB& p);
NCPartitionA nca_from_json(std::string_view text);
NCPartitionB ncb_from_json(std::string_view text);

}  // namespace ncb
