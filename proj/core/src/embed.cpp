#include "ncb/embed.hpp"

#include <numeric>
#include <stdexcept>

namespace ncb {

Permutation long_cycle_a(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) img[i - 1] = i + 1;
  img[n - 1] = 1;
  return Permutation(n, std::move(img));
}

SignedPermutation omega_b(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) img[i - 1] = i + 1;
  img[n - 1] = -1;  // n -> -1, hence -n -> 1: the long invariant cycle
  return SignedPermutation(n, std::move(img));
}

SignedPermutation gamma_b(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) img[i - 1] = i + 1;
  img[n - 1] = 1;
  return SignedPermutation(n, std::move(img));
}

namespace {

// Applies the block-to-cycle rule over an arbitrary ground order: within a
// block sorted by the ground order, each element maps to its successor.
template <class Perm>
Perm blocks_to_permutation(int n, const std::vector<Block>& blocks, const GroundOrder& order) {
  std::vector<int> full(static_cast<std::size_t>(order.size()));
  for (int r = 0; r < order.size(); ++r) full[r] = order.element(r);
  std::vector<int> img = full;  // identity, keyed by rank
  for (const Block& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      img[order.rank(b[i])] = b[(i + 1) % b.size()];
    }
  }
  if constexpr (std::is_same_v<Perm, Permutation>) {
    return Permutation(n, std::move(img));
  } else {
    std::vector<int> pos(img.begin(), img.begin() + n);
    return SignedPermutation(n, std::move(pos));
  }
}

}  // namespace

Permutation iota_a(const NCPartitionA& p) {
  return blocks_to_permutation<Permutation>(p.n(), p.blocks(),
                                            GroundOrder(GroundOrder::Kind::A, p.n()));
}

SignedPermutation iota_b(const NCPartitionB& pi) {
  return blocks_to_permutation<SignedPermutation>(pi.n(), pi.blocks(),
                                                  GroundOrder(GroundOrder::Kind::B, pi.n()));
}

NCPartitionA iota_inverse(const Permutation& sigma) {
  if (!leq(sigma, long_cycle_a(sigma.n()))) {
    throw std::domain_error("iota_inverse: permutation is not in the interval [e, c]");
  }
  return NCPartitionA(sigma.n(), orbits(sigma));
}

NCPartitionB iota_inverse(const SignedPermutation& sigma) {
  if (!leq(sigma, omega_b(sigma.n()))) {
    throw std::domain_error("iota_inverse: permutation is not in the interval [eps, omega]");
  }
  return NCPartitionB(sigma.n(), orbits(sigma));
}

NCPartitionB doubled(const NCPartitionA& p) {
  std::vector<Block> blocks = p.blocks();
  for (const Block& b : p.blocks()) {
    Block neg;
    for (int x : b) neg.push_back(-x);
    blocks.push_back(std::move(neg));
  }
  return NCPartitionB(p.n(), std::move(blocks));
}

SignedPermutation iota_gamma(const NCPartitionA& p) { return iota_b(doubled(p)); }

}  // namespace ncb
