#pragma once

#include "ncb/cayley.hpp"
#include "ncb/partition.hpp"
#include "ncb/permutation.hpp"

namespace ncb {

// Distinguished elements.
Permutation long_cycle_a(int n);        // c = (1,2,...,n), |c| = n-1
SignedPermutation omega_b(int n);       // omega = (1,...,n,-1,...,-n), |omega|_B = n
SignedPermutation gamma_b(int n);       // gamma = (1,...,n)(-1,...,-n), gamma <= omega

// iota sends each block {a_1 < ... < a_k} to the cycle (a_1,...,a_k) and a
// partition to the product of its block cycles. It is an order isomorphism
// from NC^(A)(n) onto [e, c] and from NC^(B)(n) onto [eps, omega], with
// iota(Kr(p)) = iota(p)^{-1} c and iota(Kr'(p)) = c iota(p)^{-1}.
Permutation iota_a(const NCPartitionA& p);
SignedPermutation iota_b(const NCPartitionB& pi);

// Inverse direction: the blocks of the partition are the orbits of the
// permutation. Validates interval membership (sigma <= c, resp. <= omega)
// and throws std::domain_error otherwise.
NCPartitionA iota_inverse(const Permutation& sigma);
NCPartitionB iota_inverse(const SignedPermutation& sigma);

// The doubling map iota_o: p = {F_1,...,F_k} |-> {F_1,...,F_k,-F_1,...,-F_k}.
NCPartitionB doubled(const NCPartitionA& p);

// iota_gamma = iota ∘ iota_o: poset isomorphism from NC^(A)(n) onto
// [eps, gamma] in W_n.
SignedPermutation iota_gamma(const NCPartitionA& p);

}  // namespace ncb
