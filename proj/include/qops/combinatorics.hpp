#pragma once

#include <cstdint>
#include <vector>

namespace qops {

// Permutations are 1-based: perm[i-1] = sigma(i), a bijection of <n>.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm inverse_perm(const Perm& p);
// (p*q)(i) = p(q(i)).
Perm compose_perm(const Perm& p, const Perm& q);
int perm_parity(const Perm& p);  // +1 or -1
std::vector<Perm> all_perms(int n);

// A (p,q)-shuffle: a permutation sigma of <p+q> that is strictly increasing
// on 1..p and on p+1..p+q.  `image` is sigma itself.
struct Shuffle {
  int p = 0, q = 0;
  Perm image;
};

bool is_shuffle(const Shuffle& s);
std::vector<Shuffle> enumerate_shuffles(int p, int q);
int shuffle_sign(const Shuffle& s);

// Koszul sign of rearranging graded symbols. `arrangement` lists the original
// positions 1..n in their new order; each inverted pair (i<j placed j before i)
// contributes (-1)^(deg_i*deg_j).
int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& arrangement);

// Parity (+1/-1) of the number of inversions of an integer sequence
// (entries need not form a permutation but must be distinct).
int inversion_sign(const std::vector<int>& seq);

std::uint64_t binomial(int n, int k);

}  // namespace qops
