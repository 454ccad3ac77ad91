#include "qops/combinatorics.hpp"

#include <algorithm>
#include <numeric>

#include "qops/formal_sum.hpp"

namespace qops {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Perm inverse_perm(const Perm& p) {
  Perm q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = int(i) + 1;
  return q;
}

Perm compose_perm(const Perm& p, const Perm& q) {
  QOPS_CHECK(p.size() == q.size(), "compose_perm: size mismatch");
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i] - 1];
  return r;
}

int perm_parity(const Perm& p) { return inversion_sign(p); }

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_shuffle(const Shuffle& s) {
  if (int(s.image.size()) != s.p + s.q) return false;
  for (int i = 1; i < s.p; ++i)
    if (s.image[i] <= s.image[i - 1]) return false;
  for (int i = s.p + 1; i < s.p + s.q; ++i)
    if (s.image[i] <= s.image[i - 1]) return false;
  Perm t = s.image;
  std::sort(t.begin(), t.end());
  return t == identity_perm(s.p + s.q);
}

std::vector<Shuffle> enumerate_shuffles(int p, int q) {
  QOPS_CHECK(p >= 0 && q >= 0, "enumerate_shuffles: negative arity");
  std::vector<Shuffle> out;
  int n = p + q;
  // Choose the positions of the first block.
  std::vector<int> pick(p);
  std::iota(pick.begin(), pick.end(), 1);
  auto emit = [&](const std::vector<int>& pos) {
    Shuffle s;
    s.p = p;
    s.q = q;
    s.image.resize(n);
    std::vector<bool> used(n + 1, false);
    for (int i = 0; i < p; ++i) {
      s.image[i] = pos[i];
      used[pos[i]] = true;
    }
    int j = p;
    for (int v = 1; v <= n; ++v)
      if (!used[v]) s.image[j++] = v;
    out.push_back(std::move(s));
  };
  if (p == 0) {
    emit({});
    return out;
  }
  while (true) {
    emit(pick);
    int i = p - 1;
    while (i >= 0 && pick[i] == n - (p - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < p; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

int shuffle_sign(const Shuffle& s) { return inversion_sign(s.image); }

int inversion_sign(const std::vector<int>& seq) {
  long inv = 0;
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& arrangement) {
  QOPS_CHECK(degrees.size() == arrangement.size(), "koszul_sign: size mismatch");
  long e = 0;
  for (size_t i = 0; i < arrangement.size(); ++i)
    for (size_t j = i + 1; j < arrangement.size(); ++j)
      if (arrangement[i] > arrangement[j])
        e += long(degrees[arrangement[i] - 1]) * degrees[arrangement[j] - 1];
  return e % 2 == 0 ? 1 : -1;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace qops
