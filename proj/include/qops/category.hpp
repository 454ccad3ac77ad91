#pragma once

#include <string>
#include <vector>

#include "qops/formal_sum.hpp"

namespace qops {

// A finite base category with an explicit composition table.  Simplices of
// the nerve are tuples (u_1,...,u_p) with u_i : U_{i-1} -> U_i; identities
// are ordinary morphisms, so degenerate simplices exist.
struct BaseCat {
  struct Mor {
    int src = 0, tgt = 0;
    std::string name;
  };
  int nobj = 0;
  std::vector<Mor> mors;
  std::vector<int> idmor;              // idmor[obj] = identity morphism id
  std::vector<std::vector<int>> comp;  // comp[g][f] = g o f, or -1

  bool is_identity(int m) const { return idmor[mors[m].src] == m && mors[m].src == mors[m].tgt; }
  int compose(int g, int f) const {
    QOPS_CHECK(mors[g].src == mors[f].tgt, "base: not composable");
    int r = comp[g][f];
    QOPS_CHECK(r >= 0, "base: composition missing");
    return r;
  }

  using Simplex = std::vector<int>;  // p morphisms, tail to head

  int sgm_src(const Simplex& s) const { return s.empty() ? -1 : mors[s.front()].src; }
  int sgm_tgt(const Simplex& s) const { return s.empty() ? -1 : mors[s.back()].tgt; }

  bool valid_simplex(const Simplex& s) const {
    for (size_t i = 1; i < s.size(); ++i)
      if (mors[s[i]].src != mors[s[i - 1]].tgt) return false;
    return true;
  }

  // u_p o ... o u_1 : U_0 -> U_p
  int composite(const Simplex& s) const {
    QOPS_CHECK(!s.empty(), "base: empty composite");
    int r = s[0];
    for (size_t i = 1; i < s.size(); ++i) r = compose(s[i], r);
    return r;
  }

  Simplex face(const Simplex& s, int i) const {
    int p = int(s.size());
    QOPS_CHECK(i >= 0 && i <= p, "base: face index");
    Simplex r;
    if (i == 0) {
      r.assign(s.begin() + 1, s.end());
    } else if (i == p) {
      r.assign(s.begin(), s.end() - 1);
    } else {
      r.assign(s.begin(), s.end());
      int g = compose(s[i], s[i - 1]);
      r.erase(r.begin() + i);
      r[i - 1] = g;
    }
    return r;
  }

  // All p-simplices (identities included), or those starting at src0.
  std::vector<Simplex> simplices(int p, int src0 = -1) const {
    std::vector<Simplex> out;
    if (p == 0) return out;  // 0-simplices are objects; handled separately
    std::vector<Simplex> cur;
    for (int m = 0; m < int(mors.size()); ++m)
      if (src0 < 0 || mors[m].src == src0) cur.push_back({m});
    for (int k = 2; k <= p; ++k) {
      std::vector<Simplex> next;
      for (const auto& s : cur)
        for (int m = 0; m < int(mors.size()); ++m)
          if (mors[m].src == mors[s.back()].tgt) {
            Simplex t = s;
            t.push_back(m);
            next.push_back(std::move(t));
          }
      cur = std::move(next);
    }
    return cur;
  }

  bool reduced_simplex(const Simplex& s) const {
    for (int m : s)
      if (is_identity(m)) return true;
    return false;
  }

  std::string simplex_name(const Simplex& s) const {
    std::string r = "(";
    for (size_t i = 0; i < s.size(); ++i) {
      if (i) r += ",";
      r += mors[s[i]].name;
    }
    return r + ")";
  }

  // A chain poset 0 -> 1 -> ... -> n-1 with all composites.
  static BaseCat chain(int n) {
    BaseCat b;
    b.nobj = n;
    b.idmor.assign(n, -1);
    // morphisms (i -> j) for i <= j
    std::vector<std::vector<int>> id(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Mor m;
        m.src = i;
        m.tgt = j;
        m.name = i == j ? "1_" + std::to_string(i)
                        : "u" + std::to_string(i) + std::to_string(j);
        id[i][j] = int(b.mors.size());
        b.mors.push_back(m);
        if (i == j) b.idmor[i] = id[i][j];
      }
    int M = int(b.mors.size());
    b.comp.assign(M, std::vector<int>(M, -1));
    for (int g = 0; g < M; ++g)
      for (int f = 0; f < M; ++f)
        if (b.mors[g].src == b.mors[f].tgt) b.comp[g][f] = id[b.mors[f].src][b.mors[g].tgt];
    return b;
  }
};

}  // namespace qops
