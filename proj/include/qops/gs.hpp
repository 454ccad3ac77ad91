#pragma once

#include <map>
#include <memory>
#include <tuple>

#include "qops/combinatorics.hpp"
#include "qops/prestack.hpp"

namespace qops {

// A p-simplex of the base with its starting object (so p = 0 makes sense).
struct GSimplex {
  int obj0 = -1;
  std::vector<int> arrows;  // u_1,...,u_p with u_i : U_{i-1} -> U_i

  int p() const { return int(arrows.size()); }
  bool operator<(const GSimplex& o) const {
    return std::tie(obj0, arrows) < std::tie(o.obj0, o.arrows);
  }
  bool operator==(const GSimplex& o) const { return obj0 == o.obj0 && arrows == o.arrows; }
};

inline int gsim_top(const BaseCat& B, const GSimplex& s) {
  return s.arrows.empty() ? s.obj0 : B.mors[s.arrows.back()].tgt;
}
inline bool gsim_valid(const BaseCat& B, const GSimplex& s) {
  if (s.obj0 < 0 || s.obj0 >= B.nobj) return false;
  int at = s.obj0;
  for (int m : s.arrows) {
    if (B.mors[m].src != at) return false;
    at = B.mors[m].tgt;
  }
  return true;
}
inline GSimplex gsim_face(const BaseCat& B, const GSimplex& s, int i) {
  GSimplex r;
  r.arrows = B.face(s.arrows, i);
  r.obj0 = i == 0 ? B.mors[s.arrows[0]].tgt : s.obj0;
  if (r.arrows.empty()) r.obj0 = i == 0 ? B.mors[s.arrows[0]].tgt : s.obj0;
  if (!r.arrows.empty()) r.obj0 = B.mors[r.arrows[0]].src;
  return r;
}
inline bool gsim_reduced(const BaseCat& B, const GSimplex& s) {
  return B.reduced_simplex(s.arrows);
}
inline std::vector<GSimplex> all_gsimplices(const BaseCat& B, int p) {
  std::vector<GSimplex> out;
  if (p == 0) {
    for (int U = 0; U < B.nobj; ++U) out.push_back({U, {}});
    return out;
  }
  for (const auto& s : B.simplices(p)) out.push_back({B.mors[s[0]].src, s});
  return out;
}

template <typename K>
int sharp_obj(const Prestack<K>& P, const GSimplex& s, int A) {
  return P.apply_obj_path(s.arrows, A);
}
template <typename K>
int star_obj(const Prestack<K>& P, const GSimplex& s, int A) {
  return s.arrows.empty() ? A : P.apply_obj(P.base.composite(s.arrows), A);
}
template <typename K>
MorVal<K> sharp_mor(const Prestack<K>& P, const GSimplex& s, const MorVal<K>& m) {
  return P.apply_path(s.arrows, m);
}
template <typename K>
MorVal<K> star_mor(const Prestack<K>& P, const GSimplex& s, const MorVal<K>& m) {
  return s.arrows.empty() ? m : P.apply_functor(P.base.composite(s.arrows), m);
}

// A (p,q)-component of the GS bicomplex as a basis evaluator: the value on
// the simplex sigma, objects A_0..A_q of A(U_p), and basis input indices.
template <typename K>
struct Cochain {
  int p = 0, q = 0;
  std::function<MorVal<K>(const GSimplex&, const std::vector<int>&, const std::vector<int>&)> at;

  MorVal<K> eval(const Prestack<K>& P, const GSimplex& s, const std::vector<int>& A,
                 const std::vector<MorVal<K>>& args) const {
    QOPS_CHECK(int(args.size()) == q, "cochain eval: arity");
    int Utop = gsim_top(P.base, s);
    MorVal<K> out = P.zero_mor(s.obj0, sharp_obj(P, s, A[q]), star_obj(P, s, A[0]));
    std::vector<int> idx(q, 0);
    std::function<void(int, K)> rec = [&](int pos, K scale) {
      if (scale == K{0}) return;
      if (pos == q) {
        out += at(s, A, idx) * scale;
        return;
      }
      for (int i = 0; i < int(args[pos].coef.size()); ++i) {
        idx[pos] = i;
        rec(pos + 1, scale * args[pos].coef[i]);
      }
    };
    for (int i = 0; i < q; ++i) {
      QOPS_CHECK(args[i].U == Utop && args[i].src == A[i + 1] && args[i].tgt == A[i],
                 "cochain eval: input shape");
    }
    rec(0, K{1});
    return out;
  }
};

// The twist as a (2,0) cochain: at ((u1,u2), [A0]) the component contracting
// u1* u2*.
template <typename K>
Cochain<K> twist_cochain(const Prestack<K>& P) {
  Cochain<K> c;
  c.p = 2;
  c.q = 0;
  const Prestack<K>* Pp = &P;
  c.at = [Pp](const GSimplex& s, const std::vector<int>& A, const std::vector<int>&) {
    QOPS_CHECK(s.p() == 2, "twist cochain: need a 2-simplex");
    return Pp->twist_at(s.arrows[1], s.arrows[0], A[0]);
  };
  return c;
}

// Deterministic pseudo-random cochains (pure function of the key and seed).
template <typename K>
Cochain<K> random_cochain(const Prestack<K>& P, int p, int q, std::uint64_t seed,
                          long long modulus, bool reduced, bool normalized) {
  Cochain<K> c;
  c.p = p;
  c.q = q;
  const Prestack<K>* Pp = &P;
  c.at = [Pp, p, q, seed, modulus, reduced, normalized](
             const GSimplex& s, const std::vector<int>& A, const std::vector<int>& ix) {
    const Prestack<K>& P = *Pp;
    QOPS_CHECK(int(s.arrows.size()) == p && int(A.size()) == q + 1 && int(ix.size()) == q,
               "random cochain: shape");
    int Utop = gsim_top(P.base, s);
    MorVal<K> out = P.zero_mor(s.obj0, sharp_obj<K>(P, s, A[q]), star_obj<K>(P, s, A[0]));
    if (reduced && gsim_reduced(P.base, s)) return out;
    if (normalized) {
      for (int i = 0; i < q; ++i)
        if (A[i] == A[i + 1] && ix[i] == 0) return out;  // identity input
    }
    // hash the key
    std::uint64_t h = seed * 1099511628211ull + 14695981039346656037ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    };
    mix(s.obj0);
    for (int m : s.arrows) mix(m + 17);
    for (int a : A) mix(a + 101);
    for (int i : ix) mix(i + 1009);
    for (size_t t = 0; t < out.coef.size(); ++t) {
      mix(t + 31);
      long long v = (long long)(h % 7) - 3;
      if constexpr (std::is_same_v<K, Fp>) {
        out.coef[t] = Fp(v, modulus);
      } else {
        out.coef[t] = ring_from_coeff<K>(Coeff(v));
      }
    }
    return out;
  };
  return c;
}

// ---- formal paths ----------------------------------------------------------

struct FormalPathStep {
  std::vector<int> simplex;  // base arrows
  int index = 0;
};
struct FormalPath {
  // steps[k] = r_{k+1} in (r_1,...,r_{p-1}); the last entry acts first.
  std::vector<FormalPathStep> steps;
  int sign = 1;
};

inline std::vector<FormalPath> formal_paths(const BaseCat& B, const std::vector<int>& sigma) {
  int p = int(sigma.size());
  QOPS_CHECK(p >= 2, "formal_paths: need p >= 2");
  if (p == 2) {
    FormalPath r;
    r.steps = {{sigma, 1}};
    r.sign = -1;
    return {r};
  }
  std::vector<FormalPath> out;
  for (int i = 1; i <= p - 1; ++i)
    for (const FormalPath& sub : formal_paths(B, B.face(sigma, i))) {
      FormalPath r = sub;
      r.steps.push_back({sigma, i});
      r.sign = sub.sign * (i % 2 == 0 ? 1 : -1);
      out.push_back(std::move(r));
    }
  return out;
}

// epsilon^{tau,k}(A): tau# A -> (face_k tau)# A.
template <typename K>
MorVal<K> epsilon_component(const Prestack<K>& P, const std::vector<int>& tau, int k, int A) {
  int p = int(tau.size());
  QOPS_CHECK(k >= 1 && k <= p - 1, "epsilon: index");
  std::vector<int> tail(tau.begin() + k + 1, tau.end());
  std::vector<int> head(tau.begin(), tau.begin() + k - 1);
  int At = A;
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) At = P.apply_obj(*it, At);
  MorVal<K> t = P.twist_at(tau[k], tau[k - 1], At);
  return P.apply_path(head, t);
}

// c^{sigma,k}(A): (L_k)* (R_k)* A -> sigma* A; k = 0 or k = p degenerate to
// the identity at the appropriate object.
template <typename K>
MorVal<K> csigma_component(const Prestack<K>& P, const GSimplex& s, int k, int A) {
  int p = s.p();
  if (p == 0) return P.identity_mor(s.obj0, A);
  if (k == 0 || k == p) {
    int At = star_obj(P, s, A);
    return P.identity_mor(s.obj0, At);
  }
  std::vector<int> L(s.arrows.begin(), s.arrows.begin() + k);
  std::vector<int> R(s.arrows.begin() + k, s.arrows.end());
  return P.twist_at(P.base.composite(R), P.base.composite(L), A);
}

// ---- differentials ----------------------------------------------------------

template <typename K>
Cochain<K> gs_d0(const Prestack<K>& P, const Cochain<K>& th) {
  Cochain<K> r;
  r.p = th.p;
  r.q = th.q + 1;
  const Prestack<K>* Pp = &P;
  Cochain<K> theta = th;
  r.at = [Pp, theta](const GSimplex& s, const std::vector<int>& A, const std::vector<int>& ix) {
    const Prestack<K>& P = *Pp;
    int q1 = int(ix.size());
    int q = q1 - 1;
    int U = gsim_top(P.base, s);
    std::vector<MorVal<K>> a(q1);
    for (int i = 1; i <= q1; ++i) {
      a[i - 1] = P.zero_mor(U, A[i], A[i - 1]);
      a[i - 1].coef[ix[i - 1]] = K{1};
    }
    std::vector<MorVal<K>> rest(a.begin() + 1, a.end());
    std::vector<int> Arest(A.begin() + 1, A.end());
    MorVal<K> out = P.mcompose(star_mor(P, s, a[0]), theta.eval(P, s, Arest, rest));
    for (int i = 1; i <= q; ++i) {
      std::vector<MorVal<K>> args;
      std::vector<int> Ai;
      for (int t = 0; t <= q1; ++t)
        if (t != i) Ai.push_back(A[t]);
      for (int t = 1; t <= q1; ++t) {
        if (t == i) continue;
        if (t == i + 1)
          args.push_back(P.mcompose(a[i - 1], a[i]));
        else
          args.push_back(a[t - 1]);
      }
      out += theta.eval(P, s, Ai, args) * ring_from_coeff<K>(i % 2 == 0 ? 1 : -1);
    }
    std::vector<MorVal<K>> front(a.begin(), a.end() - 1);
    std::vector<int> Afront(A.begin(), A.end() - 1);
    MorVal<K> last = P.mcompose(theta.eval(P, s, Afront, front), sharp_mor(P, s, a[q1 - 1]));
    out += last * ring_from_coeff<K>((q + 1) % 2 == 0 ? 1 : -1);
    return out;
  };
  return r;
}

template <typename K>
Cochain<K> gs_d1(const Prestack<K>& P, const Cochain<K>& th) {
  Cochain<K> r;
  r.p = th.p + 1;
  r.q = th.q;
  const Prestack<K>* Pp = &P;
  Cochain<K> theta = th;
  r.at = [Pp, theta](const GSimplex& s, const std::vector<int>& A, const std::vector<int>& ix) {
    const Prestack<K>& P = *Pp;
    int q = int(ix.size());
    int p = theta.p;  // s has length p + 1
    int U = gsim_top(P.base, s);
    std::vector<MorVal<K>> a(q);
    for (int i = 1; i <= q; ++i) {
      a[i - 1] = P.zero_mor(U, A[i], A[i - 1]);
      a[i - 1].coef[ix[i - 1]] = K{1};
    }
    // term 0: (-1)^{p+q+1} m(c^{sigma,1,A0}, u1*(theta^{face0}(A)(a)))
    GSimplex f0 = gsim_face(P.base, s, 0);
    MorVal<K> t0 = theta.eval(P, f0, A, a);
    t0 = P.apply_functor(s.arrows[0], t0);
    MorVal<K> out = P.mcompose(csigma_component(P, s, 1, A[0]), t0) *
                    ring_from_coeff<K>((p + q + 1) % 2 == 0 ? 1 : -1);
    // middle: sum_i (-1)^{p+q+1+i} m(theta^{face_i}(A)(a), eps^{sigma,i,A_q})
    for (int i = 1; i <= p; ++i) {
      GSimplex fi = gsim_face(P.base, s, i);
      MorVal<K> ti = theta.eval(P, fi, A, a);
      MorVal<K> term = P.mcompose(ti, epsilon_component(P, s.arrows, i, A[q]));
      out += term * ring_from_coeff<K>((p + q + 1 + i) % 2 == 0 ? 1 : -1);
    }
    // last: (-1)^q m(c^{sigma,p,A0}, theta^{face_{p+1}}(u*A)(u* a))
    GSimplex fl = gsim_face(P.base, s, p + 1);
    int u = s.arrows[p];
    std::vector<int> Au(A.size());
    for (size_t t = 0; t < A.size(); ++t) Au[t] = P.apply_obj(u, A[t]);
    std::vector<MorVal<K>> au(a.size());
    for (size_t t = 0; t < a.size(); ++t) au[t] = P.apply_functor(u, a[t]);
    MorVal<K> tl = theta.eval(P, fl, Au, au);
    out += P.mcompose(csigma_component(P, s, p, A[0]), tl) *
           ring_from_coeff<K>(q % 2 == 0 ? 1 : -1);
    return out;
  };
  return r;
}

// d_j for j >= 2 via formal paths and the shuffle product.
template <typename K>
Cochain<K> gs_dj(const Prestack<K>& P, const Cochain<K>& th, int j) {
  QOPS_CHECK(j >= 2, "gs_dj: j >= 2");
  Cochain<K> r;
  r.p = th.p + j;
  r.q = th.q + 1 - j;
  QOPS_CHECK(r.q >= 0, "gs_dj: negative vertical degree");
  const Prestack<K>* Pp = &P;
  Cochain<K> theta = th;
  r.at = [Pp, theta, j](const GSimplex& s, const std::vector<int>& A,
                        const std::vector<int>& ix) {
    const Prestack<K>& P = *Pp;
    int p = theta.p;
    int q = theta.q;
    int t = q - j + 1;  // number of direct inputs
    QOPS_CHECK(int(ix.size()) == t, "gs_dj: arity");
    int U = gsim_top(P.base, s);
    std::vector<MorVal<K>> a(t);
    for (int i = 1; i <= t; ++i) {
      a[i - 1] = P.zero_mor(U, A[i], A[i - 1]);
      a[i - 1].coef[ix[i - 1]] = K{1};
    }
    GSimplex Lp{s.obj0, std::vector<int>(s.arrows.begin(), s.arrows.begin() + p)};
    std::vector<int> Rp(s.arrows.begin() + p, s.arrows.end());
    MorVal<K> out =
        P.zero_mor(s.obj0, sharp_obj(P, s, A[t]), star_obj(P, s, A[0]));
    for (const FormalPath& path : formal_paths(P.base, Rp)) {
      for (const Shuffle& beta : enumerate_shuffles(t, j - 1)) {
        // positions of direct inputs
        std::vector<bool> is_a(t + j - 1 + 1, false);
        for (int i = 1; i <= t; ++i) is_a[beta.image[i - 1]] = true;
        // build the chain right to left
        std::vector<MorVal<K>> chain(t + j - 1);
        int g = t;
        int kstep = int(path.steps.size());  // consume from the back
        std::vector<int> tau = Rp;
        bool ok = true;
        for (int pos = t + j - 1; pos >= 1; --pos) {
          if (is_a[pos]) {
            QOPS_CHECK(g >= 1, "gs_dj: input underflow");
            chain[pos - 1] = P.apply_path(tau, a[g - 1]);
            --g;
          } else {
            QOPS_CHECK(kstep >= 1, "gs_dj: path underflow");
            const FormalPathStep& st = path.steps[kstep - 1];
            QOPS_CHECK(st.simplex == tau, "gs_dj: path/simplex mismatch");
            chain[pos - 1] = epsilon_component(P, tau, st.index, A[g]);
            tau = P.base.face(tau, st.index);
            --kstep;
          }
        }
        QOPS_CHECK(g == 0 && kstep == 0, "gs_dj: leftover");
        // composability audit + objects
        std::vector<int> B(q + 1);
        for (int i = 1; i <= q; ++i) B[i] = chain[i - 1].src;
        B[0] = chain[0].tgt;
        for (int i = 1; i < q; ++i)
          QOPS_CHECK(chain[i].tgt == chain[i - 1].src, "gs_dj: chain not composable");
        (void)ok;
        MorVal<K> inner = theta.eval(P, Lp, B, chain);
        MorVal<K> term = P.mcompose(csigma_component(P, s, p, A[0]), inner);
        int e = (path.sign == -1 ? 1 : 0) + (shuffle_sign(beta) == -1 ? 1 : 0) + (q - j + 1);
        out += term * ring_from_coeff<K>(e % 2 == 0 ? 1 : -1);
      }
    }
    return out;
  };
  return r;
}

template <typename K>
Cochain<K> gs_d(const Prestack<K>& P, const Cochain<K>& th, int j) {
  if (j == 0) return gs_d0(P, th);
  if (j == 1) return gs_d1(P, th);
  return gs_dj(P, th, j);
}

// ---- dense comparison -------------------------------------------------------

// Evaluate a cochain on every (sigma, A, basis index) and compare.
template <typename K>
bool cochains_equal(const Prestack<K>& P, const Cochain<K>& x, const Cochain<K>& y,
                    std::string* why = nullptr) {
  if (x.p != y.p || x.q != y.q) {
    if (why) *why = "bidegree mismatch";
    return false;
  }
  for (const GSimplex& s : all_gsimplices(P.base, x.p)) {
    int U = gsim_top(P.base, s);
    const auto& L = P.local[U];
    std::vector<int> A(x.q + 1, 0);
    while (true) {
      // iterate input indices
      std::vector<int> dims(x.q);
      bool possible = true;
      for (int i = 1; i <= x.q; ++i) {
        dims[i - 1] = L.dim[A[i]][A[i - 1]];
        if (dims[i - 1] == 0) possible = false;
      }
      if (possible) {
        std::vector<int> ix(x.q, 0);
        while (true) {
          MorVal<K> vx = x.at(s, A, ix);
          MorVal<K> vy = y.at(s, A, ix);
          if (!(vx == vy)) {
            if (why) {
              *why = "differs at simplex " + P.base.simplex_name(s.arrows);
            }
            return false;
          }
          int k = x.q - 1;
          while (k >= 0 && ix[k] + 1 == dims[k]) ix[k--] = 0;
          if (k < 0) break;
          ++ix[k];
        }
      }
      int k = x.q;
      while (k >= 0 && A[k] + 1 == L.nobj) A[k--] = 0;
      if (k < 0) break;
      ++A[k];
    }
  }
  return true;
}

template <typename K>
bool cochain_zero(const Prestack<K>& P, const Cochain<K>& x) {
  Cochain<K> z;
  z.p = x.p;
  z.q = x.q;
  const Prestack<K>* Pp = &P;
  z.at = [Pp](const GSimplex& s, const std::vector<int>& A, const std::vector<int>&) {
    const Prestack<K>& P = *Pp;
    return P.zero_mor(s.obj0, sharp_obj(P, s, A.back()), star_obj(P, s, A.front()));
  };
  return cochains_equal(P, x, z);
}

template <typename K>
Cochain<K> cochain_add(const Prestack<K>& P, const Cochain<K>& x, const Cochain<K>& y) {
  QOPS_CHECK(x.p == y.p && x.q == y.q, "cochain_add: bidegree");
  Cochain<K> r;
  r.p = x.p;
  r.q = x.q;
  Cochain<K> a = x, b = y;
  r.at = [a, b](const GSimplex& s, const std::vector<int>& A, const std::vector<int>& ix) {
    MorVal<K> v = a.at(s, A, ix);
    v += b.at(s, A, ix);
    return v;
  };
  return r;
}

template <typename K>
Cochain<K> cochain_scale(const Cochain<K>& x, const K& c) {
  Cochain<K> r;
  r.p = x.p;
  r.q = x.q;
  Cochain<K> a = x;
  K cc = c;
  r.at = [a, cc](const GSimplex& s, const std::vector<int>& A, const std::vector<int>& ix) {
    return a.at(s, A, ix) * cc;
  };
  return r;
}

// Memoized wrapper (evaluators above recompute aggressively).
template <typename K>
Cochain<K> cochain_cached(const Cochain<K>& x) {
  Cochain<K> r;
  r.p = x.p;
  r.q = x.q;
  auto cache = std::make_shared<
      std::map<std::tuple<GSimplex, std::vector<int>, std::vector<int>>, MorVal<K>>>();
  Cochain<K> a = x;
  r.at = [a, cache](const GSimplex& s, const std::vector<int>& A, const std::vector<int>& ix) {
    auto key = std::make_tuple(s, A, ix);
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    MorVal<K> v = a.at(s, A, ix);
    cache->emplace(std::move(key), v);
    return v;
  };
  return r;
}

}  // namespace qops
