#pragma once

#include <functional>
#include <random>
#include <sstream>

#include "qops/category.hpp"
#include "qops/ring.hpp"

namespace qops {

// A morphism value of a local category: an element of A(U)(src -> tgt) over
// the chosen basis.
template <typename K>
struct MorVal {
  int U = -1;
  int src = -1, tgt = -1;
  std::vector<K> coef;

  bool same_shape(const MorVal& o) const { return U == o.U && src == o.src && tgt == o.tgt; }
  MorVal& operator+=(const MorVal& o) {
    QOPS_CHECK(same_shape(o), "morval: shape mismatch");
    for (size_t i = 0; i < coef.size(); ++i) coef[i] += o.coef[i];
    return *this;
  }
  MorVal operator*(const K& s) const {
    MorVal r = *this;
    for (auto& c : r.coef) c *= s;
    return r;
  }
  bool is_zero() const {
    for (const auto& c : coef)
      if (c != K{0}) return false;
    return true;
  }
};

// A prestack over a finite base category: linear categories with explicit
// finite hom bases and tables, restriction functors, and twists.
// Basis element 0 of every hom(a,a) is the identity.
template <typename K>
struct Prestack {
  struct Local {
    int nobj = 0;
    // dim[a][b] = dim Hom(a -> b)
    std::vector<std::vector<int>> dim;
    // mul[a][b][c][j][i] = coefficient vector of (g_j : b->c) o (f_i : a->b)
    // in Hom(a -> c)
    std::vector<std::vector<std::vector<std::vector<std::vector<std::vector<K>>>>>> mul_;
    // mul_[a][b][c][j][i] -> vector<K>; flattened accessors below
    const std::vector<K>& mul(int a, int b, int c, int j, int i) const {
      return mul_[a][b][c][j][i];
    }
  };
  struct Functor {
    std::vector<int> obj;  // object map
    // mat[a][b]: rows indexed by target basis, columns by source basis:
    // image(f_i) = sum_j mat[a][b][j][i] e_j
    std::vector<std::vector<std::vector<std::vector<K>>>> mat;
  };

  BaseCat base;
  std::vector<Local> local;      // per base object
  std::vector<Functor> functor;  // per base morphism (u: V->U gives A(U)->A(V))
  // twist[u][v] for composable u o v (v: W->V then u: V->U): components per
  // object A of A(U): a MorVal in A(W)(v*u*A -> (uv)*A)
  std::vector<std::vector<std::vector<MorVal<K>>>> twist;

  // ---- basic operations -------------------------------------------------

  MorVal<K> zero_mor(int U, int a, int b) const {
    MorVal<K> m;
    m.U = U;
    m.src = a;
    m.tgt = b;
    m.coef.assign(local[U].dim[a][b], K{0});
    return m;
  }
  MorVal<K> identity_mor(int U, int a) const {
    MorVal<K> m = zero_mor(U, a, a);
    QOPS_CHECK(!m.coef.empty(), "identity: hom(a,a) empty");
    m.coef[0] = K{1};
    return m;
  }
  bool is_identity(const MorVal<K>& m) const {
    if (m.src != m.tgt) return false;
    return m == identity_moreq(m);
  }
  MorVal<K> identity_moreq(const MorVal<K>& m) const { return identity_mor(m.U, m.src); }

  // g o f
  MorVal<K> mcompose(const MorVal<K>& g, const MorVal<K>& f) const {
    QOPS_CHECK(g.U == f.U, "mcompose: different local categories");
    QOPS_CHECK(f.tgt == g.src, "mcompose: not composable");
    MorVal<K> r = zero_mor(f.U, f.src, g.tgt);
    const Local& L = local[f.U];
    for (int j = 0; j < int(g.coef.size()); ++j) {
      if (g.coef[j] == K{0}) continue;
      for (int i = 0; i < int(f.coef.size()); ++i) {
        if (f.coef[i] == K{0}) continue;
        const auto& prod = L.mul(f.src, f.tgt, g.tgt, j, i);
        for (int t = 0; t < int(prod.size()); ++t) r.coef[t] += g.coef[j] * f.coef[i] * prod[t];
      }
    }
    return r;
  }

  int apply_obj(int u, int A) const { return functor[u].obj[A]; }
  int apply_obj_path(const BaseCat::Simplex& s, int A) const {
    // (w_1,...,w_m)^# object map: pull back along w_m first
    for (auto it = s.rbegin(); it != s.rend(); ++it) A = apply_obj(*it, A);
    return A;
  }

  MorVal<K> apply_functor(int u, const MorVal<K>& m) const {
    QOPS_CHECK(base.mors[u].tgt == m.U, "apply_functor: wrong local category");
    int V = base.mors[u].src;
    MorVal<K> r = zero_mor(V, apply_obj(u, m.src), apply_obj(u, m.tgt));
    const auto& M = functor[u].mat[m.src][m.tgt];
    for (int j = 0; j < int(r.coef.size()); ++j)
      for (int i = 0; i < int(m.coef.size()); ++i) r.coef[j] += M[j][i] * m.coef[i];
    return r;
  }
  MorVal<K> apply_path(const BaseCat::Simplex& s, MorVal<K> m) const {
    for (auto it = s.rbegin(); it != s.rend(); ++it) m = apply_functor(*it, m);
    return m;
  }

  // c^{u,v}(A): v* u* A -> (uv)* A  (v then u upstairs, u o v downstairs)
  const MorVal<K>& twist_at(int u, int v, int A) const {
    QOPS_CHECK(base.mors[u].src == base.mors[v].tgt, "twist: not composable");
    return twist[u][v][A];
  }

  // ---- validation --------------------------------------------------------

  std::vector<std::string> validate(bool check_invertible = true) const {
    std::vector<std::string> bad;
    // local categories: units and associativity on basis triples
    for (int U = 0; U < base.nobj; ++U) {
      const Local& L = local[U];
      for (int a = 0; a < L.nobj; ++a) {
        if (L.dim[a][a] < 1) {
          bad.push_back("local " + std::to_string(U) + ": hom(a,a) lacks the unit");
          continue;
        }
        for (int b = 0; b < L.nobj; ++b)
          for (int i = 0; i < L.dim[a][b]; ++i) {
            MorVal<K> f = zero_mor(U, a, b);
            f.coef[i] = K{1};
            if (!(mcompose(f, identity_mor(U, a)) == f) ||
                !(mcompose(identity_mor(U, b), f) == f))
              bad.push_back("local " + std::to_string(U) + ": unit law fails");
          }
      }
      for (int a = 0; a < L.nobj; ++a)
        for (int b = 0; b < L.nobj; ++b)
          for (int c = 0; c < L.nobj; ++c)
            for (int d = 0; d < L.nobj; ++d)
              for (int i = 0; i < L.dim[a][b]; ++i)
                for (int j = 0; j < L.dim[b][c]; ++j)
                  for (int k = 0; k < L.dim[c][d]; ++k) {
                    MorVal<K> f = zero_mor(U, a, b), g = zero_mor(U, b, c), h = zero_mor(U, c, d);
                    f.coef[i] = K{1};
                    g.coef[j] = K{1};
                    h.coef[k] = K{1};
                    if (!(mcompose(mcompose(h, g), f) == mcompose(h, mcompose(g, f))))
                      bad.push_back("local " + std::to_string(U) + ": associativity fails");
                  }
    }
    // functors: identities strict, units preserved, multiplicativity
    for (int u = 0; u < int(base.mors.size()); ++u) {
      int U = base.mors[u].tgt, V = base.mors[u].src;
      const Local& L = local[U];
      if (base.is_identity(u)) {
        bool ok = true;
        for (int a = 0; a < L.nobj; ++a) {
          if (functor[u].obj[a] != a) ok = false;
          for (int b = 0; b < L.nobj; ++b)
            for (int j = 0; j < L.dim[a][b]; ++j)
              for (int i = 0; i < L.dim[a][b]; ++i)
                if (functor[u].mat[a][b][j][i] != (i == j ? K{1} : K{0})) ok = false;
        }
        if (!ok) bad.push_back("functor of an identity morphism is not the identity");
      }
      for (int a = 0; a < L.nobj; ++a) {
        if (!(apply_functor(u, identity_mor(U, a)) == identity_mor(V, apply_obj(u, a))))
          bad.push_back("functor " + base.mors[u].name + ": unit not preserved");
        for (int b = 0; b < L.nobj; ++b)
          for (int c = 0; c < L.nobj; ++c)
            for (int i = 0; i < L.dim[a][b]; ++i)
              for (int j = 0; j < L.dim[b][c]; ++j) {
                MorVal<K> f = zero_mor(U, a, b), g = zero_mor(U, b, c);
                f.coef[i] = K{1};
                g.coef[j] = K{1};
                if (!(apply_functor(u, mcompose(g, f)) ==
                      mcompose(apply_functor(u, g), apply_functor(u, f))))
                  bad.push_back("functor " + base.mors[u].name + ": not multiplicative");
              }
      }
    }
    // twists: unit twists, naturality, coherence, invertibility
    for (int u = 0; u < int(base.mors.size()); ++u)
      for (int v = 0; v < int(base.mors.size()); ++v) {
        if (base.mors[u].src != base.mors[v].tgt) continue;
        int U = base.mors[u].tgt;
        int uv = base.compose(u, v);
        const Local& L = local[U];
        for (int A = 0; A < L.nobj; ++A) {
          const MorVal<K>& c = twist_at(u, v, A);
          QOPS_CHECK(c.src == apply_obj(v, apply_obj(u, A)) && c.tgt == apply_obj(uv, A),
                     "twist: wrong shape");
          if ((base.is_identity(u) || base.is_identity(v)) && !(c == identity_moreq(c)))
            bad.push_back("unit twist c^{u,1}/c^{1,v} is not the identity");
          if (check_invertible && !twist_invertible(u, v, A))
            bad.push_back("twist " + base.mors[u].name + "," + base.mors[v].name +
                          " not invertible");
          // naturality: c(A') o v*u*(x) = (uv)*(x) o c(A) for basis x: A -> A'
          for (int A2 = 0; A2 < L.nobj; ++A2)
            for (int i = 0; i < L.dim[A][A2]; ++i) {
              MorVal<K> x = zero_mor(U, A, A2);
              x.coef[i] = K{1};
              MorVal<K> lhs = mcompose(twist_at(u, v, A2), apply_functor(v, apply_functor(u, x)));
              MorVal<K> rhs = mcompose(apply_functor(uv, x), twist_at(u, v, A));
              if (!(lhs == rhs))
                bad.push_back("twist " + base.mors[u].name + "," + base.mors[v].name +
                              ": naturality fails");
            }
        }
      }
    // coherence: c^{u,vw} (c^{v,w} o u*) = c^{uv,w} (w* o c^{u,v})
    for (int u = 0; u < int(base.mors.size()); ++u)
      for (int v = 0; v < int(base.mors.size()); ++v)
        for (int w = 0; w < int(base.mors.size()); ++w) {
          if (base.mors[u].src != base.mors[v].tgt) continue;
          if (base.mors[v].src != base.mors[w].tgt) continue;
          int U = base.mors[u].tgt;
          int vw = base.compose(v, w), uv = base.compose(u, v);
          for (int A = 0; A < local[U].nobj; ++A) {
            MorVal<K> lhs = mcompose(twist_at(u, vw, A), twist_at(v, w, apply_obj(u, A)));
            MorVal<K> rhs = mcompose(twist_at(uv, w, A), apply_functor(w, twist_at(u, v, A)));
            if (!(lhs == rhs))
              bad.push_back("coherence fails at (" + base.mors[u].name + "," +
                            base.mors[v].name + "," + base.mors[w].name + ")");
          }
        }
    return bad;
  }

  bool twist_invertible(int u, int v, int A) const {
    // solve c o x = 1 and x o c = 1 on the hom bases
    const MorVal<K>& c = twist_at(u, v, A);
    return mor_invertible(c);
  }

  bool mor_invertible(const MorVal<K>& c) const {
    // invertible iff there is x with c o x = id_src-ish; smalls: solve densely
    int W = c.U;
    const Local& L = local[W];
    int dn = L.dim[c.tgt][c.src];
    if (L.dim[c.src][c.tgt] == 0 || dn == 0) return false;
    // build matrix of y -> c o y on Hom(tgt -> src) ... we need right inverse:
    // x: tgt -> src with c o x = 1_tgt and x o c = 1_src
    int dm = L.dim[c.tgt][c.tgt];
    std::vector<std::vector<K>> M(dm, std::vector<K>(dn, K{0}));
    for (int i = 0; i < dn; ++i) {
      MorVal<K> e = zero_mor(W, c.tgt, c.src);
      e.coef[i] = K{1};
      MorVal<K> ce = mcompose(c, e);
      for (int j = 0; j < dm; ++j) M[j][i] = ce.coef[j];
    }
    std::vector<K> rhs(dm, K{0});
    rhs[0] = K{1};  // identity basis vector
    std::vector<K> sol;
    if (!solve_linear(M, rhs, sol)) return false;
    MorVal<K> x = zero_mor(W, c.tgt, c.src);
    x.coef = sol;
    return mcompose(c, x) == identity_mor(W, c.tgt) && mcompose(x, c) == identity_mor(W, c.src);
  }

  static bool solve_linear(std::vector<std::vector<K>> M, std::vector<K> b, std::vector<K>& out) {
    int rows = int(M.size());
    int cols = rows ? int(M[0].size()) : 0;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
      int pr = -1;
      for (int i = r; i < rows; ++i)
        if (M[i][c] != K{0}) {
          pr = i;
          break;
        }
      if (pr < 0) continue;
      std::swap(M[pr], M[r]);
      std::swap(b[pr], b[r]);
      K inv = ring_inverse(M[r][c]);
      for (int j = 0; j < cols; ++j) M[r][j] *= inv;
      b[r] = b[r] * inv;
      for (int i = 0; i < rows; ++i) {
        if (i == r || M[i][c] == K{0}) continue;
        K f = M[i][c];
        for (int j = 0; j < cols; ++j) M[i][j] -= f * M[r][j];
        b[i] -= f * b[r];
      }
      pivot_col.push_back(c);
      ++r;
    }
    for (int i = r; i < rows; ++i)
      if (b[i] != K{0}) return false;
    out.assign(cols, K{0});
    for (int i = 0; i < r; ++i) out[pivot_col[i]] = b[i];
    return true;
  }
};

template <typename K>
inline bool operator==(const MorVal<K>& a, const MorVal<K>& b) {
  return a.U == b.U && a.src == b.src && a.tgt == b.tgt && a.coef == b.coef;
}

// ---- generated test prestacks --------------------------------------------
//
// Base: a chain poset.  Locals: two objects with hom(a,a) = <1, xi_a>,
// hom(a,b) = <alpha_ab> for a != b, and all products of non-identity basis
// elements equal to zero.  Functors fix objects and scale the non-identity
// generators; twists are coboundary scalars lambda(u,v) = mu(u) mu(v) / mu(uv)
// corrected by a nilpotent part, which satisfies coherence for any choice of
// the per-morphism parameters.
template <typename K>
struct PrestackGen {
  std::mt19937_64 rng;
  explicit PrestackGen(std::uint64_t seed) : rng(seed) {}

  K unit_scalar(long long modulus) {
    // nonzero scalar
    while (true) {
      K v = from_int(1 + int(rng() % 7), modulus);
      if (ring_invertible(v)) return v;
    }
  }
  K any_scalar(long long modulus) { return from_int(int(rng() % 7) - 3, modulus); }
  K from_int(int v, long long modulus);

  Prestack<K> make(int chain_len, long long modulus) {
    Prestack<K> P;
    P.base = BaseCat::chain(chain_len);
    int M = int(P.base.mors.size());
    // locals: identical shape everywhere
    for (int U = 0; U < P.base.nobj; ++U) {
      typename Prestack<K>::Local L;
      L.nobj = 2;
      L.dim = {{2, 1}, {1, 2}};
      L.mul_.assign(2, {});
      for (int a = 0; a < 2; ++a) {
        L.mul_[a].assign(2, {});
        for (int b = 0; b < 2; ++b) {
          L.mul_[a][b].assign(2, {});
          for (int c = 0; c < 2; ++c) {
            auto& T = L.mul_[a][b][c];
            T.assign(L.dim[b][c], std::vector<std::vector<K>>(L.dim[a][b]));
            for (int j = 0; j < L.dim[b][c]; ++j)
              for (int i = 0; i < L.dim[a][b]; ++i) {
                std::vector<K> prod(L.dim[a][c], K{0});
                bool j_id = (b == c && j == 0);
                bool i_id = (a == b && i == 0);
                if (j_id && i_id) {
                  prod[0] = K{1};
                } else if (j_id) {
                  prod[i] = K{1};  // same basis layout on hom(a,c) = hom(a,b)
                } else if (i_id) {
                  prod[j] = K{1};
                }  // else: product of non-identities is zero
                T[j][i] = prod;
              }
          }
        }
      }
      P.local.push_back(std::move(L));
    }
    // functors: strict along the chain; scalars per generator arrow,
    // composites multiply
    std::vector<K> s(M), a01(M), a10(M);  // xi-scale and alpha-scales
    for (int u = 0; u < M; ++u) {
      if (P.base.is_identity(u)) {
        s[u] = from_int(1, modulus);
        a01[u] = from_int(1, modulus);
        a10[u] = from_int(1, modulus);
      }
    }
    // generator arrows i -> i+1; composite scalars = products
    auto arrow = [&](int i, int j) {
      for (int u = 0; u < M; ++u)
        if (P.base.mors[u].src == i && P.base.mors[u].tgt == j) return u;
      QOPS_CHECK(false, "gen: arrow not found");
      return -1;
    };
    for (int i = 0; i + 1 < P.base.nobj; ++i) {
      int u = arrow(i, i + 1);
      s[u] = unit_scalar(modulus);
      a01[u] = unit_scalar(modulus);
      a10[u] = unit_scalar(modulus);
    }
    for (int len = 2; len < P.base.nobj; ++len)
      for (int i = 0; i + len < P.base.nobj; ++i) {
        int u = arrow(i, i + len);
        int v = arrow(i, i + 1), w = arrow(i + 1, i + len);
        s[u] = s[v] * s[w];
        a01[u] = a01[v] * a01[w];
        a10[u] = a10[v] * a10[w];
      }
    for (int u = 0; u < M; ++u) {
      typename Prestack<K>::Functor F;
      F.obj = {0, 1};
      F.mat.assign(2, std::vector<std::vector<std::vector<K>>>(2));
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          int d = P.local[0].dim[a][b];
          F.mat[a][b].assign(d, std::vector<K>(d, K{0}));
          if (a == b) {
            F.mat[a][b][0][0] = K{1};
            F.mat[a][b][1][1] = s[u];
          } else {
            F.mat[a][b][0][0] = a == 0 ? a01[u] : a10[u];
          }
        }
      P.functor.push_back(std::move(F));
    }
    // twists: lambda coboundary plus nilpotent correction
    std::vector<K> mu(M), nu(M);
    for (int u = 0; u < M; ++u) {
      mu[u] = P.base.is_identity(u) ? from_int(1, modulus) : unit_scalar(modulus);
      nu[u] = P.base.is_identity(u) ? from_int(0, modulus) : any_scalar(modulus);
    }
    P.twist.assign(M, std::vector<std::vector<MorVal<K>>>(M));
    for (int u = 0; u < M; ++u)
      for (int v = 0; v < M; ++v) {
        if (P.base.mors[u].src != P.base.mors[v].tgt) continue;
        int uv = P.base.compose(u, v);
        K lambda = mu[u] * mu[v] * ring_inverse(mu[uv]);
        // m_{u,v} = nu(v) + s_v nu(u) - nu(uv)
        K mpart = nu[v] + s[v] * nu[u] - nu[uv];
        if (P.base.is_identity(u) || P.base.is_identity(v)) {
          lambda = from_int(1, modulus);
          mpart = from_int(0, modulus);
        }
        auto& comps = P.twist[u][v];
        comps.resize(2);
        for (int A = 0; A < 2; ++A) {
          MorVal<K> c = P.zero_mor(P.base.mors[v].src, A, A);
          c.coef[0] = lambda;
          c.coef[1] = lambda * mpart;
          comps[A] = std::move(c);
        }
      }
    return P;
  }
};

template <>
inline Rational PrestackGen<Rational>::from_int(int v, long long) {
  return Rational(v);
}
template <>
inline Fp PrestackGen<Fp>::from_int(int v, long long modulus) {
  return Fp(v, modulus);
}

}  // namespace qops
