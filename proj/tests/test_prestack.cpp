#include "doctest.h"
#include "qops/gs.hpp"

using namespace qops;

TEST_CASE("generated prestacks validate over Q and Fp") {
  for (int len : {2, 3, 4}) {
    PrestackGen<Rational> g(7 + len);
    Prestack<Rational> P = g.make(len, 0);
    auto bad = P.validate();
    for (const auto& b : bad) MESSAGE(b);
    CHECK(bad.empty());
  }
  PrestackGen<Fp> g(11);
  Prestack<Fp> P = g.make(3, 101);
  CHECK(P.validate().empty());
}

TEST_CASE("breaking the cocycle breaks coherence") {
  PrestackGen<Rational> g(3);
  Prestack<Rational> P = g.make(4, 0);
  // scale one non-unit twist component by 2: coherence must fail
  for (int u = 0; u < int(P.base.mors.size()); ++u)
    for (int v = 0; v < int(P.base.mors.size()); ++v) {
      if (P.base.mors[u].src != P.base.mors[v].tgt) continue;
      if (P.base.is_identity(u) || P.base.is_identity(v)) continue;
      for (auto& c : P.twist[u][v]) c = c * Rational(2);
      goto done;
    }
done:;
  auto bad = P.validate();
  bool coherence = false;
  for (const auto& b : bad)
    if (b.find("coherence") != std::string::npos) coherence = true;
  CHECK(coherence);
}

TEST_CASE("simplex functors: p = 1 and p = 2 pinned") {
  PrestackGen<Rational> g(5);
  Prestack<Rational> P = g.make(3, 0);
  // p = 1: sigma# = sigma* on objects and morphisms
  for (const GSimplex& s : all_gsimplices(P.base, 1)) {
    int U = gsim_top(P.base, s);
    for (int A = 0; A < P.local[U].nobj; ++A)
      CHECK(sharp_obj(P, s, A) == star_obj(P, s, A));
  }
  // p = 2: c^{sigma,1} = c^{u1,u2}-contraction = the stored twist
  for (const GSimplex& s : all_gsimplices(P.base, 2)) {
    int U = gsim_top(P.base, s);
    for (int A = 0; A < P.local[U].nobj; ++A) {
      MorVal<Rational> c = csigma_component(P, s, 1, A);
      CHECK(c == P.twist_at(s.arrows[1], s.arrows[0], A));
    }
  }
}

TEST_CASE("formal paths: counts and the p = 2 sign") {
  BaseCat B = BaseCat::chain(5);
  // pick a nondegenerate simplex of each length
  auto pick = [&](int p) {
    for (const auto& s : B.simplices(p))
      if (!B.reduced_simplex(s)) return s;
    return B.simplices(p).front();
  };
  auto p2 = formal_paths(B, pick(2));
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].sign == -1);
  CHECK(formal_paths(B, pick(3)).size() == 2);
  CHECK(formal_paths(B, pick(4)).size() == 6);
}

TEST_CASE("sigma-sharp to sigma-star via any realized formal path") {
  PrestackGen<Rational> g(17);
  Prestack<Rational> P = g.make(4, 0);
  for (const GSimplex& s : all_gsimplices(P.base, 3)) {
    int U = gsim_top(P.base, s);
    for (int A = 0; A < P.local[U].nobj; ++A) {
      // compose the realization of each path; all must agree (coherence)
      MorVal<Rational> ref;
      bool first = true;
      for (const FormalPath& r : formal_paths(P.base, s.arrows)) {
        std::vector<int> tau = s.arrows;
        MorVal<Rational> acc;
        bool has = false;
        for (auto it = r.steps.rbegin(); it != r.steps.rend(); ++it) {
          QOPS_CHECK(it->simplex == tau, "path mismatch");
          MorVal<Rational> e = epsilon_component(P, tau, it->index, A);
          acc = has ? P.mcompose(e, acc) : e;
          has = true;
          tau = P.base.face(tau, it->index);
        }
        if (first) {
          ref = acc;
          first = false;
        } else {
          CHECK(acc == ref);
        }
      }
      // endpoints: sigma# A -> sigma* A
      CHECK(ref.src == sharp_obj(P, s, A));
      CHECK(ref.tgt == star_obj(P, s, A));
    }
  }
}

TEST_CASE("total differential squares to zero") {
  // d(d theta) = 0 componentwise: sum_{i+j=k} d_i d_j theta = 0 for each k
  PrestackGen<Rational> g(23);
  Prestack<Rational> P = g.make(3, 0);
  for (int p = 0; p <= 1; ++p)
    for (int q = 0; q <= 2; ++q) {
      Cochain<Rational> th = cochain_cached(random_cochain(P, p, q, 99, 0, false, false));
      // target bidegrees (p + k, q + 2 - k)
      for (int k = 0; k <= q + 2 && p + k <= 3; ++k) {
        Cochain<Rational> total;
        bool first = true;
        for (int j = 0; j <= k; ++j) {
          int i = k - j;
          // apply d_j first: C^{p,q} -> C^{p+j, q+1-j}, then d_i
          if (q + 1 - j < 0) continue;
          if (q + 2 - k < 0) continue;
          Cochain<Rational> dj = cochain_cached(gs_d(P, th, j));
          Cochain<Rational> didj = gs_d(P, dj, i);
          total = first ? didj : cochain_add(P, total, didj);
          first = false;
        }
        if (!first) {
          REQUIRE_MESSAGE(cochain_zero(P, total), "p=", p, " q=", q, " k=", k);
        }
      }
    }
}
