#include "doctest.h"
#include "qops/action.hpp"

using namespace qops;

namespace {

using R = Rational;

// arrow i -> j in a chain base
int arrow(const BaseCat& B, int i, int j) {
  for (int m = 0; m < int(B.mors.size()); ++m)
    if (B.mors[m].src == i && B.mors[m].tgt == j) return m;
  QOPS_CHECK(false, "arrow not found");
  return -1;
}

GSimplex full_chain(const BaseCat& B) {
  GSimplex s;
  s.obj0 = 0;
  for (int i = 0; i + 1 < B.nobj; ++i) s.arrows.push_back(arrow(B, i, i + 1));
  return s;
}

std::vector<MorVal<R>> basis_args(const Prestack<R>& P, const GSimplex& s,
                                  const std::vector<int>& A, const std::vector<int>& ix) {
  int U = gsim_top(P.base, s);
  std::vector<MorVal<R>> args(ix.size());
  for (size_t i = 1; i <= ix.size(); ++i) {
    args[i - 1] = P.zero_mor(U, A[i], A[i - 1]);
    args[i - 1].coef[ix[i - 1]] = R(1);
  }
  return args;
}

}  // namespace

TEST_CASE("single-rectangle patch acts as plain evaluation") {
  PrestackGen<R> g(41);
  Prestack<R> P = g.make(3, 0);
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) {
      Cochain<R> th = cochain_cached(random_cochain(P, p, q, 5, 0, false, false));
      Patch single = Patch::make(Mns::corolla(q), Mns::corolla(p));
      Cochain<R> acted = act_patch(P, single, {th});
      CHECK(cochains_equal(P, acted, th));
    }
}

TEST_CASE("worked patchwork evaluation (four rectangles over an 8-chain)") {
  PrestackGen<R> g(53);
  Prestack<R> P = g.make(8, 0);
  const BaseCat& B = P.base;
  // vertical m(1, 2(3@1, 4@3)), horizontal 1(3@2(4@1), 2@4)
  Mns X = Mns::parse("m(1:1[3],2:2[3](1:3[2],3:4[0]))");
  Mns J = Mns::parse("1[5](2:3[1](1:4[2]),4:2[2])");
  Patch patch = Patch::make(X, J);
  std::vector<Cochain<R>> th = {cochain_cached(random_cochain(P, 5, 3, 11, 0, false, false)),
                                cochain_cached(random_cochain(P, 2, 3, 12, 0, false, false)),
                                cochain_cached(random_cochain(P, 1, 2, 13, 0, false, false)),
                                cochain_cached(random_cochain(P, 2, 0, 14, 0, false, false))};
  PatchAction<R> act(P, patch, th);
  REQUIRE(act.out_p() == 7);
  REQUIRE(act.out_q() == 6);
  GSimplex sigma = full_chain(B);  // (u1,...,u7)
  auto u = [&](int i, int j) { return arrow(B, i, j); };

  // pinned covering simplices
  CHECK(act.own_simplex(sigma, 1).arrows ==
        std::vector<int>({u(0, 1), u(1, 3), u(3, 4), u(4, 6), u(6, 7)}));
  CHECK(act.own_simplex(sigma, 2).arrows == std::vector<int>({u(1, 2), u(2, 3)}));
  CHECK(act.own_simplex(sigma, 3).arrows == std::vector<int>({u(4, 6)}));
  CHECK(act.own_simplex(sigma, 4).arrows == std::vector<int>({u(4, 5), u(5, 6)}));
  CHECK(act.covering_ab(sigma, 2, 3).arrows == std::vector<int>({u(3, 4)}));
  CHECK(act.covering_ab(sigma, 2, 4).arrows == std::vector<int>({u(3, 4)}));
  CHECK(act.covering_a(sigma, 3, 1).arrows == std::vector<int>({u(6, 7)}));
  CHECK(act.covering_a(sigma, 2, 2).arrows ==
        std::vector<int>({u(3, 4), u(4, 6), u(6, 7)}));

  // full evaluation against the hand-assembled composite
  std::vector<int> A = {0, 1, 1, 0, 1, 0, 1};
  std::vector<int> dims(6);
  int U7 = gsim_top(B, sigma);
  for (int i = 1; i <= 6; ++i) dims[i - 1] = P.local[U7].dim[A[i]][A[i - 1]];
  std::vector<int> ix(6, 0);
  int checked = 0;
  while (true) {
    auto a = basis_args(P, sigma, A, ix);
    // theta_1 over (u1, u3u2, u4, u6u5, u7) at (A0..A3)
    GSimplex s1{0, {u(0, 1), u(1, 3), u(3, 4), u(4, 6), u(6, 7)}};
    MorVal<R> T1 =
        th[0].eval(P, s1, {A[0], A[1], A[2], A[3]}, {a[0], a[1], a[2]});
    // theta_3 over (u6u5) at (u7*A3, u7*A4, u7*A5) with inputs u7*a4, u7*a5
    GSimplex s3{4, {u(4, 6)}};
    auto u7 = [&](const MorVal<R>& m) { return P.apply_functor(u(6, 7), m); };
    int o3a = P.apply_obj(u(6, 7), A[3]);
    int o3b = P.apply_obj(u(6, 7), A[4]);
    int o3c = P.apply_obj(u(6, 7), A[5]);
    MorVal<R> T3 = th[2].eval(P, s3, {o3a, o3b, o3c}, {u7(a[3]), u7(a[4])});
    // theta_4 over (u5, u6) at (u7*A6)
    GSimplex s4{4, {u(4, 5), u(5, 6)}};
    int o4 = P.apply_obj(u(6, 7), A[6]);
    MorVal<R> T4 = th[3].eval(P, s4, {o4}, {});
    // theta_2 over (u2, u3) at the transported objects
    GSimplex s2{1, {u(1, 2), u(2, 3)}};
    auto tr = [&](int obj, std::initializer_list<int> path) {
      for (auto it = std::rbegin(path); it != std::rend(path); ++it) obj = P.apply_obj(*it, obj);
      return obj;
    };
    int B0 = tr(A[3], {u(3, 4), u(4, 6), u(6, 7)});
    int B1 = tr(A[5], {u(3, 4), u(4, 6), u(6, 7)});
    int B2 = tr(A[6], {u(3, 4), u(4, 6), u(6, 7)});
    int B3 = tr(A[6], {u(3, 4), u(4, 5), u(5, 6), u(6, 7)});
    auto u4 = [&](const MorVal<R>& m) { return P.apply_functor(u(3, 4), m); };
    MorVal<R> in1 = u4(T3);
    MorVal<R> in2 = u4(P.apply_functor(u(4, 6), u7(a[5])));
    MorVal<R> in3 = u4(T4);
    MorVal<R> T2 = th[1].eval(P, s2, {B0, B1, B2, B3}, {in1, in2, in3});
    // final composite
    MorVal<R> rhs = P.mcompose(T1, P.apply_functor(u(0, 1), T2));
    MorVal<R> lhs = act.eval(sigma, A, a);
    REQUIRE(lhs == rhs);
    ++checked;
    int k = 5;
    while (k >= 0 && ix[k] + 1 == dims[k]) ix[k--] = 0;
    if (k < 0) break;
    ++ix[k];
  }
  CHECK(checked > 0);
}

TEST_CASE("pinned covering simplices of the eight-wide patchwork") {
  // a patchwork realizing the paper's L-set data for rectangle 6:
  // sigma_6(0) = (u3u2, u5u4, u6, u8u7) and sigma(6,1) = (u3u2)
  PrestackGen<R> g(59);
  Prestack<R> P = g.make(9, 0);
  const BaseCat& B = P.base;
  Mns X = Mns::parse(
      "m(1:m(1:m(1:m(1:m(1:2[1],2:6[3](2:1[1])),2:3[1]),2:4[1]),2:5[1]),2:7[1])");
  Mns J = Mns::parse("2[5](1:5[2],2:7[1],3:1[2](1:4[1]),4:3[2],5:6[1])");
  Patch patch = Patch::make(X, J);
  std::vector<Cochain<R>> th;
  for (int a = 1; a <= 7; ++a)
    th.push_back(cochain_cached(
        random_cochain(P, patch.j.colors[a - 1], patch.x.colors[a - 1], 70 + a, 0, false, false)));
  PatchAction<R> act(P, patch, th);
  GSimplex sigma = full_chain(B);  // (u1..u8)
  auto u = [&](int i, int j) { return arrow(B, i, j); };
  CHECK(act.covering_a(sigma, 6, 0).arrows ==
        std::vector<int>({u(1, 3), u(3, 5), u(5, 6), u(6, 8)}));
  CHECK(act.covering_a(sigma, 6, 1).arrows ==
        std::vector<int>({u(1, 3), u(3, 5), u(5, 6), u(6, 8)}));
  CHECK(act.covering_ab(sigma, 6, 1).arrows == std::vector<int>({u(1, 3)}));
}

TEST_CASE("L(D,1) equals d0") {
  PrestackGen<R> g(61);
  Prestack<R> P = g.make(3, 0);
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) {
      Cochain<R> th = cochain_cached(random_cochain(P, p, q, 31 + p + q, 0, false, false));
      // sum over the terms of D_q paired with the p-corolla
      Cochain<R> viaD;
      viaD.p = p;
      viaD.q = q + 1;
      std::vector<std::pair<Coeff, Cochain<R>>> parts;
      auto dsum = hochschild_D(q);
      for (const auto& [k, tc] : dsum.terms()) {
        Patch pa = Patch::make(tc.first, Mns::corolla(p));
        parts.push_back({tc.second, act_patch(P, pa, {th})});
      }
      const Prestack<R>* Pp = &P;
      int qq = q + 1;
      viaD.at = [Pp, parts, qq](const GSimplex& s, const std::vector<int>& A,
                                const std::vector<int>& ix) {
        MorVal<R> acc = Pp->zero_mor(s.obj0, sharp_obj(*Pp, s, A[qq]), star_obj(*Pp, s, A[0]));
        for (const auto& [c, f] : parts) acc += f.at(s, A, ix) * ring_from_coeff<R>(c);
        return acc;
      };
      Cochain<R> d0 = gs_d0(P, th);
      REQUIRE_MESSAGE(cochains_equal(P, viaD, d0), "p=", p, " q=", q);
    }
}

namespace {

// pool of small patches with recorded colors, built from quilt expansions
struct PatchPool {
  std::vector<Patch> items;
  std::vector<std::vector<std::pair<int, int>>> colors;  // per input
  void build() {
    for (int n = 1; n <= 2; ++n)
      for (int d = 0; d <= (n == 1 ? 1 : 1); ++d)
        for (const Quilt& q : enumerate_quilts(n, d, false)) {
          std::vector<std::pair<int, int>> cols(n);
          std::function<void(int)> rec = [&](int k) {
            if (k == n) {
              auto fam = quilt_to_patch(q, cols);
              for (const auto& [key, tc] : fam.terms()) {
                items.push_back(tc.first);
                colors.push_back(cols);
              }
              return;
            }
            for (int qq = 0; qq <= 2; ++qq)
              for (int pp = 1; pp <= 2; ++pp) {
                cols[k] = {qq, pp};
                rec(k + 1);
              }
          };
          rec(0);
        }
  }
};

}  // namespace

TEST_CASE("patch action is an operad morphism on sampled pairs") {
  PrestackGen<R> g(67);
  Prestack<R> P = g.make(3, 0);
  PatchPool pool;
  pool.build();
  std::mt19937 rng(3);
  int done = 0;
  while (done < 20) {
    const Patch& A = pool.items[rng() % pool.items.size()];
    const Patch& Bp = pool.items[rng() % pool.items.size()];
    int n = A.x.arity();
    int a = 1 + int(rng() % n);
    if (Bp.x.out_color() != A.x.colors[a - 1] || Bp.j.out_color() != A.j.colors[a - 1]) continue;
    // thetas
    int m = Bp.x.arity();
    std::vector<Cochain<R>> thA(n), thB(m), thAll;
    for (int k = 1; k <= n; ++k)
      thA[k - 1] = cochain_cached(
          random_cochain(P, A.j.colors[k - 1], A.x.colors[k - 1], 100 + done * 10 + k, 0, false, false));
    for (int k = 1; k <= m; ++k)
      thB[k - 1] = cochain_cached(
          random_cochain(P, Bp.j.colors[k - 1], Bp.x.colors[k - 1], 200 + done * 10 + k, 0, false, false));
    Patch comp = patch_compose(A, a, Bp);
    for (int v = 1; v < a; ++v) thAll.push_back(thA[v - 1]);
    for (int w = 1; w <= m; ++w) thAll.push_back(thB[w - 1]);
    for (int v = a + 1; v <= n; ++v) thAll.push_back(thA[v - 1]);
    Cochain<R> lhs = act_patch(P, comp, thAll);
    // rhs: outer action with the inner action's cochain plugged in slot a
    std::vector<Cochain<R>> thOuter = thA;
    thOuter[a - 1] = cochain_cached(act_patch(P, Bp, thB));
    Cochain<R> rhs = act_patch(P, A, thOuter);
    std::string why;
    REQUIRE_MESSAGE(cochains_equal(P, lhs, rhs, &why), "pair ", A.key(), " o_", a, " ",
                    Bp.key(), ": ", why);
    ++done;
  }
}

TEST_CASE("R is a dg-morphism against d0") {
  PrestackGen<R> g(71);
  Prestack<R> P = g.make(3, 0);
  std::mt19937 rng(9);
  std::vector<Quilt> pool;
  for (int n = 1; n <= 2; ++n)
    for (int d = 0; d <= 1; ++d)
      for (const Quilt& q : enumerate_quilts(n, d, false)) pool.push_back(q);
  for (int trial = 0; trial < 6; ++trial) {
    const Quilt& Q = pool[rng() % pool.size()];
    int n = Q.arity();
    std::vector<Cochain<R>> th(n);
    std::vector<std::pair<int, int>> cols(n);
    for (int k = 0; k < n; ++k) {
      cols[k] = {int(rng() % 2), 1 + int(rng() % 2)};
      th[k] = cochain_cached(
          random_cochain(P, cols[k].second, cols[k].first, 300 + trial * 10 + k, 0, false, false));
    }
    Cochain<R> lhs;
    {
      auto bd = quilt_boundary(Q);
      std::vector<std::pair<Coeff, Cochain<R>>> parts;
      for (const auto& [k, tc] : bd.terms()) parts.push_back({tc.second, act_quilt(P, tc.first, th)});
      auto [op, oq] = action_bidegree(cols, 0, Q.degree() - 1);
      lhs.p = op;
      lhs.q = oq;
      const Prestack<R>* Pp = &P;
      lhs.at = [Pp, parts, oq](const GSimplex& s, const std::vector<int>& A,
                               const std::vector<int>& ix) {
        MorVal<R> acc = Pp->zero_mor(s.obj0, sharp_obj(*Pp, s, A[oq]), star_obj(*Pp, s, A[0]));
        for (const auto& [c, f] : parts) acc += f.at(s, A, ix) * ring_from_coeff<R>(c);
        return acc;
      };
    }
    // rhs: d0 R(Q) - (-1)^{deg Q} sum_i (+-) R(Q)(.., d0 theta_i, ..), with the
    // insertion sign (-1)^{sum_{k<i} q_k} matching the compiled composition
    Cochain<R> rq = cochain_cached(act_quilt(P, Q, th));
    Cochain<R> rhs = gs_d0(P, rq);
    int sgnQ = Q.degree() % 2 == 0 ? -1 : 1;  // -(-1)^{deg}
    for (int i = 1; i <= n; ++i) {
      std::vector<Cochain<R>> th2 = th;
      th2[i - 1] = cochain_cached(gs_d0(P, th[i - 1]));
      int pre = 0;
      for (int k = 1; k < i; ++k) pre += cols[k - 1].first;
      int csgn = pre % 2 == 0 ? 1 : -1;
      rhs = cochain_add(P, rhs,
                        cochain_scale(act_quilt(P, Q, th2), ring_from_coeff<R>(sgnQ * csgn)));
    }
    std::string why;
    REQUIRE_MESSAGE(cochains_equal(P, lhs, rhs, &why), "Q=", Q.key(), ": ", why);
  }
}

TEST_CASE("R_c L_1^j equals d_j for j = 1,2,3") {
  PrestackGen<R> g(73);
  Prestack<R> P = g.make(4, 0);
  for (int j = 1; j <= 3; ++j) {
    auto l1j = build_L(1, j);
    for (int p = 0; p + j <= 3; ++p)
      for (int q = j - 1; q <= 2; ++q) {
        Cochain<R> th = cochain_cached(random_cochain(P, p, q, 400 + 10 * j + p + 4 * q, 0, false, false));
        auto [op, oq] = action_bidegree({{q, p}}, j, -1);
        Cochain<R> lhs = act_cquilt_sum(P, l1j, {th}, op, oq);
        Cochain<R> rhs = gs_d(P, th, j);
        REQUIRE(rhs.p == op);
        REQUIRE(rhs.q == oq);
        std::string why;
        REQUIRE_MESSAGE(cochains_equal(P, lhs, rhs, &why), "j=", j, " p=", p, " q=", q, ": ",
                        why);
      }
  }
}
