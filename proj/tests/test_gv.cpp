#include "doctest.h"
#include "qops/gv.hpp"

using namespace qops;

namespace {

std::vector<std::vector<int>> color_tuples(int n, int maxc, int minc = 0) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, minc);
  while (true) {
    out.push_back(cur);
    int k = n - 1;
    while (k >= 0 && cur[k] == maxc) cur[k--] = minc;
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

std::vector<int> splice_colors(const std::vector<int>& outer, int i,
                               const std::vector<int>& inner) {
  std::vector<int> r;
  for (int v = 1; v < i; ++v) r.push_back(outer[v - 1]);
  for (int w : inner) r.push_back(w);
  for (int v = i + 1; v <= int(outer.size()); ++v) r.push_back(outer[v - 1]);
  return r;
}

int sum_std_degree(const std::vector<int>& q, int out) {
  int d = -out;
  for (int c : q) d += c;
  return d;
}

}  // namespace

TEST_CASE("phi basics") {
  auto u = phi(Tree::single(), {3});
  REQUIRE(u.size() == 1);
  CHECK(u.terms().begin()->second.second == 1);
  // chain colored with leaf blocks in order: identity shuffle
  Tree chain = Tree::parse("1(2)");
  for (const auto& [k, tc] : phi(chain, {2, 2}).terms()) CHECK(tc.second != 0);
}

TEST_CASE("word sign for 1231: matches the worked J-word") {
  // The J-word for the coloring with the plugged pair at slot k of vertex 1
  // is 0_2 0_1..(k-1)_1 1_2..(q2-1)_2 0_3..(q3-1)_3 k_1..(q1-1)_1, whose
  // inversion parity is q1 + (q2+q3-1)(q1-k).  (The closed form printed next
  // to that word reads (q2+q3)(q1-k)+q1, off by (q1-k); the J-word itself,
  // and the graded-morphism identities below, fix the sign used here.)
  for (int q1 = 1; q1 <= 3; ++q1)
    for (int q2 = 1; q2 <= 3; ++q2)
      for (int q3 = 1; q3 <= 3; ++q3) {
        Word w = Word::parse("1231");
        auto cs = colorings_of_word(w, {q1, q2, q3});
        REQUIRE(int(cs.size()) == q1);
        for (const Mns& X : cs) {
          int k = 0;
          for (int c : X.tree.children[0])
            if (X.plugged[c - 1]) k = X.index[c - 1];
          REQUIRE(k >= 1);
          int expect = (q1 + (q2 + q3 - 1) * (q1 - k)) % 2 == 0 ? 1 : -1;
          CHECK(sgn_word_coloring(w, X, {q1, q2, q3}) == expect);
        }
      }
}

TEST_CASE("word sign for 13121: matches the definition's J-word") {
  // Children 3 at slot i, 2 at slot j, i < j.  With J_0 in reverse down-order
  // (0_2 before 0_3, the definition's reading; the example's display starts
  // 0_3 0_2) the parity is one transposition away from the printed closed
  // form: sgn = -(-1)^{(q2-1)(q1-j) + (q3-1)(q1-i) + q3 q2 + q3 - 1}.
  for (int q1 = 2; q1 <= 3; ++q1)
    for (int q2 = 1; q2 <= 3; ++q2)
      for (int q3 = 1; q3 <= 3; ++q3) {
        Word w = Word::parse("13121");
        auto cs = colorings_of_word(w, {q1, q2, q3});
        REQUIRE(int(cs.size()) == q1 * (q1 - 1) / 2);
        for (const Mns& X : cs) {
          int i = X.index[2], j = X.index[1];  // child 3, child 2
          REQUIRE(i < j);
          int e = (q2 - 1) * (q1 - j) + (q3 - 1) * (q1 - i) + q3 * q2 + q3 - 1;
          CHECK(sgn_word_coloring(w, X, {q1, q2, q3}) == -(e % 2 == 0 ? 1 : -1));
        }
      }
}

TEST_CASE("phibar of 12 has one positive term") {
  for (int q1 = 0; q1 <= 2; ++q1)
    for (int q2 = 0; q2 <= 2; ++q2) {
      auto s = phibar(Word::parse("12"), {q1, q2});
      REQUIRE(s.size() == 1);
      // sign checked against the independent J-word route by construction;
      // the multiplication coloring is positive
      CHECK(s.terms().begin()->second.second == 1);
    }
}

TEST_CASE("phibar corolla sum for 121..1k1: slot dependence of the sign") {
  // phibar(M_{1,k-1}) = sum over i_2<...<i_k of +-(corolla term) with exponent
  // eps = sum_{j>=2} (q_j-1)(q_1 - i_j + sum_{l>j}(q_l-1)).  eps carries the
  // entire slot dependence; the J_0 block adds a slot-independent overall
  // factor per color tuple, so the pinned content is sgn(X)/sgn(X') =
  // (-1)^{eps(X)-eps(X')} within each tuple.
  for (int k = 2; k <= 4; ++k) {
    Word w = fs_generator_m1k(k - 1);
    int n = k;
    for (const auto& q : color_tuples(n, 3, 1)) {
      auto cs = colorings_of_word(w, q);
      auto eps_of = [&](const Mns& X) {
        std::vector<int> idx(n + 1, 0);  // idx[j] = slot of child j
        for (int c : X.tree.children[0]) idx[c] = X.index[c - 1];
        int eps = 0;
        for (int j = 2; j <= k; ++j) {
          int tail = 0;
          for (int l = j + 1; l <= k; ++l) tail += q[l - 1] - 1;
          eps += (q[j - 1] - 1) * (q[0] - idx[j] + tail);
        }
        return eps;
      };
      if (cs.empty()) continue;
      int s0 = sgn_word_coloring(w, cs[0], q), e0 = eps_of(cs[0]);
      for (const Mns& X : cs) {
        int st = sgn_word_coloring(w, X, q), et = eps_of(X);
        CHECK(st * s0 == ((et - e0) % 2 == 0 ? 1 : -1));
      }
    }
  }
}

TEST_CASE("phi is a morphism of operads") {
  // phi(T o_i T') = phi(T) o_i phi(T') at matching color tuples
  for (int n = 1; n <= 2; ++n)
    for (const Tree& T : all_trees(n))
      for (int m = 1; m <= 3 - n + 1 && m <= 2; ++m)
        for (const Tree& T2 : all_trees(m))
          for (int i = 1; i <= n; ++i)
            for (const auto& pc : color_tuples(n, 3))
              for (const auto& pc2 : color_tuples(m, 3)) {
                int out2 = 1;
                for (int c : pc2) out2 += c - 1;
                if (out2 != pc[i - 1] || out2 < 0) continue;
                auto rhs = mns_compose(phi(T, pc), i, phi(T2, pc2));
                FormalSum<Mns> lhs;
                auto spliced = splice_colors(pc, i, pc2);
                for (const Tree& U : tree_extensions(T, T2, i)) lhs += phi(U, spliced);
                REQUIRE_MESSAGE(lhs == rhs, "T=", T.key(), " T2=", T2.key(), " i=", i);
              }
}

TEST_CASE("phi morphism on three-vertex trees, colors <= 3") {
  for (const Tree& T : all_trees(2))
    for (const Tree& T2 : all_trees(2))
      for (int i = 1; i <= 2; ++i)
        for (const auto& pc : color_tuples(2, 3))
          for (const auto& pc2 : color_tuples(2, 3)) {
            int out2 = 1;
            for (int c : pc2) out2 += c - 1;
            if (out2 != pc[i - 1] || out2 < 0) continue;
            auto rhs = mns_compose(phi(T, pc), i, phi(T2, pc2));
            FormalSum<Mns> lhs;
            for (const Tree& U : tree_extensions(T, T2, i)) lhs += phi(U, splice_colors(pc, i, pc2));
            REQUIRE(lhs == rhs);
          }
}

TEST_CASE("phibar is a morphism of graded operads") {
  std::vector<Word> ws;
  for (int n = 1; n <= 2; ++n)
    for (int len = n; len <= 4; ++len)
      for (const Word& w : down_ordered_words(n, len)) ws.push_back(w);
  for (const Word& W : ws)
    for (const Word& W2 : ws)
      for (int i = 1; i <= W.n; ++i)
        for (const auto& qc : color_tuples(W.n, 2))
          for (const auto& qc2 : color_tuples(W2.n, 2)) {
            int out2 = W2.n - W2.degree();
            for (int c : qc2) out2 += c - 1;
            if (out2 != qc[i - 1] || out2 < 0) continue;
            auto rhs = graded_mns_compose(phibar(W, qc), qc, i, phibar(W2, qc2), W2.degree());
            FormalSum<Mns> lhs;
            auto spliced = splice_colors(qc, i, qc2);
            for (const auto& ext : word_extensions(W, W2, i))
              lhs += phibar(ext.word, spliced) * ext.sign;
            REQUIRE_MESSAGE(lhs == rhs, "W=", W.key(), " W2=", W2.key(), " i=", i,
                            " lhs=", lhs.str(), " rhs=", rhs.str());
          }
}

TEST_CASE("graded equivariance under adjacent transpositions") {
  // words: sgn picks up (-1)^{q_i q_{i+1}}
  for (const Word& w : down_ordered_words(2, 3)) {
    Perm tau{2, 1};
    Word wt = w.acted(tau);
    for (const auto& q : color_tuples(2, 2)) {
      std::vector<int> qs{q[1], q[0]};
      FormalSum<Mns> lhs = phibar(wt, qs);
      FormalSum<Mns> rhs;
      auto base = phibar(w, q);
      for (const auto& [k, tc] : base.terms()) rhs.add(mns_acted(tc.first, tau), tc.second);
      int koszul = (q[0] * q[1]) % 2 == 0 ? 1 : -1;
      CHECK(lhs == rhs * koszul);
    }
  }
  // trees: sgn picks up (-1)^{(p_i-1)(p_{i+1}-1)}
  for (const Tree& t : all_trees(2)) {
    Perm tau{2, 1};
    Tree tt = t.acted(tau);
    for (const auto& p : color_tuples(2, 3)) {
      std::vector<int> ps{p[1], p[0]};
      FormalSum<Mns> lhs = phi(tt, ps);
      FormalSum<Mns> rhs;
      auto base = phi(t, p);
      for (const auto& [k, tc] : base.terms()) rhs.add(mns_acted(tc.first, tau), tc.second);
      int koszul = ((p[0] - 1) * (p[1] - 1)) % 2 == 0 ? 1 : -1;
      CHECK(lhs == rhs * koszul);
    }
  }
}

TEST_CASE("hochschild element: term counts and D o D = 0") {
  CHECK(hochschild_D(0).size() == 2);
  CHECK(hochschild_D(1).size() == 3);
  for (int q = 0; q <= 5; ++q) {
    auto dd = mns_compose(hochschild_D(q + 1), 1, hochschild_D(q));
    REQUIRE_MESSAGE(dd.is_zero(), "q=", q, " got ", dd.str());
  }
}

TEST_CASE("partial_D of phibar(12) vanishes") {
  auto g = partial_D(graded_phibar(Word::parse("12")));
  for (const auto& q : color_tuples(2, 3)) CHECK(g.eval(q).is_zero());
}

TEST_CASE("partial_D squares to zero on small elements") {
  for (const Word& w : {Word::parse("121"), Word::parse("12"), Word::parse("1213")}) {
    auto g = partial_D(partial_D(graded_phibar(w)));
    for (const auto& q : color_tuples(w.n, 2)) CHECK(g.eval(q).is_zero());
  }
}

TEST_CASE("partial_D intertwines with the word boundary") {
  // partial_D(phibar(W)) = phibar(dW) for |W| <= 5, colors <= 2
  std::vector<Word> ws;
  for (int n = 1; n <= 3; ++n)
    for (int len = n; len <= 5; ++len)
      for (const Word& w : down_ordered_words(n, len)) ws.push_back(w);
  for (const Word& w : ws) {
    auto lhs = partial_D(graded_phibar(w));
    auto bd = fs_boundary(w);
    for (const auto& q : color_tuples(w.n, 2)) {
      FormalSum<Mns> rhs;
      for (const auto& [k, tc] : bd.terms()) rhs += phibar(tc.first, q) * tc.second;
      REQUIRE_MESSAGE(lhs.eval(q) == rhs, "W=", w.key());
    }
  }
}
