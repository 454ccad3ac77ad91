#include <set>

#include "doctest.h"
#include "qops/mns.hpp"

using namespace qops;

namespace {

// E_i in NSOp(q1,q2;q1+q2-1): one edge, child at slot i.
Mns E(int i, int q1, int q2) {
  Tree t = Tree::parse("1(2)");
  return Mns::make(t, {q1, q2}, {0, i}, {false, false});
}

std::vector<std::vector<int>> color_tuples(int n, int maxc) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  while (true) {
    out.push_back(cur);
    int k = n - 1;
    while (k >= 0 && cur[k] == maxc) cur[k--] = 0;
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

// Full rewriting closure of a class; asserts a unique normal form.
std::set<std::string> closure(const Mns& x, std::string* normal_key) {
  std::set<std::string> seen;
  std::vector<Mns> queue{x};
  seen.insert(x.key());
  std::set<std::string> normals;
  while (!queue.empty()) {
    Mns cur = queue.back();
    queue.pop_back();
    normals.insert(cur.normalized().key());
    for (const Mns& nb : rewrite_neighbors(cur))
      if (seen.insert(nb.key()).second) queue.push_back(nb);
  }
  REQUIRE(normals.size() == 1);
  if (normal_key) *normal_key = *normals.begin();
  return seen;
}

}  // namespace

TEST_CASE("zeta of generators, pinned values") {
  auto z = zeta(E(2, 3, 2));
  CHECK(z.comp[0] == std::vector<int>{0, 1, 3, 4});
  CHECK(z.comp[1] == std::vector<int>{1, 2, 3});
  auto id = zeta(Mns::corolla(4));
  CHECK(id.comp[0] == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(id.out == 4);
}

TEST_CASE("ns relations I and II") {
  // (I): E_i o_2 E_j = E_{i-1+j} o_1 E_i for 1<=i<=q1, 1<=j<=q2
  for (int q1 = 1; q1 <= 3; ++q1)
    for (int q2 = 1; q2 <= 3; ++q2)
      for (int q3 = 0; q3 <= 3; ++q3)
        for (int i = 1; i <= q1; ++i)
          for (int j = 1; j <= q2; ++j) {
            Mns lhs = mns_compose(E(i, q1, q2 + q3 - 1), 2, E(j, q2, q3));
            Mns rhs = mns_compose(E(i - 1 + j, q1 + q2 - 1, q3), 1, E(i, q1, q2));
            REQUIRE_MESSAGE(lhs.key() == rhs.key(), "q=(", q1, ",", q2, ",", q3, ") i=", i,
                            " j=", j);
          }
  // (II): E_i o_1 E_k = (E_{k+q2-1} o_1 E_i)^{(23)} for 1<=i<k<=q1
  for (int q1 = 2; q1 <= 3; ++q1)
    for (int q2 = 0; q2 <= 2; ++q2)
      for (int q3 = 0; q3 <= 2; ++q3)
        for (int i = 1; i <= q1; ++i)
          for (int k = i + 1; k <= q1; ++k) {
            Mns lhs = mns_compose(E(i, q1 + q3 - 1, q2), 1, E(k, q1, q3));
            // swap which factor is plugged first: vertex roles 2<->3
            Mns rhs0 = mns_compose(E(k + q2 - 1, q1 + q2 - 1, q3), 1, E(i, q1, q2));
            Mns rhs = mns_acted(rhs0, Perm{1, 3, 2});
            REQUIRE_MESSAGE(lhs.key() == rhs.key(), "q=(", q1, ",", q2, ",", q3, ") i=", i,
                            " k=", k);
          }
}

TEST_CASE("unit composition") {
  for (int q = 0; q <= 3; ++q) {
    Mns e = E(1, std::max(q, 1), q);
    Mns u = Mns::corolla(q);
    CHECK(mns_compose(e, 2, u).key() == e.key());
    Mns u2 = Mns::corolla(e.out_color());
    CHECK(mns_compose(u2, 1, e).key() == e.key());
  }
}

TEST_CASE("zeta is a morphism and matches the generator route") {
  for (int n = 1; n <= 3; ++n)
    for (const Tree& t : all_trees(n))
      for (const auto& cols : color_tuples(n, 3))
        for (const Mns& I : indexed_trees_on(t, cols)) {
          CHECK(zeta(I) == zeta_via_generators(I));
        }
  // composition compatibility: zeta(I o_i I') = zeta(I) o_i zeta(I')
  for (int n = 1; n <= 2; ++n)
    for (const Tree& t : all_trees(n))
      for (const auto& cols : color_tuples(n, 3))
        for (const Mns& I : indexed_trees_on(t, cols))
          for (int i = 1; i <= n; ++i)
            for (int m = 1; m <= 2; ++m)
              for (const Tree& t2 : all_trees(m))
                for (const auto& cols2 : color_tuples(m, 3))
                  for (const Mns& I2 : indexed_trees_on(t2, cols2)) {
                    if (I2.out_color() != cols[i - 1]) continue;
                    CHECK(zeta(mns_compose(I, i, I2)) == delta_compose(zeta(I), i, zeta(I2)));
                  }
}

TEST_CASE("zeta agreement on four-vertex indexed trees") {
  for (const Tree& t : all_trees(4))
    for (const auto& cols : color_tuples(4, 3))
      for (const Mns& I : indexed_trees_on(t, cols)) CHECK(zeta(I) == zeta_via_generators(I));
}

TEST_CASE("non-injectivity of zeta on 0-colored corollas") {
  Tree t = Tree::parse("1(2,3)");
  Mns a = Mns::make(t, {2, 0, 0}, {0, 1, 2}, {false, false, false});
  Mns b = mns_acted(a, Perm{1, 3, 2});
  CHECK(a.key() != b.key());
  CHECK(zeta(a) == zeta(b));
}

TEST_CASE("normal form: defining relation and idempotence") {
  // right comb m(x, m(y,z)) with all slots free
  Tree t = Tree::parse("1(2)");
  Mns right = Mns::make(t, {2, 2}, {0, 2}, {true, true});
  // relabeled to have plugged labels 1,2: arity 0
  Mns nf = right.normalized();
  CHECK(nf.index[1] == 1);  // left comb: plugged child in slot 1
  CHECK(nf.normalized().key() == nf.key());
  std::string norm;
  auto cls = closure(right, &norm);
  CHECK(cls.size() == 2);
  CHECK(norm == nf.key());
}

TEST_CASE("rewriting closure: unique normal forms at small size") {
  // all classes with <= 2 plugged and <= 3 visible vertices, colors <= 2:
  // build from colorings of small words (every class arising there).
  for (int n = 1; n <= 3; ++n)
    for (int len = n; len <= n + 2; ++len)
      for (const Word& w : down_ordered_words(n, len))
        for (const auto& cols : color_tuples(n, 2))
          for (const Mns& x : colorings_of_word(w, cols)) {
            std::string norm;
            closure(x, &norm);
            CHECK(norm == x.normalized().key());
          }
}

TEST_CASE("induced orders are representative independent") {
  for (int n = 2; n <= 3; ++n)
    for (int len = n; len <= n + 2; ++len)
      for (const Word& w : down_ordered_words(n, len))
        for (const auto& cols : color_tuples(n, 2))
          for (const Mns& x : colorings_of_word(w, cols)) {
            auto cls = closure(x, nullptr);
            for (const auto& k : cls) {
              Mns rep = Mns::parse(k);
              for (int u = 1; u <= n; ++u)
                for (int v = 1; v <= n; ++v) {
                  if (u == v) continue;
                  CHECK(rep.lt(u, v) == x.lt(u, v));
                  CHECK(rep.left_of(u, v) == x.left_of(u, v));
                }
            }
          }
}

TEST_CASE("coloring counts") {
  for (int q1 = 0; q1 <= 3; ++q1)
    for (int q2 = 0; q2 <= 3; ++q2)
      CHECK(colorings_of_word(Word::parse("12"), {q1, q2}).size() == 1);
  CHECK(colorings_of_tree(Tree::single(), {3}).size() == 1);
  // occurrence counts bound the choices: C(q1, occ-1) factors
  CHECK(colorings_of_word(Word::parse("121"), {2, 1}).size() == 2);
  CHECK(colorings_of_word(Word::parse("121"), {0, 1}).size() == 0);
}

TEST_CASE("word_of examples") {
  // the plugged 3-vertex element coloring 1231
  auto xs = colorings_of_word(Word::parse("1231"), {2, 1, 1});
  REQUIRE(!xs.empty());
  for (const Mns& x : xs) {
    auto w = word_of(x);
    REQUIRE(w.has_value());
    CHECK(w->key() == "1231");
  }
  // plain indexed tree: the tree word
  Tree t = Tree::parse("1(2)");
  for (const Mns& I : indexed_trees_on(t, {2, 2})) {
    auto w = word_of(I);
    REQUIRE(w.has_value());
    CHECK(w->key() == tree_word(t).key());
    CHECK(w->key() == "121");
  }
  // plugged vertex with one child colors no word
  Mns bad = Mns::parse("m(1:1[2])");
  CHECK(!word_of(bad).has_value());
}

TEST_CASE("colorings: membership and arity bookkeeping") {
  for (int n = 1; n <= 3; ++n)
    for (int len = n; len <= n + 2; ++len)
      for (const Word& w : down_ordered_words(n, len))
        for (const auto& cols : color_tuples(n, 2))
          for (const Mns& x : colorings_of_word(w, cols)) {
            CHECK(is_coloring_of_word(x, w));
            auto wx = word_of(x);
            REQUIRE(wx.has_value());
            CHECK(wx->key() == w.key());
            int qsum = 0;
            for (int q : cols) qsum += q - 1;
            CHECK(x.out_color() == qsum + n - w.degree());
            CHECK(x.tree.n - n == n - w.degree() - 1);  // number of m's
          }
}

TEST_CASE("coloring factorization (unique word, unique colorings)") {
  // over all compositions with <= 4 total symbols and colors <= 2
  std::vector<Word> ws;
  for (int n = 1; n <= 3; ++n)
    for (int len = n; len <= n + 2 && len <= 5; ++len)
      for (const Word& w : down_ordered_words(n, len)) ws.push_back(w);
  for (const Word& V : ws)
    for (const Word& W : ws) {
      if (V.n + W.n - 1 > 4) continue;
      for (int i = 1; i <= V.n; ++i) {
        auto exts = word_extensions(V, W, i);
        for (const auto& colsV : color_tuples(V.n, 2))
          for (const auto& colsW : color_tuples(W.n, 2)) {
            // composite colors
            std::vector<int> colsU;
            for (int v = 1; v < i; ++v) colsU.push_back(colsV[v - 1]);
            for (int w2 = 1; w2 <= W.n; ++w2) colsU.push_back(colsW[w2 - 1]);
            for (int v = i + 1; v <= V.n; ++v) colsU.push_back(colsV[v - 1]);
            int qw = 0;
            for (int q : colsW) qw += q - 1;
            if (colsV[i - 1] != qw + W.n - W.degree()) continue;  // color mismatch
            auto Xs = colorings_of_word(V, colsV);
            auto Ys = colorings_of_word(W, colsW);
            // unique word: every X o_i Y colors exactly one extension
            std::map<std::string, std::set<std::string>> perext;
            for (const Mns& X : Xs)
              for (const Mns& Y : Ys) {
                Mns Z = mns_compose(X, i, Y);
                auto u = word_of(Z);
                REQUIRE(u.has_value());
                int hits = 0;
                for (const auto& e : exts)
                  if (e.word.key() == u->key()) ++hits;
                REQUIRE(hits == 1);
                bool inserted = perext[u->key()].insert(Z.key()).second;
                REQUIRE(inserted);  // injectivity of (X,Y) -> Z
              }
            // unique colorings: every coloring of every extension factors
            size_t total = 0;
            for (const auto& e : exts) {
              auto Zs = colorings_of_word(e.word, colsU);
              for (const Mns& Z : Zs) {
                REQUIRE(perext[e.word.key()].count(Z.key()) == 1);
              }
              total += Zs.size();
            }
            REQUIRE(total == Xs.size() * Ys.size());
          }
      }
    }
}
