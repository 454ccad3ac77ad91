#include "qops/gv.hpp"

#include <algorithm>
#include <map>

namespace qops {

namespace {

// Replace zero colors of visible vertices by 2 (indices stay valid since a
// 0-colored vertex has no children).
Mns bump_zero_colors(const Mns& x, const std::vector<int>& vis_colors) {
  std::vector<int> cols = x.colors;
  auto vis = x.visible();
  for (size_t k = 0; k < vis.size(); ++k) {
    QOPS_CHECK(cols[vis[k] - 1] == vis_colors[k], "bump: color mismatch");
    if (cols[vis[k] - 1] == 0) cols[vis[k] - 1] = 2;
  }
  return Mns::make(x.tree, cols, x.index, x.plugged);
}

}  // namespace

int sgn_tree_coloring(const Mns& I, const std::vector<int>& pcolors) {
  QOPS_CHECK(I.is_plain(), "sgn_tree_coloring: expected a plain indexed tree");
  Mns Ib = bump_zero_colors(I, pcolors);
  DeltaMultimap z = zeta(Ib);
  int n = Ib.arity();
  // letter ids in J^s order: (k,i), i = 1..p_k-1
  std::map<std::pair<int, int>, int> id;
  int next = 0;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= Ib.colors[k - 1] - 1; ++i) id[{k, i}] = next++;
  int len = next;
  std::vector<int> word(len, -1);  // positions 1..len
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= Ib.colors[k - 1] - 1; ++i) {
      int pos = z.comp[k - 1][i];
      QOPS_CHECK(pos >= 1 && pos <= len && word[pos - 1] == -1,
                 "sgn_tree_coloring: position clash");
      word[pos - 1] = id[{k, i}];
    }
  for (int v : word) QOPS_CHECK(v >= 0, "sgn_tree_coloring: unfilled position");
  return inversion_sign(word);
}

int sgn_word_coloring(const Word& w, const Mns& X, const std::vector<int>& qcolors) {
  Mns Xb = bump_zero_colors(X, qcolors);
  DeltaMultimap z = zeta(Xb);
  int n = w.n;
  QOPS_CHECK(Xb.arity() == n, "sgn_word_coloring: arity mismatch");
  std::map<std::pair<int, int>, int> id;  // (k,i), i = 0..q_k-1, J(q) order
  int next = 0;
  std::vector<int> qb(n);
  for (int k = 1; k <= n; ++k) {
    qb[k - 1] = Xb.colors[k - 1];
    for (int i = 0; i <= qb[k - 1] - 1; ++i) id[{k, i}] = next++;
  }
  std::vector<int> seq;
  // J_0: 0_k for interposed k in reverse down-order
  std::vector<int> inter = w.interposed();
  std::vector<int> dn = w.down_order();
  std::vector<int> inter_dn;
  for (int u : dn)
    if (std::find(inter.begin(), inter.end(), u) != inter.end()) inter_dn.push_back(u);
  for (auto it = inter_dn.rbegin(); it != inter_dn.rend(); ++it) seq.push_back(id[{*it, 0}]);
  // J_1: positions 0..q'-1
  int qout = Xb.out_color();
  std::vector<int> j1(qout, -1);
  for (int k = 1; k <= n; ++k) {
    bool is_int = std::find(inter.begin(), inter.end(), k) != inter.end();
    for (int i = is_int ? 1 : 0; i <= qb[k - 1] - 1; ++i) {
      int pos = z.comp[k - 1][i];
      QOPS_CHECK(pos >= 0 && pos < qout && j1[pos] == -1, "sgn_word_coloring: position clash");
      j1[pos] = id[{k, i}];
    }
  }
  for (int v : j1) {
    QOPS_CHECK(v >= 0, "sgn_word_coloring: unfilled position");
    seq.push_back(v);
  }
  return inversion_sign(seq);
}

FormalSum<Mns> phi(const Tree& T, const std::vector<int>& pcolors) {
  FormalSum<Mns> out;
  for (const Mns& I : colorings_of_tree(T, pcolors)) out.add(I, sgn_tree_coloring(I, pcolors));
  return out;
}

FormalSum<Mns> phibar(const Word& W, const std::vector<int>& qcolors) {
  FormalSum<Mns> out;
  for (const Mns& X : colorings_of_word(W, qcolors))
    out.add(X, sgn_word_coloring(W, X, qcolors));
  return out;
}

FormalSum<Mns> hochschild_D(int q) {
  QOPS_CHECK(q >= 0, "hochschild_D: q >= 0");
  FormalSum<Mns> out;
  Tree edge = Tree::parse("2(1)");  // root 2 (the plugged vertex), child 1
  // top multiplication: theta in the second slot of m
  out.add(Mns::make(edge, {q, 2}, {2, 0}, {false, true}), 1);
  // inner multiplications: m in slot i of theta
  Tree edge2 = Tree::parse("1(2)");
  for (int i = 1; i <= q; ++i)
    out.add(Mns::make(edge2, {q, 2}, {0, i}, {false, true}), i % 2 == 0 ? 1 : -1);
  // bottom multiplication: theta in the first slot of m
  out.add(Mns::make(edge, {q, 2}, {1, 0}, {false, true}), (q + 1) % 2 == 0 ? 1 : -1);
  return out;
}

FormalSum<Mns> mns_compose(const FormalSum<Mns>& a, int i, const FormalSum<Mns>& b) {
  FormalSum<Mns> out;
  for (const auto& [ka, ta] : a.terms())
    for (const auto& [kb, tb] : b.terms())
      out.add(mns_compose(ta.first, i, tb.first), ta.second * tb.second);
  return out;
}

FormalSum<Mns> graded_mns_compose(const FormalSum<Mns>& a, const std::vector<int>& qa, int i,
                                  const FormalSum<Mns>& b, int deg_b) {
  int pre = 0;
  for (int k = 1; k < i; ++k) pre += qa[k - 1];
  int sgn = (deg_b * pre) % 2 == 0 ? 1 : -1;
  return mns_compose(a, i, b) * sgn;
}

GradedMns graded_phibar(const Word& W) {
  GradedMns g;
  g.arity = W.n;
  g.degree = W.degree();
  Word w = W;
  g.eval = [w](const std::vector<int>& q) { return phibar(w, q); };
  return g;
}

GradedMns partial_D(const GradedMns& x) {
  GradedMns g;
  g.arity = x.arity;
  g.degree = x.degree - 1;
  int deg = x.degree, n = x.arity;
  auto ev = x.eval;
  g.eval = [ev, deg, n](const std::vector<int>& q) {
    int qout = -deg;
    for (int c : q) qout += c;
    FormalSum<Mns> out;
    FormalSum<Mns> x0 = ev(q);
    if (!x0.is_zero() && qout >= 0) out = mns_compose(hochschild_D(qout), 1, x0);
    int sgn = deg % 2 == 0 ? -1 : 1;  // -(-1)^{deg}
    for (int i = 1; i <= n; ++i) {
      std::vector<int> qb = q;
      ++qb[i - 1];
      out += graded_mns_compose(ev(qb), qb, i, hochschild_D(q[i - 1]), -1) * sgn;
    }
    return out;
  };
  return g;
}

}  // namespace qops
