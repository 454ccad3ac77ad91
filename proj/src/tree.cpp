#include "qops/tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace qops {

Tree Tree::single() {
  Tree t;
  t.n = 1;
  t.root = 1;
  t.parent = {0};
  t.children = {{}};
  return t;
}

Tree Tree::make(int n, const std::vector<int>& parent,
                const std::vector<std::vector<int>>& children) {
  Tree t;
  t.n = n;
  t.parent = parent;
  t.children = children;
  t.root = 0;
  QOPS_CHECK(int(parent.size()) == n && int(children.size()) == n, "tree: bad sizes");
  int roots = 0;
  for (int v = 1; v <= n; ++v)
    if (parent[v - 1] == 0) {
      ++roots;
      t.root = v;
    }
  QOPS_CHECK(roots == 1, "tree: must have exactly one root");
  std::vector<int> seen;
  seen.reserve(n);
  std::function<void(int)> dfs = [&](int v) {
    seen.push_back(v);
    for (int c : t.children[v - 1]) {
      QOPS_CHECK(parent[c - 1] == v, "tree: children/parent mismatch");
      dfs(c);
    }
  };
  dfs(t.root);
  QOPS_CHECK(int(seen.size()) == n, "tree: not connected/acyclic");
  return t;
}

bool Tree::is_ancestor(int u, int v) const {
  while (v != 0) {
    if (v == u) return true;
    v = parent[v - 1];
  }
  return false;
}

bool Tree::is_proper_ancestor(int u, int v) const { return u != v && is_ancestor(u, v); }

bool Tree::left_of(int u, int v) const {
  if (u == v || is_ancestor(u, v) || is_ancestor(v, u)) return false;
  // Walk both up to the meet, compare branch order there.
  std::vector<int> up;
  for (int w = u; w != 0; w = parent[w - 1]) up.push_back(w);
  std::vector<int> vp;
  for (int w = v; w != 0; w = parent[w - 1]) vp.push_back(w);
  int i = int(up.size()) - 1, j = int(vp.size()) - 1;
  while (i >= 0 && j >= 0 && up[i] == vp[j]) {
    --i;
    --j;
  }
  QOPS_CHECK(i >= 0 && j >= 0, "left_of: inconsistent ancestry");
  int meet = up[i + 1];
  const auto& ch = children[meet - 1];
  int pu = -1, pv = -1;
  for (size_t k = 0; k < ch.size(); ++k) {
    if (ch[k] == up[i]) pu = int(k);
    if (ch[k] == vp[j]) pv = int(k);
  }
  QOPS_CHECK(pu >= 0 && pv >= 0, "left_of: branch not found");
  return pu < pv;
}

Tree Tree::acted(const Perm& sigma) const {
  QOPS_CHECK(int(sigma.size()) == n, "tree action: arity mismatch");
  Perm inv = inverse_perm(sigma);
  Tree t;
  t.n = n;
  t.parent.assign(n, 0);
  t.children.assign(n, {});
  auto re = [&](int v) { return inv[v - 1]; };
  for (int v = 1; v <= n; ++v) {
    int p = parent[v - 1];
    t.parent[re(v) - 1] = p == 0 ? 0 : re(p);
    for (int c : children[v - 1]) t.children[re(v) - 1].push_back(re(c));
  }
  t.root = re(root);
  return t;
}

std::vector<int> Tree::preorder() const {
  std::vector<int> out;
  std::function<void(int)> dfs = [&](int v) {
    out.push_back(v);
    for (int c : children[v - 1]) dfs(c);
  };
  dfs(root);
  return out;
}

std::string Tree::key() const {
  std::function<std::string(int)> enc = [&](int v) -> std::string {
    std::ostringstream os;
    os << v;
    if (!children[v - 1].empty()) {
      os << "(";
      bool first = true;
      for (int c : children[v - 1]) {
        if (!first) os << ",";
        first = false;
        os << enc(c);
      }
      os << ")";
    }
    return os.str();
  };
  return enc(root);
}

namespace {
struct Parser {
  const std::string& s;
  size_t pos = 0;
  explicit Parser(const std::string& str) : s(str) {}
  int number() {
    QOPS_CHECK(pos < s.size() && isdigit(s[pos]), "tree parse: digit expected");
    int v = 0;
    while (pos < s.size() && isdigit(s[pos])) v = v * 10 + (s[pos++] - '0');
    return v;
  }
};
}  // namespace

Tree Tree::parse(const std::string& str) {
  Parser p(str);
  std::map<int, int> parent;
  std::map<int, std::vector<int>> children;
  std::function<int()> node = [&]() -> int {
    int v = p.number();
    parent.emplace(v, 0);
    children[v];
    if (p.pos < p.s.size() && p.s[p.pos] == '(') {
      ++p.pos;
      while (true) {
        int c = node();
        parent[c] = v;
        children[v].push_back(c);
        if (p.pos < p.s.size() && p.s[p.pos] == ',') {
          ++p.pos;
          continue;
        }
        QOPS_CHECK(p.pos < p.s.size() && p.s[p.pos] == ')', "tree parse: ')' expected");
        ++p.pos;
        break;
      }
    }
    return v;
  };
  node();
  QOPS_CHECK(p.pos == str.size(), "tree parse: trailing input");
  int n = int(parent.size());
  std::vector<int> par(n, 0);
  std::vector<std::vector<int>> ch(n);
  for (auto& [v, pv] : parent) {
    QOPS_CHECK(v >= 1 && v <= n, "tree parse: labels must be 1..n");
    par[v - 1] = pv;
    ch[v - 1] = children[v];
  }
  return Tree::make(n, par, ch);
}

int ext_alpha(int v, int i) { return v + i - 1; }

int ext_beta(int w, int i, int n) {
  if (w < i) return w;
  if (w <= i + n - 1) return i;
  return w - n + 1;
}

bool ext_in_alpha_image(int w, int i, int n) { return w >= i && w <= i + n - 1; }

std::vector<Tree> tree_extensions(const Tree& T, const Tree& T2, int i) {
  QOPS_CHECK(i >= 1 && i <= T.n, "tree_extensions: vertex out of range");
  int m = T.n, n = T2.n;
  int N = m + n - 1;
  auto reT = [&](int v) { return v < i ? v : v + n - 1; };  // T-labels, v != i
  auto reT2 = [&](int v) { return ext_alpha(v, i); };

  // Planar corner gaps of T2 in contour order: (vertex, slot) where slot k
  // means "after the k-th child" (0 = before the first child).
  std::vector<std::pair<int, int>> gaps;
  std::function<void(int)> walk = [&](int v) {
    gaps.push_back({v, 0});
    const auto& ch = T2.children[v - 1];
    for (size_t k = 0; k < ch.size(); ++k) {
      walk(ch[k]);
      gaps.push_back({v, int(k) + 1});
    }
  };
  walk(T2.root);

  const auto& att = T.children[i - 1];  // subtrees of T to re-attach, in order
  int k = int(att.size());
  int G = int(gaps.size());

  std::vector<Tree> out;
  // Non-decreasing assignments of the k attached subtrees to contour gaps.
  std::vector<int> asg(k, 0);
  auto build = [&]() {
    std::vector<int> par(N, 0);
    std::vector<std::vector<int>> ch(N);
    // Copy T without i (relabeled); i's slot in its parent is filled by
    // T2's root below.
    for (int v = 1; v <= m; ++v) {
      if (v == i) continue;
      int p = T.parent[v - 1];
      par[reT(v) - 1] = (p == 0 || p == i) ? (p == 0 ? 0 : -1) : reT(p);
    }
    for (int v = 1; v <= m; ++v) {
      if (v == i) continue;
      for (int c : T.children[v - 1]) {
        if (c == i)
          ch[reT(v) - 1].push_back(reT2(T2.root));
        else
          ch[reT(v) - 1].push_back(reT(c));
      }
    }
    // Copy T2 (relabeled), leaving room for attachments.
    for (int v = 1; v <= n; ++v) {
      int p = T2.parent[v - 1];
      par[reT2(v) - 1] = p == 0 ? (T.parent[i - 1] == 0 ? 0 : reT(T.parent[i - 1])) : reT2(p);
    }
    // Children of T2-vertices with attachments interleaved per gap slots.
    std::vector<std::vector<std::vector<int>>> ins(n + 1);
    for (int v = 1; v <= n; ++v) ins[v].assign(T2.children[v - 1].size() + 1, {});
    for (int a = 0; a < k; ++a) {
      auto [gv, gs] = gaps[asg[a]];
      ins[gv][gs].push_back(att[a]);
    }
    for (int v = 1; v <= n; ++v) {
      auto& list = ch[reT2(v) - 1];
      const auto& t2ch = T2.children[v - 1];
      for (int r : ins[v][0]) {
        list.push_back(reT(r));
        par[reT(r) - 1] = reT2(v);
      }
      for (size_t s = 0; s < t2ch.size(); ++s) {
        list.push_back(reT2(t2ch[s]));
        for (int r : ins[v][s + 1]) {
          list.push_back(reT(r));
          par[reT(r) - 1] = reT2(v);
        }
      }
    }
    out.push_back(Tree::make(N, par, ch));
  };

  if (k == 0) {
    build();
  } else {
    while (true) {
      build();
      int t = k - 1;
      while (t >= 0 && asg[t] == G - 1) --t;
      if (t < 0) break;
      ++asg[t];
      for (int s = t + 1; s < k; ++s) asg[s] = asg[t];
    }
  }
  return out;
}

FormalSum<Tree> brace_compose(const FormalSum<Tree>& S, int i, const FormalSum<Tree>& S2) {
  FormalSum<Tree> out;
  for (const auto& [k1, tc1] : S.terms())
    for (const auto& [k2, tc2] : S2.terms())
      for (const Tree& U : tree_extensions(tc1.first, tc2.first, i))
        out.add(U, tc1.second * tc2.second);
  return out;
}

std::vector<Tree> all_trees(int n) {
  std::vector<Tree> out;
  std::vector<int> par(n, 0);
  std::function<void(int)> choose = [&](int v) {
    if (v > n) {
      int roots = 0;
      for (int x = 1; x <= n; ++x)
        if (par[x - 1] == 0) ++roots;
      if (roots != 1) return;
      // acyclicity
      for (int x = 1; x <= n; ++x) {
        int steps = 0, w = x;
        while (w != 0 && steps <= n) {
          w = par[w - 1];
          ++steps;
        }
        if (steps > n) return;
      }
      // all orderings of children lists
      std::vector<std::vector<int>> base(n);
      for (int x = 1; x <= n; ++x)
        if (par[x - 1] != 0) base[par[x - 1] - 1].push_back(x);
      std::function<void(int, std::vector<std::vector<int>>&)> orders =
          [&](int v2, std::vector<std::vector<int>>& cur) {
            if (v2 > n) {
              out.push_back(Tree::make(n, par, cur));
              return;
            }
            std::vector<int> c = base[v2 - 1];
            std::sort(c.begin(), c.end());
            do {
              cur[v2 - 1] = c;
              orders(v2 + 1, cur);
            } while (std::next_permutation(c.begin(), c.end()));
          };
      std::vector<std::vector<int>> cur(n);
      orders(1, cur);
      return;
    }
    for (int p = 0; p <= n; ++p) {
      if (p == v) continue;
      par[v - 1] = p;
      choose(v + 1);
    }
    par[v - 1] = 0;
  };
  choose(1);
  return out;
}

bool tree_restricts_to(const Tree& U, int lo, int hi, const Tree& T2) {
  // The labels lo..hi must form a connected subtree of U whose induced
  // planar structure, relabeled by -lo+1, equals T2.
  int cnt = 0, root = 0;
  for (int v = lo; v <= hi; ++v) {
    int p = U.parent[v - 1];
    if (p < lo || p > hi) {
      ++cnt;
      root = v;
    }
  }
  if (cnt != 1) return false;
  if (T2.root != root - lo + 1) return false;
  for (int v = lo; v <= hi; ++v) {
    std::vector<int> in;
    for (int c : U.children[v - 1])
      if (c >= lo && c <= hi) in.push_back(c - lo + 1);
    if (in != T2.children[v - lo]) return false;
  }
  return true;
}

bool tree_contracts_to(const Tree& U, int lo, int hi, const Tree& T) {
  // Collapse labels lo..hi to the single vertex i := lo of T; children of the
  // collapsed vertex are read in U's planar preorder (first-visit order).
  int n = hi - lo + 1;
  int i = lo;
  auto beta = [&](int w) { return ext_beta(w, i, n); };
  std::vector<int> par(T.n, 0);
  std::vector<std::vector<int>> ch(T.n);
  // the contracted range must be connected
  int cnt = 0;
  for (int v = lo; v <= hi; ++v) {
    int p = U.parent[v - 1];
    if (p < lo || p > hi) ++cnt;
  }
  if (cnt != 1) return false;
  for (int w = 1; w <= U.n; ++w) {
    if (w >= lo && w <= hi) continue;
    int p = U.parent[w - 1];
    par[beta(w) - 1] = p == 0 ? 0 : beta(p);
    for (int c : U.children[w - 1]) ch[beta(w) - 1].push_back(beta(c));
  }
  // collapsed vertex: parent and children
  for (int v = lo; v <= hi; ++v) {
    int p = U.parent[v - 1];
    if (p < lo || p > hi) par[i - 1] = p == 0 ? 0 : beta(p);
  }
  // Children of the collapsed vertex appear in planar contour order, i.e.
  // the order their roots are visited by the full preorder walk.
  for (int w : U.preorder()) {
    if (w >= lo && w <= hi) continue;
    int p = U.parent[w - 1];
    if (p >= lo && p <= hi) ch[i - 1].push_back(beta(w));
  }
  // Compare structurally (children of non-collapsed vertices already carry
  // collapsed labels in place).
  if (par != T.parent) return false;
  if (ch != T.children) return false;
  return true;
}

}  // namespace qops
