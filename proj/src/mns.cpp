#include "qops/mns.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace qops {

int Mns::arity() const {
  int n = 0;
  for (bool p : plugged)
    if (!p) ++n;
  return n;
}

int Mns::out_color() const {
  int q = 1;
  for (int c : colors) q += c - 1;
  return q;
}

bool Mns::is_plain() const {
  return std::none_of(plugged.begin(), plugged.end(), [](bool b) { return b; });
}

Mns Mns::corolla(int color) {
  Mns x;
  x.tree = Tree::single();
  x.colors = {color};
  x.index = {0};
  x.plugged = {false};
  return x;
}

Mns Mns::make(Tree t, std::vector<int> colors, std::vector<int> index,
              std::vector<bool> plugged) {
  Mns x;
  x.tree = std::move(t);
  x.colors = std::move(colors);
  x.index = std::move(index);
  x.plugged = std::move(plugged);
  QOPS_CHECK(x.valid(), "mns: invalid element");
  return x;
}

bool Mns::valid() const {
  int N = tree.n;
  if (int(colors.size()) != N || int(index.size()) != N || int(plugged.size()) != N) return false;
  int n = arity();
  for (int v = 1; v <= N; ++v) {
    if (plugged[v - 1] != (v > n)) return false;  // visible 1..n, plugged above
    if (plugged[v - 1] && colors[v - 1] != 2) return false;
    if (colors[v - 1] < 0) return false;
  }
  for (int v = 1; v <= N; ++v) {
    int p = tree.parent[v - 1];
    if (p == 0) {
      if (index[v - 1] != 0) return false;
      continue;
    }
    if (index[v - 1] < 1 || index[v - 1] > colors[p - 1]) return false;
  }
  // sibling order = strictly increasing indices
  for (int v = 1; v <= N; ++v) {
    const auto& ch = tree.children[v - 1];
    for (size_t k = 1; k < ch.size(); ++k)
      if (index[ch[k] - 1] <= index[ch[k - 1] - 1]) return false;
  }
  return true;
}

bool Mns::lt(int u, int v) const { return tree.is_proper_ancestor(u, v); }
bool Mns::left_of(int u, int v) const { return tree.left_of(u, v); }

std::vector<int> Mns::visible() const {
  std::vector<int> out;
  for (int v = 1; v <= tree.n; ++v)
    if (!plugged[v - 1]) out.push_back(v);
  return out;
}

bool Mns::is_normal_form() const {
  for (int v = 1; v <= tree.n; ++v)
    if (plugged[v - 1] && tree.parent[v - 1] != 0 && plugged[tree.parent[v - 1] - 1] &&
        index[v - 1] == 2)
      return false;
  std::vector<int> pl;
  for (int v : tree.preorder())
    if (plugged[v - 1]) pl.push_back(v);
  for (size_t k = 0; k < pl.size(); ++k)
    if (pl[k] != arity() + 1 + int(k)) return false;
  return true;
}

namespace {

// Working form keyed by arbitrary labels; children derived from indices.
struct RawMns {
  std::map<int, int> parent;  // 0 for root
  std::map<int, int> index;
  std::map<int, int> color;
  std::map<int, bool> plug;

  int child_at(int v, int idx) const {
    for (const auto& [w, p] : parent)
      if (p == v && index.at(w) == idx) return w;
    return 0;
  }

  // m(x, m(y,z)) -> m(m(x,y), z) at a plugged vertex with a plugged slot-2
  // child; strictly increases the total left-leaf weight, hence terminates.
  bool rewrite_once() {
    for (const auto& [v, p] : parent) {
      if (p == 0) continue;
      if (!plug.at(v) || !plug.at(p)) continue;
      if (index.at(v) != 2) continue;
      int u = p;
      int xc = child_at(u, 1);
      int yc = child_at(v, 1);
      int zc = child_at(v, 2);
      index[v] = 1;
      if (xc) {
        parent[xc] = v;
        index[xc] = 1;
      }
      if (yc) {
        parent[yc] = v;
        index[yc] = 2;
      }
      if (zc) {
        parent[zc] = u;
        index[zc] = 2;
      }
      return true;
    }
    return false;
  }

  Mns pack() const {
    int root = 0;
    std::map<int, std::vector<int>> ch;
    for (const auto& [v, p] : parent) {
      if (p == 0)
        root = v;
      else
        ch[p].push_back(v);
    }
    QOPS_CHECK(root != 0, "mns pack: no root");
    for (auto& [v, list] : ch)
      std::sort(list.begin(), list.end(),
                [&](int a, int b) { return index.at(a) < index.at(b); });
    std::vector<int> pre;
    std::function<void(int)> dfs = [&](int v) {
      pre.push_back(v);
      for (int c : ch[v]) dfs(c);
    };
    dfs(root);
    QOPS_CHECK(pre.size() == parent.size(), "mns pack: disconnected");
    // visible keep labels 1..n; plugged renumbered n+1.. in preorder
    int n = 0;
    for (const auto& [v, pl] : plug)
      if (!pl) ++n;
    std::map<int, int> re;
    int next = n + 1;
    for (int v : pre) {
      if (plug.at(v))
        re[v] = next++;
      else {
        QOPS_CHECK(v >= 1 && v <= n, "mns pack: visible labels must be 1..n");
        re[v] = v;
      }
    }
    int N = int(parent.size());
    std::vector<int> par(N, 0), idx(N, 0), col(N, 0);
    std::vector<bool> pl(N, false);
    std::vector<std::vector<int>> children(N);
    for (const auto& [v, p] : parent) {
      par[re[v] - 1] = p == 0 ? 0 : re.at(p);
      idx[re[v] - 1] = index.at(v);
      col[re[v] - 1] = color.at(v);
      pl[re[v] - 1] = plug.at(v);
    }
    for (const auto& [v, list] : ch)
      for (int c : list) children[re[v] - 1].push_back(re.at(c));
    return Mns::make(Tree::make(N, par, children), col, idx, pl);
  }
};

RawMns to_raw(const Mns& x) {
  RawMns r;
  for (int v = 1; v <= x.tree.n; ++v) {
    r.parent[v] = x.tree.parent[v - 1];
    r.index[v] = x.index[v - 1];
    r.color[v] = x.colors[v - 1];
    r.plug[v] = x.plugged[v - 1];
  }
  return r;
}

}  // namespace

Mns Mns::normalized() const {
  RawMns r = to_raw(*this);
  int guard = 0;
  while (r.rewrite_once()) QOPS_CHECK(++guard < 100000, "mns normalize: rewrite loop");
  Mns out = r.pack();
  QOPS_CHECK(out.is_normal_form(), "mns normalize: not normal");
  return out;
}

std::string Mns::key() const {
  std::function<std::string(int)> enc = [&](int v) -> std::string {
    std::ostringstream os;
    if (plugged[v - 1])
      os << "m";
    else
      os << v << "[" << colors[v - 1] << "]";
    const auto& ch = tree.children[v - 1];
    if (!ch.empty()) {
      os << "(";
      for (size_t k = 0; k < ch.size(); ++k) {
        if (k) os << ",";
        os << index[ch[k] - 1] << ":" << enc(ch[k]);
      }
      os << ")";
    }
    return os.str();
  };
  return enc(tree.root);
}

Mns Mns::parse(const std::string& s) {
  RawMns r;
  size_t pos = 0;
  int next_plug = 100000;  // temp labels; pack() renumbers
  auto number = [&]() {
    QOPS_CHECK(pos < s.size() && isdigit(s[pos]), "mns parse: digit expected");
    int v = 0;
    while (pos < s.size() && isdigit(s[pos])) v = v * 10 + (s[pos++] - '0');
    return v;
  };
  std::function<int()> node = [&]() -> int {
    int label;
    if (s[pos] == 'm') {
      ++pos;
      label = next_plug++;
      r.color[label] = 2;
      r.plug[label] = true;
    } else {
      label = number();
      QOPS_CHECK(pos < s.size() && s[pos] == '[', "mns parse: '[' expected");
      ++pos;
      r.color[label] = number();
      QOPS_CHECK(pos < s.size() && s[pos] == ']', "mns parse: ']' expected");
      ++pos;
      r.plug[label] = false;
    }
    r.parent[label] = 0;
    r.index[label] = 0;
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      while (true) {
        int idx = number();
        QOPS_CHECK(pos < s.size() && s[pos] == ':', "mns parse: ':' expected");
        ++pos;
        int c = node();
        r.parent[c] = label;
        r.index[c] = idx;
        if (pos < s.size() && s[pos] == ',') {
          ++pos;
          continue;
        }
        QOPS_CHECK(pos < s.size() && s[pos] == ')', "mns parse: ')' expected");
        ++pos;
        break;
      }
    }
    return label;
  };
  node();
  QOPS_CHECK(pos == s.size(), "mns parse: trailing input");
  return r.pack();
}

std::string DeltaMultimap::str() const {
  std::ostringstream os;
  for (size_t t = 0; t < comp.size(); ++t) {
    if (t) os << " ";
    os << "(";
    for (size_t i = 0; i < comp[t].size(); ++i) {
      if (i) os << ",";
      os << comp[t][i];
    }
    os << ")";
  }
  os << "->" << out;
  return os.str();
}

DeltaMultimap delta_compose(const DeltaMultimap& a, int i, const DeltaMultimap& b) {
  QOPS_CHECK(i >= 1 && i <= int(a.comp.size()), "delta_compose: slot out of range");
  QOPS_CHECK(int(a.comp[i - 1].size()) - 1 == b.out, "delta_compose: color mismatch");
  DeltaMultimap r;
  r.out = a.out;
  for (int t = 0; t < i - 1; ++t) r.comp.push_back(a.comp[t]);
  for (const auto& bc : b.comp) {
    std::vector<int> c;
    for (int v : bc) c.push_back(a.comp[i - 1][v]);
    r.comp.push_back(std::move(c));
  }
  for (size_t t = i; t < a.comp.size(); ++t) r.comp.push_back(a.comp[t]);
  return r;
}

namespace {

struct ZetaAll {
  std::vector<int> leaves;             // l_v per label
  std::vector<std::vector<int>> comp;  // zeta_v per label, size colors[v]+1
};

// Fencepost maps for every vertex, plugged included.
// zeta_v(t) = offset + t + sum over children with index <= t of (l_child - 1),
// the child at index i continuing with offset zeta_v(i-1).
ZetaAll zeta_all(const Mns& x) {
  int N = x.tree.n;
  ZetaAll z;
  z.leaves.assign(N + 1, 0);
  z.comp.assign(N + 1, {});
  std::function<int(int)> lv = [&](int v) -> int {
    int l = x.colors[v - 1];
    for (int c : x.tree.children[v - 1]) l += lv(c) - 1;
    return l;
  };
  for (int v = 1; v <= N; ++v) z.leaves[v] = lv(v);
  std::function<void(int, int)> go = [&](int v, int offset) {
    int q = x.colors[v - 1];
    std::vector<int> zc(q + 1);
    for (int t = 0; t <= q; ++t) {
      int val = offset + t;
      for (int c : x.tree.children[v - 1])
        if (x.index[c - 1] <= t) val += z.leaves[c] - 1;
      zc[t] = val;
    }
    z.comp[v] = zc;
    for (int c : x.tree.children[v - 1]) go(c, zc[x.index[c - 1] - 1]);
  };
  go(x.tree.root, 0);
  return z;
}

}  // namespace

std::vector<std::vector<int>> zeta_all_components(const Mns& x) {
  ZetaAll z = zeta_all(x);
  std::vector<std::vector<int>> out(x.tree.n + 1);
  for (int v = 1; v <= x.tree.n; ++v) out[v] = z.comp[v];
  return out;
}

DeltaMultimap zeta(const Mns& x) {
  ZetaAll z = zeta_all(x);
  DeltaMultimap d;
  d.out = x.out_color();
  for (int v : x.visible()) d.comp.push_back(z.comp[v]);
  return d;
}

DeltaMultimap zeta_via_generators(const Mns& x) {
  // Peel leaves one at a time: I = I0 o_u E_i, with zeta_{E_i} from the
  // one-edge construction, composed per label.
  std::map<int, std::vector<int>> maps;
  std::function<void(RawMns)> run = [&](RawMns r) {
    if (r.parent.size() == 1) {
      int v = r.parent.begin()->first;
      int q = r.color.at(v);
      std::vector<int> id(q + 1);
      std::iota(id.begin(), id.end(), 0);
      maps[v] = id;
      return;
    }
    int leaf = 0;
    for (const auto& [v, p] : r.parent) {
      bool has_child = false;
      for (const auto& [w, pw] : r.parent)
        if (pw == v) has_child = true;
      if (!has_child && p != 0) {
        leaf = v;
        break;
      }
    }
    QOPS_CHECK(leaf != 0, "zeta_via_generators: no leaf");
    int u = r.parent.at(leaf);
    int i = r.index.at(leaf);
    int q2 = r.color.at(leaf);
    RawMns r0 = r;
    r0.parent.erase(leaf);
    r0.index.erase(leaf);
    r0.color.erase(leaf);
    r0.plug.erase(leaf);
    r0.color[u] = r.color.at(u) + q2 - 1;
    for (auto& [w, pw] : r0.parent)
      if (pw == u && w != leaf && r0.index[w] > i) r0.index[w] += q2 - 1;
    run(r0);
    int q1 = r.color.at(u);
    const std::vector<int> zu0 = maps.at(u);
    std::vector<int> zu(q1 + 1), zl(q2 + 1);
    for (int t = 0; t <= q1; ++t) zu[t] = zu0[t < i ? t : t + q2 - 1];
    for (int t = 0; t <= q2; ++t) zl[t] = zu0[t + i - 1];
    maps[u] = zu;
    maps[leaf] = zl;
  };
  run(to_raw(x));
  DeltaMultimap d;
  d.out = x.out_color();
  for (int v : x.visible()) d.comp.push_back(maps.at(v));
  return d;
}

Mns mns_compose(const Mns& x, int i, const Mns& y) {
  int n = x.arity(), m = y.arity();
  QOPS_CHECK(i >= 1 && i <= n, "mns_compose: slot out of range");
  QOPS_CHECK(x.colors[i - 1] == y.out_color(), "mns_compose: color mismatch");
  ZetaAll zy = zeta_all(y);
  auto xv = [&](int v) { return v < i ? v : v + m - 1; };  // x visible, v != i
  int tmp = n + m;
  std::map<int, int> xp, yp;
  for (int v = n + 1; v <= x.tree.n; ++v) xp[v] = ++tmp;
  for (int w = m + 1; w <= y.tree.n; ++w) yp[w] = ++tmp;
  auto xl = [&](int v) { return x.plugged[v - 1] ? xp[v] : xv(v); };
  auto yl = [&](int w) { return y.plugged[w - 1] ? yp[w] : w + i - 1; };

  RawMns r;
  for (int v = 1; v <= x.tree.n; ++v) {
    if (v == i) continue;
    int lb = xl(v);
    r.color[lb] = x.colors[v - 1];
    r.plug[lb] = x.plugged[v - 1];
    int p = x.tree.parent[v - 1];
    if (p == i) continue;  // re-attached below
    r.parent[lb] = p == 0 ? 0 : xl(p);
    r.index[lb] = x.index[v - 1];
  }
  for (int w = 1; w <= y.tree.n; ++w) {
    int lb = yl(w);
    r.color[lb] = y.colors[w - 1];
    r.plug[lb] = y.plugged[w - 1];
    int p = y.tree.parent[w - 1];
    if (p == 0) {
      r.parent[lb] = x.tree.parent[i - 1] == 0 ? 0 : xl(x.tree.parent[i - 1]);
      r.index[lb] = x.index[i - 1];
    } else {
      r.parent[lb] = yl(p);
      r.index[lb] = y.index[w - 1];
    }
  }
  // children of i: slot s attaches at the free leaf of y with global number s
  for (int b : x.tree.children[i - 1]) {
    int s = x.index[b - 1];
    int host = 0, slot = 0;
    for (int a = 1; a <= y.tree.n && !host; ++a) {
      for (int j = 1; j <= y.colors[a - 1] && !host; ++j) {
        bool occupied = false;
        for (int c : y.tree.children[a - 1])
          if (y.index[c - 1] == j) occupied = true;
        if (occupied) continue;
        if (zy.comp[a][j] == s && zy.comp[a][j - 1] == s - 1) {
          host = a;
          slot = j;
        }
      }
    }
    QOPS_CHECK(host != 0, "mns_compose: free leaf not found");
    r.parent[xl(b)] = yl(host);
    r.index[xl(b)] = slot;
  }
  int guard = 0;
  while (r.rewrite_once()) QOPS_CHECK(++guard < 100000, "mns_compose: rewrite loop");
  return r.pack();
}

Word tree_word(const Tree& t) {
  std::vector<int> letters;
  std::function<void(int)> dfs = [&](int v) {
    letters.push_back(v);
    for (int c : t.children[v - 1]) {
      dfs(c);
      letters.push_back(v);
    }
  };
  dfs(t.root);
  return Word::make(std::move(letters), t.n);
}

std::optional<Word> word_of(const Mns& x) {
  for (int v = 1; v <= x.tree.n; ++v)
    if (x.plugged[v - 1] && x.tree.children[v - 1].size() != 2) return std::nullopt;
  std::vector<int> letters;
  std::function<void(int)> dfs = [&](int v) {
    letters.push_back(v);
    for (int c : x.tree.children[v - 1]) {
      dfs(c);
      letters.push_back(v);
    }
  };
  dfs(x.tree.root);
  std::vector<int> kept;
  for (int a : letters)
    if (!x.plugged[a - 1]) kept.push_back(a);
  Word w;
  w.letters = std::move(kept);
  w.n = x.arity();
  if (!w.valid()) return std::nullopt;
  return w;
}

bool is_coloring_of_word(const Mns& x, const Word& w) {
  if (x.arity() != w.n) return false;
  for (int v = 1; v <= x.tree.n; ++v)
    if (x.plugged[v - 1] && x.tree.children[v - 1].size() != 2) return false;
  for (int u = 1; u <= w.n; ++u)
    for (int v = 1; v <= w.n; ++v) {
      if (u == v) continue;
      int fu = w.first_occurrence(u), lu = w.last_occurrence(u);
      int fv = w.first_occurrence(v);
      bool surrounds = fu < fv && fv < lu;  // W = ..u..v..u..
      if (x.lt(u, v) != surrounds) return false;
      bool all_left = w.last_occurrence(u) < fv;
      if (x.left_of(u, v) != all_left) return false;
    }
  return true;
}

bool is_coloring_of_tree(const Mns& x, const Tree& t) {
  if (!x.is_plain()) return false;
  if (x.tree.n != t.n) return false;
  return x.tree.parent == t.parent && x.tree.children == t.children;
}

namespace {

std::vector<std::vector<int>> increasing_subsets(int q, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (int(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= q; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

}  // namespace

std::vector<Mns> colorings_of_word(const Word& w, const std::vector<int>& colors) {
  int n = w.n;
  QOPS_CHECK(int(colors.size()) == n, "colorings_of_word: color count");
  // Nesting structure: parent = innermost strictly containing span.
  std::vector<int> wparent(n + 1, 0);
  for (int u = 1; u <= n; ++u) {
    int best = 0, bestlen = 1 << 30;
    int fu = w.first_occurrence(u), lu = w.last_occurrence(u);
    for (int v = 1; v <= n; ++v) {
      if (v == u) continue;
      int fv = w.first_occurrence(v), lv = w.last_occurrence(v);
      if (fv < fu && lu < lv && lv - fv < bestlen) {
        best = v;
        bestlen = lv - fv;
      }
    }
    wparent[u] = best;
  }
  auto group_of = [&](int u, int g) {
    std::vector<int> occ;
    for (int p = 1; p <= w.length(); ++p)
      if (w.letters[p - 1] == u) occ.push_back(p);
    int lo = occ[g - 1], hi = occ[g];
    std::vector<int> out;
    for (int p = lo + 1; p < hi; ++p) {
      int a = w.letters[p - 1];
      if (wparent[a] == u && w.first_occurrence(a) == p) out.push_back(a);
    }
    return out;
  };
  std::vector<int> roots;
  for (int p = 1; p <= w.length(); ++p) {
    int a = w.letters[p - 1];
    if (wparent[a] == 0 && w.first_occurrence(a) == p) roots.push_back(a);
  }

  std::vector<std::vector<std::vector<int>>> choices;
  for (int u = 1; u <= n; ++u) {
    auto subs = increasing_subsets(colors[u - 1], w.occurrences(u) - 1);
    if (subs.empty()) return {};
    choices.push_back(std::move(subs));
  }
  std::vector<Mns> out;
  std::vector<size_t> pick(n, 0);
  while (true) {
    RawMns r;
    int next_plug = n;
    for (int u = 1; u <= n; ++u) {
      r.color[u] = colors[u - 1];
      r.plug[u] = false;
      r.parent[u] = 0;
      r.index[u] = 0;
    }
    // left comb over a group; returns the attach label
    auto comb = [&](const std::vector<int>& g) -> int {
      QOPS_CHECK(!g.empty(), "colorings: empty group");
      int acc = g[0];
      for (size_t k = 1; k < g.size(); ++k) {
        int p = ++next_plug;
        r.color[p] = 2;
        r.plug[p] = true;
        r.parent[p] = 0;
        r.index[p] = 0;
        r.parent[acc] = p;
        r.index[acc] = 1;
        r.parent[g[k]] = p;
        r.index[g[k]] = 2;
        acc = p;
      }
      return acc;
    };
    for (int u = 1; u <= n; ++u) {
      int gaps = w.occurrences(u) - 1;
      const auto& idxs = choices[u - 1][pick[u - 1]];
      for (int g = 1; g <= gaps; ++g) {
        int at = comb(group_of(u, g));
        r.parent[at] = u;
        r.index[at] = idxs[g - 1];
      }
    }
    comb(roots);  // the top combination's root stays the raw root
    Mns x = r.pack();
    QOPS_CHECK(is_coloring_of_word(x, w), "colorings_of_word: constructed non-coloring");
    out.push_back(std::move(x));
    int u = n - 1;
    while (u >= 0 && pick[u] + 1 == choices[u].size()) {
      pick[u] = 0;
      --u;
    }
    if (u < 0) break;
    ++pick[u];
  }
  return out;
}

std::vector<Mns> colorings_of_tree(const Tree& t, const std::vector<int>& colors) {
  return indexed_trees_on(t, colors);
}

Mns mns_acted(const Mns& x, const Perm& sigma) {
  int n = x.arity();
  QOPS_CHECK(int(sigma.size()) == n, "mns_acted: arity mismatch");
  Perm inv = inverse_perm(sigma);
  RawMns r = to_raw(x);
  RawMns out;
  auto re = [&](int v) { return v == 0 ? 0 : (x.plugged[v - 1] ? v : inv[v - 1]); };
  for (const auto& [v, p] : r.parent) {
    out.parent[re(v)] = re(p);
    out.index[re(v)] = r.index.at(v);
    out.color[re(v)] = r.color.at(v);
    out.plug[re(v)] = r.plug.at(v);
  }
  return out.pack();
}

std::vector<Mns> rewrite_neighbors(const Mns& x) {
  std::vector<Mns> out;
  RawMns base = to_raw(x);
  for (const auto& [v, p] : base.parent) {
    if (p == 0 || !base.plug.at(v) || !base.plug.at(p)) continue;
    if (base.index.at(v) == 2) {
      RawMns r = base;  // m(x, m(y,z)) -> m(m(x,y), z)
      int u = p;
      int xc = r.child_at(u, 1), yc = r.child_at(v, 1), zc = r.child_at(v, 2);
      r.index[v] = 1;
      if (xc) { r.parent[xc] = v; r.index[xc] = 1; }
      if (yc) { r.parent[yc] = v; r.index[yc] = 2; }
      if (zc) { r.parent[zc] = u; r.index[zc] = 2; }
      out.push_back(r.pack());
    } else if (base.index.at(v) == 1) {
      RawMns r = base;  // m(m(x,y), z) -> m(x, m(y,z))
      int u = p;
      int xc = r.child_at(v, 1), yc = r.child_at(v, 2), zc = r.child_at(u, 2);
      r.index[v] = 2;
      if (xc) { r.parent[xc] = u; r.index[xc] = 1; }
      if (yc) { r.parent[yc] = v; r.index[yc] = 1; }
      if (zc) { r.parent[zc] = v; r.index[zc] = 2; }
      out.push_back(r.pack());
    }
  }
  return out;
}

std::vector<Mns> indexed_trees_on(const Tree& t, const std::vector<int>& colors) {
  QOPS_CHECK(int(colors.size()) == t.n, "indexed_trees_on: color count");
  std::vector<std::vector<std::vector<int>>> per;
  for (int v = 1; v <= t.n; ++v) {
    auto subs = increasing_subsets(colors[v - 1], int(t.children[v - 1].size()));
    if (subs.empty()) return {};
    per.push_back(std::move(subs));
  }
  std::vector<Mns> out;
  std::vector<size_t> pick(t.n, 0);
  while (true) {
    std::vector<int> index(t.n, 0);
    for (int v = 1; v <= t.n; ++v) {
      const auto& ch = t.children[v - 1];
      const auto& idxs = per[v - 1][pick[v - 1]];
      for (size_t k = 0; k < ch.size(); ++k) index[ch[k] - 1] = idxs[k];
    }
    out.push_back(Mns::make(t, colors, index, std::vector<bool>(t.n, false)));
    int v = t.n - 1;
    while (v >= 0 && pick[v] + 1 == per[v].size()) {
      pick[v] = 0;
      --v;
    }
    if (v < 0) break;
    ++pick[v];
  }
  return out;
}

}  // namespace qops
