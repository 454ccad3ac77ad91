#include "qops/quilt.hpp"

#include <functional>

namespace qops {

bool Quilt::valid_pair() const {
  if (w.n != t.n) return false;
  if (!w.valid()) return false;
  for (int u = 1; u <= w.n; ++u)
    for (int v = 1; v <= w.n; ++v) {
      if (u == v) continue;
      // (1) some u before some v, yet v a proper ancestor of u
      if (w.first_occurrence(u) < w.last_occurrence(v) && t.is_proper_ancestor(v, u))
        return false;
      // (2) u surrounds v: require v left of u
      int fu = w.first_occurrence(u), lu = w.last_occurrence(u);
      int fv = w.first_occurrence(v);
      if (fu < fv && fv < lu && !t.left_of(v, u)) return false;
    }
  return true;
}

Quilt Quilt::make(Word w, Tree t) {
  Quilt q;
  q.w = std::move(w);
  q.t = std::move(t);
  QOPS_CHECK(q.valid_pair(), "quilt: conditions violated");
  return q;
}

Quilt Quilt::acted(const Perm& sigma) const { return make(w.acted(sigma), t.acted(sigma)); }

std::string Quilt::key() const { return "(" + w.key() + "|" + t.key() + ")"; }

Quilt Quilt::parse(const std::string& s) {
  QOPS_CHECK(s.size() >= 4 && s.front() == '(' && s.back() == ')', "quilt parse: parens");
  auto bar = s.find('|');
  QOPS_CHECK(bar != std::string::npos, "quilt parse: '|' expected");
  return make(Word::parse(s.substr(1, bar - 1)), Tree::parse(s.substr(bar + 1, s.size() - bar - 2)));
}

bool Patch::valid_pair() const {
  QOPS_CHECK(j.is_plain(), "patch: horizontal coordinate must be plain");
  if (x.arity() != j.arity()) return false;
  int n = x.arity();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      if (j.lt(a, b) && !x.left_of(a, b)) return false;
      if (x.lt(a, b) && !j.left_of(b, a)) return false;
    }
  return true;
}

Patch Patch::make(Mns x, Mns j) {
  Patch p;
  p.x = std::move(x);
  p.j = std::move(j);
  QOPS_CHECK(p.valid_pair(), "patch: conditions violated");
  return p;
}

std::string Patch::key() const { return "(" + x.key() + ";" + j.key() + ")"; }

FormalSum<Quilt> quilt_compose(const FormalSum<Quilt>& a, int i, const FormalSum<Quilt>& b) {
  FormalSum<Quilt> out;
  for (const auto& [ka, ta] : a.terms())
    for (const auto& [kb, tb] : b.terms()) {
      auto wexts = word_extensions(ta.first.w, tb.first.w, i);
      auto texts = tree_extensions(ta.first.t, tb.first.t, i);
      for (const auto& we : wexts)
        for (const Tree& ue : texts)
          out.add(Quilt::make(we.word, ue), ta.second * tb.second * we.sign);
    }
  return out;
}

FormalSum<Quilt> quilt_boundary(const Quilt& q) {
  FormalSum<Quilt> out;
  auto bd = fs_boundary(q.w);
  for (const auto& [k, tc] : bd.terms()) out.add(Quilt::make(tc.first, q.t), tc.second);
  return out;
}

FormalSum<Quilt> quilt_boundary(const FormalSum<Quilt>& s) {
  FormalSum<Quilt> out;
  for (const auto& [k, tc] : s.terms()) out += quilt_boundary(tc.first) * tc.second;
  return out;
}

namespace {

// All trees compatible with the word: a parent's occurrences must all precede
// the child's (condition 1); surround pairs force left-of (condition 2).
// Vertices are inserted in down-order, so both checks are incremental.
void quilt_trees_for_word(const Word& w, const std::vector<int>* child_bound,
                          const std::function<void(const Tree&)>& emit) {
  int n = w.n;
  std::vector<int> order = w.down_order();
  std::vector<int> parent(n + 1, -1);
  std::vector<std::vector<int>> children(n + 1);

  auto partial_left_of = [&](int a, int b) {
    std::vector<int> ap, bp;
    for (int x2 = a; x2 > 0; x2 = parent[x2] < 0 ? 0 : parent[x2]) ap.push_back(x2);
    for (int x2 = b; x2 > 0; x2 = parent[x2] < 0 ? 0 : parent[x2]) bp.push_back(x2);
    int ia = int(ap.size()) - 1, ib = int(bp.size()) - 1;
    if (ap[ia] != bp[ib]) return false;
    while (ia >= 0 && ib >= 0 && ap[ia] == bp[ib]) {
      --ia;
      --ib;
    }
    if (ia < 0 || ib < 0) return false;  // ancestor related
    int meet = ap[ia + 1];
    int pa = -1, pb = -1;
    const auto& list = children[meet];
    for (size_t s = 0; s < list.size(); ++s) {
      if (list[s] == ap[ia]) pa = int(s);
      if (list[s] == bp[ib]) pb = int(s);
    }
    return pa >= 0 && pb >= 0 && pa < pb;
  };

  std::function<void(int)> insert = [&](int k) {
    if (k == n) {
      std::vector<int> par(n);
      std::vector<std::vector<int>> ch(n);
      for (int v = 1; v <= n; ++v) {
        par[v - 1] = parent[v] < 0 ? 0 : parent[v];
        ch[v - 1] = children[v];
      }
      emit(Tree::make(n, par, ch));
      return;
    }
    int u = order[k];
    for (int kk = 0; kk < k; ++kk) {
      int p = order[kk];
      if (w.last_occurrence(p) >= w.first_occurrence(u)) continue;
      if (child_bound && int(children[p].size()) + 1 > (*child_bound)[p - 1]) continue;
      for (size_t pos = 0; pos <= children[p].size(); ++pos) {
        children[p].insert(children[p].begin() + pos, u);
        parent[u] = p;
        bool ok = true;
        for (int kk2 = 0; kk2 < k && ok; ++kk2) {
          int x2 = order[kk2];
          int fx = w.first_occurrence(x2), lx = w.last_occurrence(x2);
          int fu = w.first_occurrence(u);
          if (fx < fu && fu < lx && !partial_left_of(u, x2)) ok = false;
        }
        if (ok) insert(k + 1);
        children[p].erase(children[p].begin() + pos);
        parent[u] = -1;
      }
    }
  };

  if (n == 0) return;
  // the down-first vertex is the root: its single occurrence precedes all
  int r = order[0];
  if (w.occurrences(r) != 1) return;
  parent[r] = 0;
  if (n == 1) {
    emit(Tree::single());
    return;
  }
  insert(1);
}

}  // namespace

std::vector<Quilt> enumerate_quilts(int n, int degree, bool down_ordered,
                                    const std::vector<int>* occ_bound,
                                    const std::vector<int>* child_bound) {
  QOPS_CHECK(n >= 1, "enumerate_quilts: arity >= 1");
  std::vector<Quilt> out;
  for (const Word& w0 : down_ordered_words(n, n + degree, occ_bound)) {
    std::vector<Word> words;
    if (down_ordered)
      words.push_back(w0);
    else
      for (const Perm& s : all_perms(n)) words.push_back(w0.acted(s));
    for (const Word& w : words) {
      quilt_trees_for_word(w, child_bound, [&](const Tree& t) {
        Quilt q;
        q.w = w;
        q.t = t;
        QOPS_CHECK(q.valid_pair(), "enumerate_quilts: constructed invalid quilt");
        out.push_back(q);
      });
    }
  }
  return out;
}

int interleave_sign(const std::vector<std::pair<int, int>>& colors) {
  long e = 0;
  for (size_t i = 0; i < colors.size(); ++i)
    for (size_t j2 = i + 1; j2 < colors.size(); ++j2)
      e += long(colors[i].second - 1) * colors[j2].first;
  return e % 2 == 0 ? 1 : -1;
}

FormalSum<Patch> quilt_to_patch(const Quilt& q, const std::vector<std::pair<int, int>>& colors) {
  QOPS_CHECK(int(colors.size()) == q.arity(), "quilt_to_patch: color count");
  std::vector<int> qc, pc;
  for (auto& [qq, pp] : colors) {
    qc.push_back(qq);
    pc.push_back(pp);
  }
  int sig = interleave_sign(colors);
  FormalSum<Patch> out;
  for (const Mns& X : colorings_of_word(q.w, qc)) {
    int sx = sgn_word_coloring(q.w, X, qc);
    for (const Mns& I : colorings_of_tree(q.t, pc)) {
      int si = sgn_tree_coloring(I, pc);
      out.add(Patch::make(X, I), Coeff(sx * si * sig));
    }
  }
  return out;
}

Patch patch_compose(const Patch& a, int i, const Patch& b) {
  return Patch::make(mns_compose(a.x, i, b.x), mns_compose(a.j, i, b.j));
}

FormalSum<Patch> patch_compose(const FormalSum<Patch>& a, int i, const FormalSum<Patch>& b) {
  FormalSum<Patch> out;
  for (const auto& [ka, ta] : a.terms())
    for (const auto& [kb, tb] : b.terms())
      out.add(patch_compose(ta.first, i, tb.first), ta.second * tb.second);
  return out;
}

}  // namespace qops
