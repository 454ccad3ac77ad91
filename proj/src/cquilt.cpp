#include "qops/cquilt.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace qops {

// Canonical representation: the r marked (c-substituted) vertices carry the
// top labels n+1..n+r, ascending in the insertion order; visible inputs are
// 1..n.  Any (base, marks) pair relabels to this form without signs, since
// the order-preserving relabeling keeps the relative insertion order.

bool CQuilt::killed() const {
  // the shape relation is termwise (each bad composite is a basis element):
  // a marked vertex repeated in the word or with more than two tree children
  for (int s : marks) {
    if (base.w.occurrences(s) > 1) return true;
    if (base.t.children[s - 1].size() > 2) return true;
  }
  // the cocycle relation is NOT termwise: its ideal is spanned by sums over
  // tree-extension fibers; see c_ideal_generators / reduce_mod_c_ideal
  return false;
}

CQuilt CQuilt::make(Quilt base, std::vector<int> marks) {
  CQuilt q;
  q.base = std::move(base);
  std::sort(marks.begin(), marks.end());
  q.marks = std::move(marks);
  int n = q.arity();
  for (size_t e = 0; e < q.marks.size(); ++e)
    QOPS_CHECK(q.marks[e] == n + 1 + int(e), "cquilt: marks must be canonical top labels");
  QOPS_CHECK(!q.killed(), "cquilt: killed term must not be stored");
  return q;
}

std::vector<int> CQuilt::visible() const {
  std::vector<int> out;
  for (int v = 1; v <= arity(); ++v) out.push_back(v);
  return out;
}

// see cquilt_acted; relabeling the visible inputs can change the canonical
// mark arrangement, so the action is sum-valued in general.

std::string CQuilt::key() const {
  return "(" + base.w.key() + "|" + base.t.key() + "|" + std::to_string(crank()) + ")";
}

FormalSum<CQuilt> cquilt_term(const Quilt& base, const std::vector<int>& marks,
                              const Coeff& coeff) {
  FormalSum<CQuilt> out;
  if (coeff == 0) return out;
  int N = base.arity();
  int r = int(marks.size());
  int n = N - r;
  std::vector<int> sorted = marks;
  std::sort(sorted.begin(), sorted.end());
  // order-preserving relabeling: visible ascending -> 1..n, marks -> n+1..n+r
  std::vector<int> lambda(N + 1, 0);
  {
    int nextv = 1;
    std::vector<bool> is_mark(N + 1, false);
    for (int s : sorted) is_mark[s] = true;
    for (int x = 1; x <= N; ++x)
      if (!is_mark[x]) lambda[x] = nextv++;
    int e = 0;
    for (int s : sorted) lambda[s] = n + 1 + (e++);
  }
  Perm inv(N);  // acted() relabels x -> sigma^{-1}(x); we want x -> lambda(x)
  for (int x = 1; x <= N; ++x) inv[lambda[x] - 1] = x;
  Quilt b = base.acted(inv);
  // the c's are interchangeable but odd: permuting which c sits at which
  // marked label costs the sign of the permutation; pick the least key
  Quilt best = b;
  int bestsign = 1;
  std::string bestkey = b.key();
  for (const Perm& tau : all_perms(r)) {
    Perm ext(N);
    for (int x = 1; x <= n; ++x) ext[x - 1] = x;
    for (int e = 1; e <= r; ++e) ext[n + e - 1] = n + tau[e - 1];
    Quilt cand = b.acted(ext);
    std::string ck = cand.key();
    if (ck < bestkey) {
      bestkey = ck;
      best = cand;
      bestsign = perm_parity(tau);
    }
  }
  CQuilt q;
  q.base = best;
  q.marks.clear();
  for (int e = 1; e <= r; ++e) q.marks.push_back(n + e);
  if (!q.killed()) out.add(q, coeff * bestsign);
  return out;
}

FormalSum<CQuilt> cquilt_compose(const FormalSum<CQuilt>& a, int k, const FormalSum<CQuilt>& b) {
  FormalSum<CQuilt> out;
  for (const auto& [ka, ta] : a.terms()) {
    const CQuilt& A = ta.first;
    QOPS_CHECK(k >= 1 && k <= A.arity(), "cquilt_compose: slot out of range");
    int r = A.crank();
    for (const auto& [kb, tb] : b.terms()) {
      const CQuilt& B = tb.first;
      int nb = B.total();
      int rb = B.crank();
      // commuting the inner factor past a's c-insertions
      long e = long(r) * (B.base.degree() + rb);
      int sgn = e % 2 == 0 ? 1 : -1;
      std::vector<int> marks;
      for (int s : A.marks) marks.push_back(s + nb - 1);  // all marks exceed k
      for (int s : B.marks) marks.push_back(s + k - 1);
      auto comp = quilt_compose(FormalSum<Quilt>(A.base), k, FormalSum<Quilt>(B.base));
      for (const auto& [kc, tc] : comp.terms())
        out += cquilt_term(tc.first, marks, ta.second * tb.second * tc.second * sgn);
    }
  }
  return out;
}

FormalSum<CQuilt> cquilt_boundary(const FormalSum<CQuilt>& a) {
  FormalSum<CQuilt> out;
  for (const auto& [k, tc] : a.terms()) {
    auto bd = quilt_boundary(tc.first.base);
    for (const auto& [k2, tc2] : bd.terms()) {
      // deletions never touch a marked (unrepeated) symbol, so the relation
      // filter cannot newly fire; keep the check
      auto t = cquilt_term(tc2.first, tc.first.marks, tc.second * tc2.second);
      QOPS_CHECK(!t.is_zero() || tc.second * tc2.second == 0, "cquilt_boundary: killed term");
      out += t;
    }
  }
  return out;
}

FormalSum<CQuilt> cquilt_acted(const FormalSum<CQuilt>& a, const Perm& sigma) {
  FormalSum<CQuilt> out;
  for (const auto& [k, tc] : a.terms()) {
    const CQuilt& q = tc.first;
    int n = q.arity();
    QOPS_CHECK(int(sigma.size()) == n, "cquilt action: arity mismatch");
    Perm ext(q.total());
    for (int x = 1; x <= q.total(); ++x) ext[x - 1] = x;
    for (int j = 1; j <= n; ++j) ext[j - 1] = sigma[j - 1];
    out += cquilt_term(q.base.acted(ext), q.marks, tc.second);
  }
  return out;
}

FormalSum<CQuilt> build_P(int n, int r) {
  QOPS_CHECK(n + r >= 2 && n >= 0 && r >= 0, "build_P: need n + r >= 2");
  int N = n + r;
  int base_sign = (1 + N * (N - 1) / 2) % 2 == 0 ? 1 : -1;
  FormalSum<CQuilt> out;
  auto quilts = enumerate_quilts(N, N - 2, true);
  std::vector<int> y(r);
  std::function<void(int, int)> rec = [&](int idx, int lo) {
    if (idx == r) {
      long e = 0;
      for (int t = 0; t < r; ++t) e += y[t] - (t + 1);
      int s = e % 2 == 0 ? 1 : -1;
      for (const Quilt& q : quilts) out += cquilt_term(q, y, Coeff(base_sign * s));
      return;
    }
    for (int v = lo; v <= N; ++v) {
      y[idx] = v;
      rec(idx + 1, v + 1);
    }
  };
  rec(0, 1);
  return out;
}

FormalSum<CQuilt> build_P_bounded(int n, int r,
                                  const std::vector<std::pair<int, int>>& colors) {
  QOPS_CHECK(int(colors.size()) == n && n + r >= 2, "build_P_bounded: colors");
  int N = n + r;
  int base_sign = (1 + N * (N - 1) / 2) % 2 == 0 ? 1 : -1;
  FormalSum<CQuilt> out;
  std::vector<int> y(r);
  std::function<void(int, int)> rec = [&](int idx, int lo) {
    if (idx == r) {
      long e = 0;
      for (int t = 0; t < r; ++t) e += y[t] - (t + 1);
      int sgn = e % 2 == 0 ? 1 : -1;
      std::vector<int> occb(N), chb(N);
      std::vector<bool> marked(N + 1, false);
      for (int m : y) marked[m] = true;
      int k = 0;
      for (int l = 1; l <= N; ++l) {
        if (marked[l]) {
          occb[l - 1] = 1;
          chb[l - 1] = 2;
        } else {
          occb[l - 1] = colors[k].first + 1;
          chb[l - 1] = colors[k].second;
          ++k;
        }
      }
      for (const Quilt& q : enumerate_quilts(N, N - 2, true, &occb, &chb))
        out += cquilt_term(q, y, Coeff(base_sign * sgn));
      return;
    }
    for (int v = lo; v <= N; ++v) {
      y[idx] = v;
      rec(idx + 1, v + 1);
    }
  };
  rec(0, 1);
  return out;
}

FormalSum<CQuilt> build_L(int n, int r) {
  FormalSum<CQuilt> P = build_P(n, r);
  FormalSum<CQuilt> out;
  for (const Perm& s : all_perms(n)) out += cquilt_acted(P, s) * perm_parity(s);
  return out;
}

FormalSum<CQuilt> linfty_residual(int n, int r) {
  QOPS_CHECK(n >= 1 && r >= 0 && n + r >= 2, "linfty_residual: bad (n,r)");
  FormalSum<CQuilt> res = cquilt_boundary(build_L(n, r));
  for (int i = 0; i <= r; ++i) {
    int j = r - i;
    for (int k = 1; k <= n; ++k) {
      int l = n + 1 - k;
      if (l < 0) continue;
      if ((k == 1 && i == 0) || (k == 0 && i == 1)) continue;
      if ((l == 1 && j == 0) || (l == 0 && j == 1)) continue;
      if (k + i < 2 || l + j < 2) continue;
      auto Lk = build_L(k, i);
      auto Ll = build_L(l, j);
      if (Lk.is_zero() || Ll.is_zero()) continue;
      auto comp = cquilt_compose(Lk, k, Ll);
      int klsign = ((k - 1) * l) % 2 == 0 ? 1 : -1;
      for (const Shuffle& sh : enumerate_shuffles(k - 1, l))
        res += cquilt_acted(comp, inverse_perm(sh.image)) * (klsign * shuffle_sign(sh));
    }
  }
  return res;
}

std::vector<FormalSum<CQuilt>> c_ideal_generators(int total, int crank, int base_degree) {
  // The quotient is by a dg-operadic ideal.  Its graded piece is spanned by
  //  (a) compositions A o_i [cocycle generator], running over whole
  //      tree-extension fibers, and
  //  (b) boundaries of shape-relation-killed elements: a deletion can make a
  //      marked symbol unrepeated, so these boundaries are not termwise zero.
  std::vector<FormalSum<CQuilt>> out;
  if (crank < 1 || total < 2) return out;
  // (a) cocycle part
  if (crank >= 2) {
    FormalSum<CQuilt> g = cquilt_term(Quilt::parse("(12|1(2))"), {1, 2}, 1);
    int Na = total - 1;  // vertices of the outer factor
    int ra = crank - 2;
    int na = Na - ra;
    if (na < 1) {
      if (total == 2 && base_degree == 0) out.push_back(g);
    } else {
      std::set<std::string> seen;
      std::vector<CQuilt> outers;
      for (const Quilt& q : enumerate_quilts(Na, base_degree, false)) {
        std::vector<int> idx(ra);
        std::function<void(int, int)> pick = [&](int t, int lo) {
          if (t == ra) {
            auto one = cquilt_term(q, idx, 1);
            if (one.is_zero()) return;
            const CQuilt& cq = one.terms().begin()->second.first;
            if (seen.insert(cq.key()).second) outers.push_back(cq);
            return;
          }
          for (int v = lo; v <= Na; ++v) {
            idx[t] = v;
            pick(t + 1, v + 1);
          }
        };
        pick(0, 1);
      }
      for (const CQuilt& A : outers) {
        FormalSum<CQuilt> Af;
        Af.add(A, 1);
        for (int i = 1; i <= A.arity(); ++i) {
          auto S = cquilt_compose(Af, i, g);
          if (!S.is_zero()) out.push_back(S);
        }
      }
    }
  }
  // (b) boundaries of killed elements, one degree up
  for (const Quilt& q : enumerate_quilts(total, base_degree + 1, false)) {
    std::vector<int> idx(crank);
    std::function<void(int, int)> pick = [&](int t, int lo) {
      if (t == crank) {
        bool bad = false;
        for (int s : idx)
          if (q.w.occurrences(s) > 1 || q.t.children[s - 1].size() > 2) bad = true;
        if (!bad) return;  // stored elements handle themselves
        FormalSum<CQuilt> db;
        auto bd = quilt_boundary(q);
        for (const auto& [k, tc] : bd.terms()) db += cquilt_term(tc.first, idx, tc.second);
        if (!db.is_zero()) out.push_back(db);
        return;
      }
      for (int v = lo; v <= total; ++v) {
        idx[t] = v;
        pick(t + 1, v + 1);
      }
    };
    pick(0, 1);
  }
  return out;
}

namespace {

using Rat = boost::multiprecision::cpp_rational;

// Reduce `target` against the span of `gens` (exact Gaussian elimination over
// the rationals); returns the residue.
std::map<std::string, Rat> span_reduce(std::map<std::string, Rat> target,
                                       std::vector<std::map<std::string, Rat>> gens) {
  // eliminate repeatedly: bring each generator to a pivot form
  std::vector<std::pair<std::string, std::map<std::string, Rat>>> pivots;
  auto reduce_row = [&](std::map<std::string, Rat>& row) {
    for (const auto& [pk, prow] : pivots) {
      auto it = row.find(pk);
      if (it == row.end() || it->second == 0) continue;
      Rat f = it->second;
      for (const auto& [k, v] : prow) {
        row[k] -= f * v;
        if (row[k] == 0) row.erase(k);
      }
    }
  };
  for (auto& grow : gens) {
    reduce_row(grow);
    // find a pivot
    std::string pk;
    for (const auto& [k, v] : grow)
      if (v != 0) {
        pk = k;
        break;
      }
    if (pk.empty()) continue;
    Rat lead = grow.at(pk);
    for (auto& [k, v] : grow) v /= lead;
    pivots.push_back({pk, grow});
  }
  reduce_row(target);
  for (auto it = target.begin(); it != target.end();)
    it = it->second == 0 ? target.erase(it) : std::next(it);
  return target;
}

}  // namespace

FormalSum<CQuilt> reduce_mod_c_ideal(const FormalSum<CQuilt>& s) {
  if (s.is_zero()) return s;
  int total = -1, crank = -1, bdeg = 0;
  std::map<std::string, CQuilt> lookup;
  std::map<std::string, Rat> target;
  for (const auto& [k, tc] : s.terms()) {
    if (total < 0) {
      total = tc.first.total();
      crank = tc.first.crank();
      bdeg = tc.first.base.degree();
    }
    QOPS_CHECK(tc.first.total() == total && tc.first.crank() == crank &&
                   tc.first.base.degree() == bdeg,
               "reduce_mod_c_ideal: inhomogeneous sum");
    lookup.emplace(k, tc.first);
    target[k] = Rat(tc.second);
  }
  std::vector<std::map<std::string, Rat>> gens;
  for (const auto& gsum : c_ideal_generators(total, crank, bdeg)) {
    std::map<std::string, Rat> row;
    for (const auto& [k, tc] : gsum.terms()) {
      row[k] = Rat(tc.second);
      lookup.emplace(k, tc.first);
    }
    gens.push_back(std::move(row));
  }
  auto residue = span_reduce(std::move(target), std::move(gens));
  FormalSum<CQuilt> out;
  for (const auto& [k, v] : residue) {
    QOPS_CHECK(boost::multiprecision::denominator(v) == 1,
               "reduce_mod_c_ideal: non-integral residue");
    out.add(lookup.at(k), Coeff(boost::multiprecision::numerator(v)));
  }
  return out;
}

bool CSeries::is_zero() const {
  for (const auto& [r, s] : comp)
    if (!s.is_zero()) return false;
  return true;
}

bool CSeries::operator==(const CSeries& o) const {
  for (int r = 0; r <= std::min(rmax, o.rmax); ++r) {
    auto a = comp.find(r);
    auto b = o.comp.find(r);
    bool za = a == comp.end() || a->second.is_zero();
    bool zb = b == o.comp.end() || b->second.is_zero();
    if (za != zb) return false;
    if (!za && a->second != b->second) return false;
  }
  return true;
}

CSeries L1_series(int rmax) {
  CSeries s;
  s.arity = 1;
  s.degree = -1;
  s.rmax = rmax;
  for (int r = 1; r <= rmax; ++r) s.comp[r] = build_L(1, r);
  return s;
}

CSeries cs_from(const FormalSum<CQuilt>& a, int arity, int degree, int rmax) {
  CSeries s;
  s.arity = arity;
  s.degree = degree;
  s.rmax = rmax;
  for (const auto& [k, tc] : a.terms()) {
    QOPS_CHECK(tc.first.arity() == arity && tc.first.degree() == degree,
               "cs_from: mixed arity/degree");
    s.comp[tc.first.crank()].add(tc.first, tc.second);
  }
  return s;
}

CSeries cs_add(const CSeries& a, const CSeries& b) {
  QOPS_CHECK(a.arity == b.arity && a.degree == b.degree, "cs_add: mismatch");
  CSeries s = a;
  s.rmax = std::min(a.rmax, b.rmax);
  for (const auto& [r, t] : b.comp) {
    auto it = s.comp.find(r);
    if (it == s.comp.end())
      s.comp[r] = t;
    else
      it->second += t;
  }
  return s;
}

CSeries cs_scale(const CSeries& a, const Coeff& c) {
  CSeries s = a;
  for (auto& [r, t] : s.comp) t = t * c;
  return s;
}

CSeries cs_compose(const CSeries& a, int k, const CSeries& b) {
  CSeries s;
  s.arity = a.arity + b.arity - 1;
  s.degree = a.degree + b.degree;
  s.rmax = std::min(a.rmax, b.rmax);
  for (const auto& [i, ta] : a.comp)
    for (const auto& [j, tb] : b.comp) {
      if (i + j > s.rmax) continue;
      if (ta.is_zero() || tb.is_zero()) continue;
      s.comp[i + j] += cquilt_compose(ta, k, tb);
    }
  return s;
}

CSeries cs_boundary(const CSeries& a) {
  CSeries s;
  s.arity = a.arity;
  s.degree = a.degree - 1;
  s.rmax = a.rmax;
  for (const auto& [r, t] : a.comp) s.comp[r] = cquilt_boundary(t);
  return s;
}

CSeries dprime(const CSeries& a) {
  CSeries s = cs_boundary(a);
  CSeries l1 = L1_series(a.rmax);
  s = cs_add(s, cs_compose(l1, 1, a));
  int sgn = a.degree % 2 == 0 ? -1 : 1;  // -(-1)^{|A|}
  for (int i = 1; i <= a.arity; ++i) s = cs_add(s, cs_scale(cs_compose(a, i, l1), sgn));
  return s;
}

}  // namespace qops
