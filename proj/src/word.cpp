#include "qops/word.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qops {

Word Word::make(std::vector<int> letters, int n) {
  Word w;
  w.letters = std::move(letters);
  w.n = n;
  QOPS_CHECK(w.valid(), "word: invalid (surjectivity/nondegeneracy/interlacing)");
  return w;
}

Word Word::single() { return make({1}, 1); }

bool Word::valid() const {
  if (n <= 0 || letters.empty()) return false;
  std::vector<int> occ(n + 1, 0);
  for (size_t p = 0; p < letters.size(); ++p) {
    int a = letters[p];
    if (a < 1 || a > n) return false;
    if (p > 0 && letters[p - 1] == a) return false;
    ++occ[a];
  }
  for (int u = 1; u <= n; ++u)
    if (occ[u] == 0) return false;
  // no interlacing: spans are nested or disjoint
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      if (u == v) continue;
      int fu = first_occurrence(u), lu = last_occurrence(u);
      int fv = first_occurrence(v), lv = last_occurrence(v);
      if (fu < fv && fv <= lu && lu < lv) return false;
    }
  return true;
}

int Word::first_occurrence(int u) const {
  for (size_t p = 0; p < letters.size(); ++p)
    if (letters[p] == u) return int(p) + 1;
  return 0;
}

int Word::last_occurrence(int u) const {
  for (size_t p = letters.size(); p > 0; --p)
    if (letters[p - 1] == u) return int(p);
  return 0;
}

int Word::occurrences(int u) const {
  int c = 0;
  for (int a : letters)
    if (a == u) ++c;
  return c;
}

std::vector<int> Word::caesuras() const {
  std::vector<int> out;
  for (size_t p = 0; p < letters.size(); ++p)
    if (int(p) + 1 < last_occurrence(letters[p])) out.push_back(int(p) + 1);
  return out;
}

std::vector<int> Word::interposed() const {
  // Symbols directly following a caesura, ordered by first occurrence.
  std::vector<bool> is_int(n + 1, false);
  for (int c : caesuras()) is_int[letters[c]] = true;  // letter at position c+1
  std::vector<int> out;
  for (int a : letters) {
    if (is_int[a]) {
      out.push_back(a);
      is_int[a] = false;
    }
  }
  return out;
}

bool Word::is_interposed(int u) const {
  for (int c : caesuras())
    if (letters[c] == u) return true;
  return false;
}

std::vector<int> Word::down_order() const {
  std::vector<int> out;
  std::vector<bool> seen(n + 1, false);
  for (int a : letters)
    if (!seen[a]) {
      seen[a] = true;
      out.push_back(a);
    }
  return out;
}

Word Word::acted(const Perm& sigma) const {
  QOPS_CHECK(int(sigma.size()) == n, "word action: arity mismatch");
  Perm inv = inverse_perm(sigma);
  std::vector<int> l(letters.size());
  for (size_t p = 0; p < letters.size(); ++p) l[p] = inv[letters[p] - 1];
  return make(std::move(l), n);
}

std::string Word::key() const {
  std::ostringstream os;
  if (n <= 9) {
    for (int a : letters) os << a;
  } else {
    for (size_t p = 0; p < letters.size(); ++p) {
      if (p) os << ".";
      os << letters[p];
    }
  }
  return os.str();
}

Word Word::parse(const std::string& s) {
  std::vector<int> l;
  int n = 0;
  if (s.find('.') == std::string::npos) {
    for (char c : s) {
      QOPS_CHECK(isdigit(c), "word parse: digit expected");
      l.push_back(c - '0');
      n = std::max(n, c - '0');
    }
  } else {
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, '.')) {
      l.push_back(std::stoi(tok));
      n = std::max(n, l.back());
    }
  }
  return make(std::move(l), n);
}

namespace {

// Squash adjacent repetitions in place.
std::vector<int> squash(std::vector<int> v) {
  std::vector<int> out;
  for (int a : v)
    if (out.empty() || out.back() != a) out.push_back(a);
  return out;
}

}  // namespace

bool word_restricts_to(const Word& X, int i, int n2, const Word& W2) {
  std::vector<int> kept;
  for (int a : X.letters)
    if (a >= i && a <= i + n2 - 1) kept.push_back(a - i + 1);
  return squash(std::move(kept)) == W2.letters;
}

bool word_collapses_to(const Word& X, int i, int n2, const Word& W) {
  std::vector<int> mapped;
  for (int a : X.letters) {
    int b = a < i ? a : (a <= i + n2 - 1 ? i : a - n2 + 1);
    mapped.push_back(b);
  }
  return squash(std::move(mapped)) == W.letters;
}

namespace {

// Sign of an extension: the (deg W, deg W2)-shuffle on interposed symbols.
// gamma maps int(W) into int(X) by beta^{-1}, except gamma(i) := alpha(a) for
// (1,a) the first letter of W2 when i is interposed in W.
int extension_sign(const Word& W, const Word& W2, int i, const Word& X) {
  auto intW = W.interposed();
  auto intW2 = W2.interposed();
  auto intX = X.interposed();
  QOPS_CHECK(intX.size() == intW.size() + intW2.size(), "extension sign: interposed count");
  int n2 = W2.n;
  std::vector<int> list;
  for (int u : intW) {
    if (u == i)
      list.push_back(W2.letters[0] + i - 1);
    else
      list.push_back(u < i ? u : u + n2 - 1);
  }
  for (int v : intW2) list.push_back(v + i - 1);
  // position of each list element in intX
  std::vector<int> idx;
  for (int x : list) {
    auto it = std::find(intX.begin(), intX.end(), x);
    QOPS_CHECK(it != intX.end(), "extension sign: symbol not interposed in X");
    idx.push_back(int(it - intX.begin()) + 1);
  }
  std::vector<int> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  QOPS_CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
             "extension sign: images collide");
  return inversion_sign(idx);
}

}  // namespace

std::vector<WordExtension> word_extensions(const Word& W, const Word& W2, int i) {
  QOPS_CHECK(i >= 1 && i <= W.n, "word_extensions: symbol out of range");
  int n2 = W2.n;
  int N = W.n + n2 - 1;
  int t = W.occurrences(i);
  // V = W2 relabeled into the alpha-range.
  std::vector<int> V;
  for (int a : W2.letters) V.push_back(a + i - 1);
  int L = int(V.size());

  // Cut V into t contiguous blocks; consecutive blocks overlap in exactly one
  // letter (the squashed duplicate).  This pins |X| = |W| + |W2| - 1, the
  // degree-homogeneous candidate space; the squash conditions alone would
  // also admit shorter degree-breaking merges.
  std::vector<std::pair<int, int>> cuts(t);  // [a_r, b_r], 1-based
  std::vector<WordExtension> out;
  std::function<void(int, int)> rec = [&](int r, int start) {
    if (r == t) {
      QOPS_CHECK(!cuts.empty() && cuts.back().second == L, "word_extensions: bad cut system");
      // assemble
      std::vector<int> xs;
      int occ = 0;
      for (int a : W.letters) {
        if (a == i) {
          const auto& [lo, hi] = cuts[occ++];
          for (int p = lo; p <= hi; ++p) xs.push_back(V[p - 1]);
        } else {
          xs.push_back(a < i ? a : a + n2 - 1);
        }
      }
      Word X;
      X.letters = std::move(xs);
      X.n = N;
      QOPS_CHECK(X.length() == W.length() + W2.length() - 1, "word_extensions: length");
      if (!X.valid()) return;
      QOPS_CHECK(word_restricts_to(X, i, n2, W2), "word_extensions: restrict failed");
      QOPS_CHECK(word_collapses_to(X, i, n2, W), "word_extensions: collapse failed");
      out.push_back({X, extension_sign(W, W2, i, X)});
      return;
    }
    if (start > L) return;
    for (int b = start; b <= L; ++b) {
      cuts[r] = {start, b};
      if (r + 1 < t) {
        rec(r + 1, b);  // next block starts on the shared letter
      } else if (b == L) {
        rec(r + 1, L + 1);
      }
    }
  };
  QOPS_CHECK(t >= 1, "word_extensions: symbol absent");
  rec(0, 1);
  return out;
}

FormalSum<Word> fs_compose(const FormalSum<Word>& S, int i, const FormalSum<Word>& S2) {
  FormalSum<Word> out;
  for (const auto& [k1, tc1] : S.terms())
    for (const auto& [k2, tc2] : S2.terms())
      for (const auto& ext : word_extensions(tc1.first, tc2.first, i))
        out.add(ext.word, tc1.second * tc2.second * ext.sign);
  return out;
}

FormalSum<Word> fs_boundary(const Word& W) {
  FormalSum<Word> out;
  auto caes = W.caesuras();
  auto caesura_index = [&](int pos) {
    for (size_t k = 0; k < caes.size(); ++k)
      if (caes[k] == pos) return int(k) + 1;
    return 0;
  };
  for (int p = 1; p <= W.length(); ++p) {
    int a = W.letters[p - 1];
    if (W.occurrences(a) < 2) continue;
    int sign;
    int k = caesura_index(p);
    if (k > 0) {
      sign = (k % 2 == 0) ? 1 : -1;  // (-1)^k
    } else {
      // last occurrence; previous occurrence of a is a caesura
      int prev = 0;
      for (int q = p - 1; q >= 1; --q)
        if (W.letters[q - 1] == a) {
          prev = q;
          break;
        }
      QOPS_CHECK(prev > 0, "fs_boundary: missing previous occurrence");
      int kp = caesura_index(prev);
      QOPS_CHECK(kp > 0, "fs_boundary: previous occurrence not a caesura");
      sign = (kp % 2 == 0) ? -1 : 1;  // (-1)^{k+1}
    }
    std::vector<int> l;
    for (int q = 1; q <= W.length(); ++q)
      if (q != p) l.push_back(W.letters[q - 1]);
    out.add(Word::make(std::move(l), W.n), sign);
  }
  return out;
}

FormalSum<Word> fs_boundary(const FormalSum<Word>& S) {
  FormalSum<Word> out;
  for (const auto& [k, tc] : S.terms()) out += fs_boundary(tc.first) * tc.second;
  return out;
}

Word fs_generator_m2() { return Word::make({1, 2}, 2); }

Word fs_generator_m1k(int k) {
  QOPS_CHECK(k >= 0, "fs_generator_m1k: k >= 0");
  if (k == 0) return Word::single();
  std::vector<int> l;
  l.push_back(1);
  for (int j = 2; j <= k + 1; ++j) {
    l.push_back(j);
    l.push_back(1);
  }
  return Word::make(std::move(l), k + 1);
}

std::vector<Word> down_ordered_words(int n, int length, const std::vector<int>* bounds) {
  std::vector<Word> out;
  std::vector<int> seq;
  std::vector<int> stack;
  std::vector<int> occ(n + 1, 0);
  std::function<void(int)> rec = [&](int next_label) {
    int remaining = length - int(seq.size());
    if (remaining == 0) {
      if (next_label == n + 1) {
        Word w;
        w.letters = seq;
        w.n = n;
        out.push_back(std::move(w));
      }
      return;
    }
    if (remaining < n + 1 - next_label) return;  // cannot open all symbols
    // open a fresh symbol
    if (next_label <= n && (!bounds || (*bounds)[next_label - 1] >= 1)) {
      stack.push_back(next_label);
      occ[next_label] = 1;
      seq.push_back(next_label);
      rec(next_label + 1);
      seq.pop_back();
      stack.pop_back();
      occ[next_label] = 0;
    }
    // reoccur an open symbol (pops everything above it)
    for (int d = int(stack.size()) - 1; d >= 0; --d) {
      int u = stack[d];
      if (!seq.empty() && seq.back() == u) continue;  // nondegeneracy
      if (bounds && occ[u] + 1 > (*bounds)[u - 1]) continue;
      std::vector<int> popped(stack.begin() + d + 1, stack.end());
      stack.resize(d + 1);
      ++occ[u];
      seq.push_back(u);
      rec(next_label);
      seq.pop_back();
      --occ[u];
      stack.insert(stack.end(), popped.begin(), popped.end());
    }
  };
  rec(1);
  return out;
}

std::vector<Word> all_words(int n, int length) {
  std::vector<Word> out;
  for (const Word& w : down_ordered_words(n, length))
    for (const Perm& s : all_perms(n)) out.push_back(w.acted(s));
  return out;
}

}  // namespace qops
