#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qops/combinatorics.hpp"
#include "qops/formal_sum.hpp"

namespace qops {

// A word over <n>: surjective, nondegenerate (no uu), non-interlacing
// (never u..v..u..v for u != v).  deg(W) = |W| - n.
struct Word {
  std::vector<int> letters;  // values in 1..n
  int n = 0;

  static Word make(std::vector<int> letters, int n);
  static Word single();  // the word "1"

  int length() const { return int(letters.size()); }
  int degree() const { return length() - n; }

  bool valid() const;
  int first_occurrence(int u) const;  // 1-based position
  int last_occurrence(int u) const;
  int occurrences(int u) const;

  // Caesura positions (1-based): letters with a later occurrence of the same
  // symbol, in position order.
  std::vector<int> caesuras() const;
  // Interposed symbols ordered by first occurrence; |int(W)| = deg(W).
  std::vector<int> interposed() const;
  bool is_interposed(int u) const;

  // Symbols ordered by first occurrence (the down-order).
  std::vector<int> down_order() const;

  Word acted(const Perm& sigma) const;  // W^sigma = sigma^{-1} W

  std::string key() const;
  static Word parse(const std::string& s);
};

// One extension X of W by W2 at i together with its shuffle sign.
struct WordExtension {
  Word word;
  int sign = 1;
};

// All extensions of W by W2 at letter-symbol i, with signs.
std::vector<WordExtension> word_extensions(const Word& W, const Word& W2, int i);

// FS composition: W o_i W2 = sum of signed extensions; bilinear.
FormalSum<Word> fs_compose(const FormalSum<Word>& S, int i, const FormalSum<Word>& S2);

// Boundary: sum of signed single-letter deletions of repeated symbols.
FormalSum<Word> fs_boundary(const Word& W);
FormalSum<Word> fs_boundary(const FormalSum<Word>& S);

// Generators: M2 = 12, M_{1,0} = 1, M_{1,k} = 121...1(k+1)1.
Word fs_generator_m2();
Word fs_generator_m1k(int k);

// All valid words on <n> of the given length (enumeration support).
std::vector<Word> all_words(int n, int length);
// Valid words whose labels appear in down-order (1,2,...,n by first occurrence),
// with optional per-symbol occurrence bounds (bounds[u-1] = max occurrences).
std::vector<Word> down_ordered_words(int n, int length, const std::vector<int>* bounds = nullptr);

// Restriction/collapse predicates defining Ext(W,W2,i) (also used by oracles):
// delete letters outside the alpha-image, squash repeats, relabel: equals W2?
bool word_restricts_to(const Word& X, int i, int n2, const Word& W2);
// apply beta to letters, squash repeats: equals W?
bool word_collapses_to(const Word& X, int i, int n2, const Word& W);

}  // namespace qops
