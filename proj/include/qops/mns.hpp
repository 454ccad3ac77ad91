#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qops/formal_sum.hpp"
#include "qops/tree.hpp"
#include "qops/word.hpp"

namespace qops {

// An indexed tree with an optional set of plugged vertices: the common
// carrier for NSOp (no plugged vertices) and mNSOp (plugged vertices are the
// formal binary multiplications, always of color 2).
//
// colors[v-1] = q_v >= 0; index[v-1] = I(parent(v), v) with 1 <= I <= q_parent
// and strictly increasing along siblings (sibling order in `tree` is index
// order).  Output color = 1 + sum(q_v - 1).
//
// Normal form for plugged clusters is the left comb: a plugged vertex never
// has a plugged child in slot 2.  Plugged vertices are relabeled n+1..n+k in
// preorder, so structural equality decides class equality.
struct Mns {
  Tree tree;
  std::vector<int> colors;  // per vertex label
  std::vector<int> index;   // index[v-1]; 0 for the root
  std::vector<bool> plugged;

  int total_vertices() const { return tree.n; }
  int arity() const;        // number of non-plugged vertices
  int out_color() const;    // 1 + sum(colors - 1)
  bool is_plain() const;    // no plugged vertices

  static Mns corolla(int color);  // single non-plugged vertex
  // Build and validate (does not normalize).
  static Mns make(Tree t, std::vector<int> colors, std::vector<int> index,
                  std::vector<bool> plugged);

  bool valid() const;

  // Class normal form: left-comb rewriting + canonical plugged labels.
  Mns normalized() const;
  bool is_normal_form() const;

  // Orders on non-plugged vertices (representative independent).
  bool lt(int u, int v) const;       // u <_X v: u a proper ancestor of v
  bool left_of(int u, int v) const;  // u <|_X v

  // Labels of non-plugged vertices in increasing order (they are 1..n for
  // normalized elements).
  std::vector<int> visible() const;

  std::string key() const;
  static Mns parse(const std::string& s);
};

// A tuple of non-decreasing maps zeta_t : [q_t] -> [q], one per non-plugged
// vertex; the image of an indexed tree in the Delta-multicategory.
struct DeltaMultimap {
  std::vector<std::vector<int>> comp;  // comp[t-1][i] = zeta_t(i), i in 0..q_t
  int out = 0;                         // q

  bool operator==(const DeltaMultimap& o) const { return comp == o.comp && out == o.out; }
  std::string str() const;
};

// Composition in the Delta multicategory.
DeltaMultimap delta_compose(const DeltaMultimap& a, int i, const DeltaMultimap& b);

// Generator-free computation of zeta (root decomposition over leaf counts).
DeltaMultimap zeta(const Mns& x);
// Fencepost maps for every vertex label (plugged included), indexed 1..total.
std::vector<std::vector<int>> zeta_all_components(const Mns& x);
// Same value computed by factoring into one-edge generators and composing
// their zeta's; the agreement of the two routes is a pinned property.
DeltaMultimap zeta_via_generators(const Mns& x);

// Substitution of y at the non-plugged vertex i of x (colors must match);
// result is normalized.
Mns mns_compose(const Mns& x, int i, const Mns& y);

// Colorings.
std::vector<Mns> colorings_of_word(const Word& w, const std::vector<int>& colors);
std::vector<Mns> colorings_of_tree(const Tree& t, const std::vector<int>& colors);
// Independent predicate used to validate enumerations.
bool is_coloring_of_word(const Mns& x, const Word& w);
bool is_coloring_of_tree(const Mns& x, const Tree& t);

// Word underlying a plugged element (all plugged vertices must have exactly
// two children), per the tree-word construction with plugged letters deleted.
std::optional<Word> word_of(const Mns& x);
// Tree word of a plain indexed tree / any Mns representative (no deletions).
Word tree_word(const Tree& t);

// Relabel visible vertices: v -> sigma^{-1}(v) (colored-operad action, no
// signs; plugged labels recanonicalized).
Mns mns_acted(const Mns& x, const Perm& sigma);

// Test support: enumerate all plain indexed trees with the given underlying
// tree (all index assignments).
std::vector<Mns> indexed_trees_on(const Tree& t, const std::vector<int>& colors);
// Single-step associativity rewrites in both directions, packed but not
// normalized (drives the rewriting-closure oracle).
std::vector<Mns> rewrite_neighbors(const Mns& x);

}  // namespace qops
