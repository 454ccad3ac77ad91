#pragma once

#include <string>
#include <vector>

#include "qops/combinatorics.hpp"
#include "qops/formal_sum.hpp"

namespace qops {

// Planar rooted tree on vertex set <n>.  Vertical order: the root is minimal,
// u <= v iff u lies on the root-to-v path.  Horizontal order u <| v: neither
// is an ancestor of the other and at their meet the branch containing u
// precedes the branch containing v.
struct Tree {
  int n = 0;
  int root = 0;
  std::vector<int> parent;                 // 1-based, parent[v-1], 0 for root
  std::vector<std::vector<int>> children;  // children[v-1] in sibling order

  static Tree single();
  // Build from parent + children lists; validates shape.
  static Tree make(int n, const std::vector<int>& parent,
                   const std::vector<std::vector<int>>& children);

  bool is_ancestor(int u, int v) const;   // u <=_T v (u on root-to-v path)
  bool is_proper_ancestor(int u, int v) const;
  // u <|_T v (strict horizontal order).
  bool left_of(int u, int v) const;

  // Relabel vertex v as sigma^{-1}(v); this is T^sigma.
  Tree acted(const Perm& sigma) const;

  // Vertices in planar preorder (root first, children left to right).
  std::vector<int> preorder() const;

  std::string key() const;  // canonical encoding, e.g. "1(2,3(4))"
  static Tree parse(const std::string& s);
};

// Underlying relabeling maps of an extension of m by n at i:
// alpha embeds <n> consecutively at i, beta contracts the image back to i.
int ext_alpha(int v, int i);                 // v in <n> -> <n+m-1>
int ext_beta(int w, int i, int n);           // <n+m-1> -> <m>
bool ext_in_alpha_image(int w, int i, int n);

// All trees U extending T by T2 at vertex i: U restricts to T2 on the
// alpha-image and contracts via beta back to T.
std::vector<Tree> tree_extensions(const Tree& T, const Tree& T2, int i);

// Brace composition: T o_i T2 = sum over extensions, extended bilinearly.
FormalSum<Tree> brace_compose(const FormalSum<Tree>& S, int i, const FormalSum<Tree>& S2);

// Test-facing helpers (used by oracles): all planar trees on <n>, restriction
// of U to a consecutive label range as a subtree, contraction of that range.
std::vector<Tree> all_trees(int n);
bool tree_restricts_to(const Tree& U, int lo, int hi, const Tree& T2);
bool tree_contracts_to(const Tree& U, int lo, int hi, const Tree& T);

}  // namespace qops
