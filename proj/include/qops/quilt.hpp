#pragma once

#include "qops/gv.hpp"
#include "qops/mns.hpp"
#include "qops/tree.hpp"
#include "qops/word.hpp"

namespace qops {

// A quilt: a word and a planar tree on the same vertex set subject to
//  (1) if some occurrence of u precedes an occurrence of v, then v is not a
//      proper ancestor of u (a vertex's occurrences all follow its tree
//      ancestors' occurrences), and
//  (2) W = ..u..v..u.. implies v left of u in T.
// deg(W,T) = deg(W); the boundary acts on the word coordinate only.
struct Quilt {
  Word w;
  Tree t;

  int arity() const { return w.n; }
  int degree() const { return w.degree(); }
  bool valid_pair() const;
  static Quilt make(Word w, Tree t);

  Quilt acted(const Perm& sigma) const;

  std::string key() const;  // "(word|tree)"
  static Quilt parse(const std::string& s);
};

// A patchwork: vertical mNSOp coordinate and horizontal NSOp coordinate with
//  (1) a <_J b => a left-of_X b  and  (2) a <_X b => b left-of_J a.
struct Patch {
  Mns x;  // vertical (may contain multiplications)
  Mns j;  // horizontal (plain)

  bool valid_pair() const;
  static Patch make(Mns x, Mns j);

  std::string key() const;
};

// Hadamard composition: all pairs of word- and tree-extensions, signed by the
// word extension; every term of a composition of quilts is again a quilt.
FormalSum<Quilt> quilt_compose(const FormalSum<Quilt>& a, int i, const FormalSum<Quilt>& b);

// Boundary in the word coordinate; every term must remain a valid quilt.
FormalSum<Quilt> quilt_boundary(const Quilt& q);
FormalSum<Quilt> quilt_boundary(const FormalSum<Quilt>& s);

// All quilts of the given arity and degree; if down_ordered, only those whose
// labels increase in the down-order of W.  Optional per-label bounds restrict
// word occurrences (occ[u] <= occ_bound[u-1]) and tree children counts.
std::vector<Quilt> enumerate_quilts(int n, int degree, bool down_ordered,
                                    const std::vector<int>* occ_bound = nullptr,
                                    const std::vector<int>* child_bound = nullptr);

// Koszul interleave sign of quilt_to_patch: switching
// q_1..q_n, p_1-1..p_n-1  ~>  q_1, p_1-1, ..., q_n, p_n-1.
int interleave_sign(const std::vector<std::pair<int, int>>& colors);

// Expansion of (phibar (x)_H phi)(W,T) at the given (q_i,p_i) colors:
// sum of sgn_W(X) sgn_T(I) (-1)^sigma (X,I).
FormalSum<Patch> quilt_to_patch(const Quilt& q, const std::vector<std::pair<int, int>>& colors);

// Coordinatewise composition of patch pairs (the Hadamard sign vanishes since
// the horizontal coordinate sits in degree 0).
Patch patch_compose(const Patch& a, int i, const Patch& b);
FormalSum<Patch> patch_compose(const FormalSum<Patch>& a, int i, const FormalSum<Patch>& b);

}  // namespace qops
