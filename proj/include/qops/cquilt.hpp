#pragma once

#include <map>

#include "qops/quilt.hpp"

namespace qops {

// A quilt with c-marked vertices, stored post-substitution.  Canonical form:
// visible inputs are the labels 1..n (order preserving) and the r marks are
// the top labels n+1..n+r with the least base key over mark permutations (the
// c's are odd, so reordering them costs a sign folded into the coefficient).
// Terms killed by the relations are never stored:
//   - a marked label repeated in the word, or with more than two tree
//     children (the shape relation), or
//   - a tree edge between two marked labels (the cocycle relation).
struct CQuilt {
  Quilt base;
  std::vector<int> marks;  // sorted vertex labels

  int total() const { return base.arity(); }
  int crank() const { return int(marks.size()); }
  int arity() const { return total() - crank(); }
  int degree() const { return base.degree() - crank(); }

  bool killed() const;
  static CQuilt make(Quilt base, std::vector<int> marks);  // asserts !killed

  std::vector<int> visible() const;  // unmarked labels, ascending

  std::string key() const;
};

// nullopt-free constructor: empty sum if the relations kill the term.
FormalSum<CQuilt> cquilt_term(const Quilt& base, const std::vector<int>& marks,
                              const Coeff& coeff);

// Composition at visible input k of a; Koszul bookkeeping for reordering the
// c-insertions is folded into the coefficients.
FormalSum<CQuilt> cquilt_compose(const FormalSum<CQuilt>& a, int k, const FormalSum<CQuilt>& b);

// Boundary in the word coordinate (c is closed, marks carry over).
FormalSum<CQuilt> cquilt_boundary(const FormalSum<CQuilt>& a);

FormalSum<CQuilt> cquilt_acted(const FormalSum<CQuilt>& a, const Perm& sigma);

// P_n^r = sum over (r,n)-shuffle positions y of signed P_{n+r}^0 with c at y;
// P_n^0 = (-1)^{1+n(n-1)/2} (sum of down-ordered quilts of degree n-2).
FormalSum<CQuilt> build_P(int n, int r);
// L_n^r = sum over sigma of sgn(sigma) (P_n^r)^sigma.
FormalSum<CQuilt> build_L(int n, int r);

// build_P restricted by the (q_i, p_i) colors the visible slots will carry:
// a visible vertex occurs at most q_i + 1 times and has at most p_i tree
// children; marked vertices occur once with at most two children.  Agrees
// with filtering the unrestricted expansion.
FormalSum<CQuilt> build_P_bounded(int n, int r, const std::vector<std::pair<int, int>>& colors);

// Right side of the per-(n,r) L-infinity identity; must vanish in the
// quotient, i.e. reduce_mod_c_ideal of it is zero.
FormalSum<CQuilt> linfty_residual(int n, int r);

// The cocycle relation (12,1(2)) o_1 c o_1 c = 0 generates an operadic ideal
// spanned, in each graded piece, by the sums A o_i [generator] over basis
// elements A; these sums run over whole tree-extension fibers and are not
// termwise.  Generators of the piece containing `like` (same total vertex
// count, c-count and base word degree):
std::vector<FormalSum<CQuilt>> c_ideal_generators(int total, int crank, int base_degree);
// Exact reduction of a sum modulo the span of the ideal generators of its
// piece; the result is the canonical coset representative (zero iff the sum
// lies in the ideal).  Sums must be homogeneous in (total, crank, degree).
FormalSum<CQuilt> reduce_mod_c_ideal(const FormalSum<CQuilt>& s);

// Bounded power series in the c-count with components of constant degree.
struct CSeries {
  int arity = 0;
  int degree = 0;
  int rmax = 0;
  std::map<int, FormalSum<CQuilt>> comp;  // c-count -> component

  bool is_zero() const;
  bool operator==(const CSeries& o) const;
};

CSeries L1_series(int rmax);
CSeries cs_from(const FormalSum<CQuilt>& a, int arity, int degree, int rmax);
CSeries cs_add(const CSeries& a, const CSeries& b);
CSeries cs_scale(const CSeries& a, const Coeff& c);
CSeries cs_compose(const CSeries& a, int k, const CSeries& b);
CSeries cs_boundary(const CSeries& a);
// dprime = boundary + derivation by L1.
CSeries dprime(const CSeries& a);

}  // namespace qops
