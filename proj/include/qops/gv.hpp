#pragma once

#include <functional>

#include "qops/mns.hpp"

namespace qops {

// Sign conventions of the compiled graded operads.  Zero colors are replaced
// by 2 inside the sign computation only, never in the data.
//
// sgn_T(I): parity of the shuffle taking J^s(p) = 1_1..(p_1-1)_1...1_n..(p_n-1)_n
// to the word J^s_T(I) whose position zeta_{I,k}(i) holds i_k (positions from 1).
int sgn_tree_coloring(const Mns& I, const std::vector<int>& pcolors);

// sgn_W(X): parity for J(q) = 0_1..(q_1-1)_1...0_n..(q_n-1)_n against
// J_W(X) = J_0 . J_1, with J_0 the 0_k of interposed k in reverse down-order
// and J_1 filled at positions zeta_{X,k}(i) (positions from 0).
int sgn_word_coloring(const Word& w, const Mns& X, const std::vector<int>& qcolors);

// phi: Brace -> NSOp_s and phibar: FS -> mNSOp_st, per color tuple.
FormalSum<Mns> phi(const Tree& T, const std::vector<int>& pcolors);
FormalSum<Mns> phibar(const Word& W, const std::vector<int>& qcolors);

// The Hochschild element D_q in mNSOp(q;q+1): top multiplication, q inner
// multiplications with alternating signs, bottom multiplication.
FormalSum<Mns> hochschild_D(int q);

// Compiled graded element of mNSOp_st: a per-color-tuple evaluator of fixed
// arity and standard degree (deg x(q) = sum q_i - q_out).
struct GradedMns {
  int arity = 0;
  int degree = 0;
  std::function<FormalSum<Mns>(const std::vector<int>&)> eval;
};

GradedMns graded_phibar(const Word& W);

// Bilinear composition of formal sums at fixed colors (colored, sign-free).
FormalSum<Mns> mns_compose(const FormalSum<Mns>& a, int i, const FormalSum<Mns>& b);

// Compiled composition of mNSOp_st at fixed colors: the totalization carries
// the Koszul sign (-1)^{deg(b) * (q_1 + ... + q_{i-1})} for q the colors of
// a's inputs.  (For NSOp_s all degrees are 0 and no sign appears.)
FormalSum<Mns> graded_mns_compose(const FormalSum<Mns>& a, const std::vector<int>& qa, int i,
                                  const FormalSum<Mns>& b, int deg_b);

// The derivation by D: (partial_D x)(q) = D o_1 x(q) - (-1)^{deg x} sum_i
// x(..,q_i+1,..) o_i D_{q_i}.
GradedMns partial_D(const GradedMns& x);

}  // namespace qops
