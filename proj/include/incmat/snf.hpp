#pragma once

#include "incmat/exact_matrix.hpp"

namespace incmat {

// u * m * v = diag(d) padded with zeros, with u, v unimodular and each
// invariant factor positive and dividing the next.
struct SnfDecomposition {
    ExactMatrix u;
    ExactMatrix v;
    IntVec d;
};

// Elimination with gcd pivoting: repeatedly brings a least-magnitude nonzero
// entry (ties by lowest row, then column) to the pivot and clears its row and
// column, then fixes divisibility on adjacent diagonal pairs. Deterministic.
SnfDecomposition smith_normal_form(const ExactMatrix& m);

// Invariant factors as quotients of consecutive gcds of all i x i minors.
// Exponential-cost oracle; requires min(rows, cols) <= 5.
IntVec invariant_factors_via_minors(const ExactMatrix& m);

// Exact determinant by fraction-free (Bareiss) elimination with full
// pivoting.
Int determinant(const ExactMatrix& m);

// Square with determinant +1 or -1; false (not an error) for non-square.
bool is_unimodular(const ExactMatrix& m);

// Rank of the reduction mod p, p prime.
int p_rank(const ExactMatrix& m, int p);

// Rank over the rationals.
int rank_over_q(const ExactMatrix& m);

// Diagonal-form entries of build_w(t,k,v) for t <= k <= v-t: the value
// C(k-i, t-i) repeated C(v,i) - C(v,i-1) times, i = 0..t. Length C(v,t).
IntVec wilson_diagonal(int t, int k, int v);

}  // namespace incmat
