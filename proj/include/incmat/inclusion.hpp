#pragma once

#include "incmat/chains.hpp"
#include "incmat/exact_matrix.hpp"
#include "incmat/subset.hpp"

namespace incmat {

// All builders label rows and columns with the indexing subsets. Fixed-size
// index families are listed lexicographically; mixed-size families ascend by
// cardinality first (blocks), lexicographically inside each block.

// Inclusion matrix of t-subsets against k-subsets of [v]: entry (T, K) is 1
// when T is contained in K. C(v,t) x C(v,k).
ExactMatrix build_w(int t, int k, int v);

// Rows restricted to the full-rank i-subsets of [v]; columns all t-subsets.
ExactMatrix build_r(int i, int t, int v);

// Rank-compressed variant of build_w(t,k,v): each row index T is replaced by
// its chain minimum. Equivalently the blocks build_r(i,k,v) stacked for all
// i such that a rank-i chain passes through level t, i.e. i <= min(t, v-t).
// Square of order C(v,t) when k = t, and unimodular.
ExactMatrix build_w_bar(int t, int k, int v);

// Diagonal companion of build_w_bar: entry C(k-i, t-i) for each block-i row.
ExactMatrix build_d_bar(int t, int k, int v);

// Rank-compressed variant of build_w(t,k,v) on the column side: each column
// index K is replaced by its underline image [v] \ chain_min([v]\K). Columns
// are grouped by image cardinality j = max(k, v-k) .. v.
ExactMatrix build_w_under(int t, int k, int v);

// The size-j column block of build_w_under(t,k,v).
ExactMatrix build_q(int t, int j, int v, int k);

// Diagonal companion of build_w_under: entry C(j-t, k-t) for each size-j
// column.
ExactMatrix build_d_under(int t, int k, int v);

// The square submatrix of build_w_bar(t,k,v) on the columns whose k-subset
// label has rank at most t. Requires t <= k <= v-t; order C(v,t); unimodular.
ExactMatrix select_a(int t, int k, int v);

// Right-hand side profile for constant systems: entry C(v-i,t-i)/C(k-i,t-i)
// for each block-i row of build_w_bar.
RatVec h_vector(int t, int k, int v);

// Rows indexed by the first members of the given decomposition's chains
// through level t, sorted canonically; inclusion entries against all
// k-subsets. The input must partition 2^[v] into symmetric skipless chains
// (consecutive cardinalities r .. v-r); members are not required to be
// nested, which admits non-chain groupings used as counterexample fixtures.
ExactMatrix matrix_from_decomposition(const Decomposition& d, int t, int k);

// Interpolates between build_w and build_w_bar: each row index T of rank at
// most t-m drops to jump(T, -m), every other row index drops to its chain
// minimum; duplicate labels would collapse (the map is in fact injective).
// m = 0 gives build_w(t,k,v), m = t gives build_w_bar(t,k,v).
ExactMatrix build_w_mixed(int t, int k, int v, int m);

}  // namespace incmat
