#pragma once

#include <optional>
#include <vector>

#include "incmat/exact_matrix.hpp"

namespace incmat {

// Outcome of a feasibility or solve call for the system W * x = b, where W
// is the t-vs-k inclusion matrix of [v]. Exactly one of witness /
// violated_levels is present once a full solve ran; a plain divisibility
// check leaves witness unset even when feasible.
struct SolveReport {
    bool feasible = false;
    std::optional<IntVec> witness;                  // indexed by the k-subsets of [v]
    std::optional<std::vector<int>> violated_levels;
    RatVec b_prime;                                 // compressed right-hand side
};

// b compressed through the rank-compressed square system: entry for the
// block-i row s is (row s of build_w_bar(t,t,v) applied to b) / C(k-i,t-i).
// Integral exactly when the system is solvable in integers.
RatVec reduce_rhs(int t, int k, int v, const IntVec& b);

// Feasibility by block divisibility: level i fails when C(k-i,t-i) does not
// divide every entry of build_r(i,t,v) * b. Reports every violated level.
SolveReport divisibility_check(int t, int k, int v, const IntVec& b);

// Full decision procedure: when feasible, returns the witness supported on
// the C(v,t) columns of select_a(t,k,v), obtained by solving that unimodular
// square system exactly and padding with zeros.
SolveReport solve_integral(int t, int k, int v, const IntVec& b);

// solve_integral with the constant right-hand side lambda * 1.
SolveReport signed_design(int t, int k, int v, const Int& lambda);

// Checks build_w(t,k,v) * x = b by exact multiplication.
bool verify_solution(int t, int k, int v, const IntVec& x, const IntVec& b);

// Positions (in the lexicographic k-subset order) of the columns kept by
// select_a(t,k,v): the k-subsets of rank at most t.
const std::vector<int>& witness_support(int t, int k, int v);

// Shared immutable matrix cache, keyed by (t, k, v).
const ExactMatrix& cached_w(int t, int k, int v);
const ExactMatrix& cached_w_bar(int t, int k, int v);
const ExactMatrix& cached_select_a(int t, int k, int v);

}  // namespace incmat
