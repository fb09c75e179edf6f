#pragma once

#include <map>
#include <string>
#include <vector>

#include "incmat/subset.hpp"

namespace incmat {

// Saturated chain in the subset lattice of [v], stored bottom-up. For a rank
// decomposition the members run from the full-rank chain minimum (size equal
// to rank) up to the chain maximum (size v - rank), consecutive members
// differing by the successor step.
struct Chain {
    int rank = 0;
    std::vector<SubsetWord> members;

    bool operator==(const Chain&) const = default;
};

enum class DecompositionKind { rank, complement };

struct Decomposition {
    int v = 0;
    DecompositionKind kind = DecompositionKind::rank;
    std::vector<Chain> chains;
};

inline constexpr int kDefaultDecomposeCap = 20;

// Partition of all 2^v subsets of [v] into symmetric skipless chains, one per
// full-rank subset of size at most v/2. Chains are listed by ascending rank,
// then lexicographically by chain minimum. Memory is on the order of 2^v * v,
// so v is capped (default 20).
Decomposition decompose(int v, int cap = kDefaultDecomposeCap);

// Element-wise complements of the rank decomposition's chains, member order
// reversed so cardinality still increases. The stored rank is the rank of the
// originating chain, which equals the size of the smallest member.
Decomposition complement_decompose(int v, int cap = kDefaultDecomposeCap);

// The chain of the rank decomposition of [v] containing f, built directly
// from chain_min by repeated successor steps; no full enumeration.
Chain chain_of(const SubsetWord& f, int v);

// Number of chains of each rank r: C(v,r) - C(v,r-1), for ranks with a
// positive count.
std::map<int, long long> chain_census(int v);

// {"v": ..., "kind": "rank"|"complement", "chains": [{"rank": r,
//  "members": ["", "1", ...]}]} rendered with two-space indentation.
std::string decomposition_to_json(const Decomposition& d);

}  // namespace incmat
