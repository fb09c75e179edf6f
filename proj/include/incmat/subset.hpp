#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace incmat {

// Finite set of positive integers, kept as a strictly increasing sequence.
// Comparison is lexicographic on the element sequence, which is the canonical
// order used for all matrix row/column label families of a fixed size.
class SubsetWord {
public:
    SubsetWord() = default;
    explicit SubsetWord(std::vector<int> elems);

    // Parses a comma separated list of positive integers ("2,3,7,8").
    // The empty string denotes the empty set. Rejects non-numeric tokens,
    // non-positive values, and out-of-order or repeated elements.
    static SubsetWord parse(std::string_view text);

    const std::vector<int>& elements() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    int max_element() const { return elems_.empty() ? 0 : elems_.back(); }

    bool contains(int x) const;
    bool subset_of(const SubsetWord& other) const;
    bool fits_universe(int v) const { return max_element() <= v; }

    SubsetWord with(int x) const;     // insert x (must be absent)
    SubsetWord without(int x) const;  // erase x (must be present)
    SubsetWord complement(int v) const;

    // "2,3,7,8"; empty string for the empty set.
    std::string str() const;

    auto operator<=>(const SubsetWord&) const = default;

private:
    std::vector<int> elems_;
};

// Orders labels by cardinality first, then lexicographically. Families of
// equal-size labels reduce to the plain lexicographic (operator<) order.
bool canonical_less(const SubsetWord& a, const SubsetWord& b);

// Two-row array attached to a set: the top row lists the elements in
// increasing order, the bottom row pairs each element a_i with the largest
// positive integer below a_i not used by the set or by earlier bottom
// entries; when no such integer exists the cell holds a blank marker,
// rendered as "j" in text form.
struct Tableau {
    std::vector<int> top;
    std::vector<std::optional<int>> bottom;  // nullopt = blank

    int filled_count() const;

    // Two lines, entries space separated, blanks as "j". An empty tableau
    // serializes as two empty lines.
    std::string str() const;
};

Tableau tableau(const SubsetWord& f);

// Number of filled bottom cells of tableau(f). Independent of any universe.
int rank(const SubsetWord& f);

// Rank computed from the lattice path of f inside [v]: the path takes an up
// step at i in f and a right step otherwise, and the rank is |f| minus the
// largest b such that the line y = x + b touches the path. Agrees with
// rank() for every v >= max element.
int rank_via_walk(const SubsetWord& f, int v);

// Adds the least positive integer that appears in neither row of the
// tableau. Preserves rank.
SubsetWord successor(const SubsetWord& f);

// Removes the top-row element sitting above the rightmost blank. Absent
// exactly when f has full rank (no blanks).
std::optional<SubsetWord> predecessor(const SubsetWord& f);

// m-fold successor (m >= 0) or |m|-fold predecessor (m < 0). Downward jumps
// are absent when they would pass below the chain minimum.
std::optional<SubsetWord> jump(const SubsetWord& f, int m);

// Removes, in one shot, the top-row elements above the m rightmost blanks.
// Equivalent to jump(f, -m). Absent when fewer than m blanks exist.
std::optional<SubsetWord> delete_rightmost_blanks(const SubsetWord& f, int m);

// Iterated predecessor down to the unique full-rank set in the same chain.
SubsetWord chain_min(const SubsetWord& f);

// Iterated successor inside [v] up to cardinality v - rank(f).
SubsetWord chain_max(const SubsetWord& f, int v);

// Complement of the chain minimum of the complement: [v] \ chain_min([v]\k).
// Equals the largest member of the complement chain through k.
SubsetWord underline_map(const SubsetWord& k, int v);

// C(n, k) with C(n, k) = 0 for k < 0 or k > n. Exact for the sizes this
// library works at (n <= 62).
long long binomial(int n, int k);

// All k-subsets of [v] in lexicographic order of element sequences.
std::vector<SubsetWord> subsets_of_size(int v, int k);

// All size-k subsets of [v] whose rank equals k, lexicographic order. These
// are exactly the sets whose lattice path never rises above the diagonal.
std::vector<SubsetWord> full_rank_subsets(int v, int k);

}  // namespace incmat
