#include "incmat/inclusion.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace incmat {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

ExactMatrix inclusion_matrix(std::vector<SubsetWord> row_sets, std::vector<SubsetWord> col_sets) {
    ExactMatrix m(static_cast<int>(row_sets.size()), static_cast<int>(col_sets.size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (row_sets[i].subset_of(col_sets[j])) m.at(i, j) = 1;
    m.row_labels = std::move(row_sets);
    m.col_labels = std::move(col_sets);
    return m;
}

// Chain minima whose chain passes through level t: full-rank i-subsets for
// i = 0 .. min(t, v-t), in block order.
std::vector<SubsetWord> minima_through_level(int t, int v) {
    std::vector<SubsetWord> out;
    for (int i = 0; i <= std::min(t, v - t); ++i)
        for (SubsetWord& s : full_rank_subsets(v, i)) out.push_back(std::move(s));
    return out;
}

// Underline images of the k-subsets of [v], sorted by cardinality then
// lexicographically. The map is injective, so sizes match C(v,k).
std::vector<SubsetWord> underline_images(int k, int v) {
    std::vector<SubsetWord> out;
    for (const SubsetWord& K : subsets_of_size(v, k)) out.push_back(underline_map(K, v));
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace

ExactMatrix build_w(int t, int k, int v) {
    require(0 <= t && t <= k && k <= v, "build_w requires 0 <= t <= k <= v");
    return inclusion_matrix(subsets_of_size(v, t), subsets_of_size(v, k));
}

ExactMatrix build_r(int i, int t, int v) {
    require(0 <= i && i <= t && t <= v, "build_r requires 0 <= i <= t <= v");
    return inclusion_matrix(full_rank_subsets(v, i), subsets_of_size(v, t));
}

ExactMatrix build_w_bar(int t, int k, int v) {
    require(0 <= t && t <= k && k <= v, "build_w_bar requires 0 <= t <= k <= v");
    return inclusion_matrix(minima_through_level(t, v), subsets_of_size(v, k));
}

ExactMatrix build_d_bar(int t, int k, int v) {
    require(0 <= t && t <= k && k <= v, "build_d_bar requires 0 <= t <= k <= v");
    IntVec d;
    std::vector<SubsetWord> rows = minima_through_level(t, v);
    d.reserve(rows.size());
    for (const SubsetWord& s : rows) d.emplace_back(binomial(k - s.size(), t - s.size()));
    ExactMatrix m = ExactMatrix::diagonal(d);
    m.col_labels = rows;
    m.row_labels = std::move(rows);
    return m;
}

ExactMatrix build_w_under(int t, int k, int v) {
    require(0 <= t && t <= k && k <= v, "build_w_under requires 0 <= t <= k <= v");
    return inclusion_matrix(subsets_of_size(v, t), underline_images(k, v));
}

ExactMatrix build_q(int t, int j, int v, int k) {
    require(0 <= t && t <= k && k <= v, "build_q requires 0 <= t <= k <= v");
    require(j >= std::max(k, v - k) && j <= v, "build_q requires max(k, v-k) <= j <= v");
    std::vector<SubsetWord> cols;
    for (SubsetWord& s : underline_images(k, v))
        if (s.size() == j) cols.push_back(std::move(s));
    return inclusion_matrix(subsets_of_size(v, t), std::move(cols));
}

ExactMatrix build_d_under(int t, int k, int v) {
    require(0 <= t && t <= k && k <= v, "build_d_under requires 0 <= t <= k <= v");
    IntVec d;
    std::vector<SubsetWord> cols = underline_images(k, v);
    d.reserve(cols.size());
    for (const SubsetWord& s : cols) d.emplace_back(binomial(s.size() - t, k - t));
    ExactMatrix m = ExactMatrix::diagonal(d);
    m.row_labels = cols;
    m.col_labels = std::move(cols);
    return m;
}

ExactMatrix select_a(int t, int k, int v) {
    require(0 <= t && t <= k && k <= v - t, "select_a requires 0 <= t <= k <= v-t");
    ExactMatrix wbar = build_w_bar(t, k, v);
    std::vector<int> idx;
    const auto& cols = *wbar.col_labels;
    for (int j = 0; j < wbar.cols(); ++j)
        if (rank(cols[j]) <= t) idx.push_back(j);
    if (static_cast<int>(idx.size()) != wbar.rows())
        throw std::logic_error("select_a: unexpected low-rank column count");
    return wbar.select_columns(idx);
}

RatVec h_vector(int t, int k, int v) {
    require(0 <= t && t <= k && k <= v, "h_vector requires 0 <= t <= k <= v");
    RatVec h;
    for (const SubsetWord& s : minima_through_level(t, v)) {
        int i = s.size();
        h.emplace_back(Int(binomial(v - i, t - i)), Int(binomial(k - i, t - i)));
    }
    return h;
}

ExactMatrix matrix_from_decomposition(const Decomposition& d, int t, int k) {
    int v = d.v;
    require(v >= 1 && v <= kDefaultDecomposeCap, "decomposition universe out of range");
    require(0 <= t && t <= k && k <= v - t,
            "matrix_from_decomposition requires 0 <= t <= k <= v-t");
    std::map<SubsetWord, const Chain*> owner;
    long long member_count = 0;
    for (const Chain& c : d.chains) {
        require(!c.members.empty(), "decomposition contains an empty chain");
        int lo = c.members.front().size();
        int hi = c.members.back().size();
        require(lo + hi == v, "chain is not symmetric around v/2");
        for (std::size_t m = 0; m < c.members.size(); ++m) {
            const SubsetWord& s = c.members[m];
            require(s.fits_universe(v), "chain member outside [v]");
            require(s.size() == lo + static_cast<int>(m), "chain skips a cardinality level");
            require(owner.emplace(s, &c).second, "decomposition repeats a subset");
            ++member_count;
        }
    }
    require(member_count == (1LL << v), "decomposition does not cover all subsets");

    std::vector<SubsetWord> rows;
    for (const SubsetWord& T : subsets_of_size(v, t))
        rows.push_back(owner.at(T)->members.front());
    std::sort(rows.begin(), rows.end(), canonical_less);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return inclusion_matrix(std::move(rows), subsets_of_size(v, k));
}

ExactMatrix build_w_mixed(int t, int k, int v, int m) {
    require(0 <= t && t <= k && k <= v, "build_w_mixed requires 0 <= t <= k <= v");
    require(0 <= m && m <= t, "build_w_mixed requires 0 <= m <= t");
    std::vector<SubsetWord> rows;
    for (const SubsetWord& T : subsets_of_size(v, t)) {
        if (rank(T) <= t - m)
            rows.push_back(*jump(T, -m));
        else
            rows.push_back(chain_min(T));
    }
    std::sort(rows.begin(), rows.end(), canonical_less);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return inclusion_matrix(std::move(rows), subsets_of_size(v, k));
}

}  // namespace incmat
