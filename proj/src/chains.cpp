#include "incmat/chains.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace incmat {

namespace {

void check_universe(int v, int cap) {
    if (v < 1) throw std::invalid_argument("universe size must be positive");
    if (v > cap) throw std::invalid_argument("universe size exceeds decomposition cap");
}

Chain grow_chain(SubsetWord min, int v) {
    Chain c;
    c.rank = min.size();
    int top_size = v - c.rank;
    c.members.push_back(std::move(min));
    while (c.members.back().size() < top_size)
        c.members.push_back(successor(c.members.back()));
    return c;
}

}  // namespace

Decomposition decompose(int v, int cap) {
    check_universe(v, cap);
    Decomposition d;
    d.v = v;
    d.kind = DecompositionKind::rank;
    for (int r = 0; 2 * r <= v; ++r)
        for (const SubsetWord& min : full_rank_subsets(v, r))
            d.chains.push_back(grow_chain(min, v));
    return d;
}

Decomposition complement_decompose(int v, int cap) {
    Decomposition d = decompose(v, cap);
    d.kind = DecompositionKind::complement;
    for (Chain& c : d.chains) {
        for (SubsetWord& m : c.members) m = m.complement(v);
        std::reverse(c.members.begin(), c.members.end());
    }
    std::sort(d.chains.begin(), d.chains.end(), [](const Chain& a, const Chain& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.members.front() < b.members.front();
    });
    return d;
}

Chain chain_of(const SubsetWord& f, int v) {
    if (v < 1) throw std::invalid_argument("universe size must be positive");
    if (!f.fits_universe(v)) throw std::invalid_argument("set does not fit in [v]");
    return grow_chain(chain_min(f), v);
}

std::map<int, long long> chain_census(int v) {
    if (v < 1) throw std::invalid_argument("universe size must be positive");
    std::map<int, long long> census;
    for (int r = 0; 2 * r <= v; ++r) {
        long long count = binomial(v, r) - binomial(v, r - 1);
        if (count > 0) census[r] = count;
    }
    return census;
}

std::string decomposition_to_json(const Decomposition& d) {
    nlohmann::json j;
    j["v"] = d.v;
    j["kind"] = d.kind == DecompositionKind::rank ? "rank" : "complement";
    j["chains"] = nlohmann::json::array();
    for (const Chain& c : d.chains) {
        nlohmann::json jc;
        jc["rank"] = c.rank;
        jc["members"] = nlohmann::json::array();
        for (const SubsetWord& m : c.members) jc["members"].push_back(m.str());
        j["chains"].push_back(std::move(jc));
    }
    return j.dump(2);
}

}  // namespace incmat
