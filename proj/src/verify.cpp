#include "incmat/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "incmat/chains.hpp"
#include "incmat/inclusion.hpp"
#include "incmat/snf.hpp"
#include "incmat/solver.hpp"
#include "incmat/subset.hpp"

namespace incmat {

namespace {

std::vector<SubsetWord> all_subsets(int v) {
    std::vector<SubsetWord> out;
    for (int k = 0; k <= v; ++k)
        for (SubsetWord& s : subsets_of_size(v, k)) out.push_back(std::move(s));
    return out;
}

// Reorders rows and columns canonically by label; compares labels too.
ExactMatrix sort_by_labels(const ExactMatrix& m) {
    std::vector<int> ridx(m.rows()), cidx(m.cols());
    std::iota(ridx.begin(), ridx.end(), 0);
    std::iota(cidx.begin(), cidx.end(), 0);
    const auto& rl = *m.row_labels;
    const auto& cl = *m.col_labels;
    std::sort(ridx.begin(), ridx.end(),
              [&](int a, int b) { return canonical_less(rl[a], rl[b]); });
    std::sort(cidx.begin(), cidx.end(),
              [&](int a, int b) { return canonical_less(cl[a], cl[b]); });
    ExactMatrix out(m.rows(), m.cols());
    out.row_labels.emplace();
    out.col_labels.emplace();
    for (int i = 0; i < m.rows(); ++i) out.row_labels->push_back(rl[ridx[i]]);
    for (int j = 0; j < m.cols(); ++j) out.col_labels->push_back(cl[cidx[j]]);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(ridx[i], cidx[j]);
    return out;
}

bool same_labeled_matrix(const ExactMatrix& a, const ExactMatrix& b) {
    return a == b && *a.row_labels == *b.row_labels && *a.col_labels == *b.col_labels;
}

std::string at_params(int v, int t = -1, int k = -1, int i = -1) {
    std::ostringstream out;
    out << "v=" << v;
    if (t >= 0) out << " t=" << t;
    if (k >= 0) out << " k=" << k;
    if (i >= 0) out << " i=" << i;
    return out.str();
}

using Detail = std::optional<std::string>;

Detail check_rank_oracle(int v_max) {
    for (int v = 1; v <= v_max; ++v)
        for (const SubsetWord& f : all_subsets(v))
            if (rank(f) != rank_via_walk(f, v))
                return "rank mismatch for {" + f.str() + "} " + at_params(v);
    return std::nullopt;
}

Detail check_round_trips(int v_max) {
    for (int v = 1; v <= v_max; ++v) {
        for (const SubsetWord& f : all_subsets(v)) {
            SubsetWord up = successor(f);
            if (rank(up) != rank(f)) return "successor changed rank of {" + f.str() + "}";
            auto down = predecessor(up);
            if (!down || *down != f) return "successor/predecessor round trip failed for {" + f.str() + "}";
            auto below = predecessor(f);
            if (below.has_value() != (rank(f) < f.size()))
                return "predecessor presence wrong for {" + f.str() + "}";
            if (below && successor(*below) != f)
                return "predecessor/successor round trip failed for {" + f.str() + "}";
            for (int m = 0; m <= f.size(); ++m)
                if (delete_rightmost_blanks(f, m) != jump(f, -m))
                    return "bulk deletion disagrees with iterated predecessor for {" + f.str() + "}";
        }
    }
    return std::nullopt;
}

Detail check_census(int v_max) {
    for (int v = 1; v <= v_max; ++v) {
        std::map<int, long long> counted;
        for (const Chain& c : decompose(v).chains) ++counted[c.rank];
        if (counted != chain_census(v)) return "census mismatch " + at_params(v);
    }
    return std::nullopt;
}

Detail check_decomposition(int v_max) {
    for (int v = 1; v <= v_max; ++v) {
        Decomposition d = decompose(v);
        std::set<SubsetWord> seen;
        for (const Chain& c : d.chains) {
            if (c.members.front().size() != c.rank || rank(c.members.front()) != c.rank)
                return "chain minimum is not full rank " + at_params(v);
            if (c.members.back().size() != v - c.rank)
                return "chain is not symmetric " + at_params(v);
            for (std::size_t m = 0; m < c.members.size(); ++m) {
                const SubsetWord& s = c.members[m];
                if (s.size() != c.rank + static_cast<int>(m)) return "chain skips a level " + at_params(v);
                if (rank(s) != c.rank) return "chain member rank differs " + at_params(v);
                if (m > 0 && successor(c.members[m - 1]) != s)
                    return "chain member is not the successor of the previous one " + at_params(v);
                if (!seen.insert(s).second) return "decomposition repeats a subset " + at_params(v);
            }
        }
        if (seen.size() != (1u << v)) return "decomposition misses subsets " + at_params(v);
        for (const Chain& c : d.chains)
            if (chain_of(c.members.back(), v) != c) return "chain_of disagrees " + at_params(v);
    }
    for (int v = 1; v < v_max; ++v) {
        Decomposition small = decompose(v), big = decompose(v + 1);
        std::map<SubsetWord, const Chain*> by_min;
        for (const Chain& c : big.chains) by_min[c.members.front()] = &c;
        for (const Chain& c : small.chains) {
            auto it = by_min.find(c.members.front());
            if (it == by_min.end()) return "chain minimum disappears at v+1 " + at_params(v);
            const Chain& ext = *it->second;
            if (ext.members.size() != c.members.size() + 1 ||
                !std::equal(c.members.begin(), c.members.end(), ext.members.begin()))
                return "chain is not a prefix of its extension " + at_params(v);
        }
    }
    return std::nullopt;
}

Detail check_complement_decomposition(int v_max) {
    for (int v = 1; v <= v_max; ++v) {
        Decomposition d = complement_decompose(v);
        std::set<SubsetWord> seen;
        for (const Chain& c : d.chains) {
            if (c.members.front().size() != c.rank) return "complement chain rank wrong " + at_params(v);
            if (c.members.back().size() != v - c.rank)
                return "complement chain not symmetric " + at_params(v);
            for (std::size_t m = 0; m < c.members.size(); ++m) {
                if (c.members[m].size() != c.rank + static_cast<int>(m))
                    return "complement chain skips a level " + at_params(v);
                if (m > 0 && !c.members[m - 1].subset_of(c.members[m]))
                    return "complement chain not nested " + at_params(v);
                if (!seen.insert(c.members[m]).second)
                    return "complement decomposition repeats a subset " + at_params(v);
            }
            for (const SubsetWord& s : c.members)
                if (underline_map(s, v) != c.members.back())
                    return "underline image is not the complement chain maximum " + at_params(v);
        }
        if (seen.size() != (1u << v)) return "complement decomposition misses subsets " + at_params(v);
    }
    return std::nullopt;
}

Detail check_identity_rw(int v_max) {
    for (int v = 1; v <= v_max; ++v)
        for (int t = 0; t <= v; ++t)
            for (int k = t; k <= v; ++k)
                for (int i = 0; i <= t; ++i) {
                    ExactMatrix lhs = build_r(i, t, v) * build_w(t, k, v);
                    ExactMatrix rhs = build_r(i, k, v).scaled(Int(binomial(k - i, t - i)));
                    if (!(lhs == rhs)) return "product identity fails " + at_params(v, t, k, i);
                }
    return std::nullopt;
}

Detail check_identity_wd(int v_max) {
    for (int v = 1; v <= v_max; ++v)
        for (int t = 0; t <= v; ++t)
            for (int k = t; k <= v; ++k) {
                ExactMatrix lhs = build_w_bar(t, t, v) * build_w(t, k, v);
                ExactMatrix rhs = build_d_bar(t, k, v) * build_w_bar(t, k, v);
                if (!(lhs == rhs)) return "diagonal identity fails " + at_params(v, t, k);
            }
    return std::nullopt;
}

Detail check_identity_wq2(int v_max) {
    for (int v = 1; v <= v_max; ++v)
        for (int t = 0; t <= v; ++t)
            for (int k = t; k <= v - t; ++k) {
                ExactMatrix lhs = build_w(t, k, v) * build_w_under(k, k, v);
                ExactMatrix rhs = build_w_under(t, k, v) * build_d_under(t, k, v);
                if (!(lhs == rhs)) return "underline identity fails " + at_params(v, t, k);
            }
    return std::nullopt;
}

Detail check_transpose_identity(int v_max) {
    for (int v = 1; v <= v_max; ++v)
        for (int t = 0; t <= v; ++t) {
            ExactMatrix lhs = sort_by_labels(build_w_under(t, t, v));
            ExactMatrix rt = build_w_bar(std::min(t, v - t), v - t, v).transpose();
            for (SubsetWord& s : *rt.row_labels) s = s.complement(v);
            for (SubsetWord& s : *rt.col_labels) s = s.complement(v);
            if (!same_labeled_matrix(lhs, sort_by_labels(rt)))
                return "transpose identity fails " + at_params(v, t);
        }
    return std::nullopt;
}

bool all_ones(const IntVec& d, long long n) {
    if (static_cast<long long>(d.size()) != n) return false;
    for (const Int& x : d)
        if (x != 1) return false;
    return true;
}

Detail check_snf_bar(int v_max) {
    for (int v = 1; v <= v_max; ++v)
        for (int t = 0; t <= v - t; ++t)
            for (int k = t; k <= v - t; ++k)
                if (!all_ones(smith_normal_form(build_w_bar(t, k, v)).d, binomial(v, t)))
                    return "rank-compressed matrix has nontrivial factors " + at_params(v, t, k);
    return std::nullopt;
}

Detail check_snf_under(int v_max) {
    for (int v = 1; v <= v_max; ++v)
        for (int t = 0; t <= v - t; ++t)
            for (int k = t; k <= v - t; ++k)
                if (!all_ones(smith_normal_form(build_w_under(t, k, v)).d, binomial(v, t)))
                    return "underline matrix has nontrivial factors " + at_params(v, t, k);
    return std::nullopt;
}

Detail check_p_rank(int v_max) {
    for (int v = 1; v <= v_max; ++v)
        for (int t = 0; t <= v - t; ++t)
            for (int k = t; k <= v - t; ++k)
                for (int p : {2, 3, 5, 7})
                    if (p_rank(build_w_bar(t, k, v), p) != binomial(v, t))
                        return "p-rank drops " + at_params(v, t, k) + " p=" + std::to_string(p);
    return std::nullopt;
}

Detail check_wilson(int v_max) {
    for (int v = 1; v <= v_max; ++v)
        for (int t = 0; t <= v - t; ++t)
            for (int k = t; k <= v - t; ++k) {
                IntVec got = smith_normal_form(build_w(t, k, v)).d;
                IntVec want = smith_normal_form(ExactMatrix::diagonal(wilson_diagonal(t, k, v))).d;
                if (got != want) return "diagonal form mismatch " + at_params(v, t, k);
            }
    return std::nullopt;
}

Detail check_unimodular(int v_max) {
    for (int v = 1; v <= v_max; ++v) {
        for (int t = 0; t <= v; ++t)
            if (!is_unimodular(build_w_bar(t, t, v)))
                return "square rank-compressed matrix not unimodular " + at_params(v, t);
        for (int t = 0; t <= v - t; ++t)
            for (int k = t; k <= v - t; ++k)
                if (!is_unimodular(select_a(t, k, v)))
                    return "selected submatrix not unimodular " + at_params(v, t, k);
    }
    return std::nullopt;
}

Detail check_solver(int v_max) {
    std::mt19937 rng(0x5eed1);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int v = 1; v <= v_max; ++v)
        for (int t = 0; t <= v - t; ++t)
            for (int k = t; k <= v - t; ++k) {
                const ExactMatrix& w = cached_w(t, k, v);
                for (long long lambda = 1; lambda <= 6; ++lambda) {
                    bool divisible = true;
                    for (int i = 0; i <= t; ++i)
                        if ((lambda * binomial(v - i, t - i)) % binomial(k - i, t - i) != 0)
                            divisible = false;
                    SolveReport rep = signed_design(t, k, v, Int(lambda));
                    if (rep.feasible != divisible)
                        return "feasibility disagrees with divisibility " + at_params(v, t, k) +
                               " lambda=" + std::to_string(lambda);
                    if (rep.feasible) {
                        IntVec b(binomial(v, t), Int(lambda));
                        if (!verify_solution(t, k, v, *rep.witness, b))
                            return "witness fails " + at_params(v, t, k);
                    } else if (!rep.violated_levels || rep.violated_levels->empty()) {
                        return "infeasible report lacks violated levels " + at_params(v, t, k);
                    }
                }
                for (int trial = 0; trial < 5; ++trial) {
                    IntVec x0(w.cols());
                    for (Int& e : x0) e = entry(rng);
                    IntVec b = w.apply(x0);
                    SolveReport rep = solve_integral(t, k, v, b);
                    if (!rep.feasible || !verify_solution(t, k, v, *rep.witness, b))
                        return "round trip fails " + at_params(v, t, k);
                }
            }
    return std::nullopt;
}

Detail check_h_equivalence(int v_max) {
    std::mt19937 rng(0x5eed2);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_int_distribution<int> lam(1, 4);
    for (int v = 1; v <= v_max; ++v)
        for (int t = 0; t <= v - t; ++t)
            for (int k = t; k <= v - t; ++k) {
                const ExactMatrix& w = cached_w(t, k, v);
                const ExactMatrix& wbar = cached_w_bar(t, k, v);
                RatVec h = h_vector(t, k, v);
                auto equivalent = [&](const IntVec& x, const Int& lambda) {
                    IntVec wx = w.apply(x);
                    bool lhs = std::all_of(wx.begin(), wx.end(),
                                           [&](const Int& e) { return e == lambda; });
                    IntVec bx = wbar.apply(x);
                    bool rhs = true;
                    for (std::size_t r = 0; r < bx.size(); ++r)
                        if (Rat(bx[r]) != Rat(lambda) * h[r]) rhs = false;
                    return lhs == rhs;
                };
                for (int trial = 0; trial < 10; ++trial) {
                    IntVec x(w.cols());
                    for (Int& e : x) e = entry(rng);
                    if (!equivalent(x, Int(lam(rng))))
                        return "h-vector equivalence fails on random input " + at_params(v, t, k);
                }
                SolveReport rep = signed_design(t, k, v, Int(2));
                if (rep.feasible) {
                    if (!equivalent(*rep.witness, Int(2)))
                        return "h-vector equivalence fails on a witness " + at_params(v, t, k);
                    IntVec bent = *rep.witness;
                    bent[0] += 1;
                    if (!equivalent(bent, Int(2)))
                        return "h-vector equivalence fails on a perturbed witness " + at_params(v, t, k);
                }
            }
    return std::nullopt;
}

}  // namespace

std::vector<CheckResult> run_verification(int v_max) {
    if (v_max < 1 || v_max > 14)
        throw std::invalid_argument("verification universe bound must be in 1..14");
    std::vector<std::pair<std::string, Detail (*)(int)>> checks = {
        {"rank-oracle-agreement", check_rank_oracle},
        {"successor-predecessor-round-trips", check_round_trips},
        {"chain-census", check_census},
        {"rank-decomposition", check_decomposition},
        {"complement-decomposition", check_complement_decomposition},
        {"restriction-product-identity", check_identity_rw},
        {"diagonal-compression-identity", check_identity_wd},
        {"underline-block-identity", check_identity_wq2},
        {"underline-transpose-identity", check_transpose_identity},
        {"rank-compressed-trivial-factors", check_snf_bar},
        {"underline-trivial-factors", check_snf_under},
        {"p-rank-full", check_p_rank},
        {"diagonal-form", check_wilson},
        {"unimodular-submatrices", check_unimodular},
        {"solver-divisibility", check_solver},
        {"h-vector-equivalence", check_h_equivalence},
    };
    std::vector<CheckResult> results;
    for (auto& [name, fn] : checks) {
        Detail detail = fn(v_max);
        results.push_back({name, !detail.has_value(), detail.value_or("")});
    }
    return results;
}

}  // namespace incmat
