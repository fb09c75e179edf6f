#include "incmat/solver.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "incmat/inclusion.hpp"

namespace incmat {

namespace {

void check_params(int t, int k, int v) {
    if (!(0 <= t && t <= k && k <= v - t))
        throw std::invalid_argument("solver requires 0 <= t <= k <= v-t");
}

void check_length(const IntVec& x, long long want, const char* what) {
    if (static_cast<long long>(x.size()) != want)
        throw std::invalid_argument(std::string(what) + " has the wrong length");
}

using Key = std::tuple<int, int, int>;

template <typename Build>
const ExactMatrix& cached(std::map<Key, std::unique_ptr<const ExactMatrix>>& store, Key key,
                          Build&& build) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = store.find(key);
    if (it == store.end())
        it = store.emplace(key, std::make_unique<const ExactMatrix>(build())).first;
    return *it->second;
}

// Solves the square system a * y = rhs exactly by rational Gaussian
// elimination with partial pivoting.
RatVec solve_square_rational(const ExactMatrix& a, const RatVec& rhs) {
    int n = a.rows();
    std::vector<RatVec> rows(n, RatVec(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[i][j] = Rat(a.at(i, j));
        rows[i][n] = rhs[i];
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (rows[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::logic_error("singular system");
        std::swap(rows[col], rows[pivot]);
        for (int i = col + 1; i < n; ++i) {
            if (rows[i][col] == 0) continue;
            Rat f = rows[i][col] / rows[col][col];
            for (int j = col; j <= n; ++j) rows[i][j] -= f * rows[col][j];
        }
    }
    RatVec y(n);
    for (int col = n - 1; col >= 0; --col) {
        Rat acc = rows[col][n];
        for (int j = col + 1; j < n; ++j) acc -= rows[col][j] * y[j];
        y[col] = acc / rows[col][col];
    }
    return y;
}

}  // namespace

const ExactMatrix& cached_w(int t, int k, int v) {
    static std::map<Key, std::unique_ptr<const ExactMatrix>> store;
    return cached(store, Key{t, k, v}, [&] { return build_w(t, k, v); });
}

const ExactMatrix& cached_w_bar(int t, int k, int v) {
    static std::map<Key, std::unique_ptr<const ExactMatrix>> store;
    return cached(store, Key{t, k, v}, [&] { return build_w_bar(t, k, v); });
}

const ExactMatrix& cached_select_a(int t, int k, int v) {
    static std::map<Key, std::unique_ptr<const ExactMatrix>> store;
    return cached(store, Key{t, k, v}, [&] { return select_a(t, k, v); });
}

const std::vector<int>& witness_support(int t, int k, int v) {
    check_params(t, k, v);
    static std::mutex mu;
    static std::map<Key, std::vector<int>> store;
    std::lock_guard<std::mutex> lock(mu);
    auto it = store.find(Key{t, k, v});
    if (it == store.end()) {
        std::vector<int> idx;
        std::vector<SubsetWord> ksets = subsets_of_size(v, k);
        for (int j = 0; j < static_cast<int>(ksets.size()); ++j)
            if (rank(ksets[j]) <= t) idx.push_back(j);
        it = store.emplace(Key{t, k, v}, std::move(idx)).first;
    }
    return it->second;
}

RatVec reduce_rhs(int t, int k, int v, const IntVec& b) {
    check_params(t, k, v);
    check_length(b, binomial(v, t), "right-hand side");
    const ExactMatrix& wbar_tt = cached_w_bar(t, t, v);
    IntVec compressed = wbar_tt.apply(b);
    const auto& labels = *wbar_tt.row_labels;
    RatVec out;
    out.reserve(compressed.size());
    for (std::size_t r = 0; r < compressed.size(); ++r) {
        int i = labels[r].size();
        out.emplace_back(compressed[r], Int(binomial(k - i, t - i)));
    }
    return out;
}

SolveReport divisibility_check(int t, int k, int v, const IntVec& b) {
    SolveReport report;
    report.b_prime = reduce_rhs(t, k, v, b);
    std::vector<int> violated;
    const auto& labels = *cached_w_bar(t, t, v).row_labels;
    for (std::size_t r = 0; r < report.b_prime.size(); ++r) {
        if (denominator(report.b_prime[r]) == 1) continue;
        int level = labels[r].size();
        if (violated.empty() || violated.back() != level) violated.push_back(level);
    }
    report.feasible = violated.empty();
    if (!violated.empty()) report.violated_levels = std::move(violated);
    return report;
}

SolveReport solve_integral(int t, int k, int v, const IntVec& b) {
    SolveReport report = divisibility_check(t, k, v, b);
    if (!report.feasible) return report;
    const ExactMatrix& a = cached_select_a(t, k, v);
    RatVec y = solve_square_rational(a, report.b_prime);
    const std::vector<int>& support = witness_support(t, k, v);
    IntVec x(binomial(v, k), Int(0));
    for (std::size_t r = 0; r < y.size(); ++r) {
        if (denominator(y[r]) != 1)
            throw std::logic_error("witness is not integral despite feasibility");
        x[support[r]] = numerator(y[r]);
    }
    if (!verify_solution(t, k, v, x, b))
        throw std::logic_error("witness fails verification");
    report.witness = std::move(x);
    return report;
}

SolveReport signed_design(int t, int k, int v, const Int& lambda) {
    check_params(t, k, v);
    IntVec b(binomial(v, t), lambda);
    return solve_integral(t, k, v, b);
}

bool verify_solution(int t, int k, int v, const IntVec& x, const IntVec& b) {
    check_params(t, k, v);
    check_length(x, binomial(v, k), "solution vector");
    check_length(b, binomial(v, t), "right-hand side");
    return cached_w(t, k, v).apply(x) == b;
}

}  // namespace incmat
