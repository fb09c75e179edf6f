#include "incmat/subset.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace incmat {

SubsetWord::SubsetWord(std::vector<int> elems) : elems_(std::move(elems)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 1)
            throw std::invalid_argument("subset elements must be positive");
        if (i > 0 && elems_[i] <= elems_[i - 1])
            throw std::invalid_argument("subset elements must be strictly increasing");
    }
}

SubsetWord SubsetWord::parse(std::string_view text) {
    std::vector<int> elems;
    if (text.empty()) return SubsetWord{};
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad subset token '" + std::string(tok) + "'");
        elems.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return SubsetWord{std::move(elems)};
}

bool SubsetWord::contains(int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool SubsetWord::subset_of(const SubsetWord& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

SubsetWord SubsetWord::with(int x) const {
    if (contains(x)) throw std::invalid_argument("element already present");
    std::vector<int> out = elems_;
    out.insert(std::upper_bound(out.begin(), out.end(), x), x);
    return SubsetWord{std::move(out)};
}

SubsetWord SubsetWord::without(int x) const {
    if (!contains(x)) throw std::invalid_argument("element not present");
    std::vector<int> out = elems_;
    out.erase(std::find(out.begin(), out.end(), x));
    return SubsetWord{std::move(out)};
}

SubsetWord SubsetWord::complement(int v) const {
    if (!fits_universe(v)) throw std::invalid_argument("set does not fit in [v]");
    std::vector<int> out;
    out.reserve(v - size());
    for (int x = 1; x <= v; ++x)
        if (!contains(x)) out.push_back(x);
    return SubsetWord{std::move(out)};
}

std::string SubsetWord::str() const {
    std::string out;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(elems_[i]);
    }
    return out;
}

bool canonical_less(const SubsetWord& a, const SubsetWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

int Tableau::filled_count() const {
    int n = 0;
    for (const auto& cell : bottom)
        if (cell.has_value()) ++n;
    return n;
}

std::string Tableau::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < top.size(); ++i) {
        if (i > 0) out << ' ';
        out << top[i];
    }
    out << '\n';
    for (std::size_t i = 0; i < bottom.size(); ++i) {
        if (i > 0) out << ' ';
        if (bottom[i].has_value())
            out << *bottom[i];
        else
            out << 'j';
    }
    return out.str();
}

Tableau tableau(const SubsetWord& f) {
    const auto& a = f.elements();
    Tableau t;
    t.top = a;
    t.bottom.reserve(a.size());
    std::set<int> used(a.begin(), a.end());
    for (int ai : a) {
        std::optional<int> cell;
        for (int x = ai - 1; x >= 1; --x) {
            if (!used.count(x)) {
                cell = x;
                used.insert(x);
                break;
            }
        }
        t.bottom.push_back(cell);
    }
    return t;
}

int rank(const SubsetWord& f) { return tableau(f).filled_count(); }

int rank_via_walk(const SubsetWord& f, int v) {
    if (v < 1) throw std::invalid_argument("universe size must be positive");
    if (!f.fits_universe(v)) throw std::invalid_argument("set does not fit in [v]");
    int best = 0, height = 0;
    for (int i = 1; i <= v; ++i) {
        height += f.contains(i) ? 1 : -1;
        best = std::max(best, height);
    }
    return f.size() - best;
}

SubsetWord successor(const SubsetWord& f) {
    Tableau t = tableau(f);
    std::set<int> used(t.top.begin(), t.top.end());
    for (const auto& cell : t.bottom)
        if (cell.has_value()) used.insert(*cell);
    int a = 1;
    while (used.count(a)) ++a;
    return f.with(a);
}

std::optional<SubsetWord> predecessor(const SubsetWord& f) {
    Tableau t = tableau(f);
    for (int i = static_cast<int>(t.bottom.size()) - 1; i >= 0; --i)
        if (!t.bottom[i].has_value()) return f.without(t.top[i]);
    return std::nullopt;
}

std::optional<SubsetWord> jump(const SubsetWord& f, int m) {
    SubsetWord cur = f;
    for (; m > 0; --m) cur = successor(cur);
    for (; m < 0; ++m) {
        auto prev = predecessor(cur);
        if (!prev) return std::nullopt;
        cur = *prev;
    }
    return cur;
}

std::optional<SubsetWord> delete_rightmost_blanks(const SubsetWord& f, int m) {
    if (m < 0) throw std::invalid_argument("blank count must be nonnegative");
    Tableau t = tableau(f);
    std::vector<int> doomed;
    for (int i = static_cast<int>(t.bottom.size()) - 1; i >= 0 && static_cast<int>(doomed.size()) < m; --i)
        if (!t.bottom[i].has_value()) doomed.push_back(t.top[i]);
    if (static_cast<int>(doomed.size()) < m) return std::nullopt;
    SubsetWord cur = f;
    for (int x : doomed) cur = cur.without(x);
    return cur;
}

SubsetWord chain_min(const SubsetWord& f) {
    SubsetWord cur = f;
    int steps = f.size() - rank(f);
    for (int s = 0; s < steps; ++s) cur = *predecessor(cur);
    return cur;
}

SubsetWord chain_max(const SubsetWord& f, int v) {
    if (v < 1) throw std::invalid_argument("universe size must be positive");
    if (!f.fits_universe(v)) throw std::invalid_argument("set does not fit in [v]");
    SubsetWord cur = f;
    int target = v - rank(f);
    while (cur.size() < target) cur = successor(cur);
    return cur;
}

SubsetWord underline_map(const SubsetWord& k, int v) {
    if (v < 1) throw std::invalid_argument("universe size must be positive");
    if (!k.fits_universe(v)) throw std::invalid_argument("set does not fit in [v]");
    return chain_min(k.complement(v)).complement(v);
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (int i = 1; i <= k; ++i) {
        __int128 wide = static_cast<__int128>(result) * (n - k + i) / i;
        if (wide > std::numeric_limits<long long>::max())
            throw std::overflow_error("binomial coefficient too large");
        result = static_cast<long long>(wide);
    }
    return result;
}

std::vector<SubsetWord> subsets_of_size(int v, int k) {
    if (v < 0 || k < 0) throw std::invalid_argument("negative parameter");
    std::vector<SubsetWord> out;
    if (k > v) return out;
    std::vector<int> cur;
    cur.reserve(k);
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(SubsetWord{cur});
            return;
        }
        int need = k - static_cast<int>(cur.size());
        for (int e = next; e <= v - need + 1; ++e) {
            cur.push_back(e);
            self(self, e + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<SubsetWord> full_rank_subsets(int v, int k) {
    if (v < 0 || k < 0) throw std::invalid_argument("negative parameter");
    std::vector<SubsetWord> out;
    if (2 * k > v) return out;
    std::vector<int> cur;
    cur.reserve(k);
    // A set has full rank exactly when every prefix [i] holds at most i/2 of
    // its elements; it suffices to check the prefixes ending at an element.
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(SubsetWord{cur});
            return;
        }
        int depth = static_cast<int>(cur.size());
        int need = k - depth;
        for (int e = std::max(next, 2 * (depth + 1)); e <= v - need + 1; ++e) {
            cur.push_back(e);
            self(self, e + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace incmat
