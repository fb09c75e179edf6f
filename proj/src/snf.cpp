#include "incmat/snf.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace incmat {

namespace {

void swap_rows(ExactMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(ExactMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[dst] += c * row[src]
void add_row(ExactMatrix& m, int dst, int src, const Int& c, int from_col = 0) {
    if (c == 0) return;
    for (int j = from_col; j < m.cols(); ++j)
        if (m.at(src, j) != 0) m.at(dst, j) += c * m.at(src, j);
}

// col[dst] += c * col[src]
void add_col(ExactMatrix& m, int dst, int src, const Int& c, int from_row = 0) {
    if (c == 0) return;
    for (int i = from_row; i < m.rows(); ++i)
        if (m.at(i, src) != 0) m.at(i, dst) += c * m.at(i, src);
}

void negate_row(ExactMatrix& m, int r) {
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

// Least-magnitude nonzero entry of the trailing submatrix starting at
// (from, from); ties go to the lowest row, then lowest column.
bool find_pivot(const ExactMatrix& m, int from, int* pi, int* pj) {
    bool found = false;
    Int best;
    for (int i = from; i < m.rows(); ++i) {
        for (int j = from; j < m.cols(); ++j) {
            const Int& x = m.at(i, j);
            if (x == 0) continue;
            Int mag = abs(x);
            if (!found || mag < best) {
                found = true;
                best = std::move(mag);
                *pi = i;
                *pj = j;
            }
        }
    }
    return found;
}

}  // namespace

SnfDecomposition smith_normal_form(const ExactMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0)
        throw std::invalid_argument("smith_normal_form requires a nonempty matrix");
    ExactMatrix a = m;
    a.row_labels.reset();
    a.col_labels.reset();
    ExactMatrix u = ExactMatrix::identity(m.rows());
    ExactMatrix v = ExactMatrix::identity(m.cols());

    int steps = std::min(m.rows(), m.cols());
    int ndiag = 0;
    for (int s = 0; s < steps; ++s) {
        int pi = 0, pj = 0;
        if (!find_pivot(a, s, &pi, &pj)) break;
        for (;;) {
            swap_rows(a, s, pi);
            swap_rows(u, s, pi);
            swap_cols(a, s, pj);
            swap_cols(v, s, pj);
            bool clean = true;
            for (int i = s + 1; i < a.rows(); ++i) {
                if (a.at(i, s) == 0) continue;
                Int q = a.at(i, s) / a.at(s, s);
                add_row(a, i, s, -q, s);
                add_row(u, i, s, -q);
                if (a.at(i, s) != 0) clean = false;
            }
            for (int j = s + 1; j < a.cols(); ++j) {
                if (a.at(s, j) == 0) continue;
                Int q = a.at(s, j) / a.at(s, s);
                add_col(a, j, s, -q, s);
                add_col(v, j, s, -q);
                if (a.at(s, j) != 0) clean = false;
            }
            if (clean) break;
            if (!find_pivot(a, s, &pi, &pj)) throw std::logic_error("pivot vanished");
        }
        ++ndiag;
    }

    for (int s = 0; s < ndiag; ++s) {
        if (a.at(s, s) < 0) {
            negate_row(a, s);
            negate_row(u, s);
        }
    }

    // Adjacent-pair fix-up: replace (x, y) by (gcd, lcm) until the diagonal
    // forms a divisibility chain. Each substitution shrinks the earlier entry,
    // so the sweep terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s + 1 < ndiag; ++s) {
            const Int& x = a.at(s, s);
            if (a.at(s + 1, s + 1) % x == 0) continue;
            changed = true;
            add_col(a, s, s + 1, 1);
            add_col(v, s, s + 1, 1);
            while (a.at(s + 1, s) != 0) {
                Int q = a.at(s, s) / a.at(s + 1, s);
                add_row(a, s, s + 1, -q);
                add_row(u, s, s + 1, -q);
                swap_rows(a, s, s + 1);
                swap_rows(u, s, s + 1);
            }
            if (a.at(s, s) < 0) {
                negate_row(a, s);
                negate_row(u, s);
            }
            Int q = a.at(s, s + 1) / a.at(s, s);
            add_col(a, s + 1, s, -q);
            add_col(v, s + 1, s, -q);
            if (a.at(s + 1, s + 1) < 0) {
                negate_row(a, s + 1);
                negate_row(u, s + 1);
            }
        }
    }

    SnfDecomposition out;
    out.u = std::move(u);
    out.v = std::move(v);
    for (int s = 0; s < ndiag; ++s) out.d.push_back(a.at(s, s));
    return out;
}

Int determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant requires a square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    ExactMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        int pi = 0, pj = 0;
        if (!find_pivot(a, k, &pi, &pj)) return 0;
        if (pi != k) {
            swap_rows(a, k, pi);
            sign = -sign;
        }
        if (pj != k) {
            swap_cols(a, k, pj);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign < 0 ? Int(-a.at(n - 1, n - 1)) : a.at(n - 1, n - 1);
}

IntVec invariant_factors_via_minors(const ExactMatrix& m) {
    int n = std::min(m.rows(), m.cols());
    if (n > 5)
        throw std::invalid_argument("minors oracle limited to min dimension 5");
    IntVec factors;
    Int prev = 1;
    for (int size = 1; size <= n; ++size) {
        Int g = 0;
        // Iterate all row and column index combinations of the given size.
        auto combos = [&](int total, auto&& fn) {
            std::vector<int> idx(size);
            for (int i = 0; i < size; ++i) idx[i] = i;
            for (;;) {
                fn(idx);
                int p = size - 1;
                while (p >= 0 && idx[p] == total - size + p) --p;
                if (p < 0) break;
                ++idx[p];
                for (int q = p + 1; q < size; ++q) idx[q] = idx[q - 1] + 1;
            }
        };
        combos(m.rows(), [&](const std::vector<int>& ri) {
            combos(m.cols(), [&](const std::vector<int>& ci) {
                ExactMatrix sub(size, size);
                for (int i = 0; i < size; ++i)
                    for (int j = 0; j < size; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
                g = gcd(g, determinant(sub));
            });
        });
        if (g == 0) break;
        factors.push_back(g / prev);
        prev = g;
    }
    return factors;
}

bool is_unimodular(const ExactMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) return false;
    Int d = determinant(m);
    return d == 1 || d == -1;
}

int p_rank(const ExactMatrix& m, int p) {
    if (p < 2) throw std::invalid_argument("p_rank requires a prime modulus");
    for (int f = 2; f * f <= p; ++f)
        if (p % f == 0) throw std::invalid_argument("p_rank requires a prime modulus");
    std::vector<std::vector<long long>> a(m.rows(), std::vector<long long>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Int r = m.at(i, j) % p;
            if (r < 0) r += p;
            a[i][j] = r.convert_to<long long>();
        }
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        // Scale the pivot row to 1 via the modular inverse (p is prime).
        long long inv = 1, base = a[rank][col] % p, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int j = col; j < m.cols(); ++j) a[rank][j] = a[rank][j] * inv % p;
        for (int i = rank + 1; i < m.rows(); ++i) {
            if (a[i][col] == 0) continue;
            long long f = a[i][col];
            for (int j = col; j < m.cols(); ++j)
                a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

int rank_over_q(const ExactMatrix& m) {
    std::vector<RatVec> a(m.rows(), RatVec(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[i][j] = Rat(m.at(i, j));
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int i = rank + 1; i < m.rows(); ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] / a[rank][col];
            for (int j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

IntVec wilson_diagonal(int t, int k, int v) {
    if (!(0 <= t && t <= k && k <= v - t))
        throw std::invalid_argument("wilson_diagonal requires 0 <= t <= k <= v-t");
    IntVec d;
    for (int i = 0; i <= t; ++i) {
        Int value = binomial(k - i, t - i);
        long long times = binomial(v, i) - binomial(v, i - 1);
        for (long long c = 0; c < times; ++c) d.push_back(value);
    }
    return d;
}

}  // namespace incmat
