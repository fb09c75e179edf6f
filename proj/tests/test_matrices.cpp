#include <doctest.h>

#include <sstream>
#include <vector>

#include "incmat/exact_matrix.hpp"
#include "incmat/inclusion.hpp"

using namespace incmat;

namespace {

SubsetWord S(const char* text) { return SubsetWord::parse(text); }

ExactMatrix from_rows(std::vector<std::vector<int>> rows) {
    ExactMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

std::vector<SubsetWord> labels(std::initializer_list<const char*> texts) {
    std::vector<SubsetWord> out;
    for (const char* t : texts) out.push_back(S(t));
    return out;
}

IntVec diag_of(const ExactMatrix& m) {
    IntVec d;
    for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) d.push_back(m.at(i, i));
    return d;
}

}  // namespace

TEST_CASE("exact matrix arithmetic") {
    ExactMatrix a = from_rows({{1, 2}, {3, 4}});
    ExactMatrix b = from_rows({{0, 1}, {1, 0}});
    CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
    CHECK(a + b == from_rows({{1, 3}, {4, 4}}));
    CHECK(a.scaled(Int(-2)) == from_rows({{-2, -4}, {-6, -8}}));
    CHECK(a.transpose() == from_rows({{1, 3}, {2, 4}}));
    CHECK(ExactMatrix::identity(2) * a == a);
    CHECK(ExactMatrix::diagonal({Int(2), Int(3)}) == from_rows({{2, 0}, {0, 3}}));
    CHECK(ExactMatrix::vstack(a, b) == from_rows({{1, 2}, {3, 4}, {0, 1}, {1, 0}}));
    CHECK(a.select_columns({1}) == from_rows({{2}, {4}}));
    CHECK(a.select_columns({1, 0}) == from_rows({{2, 1}, {4, 3}}));
    CHECK_FALSE(a.is_zero());
    CHECK(ExactMatrix(3, 2).is_zero());
    CHECK(a.apply(IntVec{Int(1), Int(-1)}) == IntVec{Int(-1), Int(-1)});
    RatVec half = {Rat(1, 2), Rat(1, 2)};
    CHECK(a.apply(half) == RatVec{Rat(3, 2), Rat(7, 2)});
    CHECK_THROWS_AS(a * ExactMatrix(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(a + ExactMatrix(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(a.apply(IntVec{Int(1)}), std::invalid_argument);
    CHECK_THROWS_AS(a.select_columns({2}), std::invalid_argument);
}

TEST_CASE("matrix text round trip") {
    ExactMatrix w = build_w(1, 2, 3);
    std::string text = w.to_text();
    CHECK(text ==
          "3 3\n"
          "#row 1\n#row 2\n#row 3\n"
          "#col 1,2\n#col 1,3\n#col 2,3\n"
          "1 1 0\n1 0 1\n0 1 1\n");
    ExactMatrix back = ExactMatrix::from_text(text);
    CHECK(back == w);
    CHECK(back.row_labels == w.row_labels);
    CHECK(back.col_labels == w.col_labels);

    CHECK(w.to_csv() == "1,1,0\n1,0,1\n0,1,1\n");

    ExactMatrix plain = ExactMatrix::from_text("2 2\n1 -7\n0 123456789012345678901234567890\n");
    CHECK(plain.at(0, 1) == -7);
    CHECK(plain.at(1, 1) == Int("123456789012345678901234567890"));
    CHECK_FALSE(plain.row_labels.has_value());

    CHECK_THROWS_AS(ExactMatrix::from_text(""), std::invalid_argument);
    CHECK_THROWS_AS(ExactMatrix::from_text("2\n"), std::invalid_argument);
    CHECK_THROWS_AS(ExactMatrix::from_text("1 2\n1\n"), std::invalid_argument);
    CHECK_THROWS_AS(ExactMatrix::from_text("1 2\n1 2 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(ExactMatrix::from_text("2 1\n1\n"), std::invalid_argument);
    CHECK_THROWS_AS(ExactMatrix::from_text("1 1\n#row 1\n#row 2\n1\n"), std::invalid_argument);
}

TEST_CASE("vector text round trip") {
    IntVec x = {Int(3), Int(-1), Int(0)};
    std::optional<std::vector<SubsetWord>> labs = labels({"1,2", "1,3", "2,3"});
    std::string text = vector_to_text(x, labs);
    CHECK(text == "#label 1,2\n3\n#label 1,3\n-1\n#label 2,3\n0\n");
    std::istringstream in(text);
    std::optional<std::vector<SubsetWord>> got_labs;
    IntVec got = vector_from_text(in, &got_labs);
    CHECK(got == x);
    CHECK(got_labs == labs);

    std::istringstream bare("5\n-2\n");
    CHECK(vector_from_text(bare) == IntVec{Int(5), Int(-2)});

    CHECK(rational_to_string(Rat(7)) == "7");
    CHECK(rational_to_string(Rat(28, 3)) == "28/3");
    CHECK(rational_to_string(Rat(-3, 6)) == "-1/2");
}

TEST_CASE("inclusion matrix fixed values") {
    ExactMatrix w = build_w(1, 2, 3);
    CHECK(w == from_rows({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
    CHECK(w.row_labels == labels({"1", "2", "3"}));
    CHECK(w.col_labels == labels({"1,2", "1,3", "2,3"}));

    CHECK(build_w(0, 2, 4) == from_rows({{1, 1, 1, 1, 1, 1}}));
    CHECK(build_w(2, 2, 4) == ExactMatrix::identity(6));

    ExactMatrix r = build_r(1, 2, 3);
    CHECK(r == from_rows({{1, 0, 1}, {0, 1, 1}}));
    CHECK(r.row_labels == labels({"2", "3"}));

    CHECK_THROWS_AS(build_w(2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_w(-1, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_r(2, 1, 3), std::invalid_argument);
}

TEST_CASE("rank compressed rows") {
    ExactMatrix wbar = build_w_bar(1, 2, 3);
    CHECK(wbar == from_rows({{1, 1, 1}, {1, 0, 1}, {0, 1, 1}}));
    CHECK(wbar.row_labels == labels({"", "2", "3"}));

    CHECK(diag_of(build_d_bar(1, 2, 3)) == IntVec{Int(2), Int(1), Int(1)});
    CHECK(diag_of(build_d_bar(1, 2, 4)) == IntVec{Int(2), Int(1), Int(1), Int(1)});

    // Row count is C(v,t) whenever t <= v-t: the compression map is injective
    // on t-subsets.
    for (int v = 1; v <= 8; ++v)
        for (int t = 0; 2 * t <= v; ++t)
            for (int k = t; k <= v; ++k) {
                ExactMatrix m = build_w_bar(t, k, v);
                CHECK(m.rows() == binomial(v, t));
                CHECK(m.cols() == binomial(v, k));
            }
    // Above the midline the row family is capped by the chains that reach
    // level t, so it is the same family as at level v-t.
    CHECK(build_w_bar(3, 3, 4).row_labels == build_w_bar(1, 1, 4).row_labels);
    CHECK(build_w_bar(4, 4, 6).rows() == binomial(6, 2));
}

TEST_CASE("underline compressed columns") {
    ExactMatrix wu = build_w_under(1, 1, 2);
    CHECK(wu == from_rows({{1, 1}, {0, 1}}));
    CHECK(wu.col_labels == labels({"1", "1,2"}));

    CHECK(diag_of(build_d_under(1, 2, 4)) == IntVec{Int(1), Int(1), Int(2), Int(2), Int(2), Int(3)});
    CHECK(diag_of(build_d_under(0, 1, 2)) == IntVec{Int(1), Int(2)});

    ExactMatrix wu24 = build_w_under(1, 2, 4);
    CHECK(wu24.col_labels ==
          labels({"1,2", "1,3", "1,2,3", "1,2,4", "1,3,4", "1,2,3,4"}));

    for (int v = 1; v <= 8; ++v)
        for (int t = 0; t <= v; ++t)
            for (int k = t; k <= v; ++k) {
                ExactMatrix m = build_w_under(t, k, v);
                CHECK(m.cols() == binomial(v, k));
                const auto& cols = *m.col_labels;
                int lo = std::max(k, v - k);
                long long seen = 0;
                for (int j = lo; j <= v; ++j) {
                    long long count = 0;
                    while (seen + count < static_cast<long long>(cols.size()) &&
                           cols[seen + count].size() == j)
                        ++count;
                    CHECK(count == binomial(v, j) - binomial(v, j + 1));
                    ExactMatrix q = build_q(t, j, v, k);
                    CHECK(q.rows() == m.rows());
                    CHECK(q.cols() == count);
                    std::vector<int> idx;
                    for (long long c = 0; c < count; ++c) idx.push_back(static_cast<int>(seen + c));
                    CHECK(q == m.select_columns(idx));
                    seen += count;
                }
                CHECK(seen == static_cast<long long>(cols.size()));
            }

    CHECK_THROWS_AS(build_q(1, 1, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_q(1, 5, 4, 2), std::invalid_argument);
}

TEST_CASE("square column selection") {
    ExactMatrix a = select_a(1, 2, 3);
    CHECK(a == from_rows({{1, 1, 1}, {1, 0, 1}, {0, 1, 1}}));

    ExactMatrix a0 = select_a(0, 2, 5);
    CHECK(a0 == from_rows({{1}}));
    CHECK(a0.col_labels == labels({"1,2"}));

    for (int v = 1; v <= 8; ++v)
        for (int t = 0; 2 * t <= v; ++t)
            for (int k = t; k <= v - t; ++k) {
                ExactMatrix a_tk = select_a(t, k, v);
                CHECK(a_tk.rows() == binomial(v, t));
                CHECK(a_tk.cols() == binomial(v, t));
            }

    CHECK_THROWS_AS(select_a(2, 3, 4), std::invalid_argument);
}

TEST_CASE("h vector fixed values") {
    CHECK(h_vector(1, 2, 3) == RatVec{Rat(3, 2), Rat(1), Rat(1)});
    RatVec h = h_vector(2, 3, 7);
    REQUIRE(h.size() == 21);
    CHECK(h[0] == Rat(7));
    for (int i = 1; i <= 6; ++i) CHECK(h[i] == Rat(3));
    for (int i = 7; i < 21; ++i) CHECK(h[i] == Rat(1));
}

TEST_CASE("restriction product identity") {
    for (int v = 1; v <= 7; ++v)
        for (int k = 0; k <= v; ++k)
            for (int t = 0; t <= k; ++t)
                for (int i = 0; i <= t; ++i) {
                    ExactMatrix lhs = build_r(i, t, v) * build_w(t, k, v);
                    ExactMatrix rhs = build_r(i, k, v).scaled(Int(binomial(k - i, t - i)));
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("diagonal compression identity") {
    for (int v = 1; v <= 7; ++v)
        for (int k = 0; k <= v; ++k)
            for (int t = 0; t <= k; ++t) {
                ExactMatrix lhs = build_w_bar(t, t, v) * build_w(t, k, v);
                ExactMatrix rhs = build_d_bar(t, k, v) * build_w_bar(t, k, v);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("underline block identity") {
    for (int v = 1; v <= 7; ++v)
        for (int t = 0; 2 * t <= v; ++t)
            for (int k = t; k <= v - t; ++k) {
                ExactMatrix lhs = build_w(t, k, v) * build_w_under(k, k, v);
                ExactMatrix rhs = build_w_under(t, k, v) * build_d_under(t, k, v);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("matrix from the rank decomposition matches the builder") {
    for (int v = 1; v <= 6; ++v) {
        Decomposition d = decompose(v);
        for (int t = 0; 2 * t <= v; ++t)
            for (int k = t; k <= v - t; ++k) {
                ExactMatrix got = matrix_from_decomposition(d, t, k);
                ExactMatrix want = build_w_bar(t, k, v);
                CHECK(got == want);
                CHECK(got.row_labels == want.row_labels);
                CHECK(got.col_labels == want.col_labels);
            }
    }
}

TEST_CASE("matrix from a hand built grouping") {
    // Symmetric skipless grouping of 2^[4] whose middle group {3} -> {2,4} ->
    // {2,3,4} is not a chain. The resulting level-2 matrix is singular, unlike
    // the one from the rank decomposition.
    Decomposition d;
    d.v = 4;
    d.kind = DecompositionKind::rank;
    auto add = [&](int r, std::initializer_list<const char*> members) {
        Chain c;
        c.rank = r;
        for (const char* m : members) c.members.push_back(S(m));
        d.chains.push_back(std::move(c));
    };
    add(0, {"", "4", "1,4", "1,2,4", "1,2,3,4"});
    add(1, {"1", "1,3", "1,3,4"});
    add(1, {"2", "2,3", "1,2,3"});
    add(1, {"3", "2,4", "2,3,4"});
    add(2, {"1,2"});
    add(2, {"3,4"});

    ExactMatrix m = matrix_from_decomposition(d, 2, 2);
    CHECK(m == from_rows({{1, 1, 1, 1, 1, 1},
                          {1, 1, 1, 0, 0, 0},
                          {1, 0, 0, 1, 1, 0},
                          {0, 1, 0, 1, 0, 1},
                          {1, 0, 0, 0, 0, 0},
                          {0, 0, 0, 0, 0, 1}}));
    CHECK(m.row_labels == labels({"", "1", "2", "3", "1,2", "3,4"}));

    Decomposition bad = d;
    bad.chains[4].members[0] = S("1,3");  // repeats a subset, drops {1,2}
    CHECK_THROWS_AS(matrix_from_decomposition(bad, 2, 2), std::invalid_argument);

    bad = d;
    bad.chains[1].members = {S("1"), S("1,3,4")};  // skips a level
    CHECK_THROWS_AS(matrix_from_decomposition(bad, 2, 2), std::invalid_argument);

    bad = d;
    bad.chains[1].members = {S("1"), S("1,3")};  // not symmetric
    CHECK_THROWS_AS(matrix_from_decomposition(bad, 2, 2), std::invalid_argument);

    bad = d;
    bad.chains.pop_back();  // misses {3,4}
    CHECK_THROWS_AS(matrix_from_decomposition(bad, 2, 2), std::invalid_argument);
}

TEST_CASE("mixed compression interpolates between the two row families") {
    for (int v = 1; v <= 6; ++v)
        for (int t = 0; 2 * t <= v; ++t)
            for (int k = t; k <= v - t; ++k) {
                ExactMatrix w = build_w(t, k, v);
                ExactMatrix wbar = build_w_bar(t, k, v);
                for (int m = 0; m <= t; ++m) {
                    ExactMatrix mixed = build_w_mixed(t, k, v, m);
                    CHECK(mixed.rows() == binomial(v, t));
                    if (m == 0) {
                        CHECK(mixed == w);
                        CHECK(mixed.row_labels == w.row_labels);
                    }
                    if (m == t) {
                        CHECK(mixed == wbar);
                        CHECK(mixed.row_labels == wbar.row_labels);
                    }
                }
            }
    CHECK_THROWS_AS(build_w_mixed(1, 2, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_w_mixed(1, 2, 4, -1), std::invalid_argument);
}
