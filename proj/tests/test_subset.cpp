#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "incmat/subset.hpp"

using namespace incmat;

namespace {

SubsetWord S(const char* text) { return SubsetWord::parse(text); }

std::vector<SubsetWord> every_subset(int v) {
    std::vector<SubsetWord> out;
    for (int k = 0; k <= v; ++k)
        for (SubsetWord& s : subsets_of_size(v, k)) out.push_back(std::move(s));
    return out;
}

// Gap-based variant of the upward jump: add the m smallest integers lying
// strictly between consecutive elements (excluding immediate predecessors of
// elements) or beyond the maximum. Kept only as a diagnostic: it disagrees
// with the iterated successor and can change the rank.
SubsetWord gap_jump(const SubsetWord& f, int m) {
    std::vector<int> gaps;
    const auto& a = f.elements();
    int prev = 0;
    for (std::size_t i = 0; i <= a.size() && static_cast<int>(gaps.size()) < m; ++i) {
        int hi = i < a.size() ? a[i] - 2 : prev + m;  // unbounded final gap
        for (int x = prev + 1; x <= hi && static_cast<int>(gaps.size()) < m; ++x)
            gaps.push_back(x);
        if (i < a.size()) prev = a[i];
    }
    SubsetWord out = f;
    for (int x : gaps) out = out.with(x);
    return out;
}

}  // namespace

TEST_CASE("tableau worked examples") {
    Tableau t = tableau(S("2,3,7,8"));
    CHECK(t.top == std::vector<int>{2, 3, 7, 8});
    REQUIRE(t.bottom.size() == 4);
    CHECK(t.bottom[0] == 1);
    CHECK_FALSE(t.bottom[1].has_value());
    CHECK(t.bottom[2] == 6);
    CHECK(t.bottom[3] == 5);
    CHECK(t.str() == "2 3 7 8\n1 j 6 5");
    CHECK(t.filled_count() == 3);

    CHECK(tableau(S("")).str() == "\n");
    CHECK(tableau(S("2,3,4,7,8")).str() == "2 3 4 7 8\n1 j j 6 5");
    CHECK(tableau(S("1,3,5")).str() == "1 3 5\nj 2 4");
    CHECK(tableau(S("2,4,6")).str() == "2 4 6\n1 3 5");
}

TEST_CASE("rank fixed values") {
    CHECK(rank(S("")) == 0);
    CHECK(rank(S("2,3,7,8")) == 3);
    CHECK(rank(S("2,4,6")) == 3);
    CHECK(rank(S("1,3,5")) == 2);
    for (int m = 1; m <= 8; ++m) {
        std::vector<int> prefix(m);
        for (int i = 0; i < m; ++i) prefix[i] = i + 1;
        CHECK(rank(SubsetWord{prefix}) == 0);
    }
}

TEST_CASE("walk rank fixed values and validation") {
    CHECK(rank_via_walk(S("2,3,7,8"), 8) == 3);
    CHECK(rank_via_walk(S("2,3,7,8"), 11) == 3);
    CHECK(rank_via_walk(S(""), 5) == 0);
    CHECK(rank_via_walk(S("1"), 1) == 0);
    CHECK(rank_via_walk(S("1,3,5"), 6) == 2);
    CHECK_THROWS_AS(rank_via_walk(S("2,3,7,8"), 7), std::invalid_argument);
    CHECK_THROWS_AS(rank_via_walk(S(""), 0), std::invalid_argument);
}

TEST_CASE("successor fixed values") {
    CHECK(successor(S("")) == S("1"));
    CHECK(successor(S("2,3,7,8")) == S("2,3,4,7,8"));
    CHECK(successor(S("2,3,4,7,8")) == S("2,3,4,7,8,9"));
    CHECK(successor(S("3")) == S("1,3"));
    CHECK(successor(S("1,3")) == S("1,3,4"));
}

TEST_CASE("predecessor fixed values") {
    CHECK(predecessor(S("2,3,4,7,8")) == S("2,3,7,8"));
    CHECK(predecessor(S("2,3,7,8")) == S("2,7,8"));
    CHECK_FALSE(predecessor(S("2,4,6")).has_value());
    CHECK_FALSE(predecessor(S("")).has_value());
}

TEST_CASE("jump fixed values") {
    CHECK(jump(S("2"), 2) == S("2,3,4"));
    CHECK(jump(S("2,3,4,5,7,8"), -2) == S("2,3,4,7"));
    CHECK(jump(S("2,3,7,8"), 0) == S("2,3,7,8"));
    CHECK_FALSE(jump(S(""), -1).has_value());
    CHECK_FALSE(jump(S("2,4,6"), -1).has_value());
}

TEST_CASE("bulk blank deletion") {
    CHECK(delete_rightmost_blanks(S("2,3,4,5,7,8"), 2) == S("2,3,4,7"));
    CHECK(delete_rightmost_blanks(S("2,3,7,8"), 0) == S("2,3,7,8"));
    CHECK_FALSE(delete_rightmost_blanks(S("2,4,6"), 1).has_value());
    CHECK_THROWS_AS(delete_rightmost_blanks(S("2"), -1), std::invalid_argument);
}

TEST_CASE("chain endpoints") {
    CHECK(chain_min(S("1,2,3,4")) == S(""));
    CHECK(chain_min(S("2,3,7,8")) == S("2,7,8"));
    CHECK(chain_min(S("1,3,5")) == S("3,5"));
    CHECK(chain_min(S("2,4,6")) == S("2,4,6"));
    CHECK(chain_max(S(""), 3) == S("1,2,3"));
    CHECK(chain_max(S("2"), 6) == S("2,3,4,5,6"));
    CHECK(chain_max(S("2,3,7,8"), 8) == S("2,3,4,7,8"));
    CHECK(chain_max(S("2,4,6"), 6) == S("2,4,6"));
    CHECK_THROWS_AS(chain_max(S("2,4,6"), 5), std::invalid_argument);
}

TEST_CASE("underline map fixed values") {
    CHECK(underline_map(S("1,2"), 6) == S("1,2,5,6"));
    CHECK(underline_map(S("2,4,6"), 6) == S("1,2,4,6"));
    CHECK(underline_map(S("1"), 2) == S("1"));
    CHECK(underline_map(S("2"), 2) == S("1,2"));
    CHECK(underline_map(S("1,2,3"), 3) == S("1,2,3"));
    CHECK_THROWS_AS(underline_map(S("3"), 2), std::invalid_argument);
}

TEST_CASE("subset parsing and formatting") {
    CHECK(S("2,3,7,8").str() == "2,3,7,8");
    CHECK(S("").str().empty());
    CHECK(S("").empty());
    CHECK_THROWS_AS(SubsetWord::parse("3,2"), std::invalid_argument);
    CHECK_THROWS_AS(SubsetWord::parse("2,2"), std::invalid_argument);
    CHECK_THROWS_AS(SubsetWord::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(SubsetWord::parse("-1"), std::invalid_argument);
    CHECK_THROWS_AS(SubsetWord::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(SubsetWord::parse("2,,3"), std::invalid_argument);
    CHECK_THROWS_AS(SubsetWord::parse("2,3,"), std::invalid_argument);
    CHECK_THROWS_AS(SubsetWord::parse("2 3"), std::invalid_argument);
}

TEST_CASE("binomial edge behavior") {
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(6, 2) == 15);
    for (int n = 1; n <= 20; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("subset enumeration order") {
    std::vector<SubsetWord> pairs = subsets_of_size(3, 2);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0] == S("1,2"));
    CHECK(pairs[1] == S("1,3"));
    CHECK(pairs[2] == S("2,3"));
    CHECK(subsets_of_size(4, 0) == std::vector<SubsetWord>{S("")});

    CHECK(full_rank_subsets(4, 2) == std::vector<SubsetWord>{S("2,4"), S("3,4")});
    CHECK(full_rank_subsets(4, 3).empty());
    std::vector<SubsetWord> singles = full_rank_subsets(6, 1);
    REQUIRE(singles.size() == 5);
    CHECK(singles.front() == S("2"));
    CHECK(singles.back() == S("6"));
}

TEST_CASE("exhaustive structural properties through v = 10") {
    for (int v = 1; v <= 10; ++v) {
        std::set<std::vector<int>> full_rank_seen;
        for (const SubsetWord& f : every_subset(v)) {
            int r = rank(f);
            CHECK(r == rank_via_walk(f, v));
            CHECK(rank_via_walk(f, v + 3) == r);

            SubsetWord up = successor(f);
            CHECK(rank(up) == r);
            CHECK(predecessor(up) == f);

            auto down = predecessor(f);
            CHECK(down.has_value() == (r < f.size()));
            if (down) {
                CHECK(successor(*down) == f);
                CHECK(rank(*down) == r);
            }

            for (int m = 0; m <= f.size() + 1; ++m)
                CHECK(delete_rightmost_blanks(f, m) == jump(f, -m));

            SubsetWord bottom = chain_min(f);
            CHECK(rank(bottom) == bottom.size());
            CHECK(rank(bottom) == r);
            CHECK(chain_min(bottom) == bottom);
            if (r == f.size()) {
                CHECK(bottom == f);
                full_rank_seen.insert(f.elements());
            }

            SubsetWord top = chain_max(f, v);
            CHECK(top.size() == v - r);
            CHECK(chain_max(top, v) == top);
            CHECK(top.fits_universe(v));
        }
        for (int k = 0; k <= v; ++k)
            for (const SubsetWord& f : full_rank_subsets(v, k))
                CHECK(full_rank_seen.count(f.elements()) == 1);
        std::size_t total = 0;
        for (int k = 0; k <= v; ++k) total += full_rank_subsets(v, k).size();
        CHECK(total == full_rank_seen.size());
    }
}

TEST_CASE("underline map properties through v = 8") {
    for (int v = 1; v <= 8; ++v) {
        for (const SubsetWord& f : every_subset(v)) {
            SubsetWord image = underline_map(f, v);
            CHECK(f.subset_of(image));
            CHECK(image.size() == v - rank(f.complement(v)));
            CHECK(underline_map(image, v) == image);
        }
    }
}

TEST_CASE("gap-set jump is not the iterated successor") {
    SubsetWord f = S("2,3,7,8");
    SubsetWord iterated = *jump(f, 2);
    SubsetWord gapped = gap_jump(f, 2);
    CHECK(iterated == S("2,3,4,7,8,9"));
    CHECK(gapped == S("2,3,4,5,7,8"));
    CHECK(rank(iterated) == 3);
    CHECK(rank(gapped) == 2);
}
