#include "clebsch/patterns.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

using namespace clebsch;

namespace {

GTPattern from_rows_bottom_up(const oracle::Rows& rows) {
    std::vector<std::vector<int>> top_first(rows.rbegin(), rows.rend());
    return GTPattern(top_first);
}

const std::vector<std::string> kOctetOrder = {
    "2 1 0; 1 0; 0", "2 1 0; 1 0; 1", "2 1 0; 1 1; 1", "2 1 0; 2 0; 0",
    "2 1 0; 2 0; 1", "2 1 0; 2 0; 2", "2 1 0; 2 1; 1", "2 1 0; 2 1; 2",
};

} // namespace

TEST(GTPattern, ShapeIsChecked) {
    EXPECT_THROW(GTPattern({{2, 1, 0}, {2}, {2}}), std::invalid_argument);
    EXPECT_THROW(GTPattern(std::vector<std::vector<int>>{}), std::invalid_argument);
    EXPECT_THROW((void)parse_pattern("2 1 0; 2 x; 2"), std::invalid_argument);
    EXPECT_THROW((void)parse_pattern("2 1 0; 2 1"), std::invalid_argument);
}

TEST(GTPattern, TextRoundTrip) {
    const GTPattern m = parse_pattern("2 1 0; 2 0; 1");
    EXPECT_EQ(m(1, 3), 2);
    EXPECT_EQ(m(2, 2), 0);
    EXPECT_EQ(m(1, 1), 1);
    EXPECT_EQ(to_string(m), "2 1 0; 2 0; 1");
    EXPECT_EQ(parse_pattern(" 2 1 0 ;2 0;  1 "), m);
}

TEST(Validate, Betweenness) {
    EXPECT_TRUE(validate(parse_pattern("2 1 0; 2 1; 2")));
    EXPECT_FALSE(validate(parse_pattern("2 1 0; 2 1; 0")));
    EXPECT_FALSE(validate(parse_pattern("2 1 0; 3 1; 2")));
}

TEST(Validate, SingleEntryShiftPatternIsInvalid) {
    for (int n = 2; n <= 5; ++n) {
        for (int l = 1; l <= n - 1; ++l) {
            for (int k = 1; k <= l; ++k) {
                std::vector<std::vector<int>> rows;
                for (int r = n; r >= 1; --r) rows.emplace_back(static_cast<std::size_t>(r), 0);
                for (int v : {1, -1}) {
                    rows[static_cast<std::size_t>(n - l)][static_cast<std::size_t>(k - 1)] = v;
                    EXPECT_FALSE(validate(GTPattern(rows))) << n << " " << k << " " << l << " " << v;
                }
            }
        }
    }
}

TEST(Highest, CopiesTopRowDown) {
    EXPECT_EQ(to_string(highest(IWeight{2, 1, 0})), "2 1 0; 2 1; 2");
    EXPECT_EQ(to_string(highest(IWeight{0, 0, 0})), "0 0 0; 0 0; 0");
    EXPECT_EQ(to_string(highest(IWeight{4, 3, 1, 0})), "4 3 1 0; 4 3 1; 4 3; 4");
    EXPECT_EQ(pweight(highest(IWeight{4, 3, 1, 0})).entries, (std::vector<int>{4, 3, 1, 0}));
}

TEST(Enumerate, OctetOrder) {
    const auto all = enumerate(IWeight{2, 1, 0});
    ASSERT_EQ(all.size(), kOctetOrder.size());
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(to_string(all[i]), kOctetOrder[i]);
}

TEST(Enumerate, SpinHalf) {
    const auto all = enumerate(IWeight{1, 0});
    ASSERT_EQ(all.size(), 2u);
    EXPECT_EQ(to_string(all[0]), "1 0; 0");
    EXPECT_EQ(to_string(all[1]), "1 0; 1");
}

TEST(Enumerate, MatchesBruteForce) {
    for (int n : {2, 3, 4}) {
        for (const auto& w : oracle::normalized_weights(n, n == 4 ? 3 : 4)) {
            const auto got = enumerate(IWeight(w));
            const auto want = oracle::brute_patterns(w);
            ASSERT_EQ(got.size(), want.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                EXPECT_EQ(got[i], from_rows_bottom_up(want[i]));
                EXPECT_TRUE(validate(got[i]));
            }
            EXPECT_EQ(got.front(), lowest(IWeight(w)));
            EXPECT_EQ(got.back(), highest(IWeight(w)));
        }
    }
}

TEST(Enumerate, NonNormalizedTopRow) {
    const auto a = enumerate(IWeight{3, 2, 1});
    const auto b = enumerate(IWeight{2, 1, 0});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(index(a[i]), static_cast<std::int64_t>(i + 1));
}

TEST(PrevPattern, InvertsNext) {
    for (const auto& w : oracle::normalized_weights(4, 3)) {
        GTPattern m = highest(IWeight(w));
        std::int64_t steps = 1;
        while (prev_pattern(m)) ++steps;
        EXPECT_EQ(m, lowest(IWeight(w)));
        EXPECT_EQ(steps, dimension(IWeight(w)));
    }
}

TEST(PatternIndex, OctetOrdering) {
    for (std::size_t i = 0; i < kOctetOrder.size(); ++i) {
        EXPECT_EQ(index(parse_pattern(kOctetOrder[i])), static_cast<std::int64_t>(i + 1));
        EXPECT_EQ(to_string(pattern_from_index(IWeight{2, 1, 0}, static_cast<std::int64_t>(i + 1))), kOctetOrder[i]);
    }
    EXPECT_EQ(index(parse_pattern("2 1 0; 2 0; 1")), 5);
    EXPECT_EQ(index(highest(IWeight{2, 1, 0})), 8);
}

TEST(PatternIndex, SpinThreeHalves) {
    EXPECT_EQ(to_string(pattern_from_index(IWeight{3, 0}, 2)), "3 0; 1");
}

TEST(PatternIndex, BijectionOnEnumeratedIrreps) {
    for (int n : {2, 3, 4, 5}) {
        for (const auto& w : oracle::normalized_weights(n, n >= 4 ? 2 : 4)) {
            const IWeight s(w);
            const auto all = enumerate(s);
            for (std::size_t i = 0; i < all.size(); ++i) {
                const auto q = static_cast<std::int64_t>(i + 1);
                EXPECT_EQ(index(all[i]), q);
                EXPECT_EQ(pattern_from_index(s, q), all[i]);
            }
        }
    }
}

TEST(PatternIndex, Errors) {
    EXPECT_THROW((void)index(parse_pattern("2 1 0; 2 1; 0")), std::invalid_argument);
    EXPECT_THROW((void)pattern_from_index(IWeight{2, 1, 0}, 0), std::out_of_range);
    EXPECT_THROW((void)pattern_from_index(IWeight{2, 1, 0}, 9), std::out_of_range);
}

TEST(Weights, PWeightExamples) {
    EXPECT_EQ(pweight(highest(IWeight{2, 1, 0})).entries, (std::vector<int>{2, 1, 0}));
    EXPECT_EQ(pweight(parse_pattern("2 1 0; 2 0; 1")).entries, (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(pweight(parse_pattern("2 1 0; 1 1; 1")).entries, (std::vector<int>{1, 1, 1}));
}

TEST(Weights, ZWeightExamples) {
    EXPECT_EQ(zweight(highest(IWeight{2, 1, 0})).doubled, (std::vector<int>{1, 1}));
    EXPECT_EQ(zweight(parse_pattern("2 1 0; 2 0; 1")).doubled, (std::vector<int>{0, 0}));
}

TEST(Weights, ZWeightIsDifferenceOfPWeight) {
    for (const auto& m : enumerate(IWeight{4, 2, 1, 0})) {
        const auto w = pweight(m);
        const auto z = zweight(m);
        int total = 0;
        for (int l = 1; l <= 4; ++l) total += w(l);
        EXPECT_EQ(total, 7);
        for (int l = 1; l <= 3; ++l) EXPECT_EQ(z.doubled[static_cast<std::size_t>(l - 1)], w(l) - w(l + 1));
        EXPECT_EQ(zweight_of(w), z);
    }
}

TEST(Weights, EqualPWeightIffEqualRowSums) {
    const auto all = enumerate(IWeight{3, 1, 0, 0});
    for (const auto& a : all) {
        for (const auto& b : all) {
            bool sums = true;
            for (int l = 1; l < 4; ++l) sums = sums && a.row_sum(l) == b.row_sum(l);
            EXPECT_EQ(pweight(a) == pweight(b), sums);
        }
    }
}

TEST(Weights, PWeightMultisetIsPermutationSymmetric) {
    for (const IWeight& s : {IWeight{2, 1, 0}, IWeight{3, 1, 0, 0}, IWeight{2, 2, 1, 0}}) {
        std::map<std::vector<int>, int> count;
        for (const auto& m : enumerate(s)) ++count[pweight(m).entries];
        for (const auto& [w, c] : count) {
            auto perm = w;
            std::sort(perm.begin(), perm.end());
            do {
                EXPECT_EQ(count[perm], c);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
}

TEST(Tableau, ThreeRowExample) {
    const GTPattern m = parse_pattern("4 3 1 0; 3 2 1; 3 2; 2");
    const YoungTableau t = to_tableau(m);
    const std::vector<std::vector<int>> want = {{1, 1, 2, 4}, {2, 2, 4}, {3}};
    EXPECT_EQ(t.rows, want);
    EXPECT_EQ(from_tableau(YoungTableau{want}, 4), m);
}

TEST(Tableau, SimpleCases) {
    EXPECT_EQ(to_tableau(highest(IWeight{2, 1, 0})).rows, (std::vector<std::vector<int>>{{1, 1}, {2}}));
    EXPECT_EQ(to_tableau(parse_pattern("2 0; 1")).rows, (std::vector<std::vector<int>>{{1, 2}}));
    EXPECT_EQ(from_tableau(YoungTableau{}, 3), highest(IWeight{0, 0, 0}));
}

TEST(Tableau, BoxCountsArePWeight) {
    for (const auto& m : enumerate(IWeight{4, 3, 1, 0})) {
        const auto t = to_tableau(m);
        EXPECT_TRUE(is_valid_tableau(t, 4));
        std::vector<int> boxes(4, 0);
        for (const auto& row : t.rows)
            for (int label : row) ++boxes[static_cast<std::size_t>(label - 1)];
        EXPECT_EQ(boxes, pweight(m).entries);
    }
}

TEST(Tableau, RoundTripOnWholeIrreps) {
    for (const IWeight& s : {IWeight{2, 1, 0}, IWeight{4, 3, 1, 0}, IWeight{3, 3, 0}, IWeight{2, 1, 1, 0, 0}}) {
        std::set<std::vector<std::vector<int>>> seen;
        for (const auto& m : enumerate(s)) {
            const auto t = to_tableau(m);
            EXPECT_EQ(from_tableau(t, s.rank()), m);
            EXPECT_TRUE(seen.insert(t.rows).second);
        }
    }
}

TEST(Tableau, InvalidTableauRejected) {
    EXPECT_THROW((void)from_tableau(YoungTableau{{{2, 1}}}, 3), std::invalid_argument);     // row decreases
    EXPECT_THROW((void)from_tableau(YoungTableau{{{1, 1}, {1}}}, 3), std::invalid_argument);  // column repeats
    EXPECT_THROW((void)from_tableau(YoungTableau{{{1}, {2, 2}}}, 3), std::invalid_argument);  // longer lower row
    EXPECT_THROW((void)from_tableau(YoungTableau{{{4}}}, 3), std::invalid_argument);          // label above N
}

TEST(Shifted, RespectsBetweenness) {
    const GTPattern m = parse_pattern("2 1 0; 2 0; 1");
    EXPECT_EQ(to_string(*shifted(m, 1, 1, +1)), "2 1 0; 2 0; 2");
    EXPECT_EQ(to_string(*shifted(m, 2, 2, +1)), "2 1 0; 2 1; 1");
    EXPECT_FALSE(shifted(m, 1, 2, +1));
    EXPECT_EQ(to_string(*shifted(m, 1, 2, -1)), "2 1 0; 1 0; 1");
}

TEST(Shifted, AgreesWithValidate) {
    std::mt19937 rng(7);
    const auto all = enumerate(IWeight{3, 2, 0, 0});
    for (const auto& m : all) {
        for (int l = 1; l <= 3; ++l) {
            for (int k = 1; k <= l; ++k) {
                for (int d : {+1, -1}) {
                    GTPattern raw = m;
                    raw.at(k, l) += d;
                    const auto s = shifted(m, k, l, d);
                    EXPECT_EQ(s.has_value(), validate(raw));
                    if (s) {
                        EXPECT_EQ(*s, raw);
                    }
                }
            }
        }
    }
}
