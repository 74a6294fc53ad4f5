#include "clebsch/algebra.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace clebsch;
using linalg::DenseMatrix;

namespace {

DenseMatrix dense(const IWeight& s, int l, Direction d) { return operator_matrix(s, l, d).to_dense(); }

DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b) { return a * b - b * a; }

double max_diff(const DenseMatrix& a, const DenseMatrix& b) { return (a - b).max_abs(); }

std::vector<IWeight> small_irreps() {
    std::vector<IWeight> out;
    for (int n : {2, 3, 4}) {
        for (const auto& w : oracle::normalized_weights(n, n == 4 ? 3 : 4)) out.emplace_back(w);
    }
    return out;
}

} // namespace

TEST(LadderElements, SpinOneLowering) {
    EXPECT_NEAR(lowering_element(parse_pattern("2 0; 1"), 1, 1), std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(raising_element(parse_pattern("2 0; 0"), 1, 1), std::sqrt(2.0), 1e-15);
}

TEST(LadderElements, HighestStateIsAnnihilated) {
    for (const auto& s : small_irreps()) {
        const GTPattern h = highest(s);
        for (int l = 1; l < s.rank(); ++l)
            for (int k = 1; k <= l; ++k) EXPECT_EQ(raising_element(h, k, l), 0.0);
    }
    EXPECT_EQ(raising_element(parse_pattern("2 0; 2"), 1, 1), 0.0);
}

TEST(LadderElements, LowestStateHasNoLowering) {
    for (const auto& s : small_irreps()) {
        const GTPattern m = lowest(s);
        for (int l = 1; l < s.rank(); ++l)
            for (int k = 1; k <= l; ++k) EXPECT_EQ(lowering_element(m, k, l), 0.0);
    }
}

TEST(LadderElements, IndexRangeChecked) {
    const GTPattern m = highest(IWeight{2, 1, 0});
    EXPECT_THROW((void)lowering_element(m, 1, 3), std::out_of_range);
    EXPECT_THROW((void)raising_element(m, 3, 2), std::out_of_range);
    EXPECT_THROW((void)lowering_element(m, 0, 1), std::out_of_range);
    EXPECT_THROW((void)diagonal_element(m, 3), std::out_of_range);
}

TEST(LadderElements, RaisingIsTransposeOfLowering) {
    for (const IWeight& s : {IWeight{2, 1, 0}, IWeight{3, 1, 0, 0}, IWeight{2, 2, 1, 0}}) {
        for (const auto& m : enumerate(s)) {
            for (int l = 1; l < s.rank(); ++l) {
                for (int k = 1; k <= l; ++k) {
                    if (auto up = shifted(m, k, l, +1)) {
                        EXPECT_DOUBLE_EQ(raising_element(m, k, l), lowering_element(*up, k, l));
                    } else {
                        EXPECT_EQ(raising_element(m, k, l), 0.0);
                    }
                }
            }
        }
    }
}

TEST(OperatorMatrix, SpinHalf) {
    const auto lower = operator_matrix(IWeight{1, 0}, 1, Direction::lowering);
    ASSERT_EQ(lower.entries().size(), 1u);
    EXPECT_EQ(lower.entries()[0], (MatrixEntry{1, 2, 1.0}));
    EXPECT_EQ(lower(1, 2), 1.0);
    EXPECT_EQ(lower(2, 1), 0.0);
}

TEST(OperatorMatrix, TrivialIrrep) {
    for (auto d : {Direction::lowering, Direction::raising, Direction::diagonal}) {
        const auto m = operator_matrix(IWeight{0, 0, 0}, 1, d);
        EXPECT_EQ(m.dimension(), 1);
        EXPECT_TRUE(m.entries().empty());
    }
}

TEST(OperatorMatrix, OctetLoweringReachesZeroWeightStates) {
    const IrrepBasis b(IWeight{2, 1, 0});
    const auto l1 = operator_matrix(b, 1, Direction::lowering).to_dense();
    const auto l2 = operator_matrix(b, 2, Direction::lowering).to_dense();
    // the two states of z-weight (0,0) are Q = 3 and Q = 5
    const auto zero = b.states_with_weight(PWeight{{1, 1, 1}});
    ASSERT_EQ(zero, (std::vector<std::int64_t>{3, 5}));

    // J_-^(1) on 2 1 0; 2 0; 2 stays inside the zero-weight space
    const auto q6 = b.index_of(parse_pattern("2 1 0; 2 0; 2"));
    for (std::int64_t q = 1; q <= 8; ++q) {
        const bool inside = q == 3 || q == 5;
        if (!inside) {
            EXPECT_EQ(l1(static_cast<std::size_t>(q - 1), static_cast<std::size_t>(q6 - 1)), 0.0);
        }
    }
    // J_-^(2) on 2 1 0; 2 1; 1 produces a combination of both
    const auto q7 = b.index_of(parse_pattern("2 1 0; 2 1; 1"));
    EXPECT_GT(l2(2, static_cast<std::size_t>(q7 - 1)), 0.0);
    EXPECT_GT(l2(4, static_cast<std::size_t>(q7 - 1)), 0.0);
}

TEST(OperatorMatrix, SpinMatricesMatchAngularMomentum) {
    for (int twoj = 0; twoj <= 8; ++twoj) {
        const auto lower = dense(IWeight{twoj, 0}, 1, Direction::lowering);
        const auto want = oracle::spin_lowering(twoj);
        for (int i = 0; i <= twoj; ++i)
            for (int j = 0; j <= twoj; ++j)
                EXPECT_NEAR(lower(static_cast<std::size_t>(i), static_cast<std::size_t>(j)), want(i, j), 1e-12);
        const auto z = dense(IWeight{twoj, 0}, 1, Direction::diagonal);
        for (int i = 0; i <= twoj; ++i) EXPECT_NEAR(z(static_cast<std::size_t>(i), static_cast<std::size_t>(i)), -twoj / 2.0 + i, 1e-15);
    }
}

TEST(OperatorMatrix, CommutationRelations) {
    for (const auto& s : small_irreps()) {
        const IrrepBasis b(s);
        for (int l = 1; l < s.rank(); ++l) {
            const auto lo = operator_matrix(b, l, Direction::lowering).to_dense();
            const auto up = operator_matrix(b, l, Direction::raising).to_dense();
            const auto z = operator_matrix(b, l, Direction::diagonal).to_dense();
            EXPECT_LT(max_diff(commutator(up, lo), 2.0 * z), 1e-10) << to_string(s) << " l=" << l;
            EXPECT_LT(max_diff(commutator(z, up), up), 1e-10);
            EXPECT_LT(max_diff(commutator(z, lo), -1.0 * lo), 1e-10);
            EXPECT_EQ(up, lo.transpose());
            for (int l2 = 1; l2 < s.rank(); ++l2) {
                const auto z2 = operator_matrix(b, l2, Direction::diagonal).to_dense();
                EXPECT_EQ(commutator(z, z2).max_abs(), 0.0);
            }
        }
    }
}

TEST(OperatorMatrix, EntriesAreNonnegativeAndShiftWeights) {
    for (const IWeight& s : {IWeight{2, 1, 0}, IWeight{3, 1, 0, 0}}) {
        const IrrepBasis b(s);
        for (int l = 1; l < s.rank(); ++l) {
            for (auto d : {Direction::lowering, Direction::raising}) {
                const auto op = operator_matrix(b, l, d);
                for (const auto& e : op.entries()) {
                    EXPECT_GT(e.value, 0.0);
                    EXPECT_TRUE(std::isfinite(e.value));
                    EXPECT_EQ(*weight_shift(b.weight_of(e.col), l, d), b.weight_of(e.row));
                }
            }
        }
    }
}

TEST(OperatorMatrix, SortedByColumn) {
    const auto m = operator_matrix(IWeight{3, 1, 0}, 2, Direction::lowering);
    for (std::size_t i = 1; i < m.entries().size(); ++i) {
        const auto& a = m.entries()[i - 1];
        const auto& b = m.entries()[i];
        EXPECT_TRUE(a.col < b.col || (a.col == b.col && a.row < b.row));
    }
}

TEST(WeightShift, ComponentwiseRule) {
    EXPECT_EQ(weight_shift(PWeight{{1, 1, 1}}, 1, Direction::raising)->entries, (std::vector<int>{2, 0, 1}));
    EXPECT_EQ(weight_shift(PWeight{{2, 1, 0}}, 2, Direction::lowering)->entries, (std::vector<int>{2, 0, 1}));
    const PWeight w{{1, 2, 0}};
    EXPECT_EQ(*weight_shift(*weight_shift(w, 1, Direction::lowering), 1, Direction::raising), w);
    EXPECT_FALSE(weight_shift(PWeight{{0, 1}}, 1, Direction::lowering));
    EXPECT_THROW((void)weight_shift(w, 3, Direction::raising), std::out_of_range);
}

TEST(IrrepBasis, LookupByPatternAndWeight) {
    const IrrepBasis b(IWeight{2, 1, 0});
    EXPECT_EQ(b.dimension(), 8);
    for (std::int64_t q = 1; q <= 8; ++q) EXPECT_EQ(b.index_of(b.pattern(q)), q);
    EXPECT_THROW((void)b.index_of(highest(IWeight{3, 0, 0})), std::invalid_argument);
    EXPECT_TRUE(b.states_with_weight(PWeight{{3, 0, 0}}).empty());
    std::size_t total = 0;
    for (const auto& [w, qs] : b.weights()) total += qs.size();
    EXPECT_EQ(total, 8u);
}
