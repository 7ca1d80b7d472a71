#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "curvecodes/classnum.hpp"

using namespace curvecodes;

namespace {

// Printed table of (-d, H(d)) for -d = 3..100.
const std::vector<std::pair<int, int>> kTable = {
    {3, 1},  {4, 1},  {7, 1},  {8, 1},  {11, 1}, {12, 2}, {15, 2}, {16, 2}, {19, 1},  {20, 2},
    {23, 3}, {24, 2}, {27, 2}, {28, 2}, {31, 3}, {32, 3}, {35, 2}, {36, 3}, {39, 4},  {40, 2},
    {43, 1}, {44, 4}, {47, 5}, {48, 4}, {51, 2}, {52, 2}, {55, 4}, {56, 4}, {59, 3},  {60, 4},
    {63, 5}, {64, 4}, {67, 1}, {68, 4}, {71, 7}, {72, 3}, {75, 3}, {76, 4}, {79, 5},  {80, 6},
    {83, 3}, {84, 4}, {87, 6}, {88, 2}, {91, 2}, {92, 6}, {95, 8}, {96, 6}, {99, 3}, {100, 3}};

// Oracle: reduce every form with small coefficients under SL_2(Z) and count distinct reduced forms.
std::int64_t classes_by_reduction(std::int64_t d) {
    using Form = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
    std::set<Form> reduced;
    const std::int64_t bound = 2 * (-d) + 4;
    for (std::int64_t a = 1; a <= bound; ++a) {
        for (std::int64_t b = -bound; b <= bound; ++b) {
            const std::int64_t num = b * b - d;
            if (num % (4 * a)) continue;
            std::int64_t A = a, B = b, C = num / (4 * a);
            for (;;) {
                if (B > A || B <= -A) {  // translate b into (-a, a]
                    const std::int64_t k = (A - B) >= 0 ? (A - B) / (2 * A) : -((B - A + 2 * A - 1) / (2 * A));
                    const std::int64_t nb = B + 2 * k * A;
                    C = (nb * nb - d) / (4 * A);
                    B = nb;
                }
                if (A > C) {
                    std::swap(A, C);
                    B = -B;
                    continue;
                }
                if (A == C && B < 0) B = -B;
                break;
            }
            reduced.insert({A, B, C});
        }
    }
    return static_cast<std::int64_t>(reduced.size());
}

}  // namespace

TEST(ClassNumber, PrintedTable) {
    ASSERT_EQ(kTable.size(), 50U);
    for (auto [nd, h] : kTable) EXPECT_EQ(kronecker_class_number(-nd), h) << "d = -" << nd;
}

TEST(ClassNumber, MatchesReductionOracle) {
    for (std::int64_t d = -3; d >= -300; --d) {
        const auto r = ((d % 4) + 4) % 4;
        if (r != 0 && r != 1) continue;
        EXPECT_EQ(kronecker_class_number(d), classes_by_reduction(d)) << d;
    }
}

TEST(ClassNumber, Errors) {
    EXPECT_THROW(kronecker_class_number(-1), std::invalid_argument);
    EXPECT_THROW(kronecker_class_number(-2), std::invalid_argument);
    EXPECT_THROW(kronecker_class_number(0), std::invalid_argument);
    EXPECT_THROW(kronecker_class_number(5), std::invalid_argument);
}

TEST(ClassNumber, PositiveOnValidDiscriminants) {
    for (std::int64_t d = -3; d >= -5000; --d) {
        const auto r = ((d % 4) + 4) % 4;
        if (r == 0 || r == 1) {
            ASSERT_GE(kronecker_class_number(d), 1) << d;
        }
    }
}

TEST(ClassNumberRow, Q16) {
    const auto row = class_number_row(16);
    const std::vector<ClassNumberRow::Entry> expected = {{-7, -15, 2}, {-3, -55, 4}, {1, -63, 5}, {5, -39, 4}};
    EXPECT_EQ(row.entries, expected);
    EXPECT_EQ(row.sum_h(), 15);
    EXPECT_EQ(row.sum_t_h(), -1);
}

TEST(ClassNumberRow, Identities) {
    for (int m = 2; m <= 16; ++m) {
        const std::int64_t q = std::int64_t{1} << m;
        const auto row = class_number_row(q);
        EXPECT_EQ(row.sum_h(), q - 1) << m;
        EXPECT_EQ(row.sum_t_h(), -1) << m;
        for (std::size_t i = 0; i < row.entries.size(); ++i) {
            const auto& e = row.entries[i];
            EXPECT_LT(e.d, 0);
            if (q >= 8) {
                EXPECT_EQ(((e.d % 8) + 8) % 8, 1);
            }
            if (i) {
                EXPECT_LT(row.entries[i - 1].t, e.t);
            }
        }
    }
}

TEST(ClassNumberRow, RejectsBadQ) {
    EXPECT_THROW(class_number_row(2), std::invalid_argument);
    EXPECT_THROW(class_number_row(12), std::invalid_argument);
}
