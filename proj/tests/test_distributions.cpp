#include <gtest/gtest.h>

#include "curvecodes/cyclic.hpp"
#include "curvecodes/distributions.hpp"

using namespace curvecodes;

TEST(Parity, SmallLengths) {
    EXPECT_EQ(parity_distribution(3), WeightEnumerator::from_counts({1, 0, 3, 0}));
    EXPECT_EQ(parity_distribution(4), WeightEnumerator::from_counts({1, 0, 6, 0, 1}));
    EXPECT_THROW(parity_distribution(0), std::invalid_argument);
}

TEST(Parity, MatchesEnumeration) {
    for (std::size_t n = 3; n <= 16; ++n) {
        EXPECT_EQ(parity_distribution(n), enumerate_weight_distribution(make_parity_code(n))) << n;
        // dual of the repetition code, even-index form
        EXPECT_EQ(parity_distribution(n), macwilliams_transform(repetition_distribution(n), 2)) << n;
    }
}

TEST(Hamming, ClosedForm) {
    EXPECT_EQ(hamming_distribution(3), WeightEnumerator::from_counts({1, 0, 0, 7, 7, 0, 0, 1}));
    const auto h4 = hamming_distribution(4);
    EXPECT_EQ(h4[0], 1);
    EXPECT_EQ(h4[3], 35);
    EXPECT_EQ(h4, enumerate_weight_distribution(build_named_code(Family::hamming, 4)));
    for (int m = 2; m <= 10; ++m) {
        const std::int64_t q = std::int64_t{1} << m;
        const auto h = hamming_distribution(m);
        EXPECT_EQ(h[1], 0);
        EXPECT_EQ(h[2], 0);
        EXPECT_EQ(h[3], BigInt((q - 1) * (q - 2) / 6));
        EXPECT_EQ(h.total(), pow2(static_cast<unsigned>(q - 1 - m)));
    }
    EXPECT_THROW(hamming_distribution(1), std::invalid_argument);
}

TEST(Hamming, DualTransform) {
    EXPECT_EQ(hamming_dual_distribution(3), WeightEnumerator::from_sparse(7, {{0, 1}, {4, 7}}));
    EXPECT_EQ(hamming_dual_distribution(5), WeightEnumerator::from_sparse(31, {{0, 1}, {16, 31}}));
    for (int m = 3; m <= 8; ++m) {
        const BigInt q = pow2(static_cast<unsigned>(m));
        EXPECT_EQ(macwilliams_transform(hamming_dual_distribution(m), q), hamming_distribution(m)) << m;
    }
}

TEST(BchDual, Tables) {
    EXPECT_EQ(bch_dual_distribution(3), WeightEnumerator::from_sparse(7, {{0, 1}, {2, 21}, {4, 35}, {6, 7}}));
    EXPECT_EQ(bch_dual_distribution(5), WeightEnumerator::from_sparse(31, {{0, 1}, {12, 310}, {16, 527}, {20, 186}}));
    for (int m = 3; m <= 8; ++m) {
        const BigInt q = pow2(static_cast<unsigned>(m));
        EXPECT_EQ(bch_dual_distribution(m).total(), q * q);
    }
    EXPECT_THROW(bch_dual_distribution(2), std::invalid_argument);
}

TEST(BchDual, MatchesTraceEnumeration) {
    for (int m = 3; m <= 6; ++m) EXPECT_EQ(bch_dual_distribution(m), dual_trace_distribution(Family::bch2, m)) << m;
}

TEST(BchPrimal, ViaTransform) {
    EXPECT_EQ(bch_distribution(4), enumerate_weight_distribution(build_named_code(Family::bch2, 4)));
    for (int m = 3; m <= 9; ++m) {
        const auto b = bch_distribution(m);
        for (std::size_t i = 1; i <= 4; ++i) EXPECT_EQ(b[i], 0) << m << " " << i;
        EXPECT_EQ(b.total(), pow2(static_cast<unsigned>((1 << m) - 1 - 2 * m)));
        if (m >= 4) {
            EXPECT_NE(b[5], 0);
        }
    }
}

TEST(MelasDual, ClassNumberTable) {
    // H(-15) = 2, H(-55) = 4, H(-63) = 5, H(-39) = 4 at q = 16
    const auto d = melas_dual_distribution(4);
    EXPECT_EQ(d, WeightEnumerator::from_sparse(15, {{0, 1}, {4, 30}, {6, 60}, {8, 105}, {10, 60}}));
    EXPECT_EQ(d.total(), 256);
    for (int m = 3; m <= 12; ++m) {
        const std::int64_t q = std::int64_t{1} << m;
        const auto w = melas_dual_distribution(m);
        EXPECT_EQ(w.total(), BigInt(q) * q);
        // nonzero weights lie in the Hasse band (q - 1 +/- 2 sqrt q)/2
        for (const auto& [weight, count] : w.sparse()) {
            if (weight == 0) continue;
            const std::int64_t t = 2 * static_cast<std::int64_t>(weight) - (q - 1);
            EXPECT_LT(t * t, 4 * q) << m << " weight " << weight;
        }
    }
}

TEST(MelasDual, MatchesTraceEnumeration) {
    for (int m = 3; m <= 6; ++m) EXPECT_EQ(melas_dual_distribution(m), dual_trace_distribution(Family::melas, m)) << m;
}

TEST(WTable, SeedsAndFirstStep) {
    const auto w = w_table(6, 16);
    EXPECT_EQ(w.at(0, 0), 1);
    EXPECT_EQ(w.at(1, 1), -1);
    EXPECT_EQ(w.at(2, 2), Rational(1, 2));
    EXPECT_EQ(w.at(2, 0), Rational(1, 2));
    EXPECT_EQ(w.at(3, -1), 0);
    EXPECT_EQ(w.at(3, 4), 0);
    for (std::size_t i = 0; i <= 6; ++i)
        for (std::int64_t j = 0; j <= static_cast<std::int64_t>(i); ++j)
            if ((static_cast<std::int64_t>(i) - j) % 2) {
                EXPECT_EQ(w.at(i, j), 0) << i << "," << j;
            }
}

TEST(WTable, MatchesRationalRecursion) {
    // oracle: the recursion run directly over rationals
    for (std::int64_t q : {8, 16, 64}) {
        const std::size_t imax = 14;
        std::vector<std::vector<Rational>> r(imax + 1, std::vector<Rational>(imax + 3, Rational(0)));
        auto get = [&](std::int64_t i, std::int64_t j) -> Rational {
            if (i < 0 || j < 0 || j > i) return 0;
            return r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        };
        r[0][0] = 1;
        r[1][1] = -1;
        for (std::int64_t i = 1; i < static_cast<std::int64_t>(imax); ++i)
            for (std::int64_t j = -1; j <= i; ++j)
                r[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)] =
                    (-Rational(q) * get(i, j + 2) - get(i, j) - Rational(q - i) * get(i - 1, j + 1)) / (i + 1);
        const auto w = w_table(imax, q);
        for (std::size_t i = 0; i <= imax; ++i)
            for (std::int64_t j = 0; j <= static_cast<std::int64_t>(i); ++j)
                ASSERT_EQ(w.at(i, j), get(static_cast<std::int64_t>(i), j)) << q << ":" << i << "," << j;
    }
}

TEST(MelasPrimal, MatchesBruteForce) {
    EXPECT_EQ(melas_distribution(4), enumerate_weight_distribution(build_named_code(Family::melas, 4)));
    EXPECT_EQ(melas_distribution(3), enumerate_weight_distribution(build_named_code(Family::melas, 3)));
}

TEST(MelasPrimal, MatchesTransformOfDual) {
    for (int m = 3; m <= 8; ++m) {
        const std::int64_t q = std::int64_t{1} << m;
        const auto a = melas_distribution(m);
        EXPECT_EQ(a, macwilliams_transform(melas_dual_distribution(m), BigInt(q) * q)) << m;
        EXPECT_EQ(a[0], 1);
        EXPECT_EQ(a[1], 0);
        EXPECT_EQ(a[2], 0);
        EXPECT_EQ(a.total(), pow2(static_cast<unsigned>(q - 1 - 2 * m)));
    }
}

TEST(MelasPrimal, PerturbedTracesBreakIntegrality) {
    const int m = 5;
    const std::int64_t q = 32;
    const HeckeTraceTable exact(q, static_cast<int>(q) + 1);
    EXPECT_NO_THROW(melas_distribution(m, exact));
    for (int k : {3, 4, 5, 8, 17}) {
        for (int delta : {-1, 1}) {
            HeckeTraceTable t = exact;
            t.override_trace(k, t.trace(k) + delta);
            EXPECT_THROW(melas_distribution(m, t), std::domain_error) << "k=" << k << " delta=" << delta;
        }
    }
}

TEST(MelasPrimal, NeedsEnoughTraces) {
    EXPECT_THROW(melas_distribution(4, HeckeTraceTable(16, 10)), std::invalid_argument);
    EXPECT_THROW(melas_distribution(4, HeckeTraceTable(32, 40)), std::invalid_argument);
}
