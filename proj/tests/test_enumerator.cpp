#include <gtest/gtest.h>

#include <random>

#include "curvecodes/cyclic.hpp"
#include "curvecodes/enumerator.hpp"

using namespace curvecodes;

namespace {

// (1 - X)^i (1 + X)^(n - i) by repeated convolution; independent of the recurrence.
std::vector<BigInt> naive_expansion(std::size_t n, std::size_t i) {
    std::vector<BigInt> p{1};
    for (std::size_t s = 0; s < n; ++s) {
        const int sign = s < i ? -1 : 1;
        std::vector<BigInt> next(p.size() + 1);
        for (std::size_t j = 0; j < p.size(); ++j) {
            next[j] += p[j];
            next[j + 1] += p[j] * sign;
        }
        p = std::move(next);
    }
    return p;
}

std::vector<BitVector> random_basis(std::mt19937_64& rng, std::size_t n, std::size_t rows) {
    std::vector<BitVector> out;
    for (std::size_t r = 0; r < rows; ++r) {
        BitVector v(n);
        for (std::size_t i = 0; i < n; ++i)
            if (rng() & 1U) v.set(i);
        out.push_back(v);
    }
    return row_reduce(out);
}

}  // namespace

TEST(Krawtchouk, MatchesConvolution) {
    for (std::size_t n = 0; n <= 24; ++n)
        for (std::size_t i = 0; i <= n; ++i) ASSERT_EQ(krawtchouk_row(n, i), naive_expansion(n, i)) << n << "," << i;
}

TEST(MacWilliams, RepetitionToParity) {
    for (std::size_t n = 3; n <= 12; ++n) {
        WeightEnumerator rep(n);
        rep.add(0, 1);
        rep.add(n, 1);
        const auto dual = macwilliams_transform(rep, 2);
        for (std::size_t i = 0; i <= n; ++i) EXPECT_EQ(dual[i], i % 2 == 0 ? binomial(n, i) : BigInt(0));
    }
}

TEST(MacWilliams, HammingDualTransform) {
    // oracle: brute-force enumeration of the length-7 Hamming code
    const auto brute = enumerate_weight_distribution(build_named_code(Family::hamming, 3));
    ASSERT_EQ(brute, WeightEnumerator::from_counts({1, 0, 0, 7, 7, 0, 0, 1}));
    const auto dual = WeightEnumerator::from_sparse(7, {{0, 1}, {4, 7}});
    EXPECT_EQ(macwilliams_transform(dual, 8), brute);
}

TEST(MacWilliams, RejectsNonCodeInput) {
    const auto w = WeightEnumerator::from_counts({1, 1, 0});
    EXPECT_THROW(macwilliams_transform(w, 4), std::invalid_argument);  // size mismatch
    const auto odd = WeightEnumerator::from_counts({1, 1, 1});
    EXPECT_THROW(macwilliams_transform(odd, 3), std::invalid_argument);  // not a power of 2
    const auto fake = WeightEnumerator::from_counts({1, 0, 0, 1, 1, 0, 1, 0});
    EXPECT_THROW(macwilliams_transform(fake), std::domain_error);
}

TEST(MacWilliams, TransformOfRandomCodesMatchesNullspaceEnumeration) {
    std::mt19937_64 rng(20261019);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 14;
        const std::size_t rows = rng() % (n + 1);
        const auto basis = random_basis(rng, n, rows);
        const auto w = enumerate_span_distribution(basis, n);
        const auto dual = enumerate_span_distribution(nullspace_basis(basis, n), n);
        EXPECT_EQ(macwilliams_transform(w), dual);
        EXPECT_EQ(macwilliams_transform(macwilliams_transform(w)), w);
    }
}

TEST(MacWilliams, NamedFamiliesMatchNullspaceDuals) {
    for (auto family : {Family::hamming, Family::bch2, Family::melas, Family::parity, Family::repetition}) {
        for (int m : {3, 4}) {
            const auto code = build_named_code(family, m);
            const auto w = enumerate_weight_distribution(code);
            const auto dual = enumerate_span_distribution(dual_basis(code), code.length());
            EXPECT_EQ(macwilliams_transform(w), dual) << family_name(family) << " m=" << m;
        }
    }
}

TEST(PolyStats, Basics) {
    auto s = poly_stats(WeightEnumerator::from_counts({1, 0, 0, 7, 7, 0, 0, 1}));
    ASSERT_TRUE(s.min_distance);
    EXPECT_EQ(*s.min_distance, 3U);
    EXPECT_EQ(s.total, 16);
    EXPECT_EQ(s.mean_weight, Rational(7, 2));

    s = poly_stats(WeightEnumerator::from_counts({1, 0, 0}));
    EXPECT_FALSE(s.min_distance);

    s = poly_stats(WeightEnumerator::from_counts({1, 0, 6, 0, 1}));
    EXPECT_EQ(*s.min_distance, 2U);
}

TEST(WeightEnumerator, RejectsNegativeCounts) {
    EXPECT_THROW(WeightEnumerator::from_counts({1, -1}), std::invalid_argument);
    EXPECT_THROW(WeightEnumerator::from_sparse(3, {{4, 1}}), std::invalid_argument);
}
