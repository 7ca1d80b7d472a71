#include <gtest/gtest.h>

#include <random>
#include <set>

#include "curvecodes/cyclic.hpp"

using namespace curvecodes;

TEST(NamedCodes, Generators) {
    const auto bch = build_named_code(Family::bch2, 4);
    EXPECT_EQ(bch.generator().to_string(), "T^8+T^7+T^6+T^4+1");
    EXPECT_EQ(bch.length(), 15U);
    EXPECT_EQ(bch.dimension(), 7U);

    const auto melas = build_named_code(Family::melas, 4);
    EXPECT_EQ(melas.generator().to_string(), "T^8+T^7+T^5+T^4+T^3+T+1");
    EXPECT_EQ(melas.dimension(), 7U);

    const auto ham = build_named_code(Family::hamming, 3);
    EXPECT_EQ(ham.generator().to_string(), "T^3+T+1");
    EXPECT_EQ(ham.length(), 7U);
    EXPECT_EQ(ham.dimension(), 4U);
}

TEST(NamedCodes, Dimensions) {
    for (int m = 2; m <= 16; ++m) {
        const std::size_t q = std::size_t{1} << m;
        EXPECT_EQ(build_named_code(Family::hamming, m).dimension(), q - 1 - m);
        if (m > 2) {
            EXPECT_EQ(build_named_code(Family::bch2, m).dimension(), q - 1 - 2 * m);
            EXPECT_EQ(build_named_code(Family::melas, m).dimension(), q - 1 - 2 * m);
        }
    }
}

TEST(NamedCodes, RangeErrors) {
    EXPECT_THROW(build_named_code(Family::hamming, 1), std::invalid_argument);
    EXPECT_THROW(build_named_code(Family::bch2, 2), std::invalid_argument);
    EXPECT_THROW(build_named_code(Family::melas, 2), std::invalid_argument);
    EXPECT_THROW(build_named_code(Family::hamming, 17), std::invalid_argument);
    EXPECT_THROW(build_named_code(Family::custom, 4), std::invalid_argument);
    EXPECT_THROW(parse_family("golay"), std::invalid_argument);
}

TEST(CyclicCode, GeneratorMustDivide) {
    EXPECT_THROW(CyclicCode(7, BitPolynomial::parse("T^2+1")), std::invalid_argument);
    EXPECT_THROW(CyclicCode(7, BitPolynomial(1)), std::invalid_argument);
    EXPECT_NO_THROW(CyclicCode(7, BitPolynomial::parse("T^3+T^2+1")));
}

TEST(Enumeration, SmallCodes) {
    EXPECT_EQ(enumerate_weight_distribution(build_named_code(Family::hamming, 3)),
              WeightEnumerator::from_counts({1, 0, 0, 7, 7, 0, 0, 1}));
    EXPECT_EQ(enumerate_weight_distribution(make_repetition_code(7)),
              WeightEnumerator::from_counts({1, 0, 0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(enumerate_weight_distribution(make_parity_code(3)), WeightEnumerator::from_counts({1, 0, 3, 0}));
}

TEST(Enumeration, SumsAndZeroWord) {
    for (auto family : {Family::hamming, Family::bch2, Family::melas}) {
        for (int m = 3; m <= 5; ++m) {
            const auto code = build_named_code(family, m);
            const auto w = enumerate_weight_distribution(code);
            EXPECT_EQ(w[0], 1);
            EXPECT_EQ(w.total(), pow2(static_cast<unsigned>(code.dimension())));
        }
    }
}

TEST(Enumeration, WorkLimit) {
    const auto code = build_named_code(Family::hamming, 5);  // k = 26
    EXPECT_THROW(enumerate_weight_distribution(code, std::uint64_t{1} << 20), std::length_error);
    EXPECT_THROW(enumerate_weight_distribution(build_named_code(Family::hamming, 6)), std::length_error);
}

TEST(Enumeration, WorkersDoNotChangeResult) {
    const auto code = build_named_code(Family::bch2, 5);
    EXPECT_EQ(enumerate_weight_distribution(code, kDefaultWorkLimit, 1),
              enumerate_weight_distribution(code, kDefaultWorkLimit, 3));
}

TEST(Enumeration, WideWordsMatchNarrowPath) {
    // repetition code of length 100 takes the multi-word path
    const auto w = enumerate_weight_distribution(make_repetition_code(100));
    EXPECT_EQ(w[0], 1);
    EXPECT_EQ(w[100], 1);
    EXPECT_EQ(w.total(), 2);
    // g = (T^70 - 1)/(T^2 + 1) = 1 + T^2 + ... + T^68
    const auto g = BitPolynomial::x_pow_n_minus_one(70) / BitPolynomial::parse("T^2+1");
    const CyclicCode c(70, g);
    EXPECT_EQ(c.dimension(), 2U);
    const auto wc = enumerate_weight_distribution(c);
    EXPECT_EQ(wc.total(), 4);
    EXPECT_EQ(wc[0], 1);
    EXPECT_EQ(wc[35], 2);
    EXPECT_EQ(wc[70], 1);
}

TEST(MinimumDistance, KnownValues) {
    EXPECT_EQ(minimum_distance(build_named_code(Family::hamming, 3)), 3U);
    EXPECT_EQ(minimum_distance(build_named_code(Family::hamming, 4)), 3U);
    EXPECT_EQ(minimum_distance(build_named_code(Family::bch2, 4)), 5U);
    EXPECT_EQ(minimum_distance(build_named_code(Family::bch2, 5)), 5U);
    EXPECT_GE(minimum_distance(build_named_code(Family::melas, 5)), 5U);
    EXPECT_GE(minimum_distance(build_named_code(Family::melas, 4)), 3U);
    EXPECT_EQ(minimum_distance(make_parity_code(4)), 2U);
}

TEST(CyclicShift, ClosedExhaustively) {
    for (auto family : {Family::hamming, Family::bch2, Family::melas}) {
        const auto code = build_named_code(family, 4);
        const auto words = span_words(code.generator_matrix(), code.length());
        const std::set<BitVector> all(words.begin(), words.end());
        for (const auto& w : words) ASSERT_TRUE(all.count(w.rotated()));
    }
}

TEST(CyclicShift, SampledForLargeDimension) {
    // bch2 m=6 has k = 51; sample random messages
    const auto code = build_named_code(Family::bch2, 6);
    std::mt19937_64 rng(7);
    for (int s = 0; s < 200; ++s) {
        BitVector msg(code.dimension());
        for (std::size_t j = 0; j < msg.size(); ++j)
            if (rng() & 1U) msg.set(j);
        const auto w = code.encode(msg);
        ASSERT_TRUE(code.contains(w));
        ASSERT_TRUE(code.contains(w.rotated()));
    }
}

TEST(DualBasis, RepetitionDualIsParity) {
    for (std::size_t n = 3; n <= 9; ++n) {
        const auto rep = make_repetition_code(n);
        const auto dual = dual_basis(rep);
        EXPECT_EQ(dual.size(), n - 1);
        const auto par = make_parity_code(n);
        for (const auto& v : dual) EXPECT_TRUE(par.contains(v));
    }
}

TEST(DualBasis, FullSpaceHasEmptyDual) {
    std::vector<BitVector> id;
    for (std::size_t i = 0; i < 6; ++i) {
        BitVector v(6);
        v.set(i);
        id.push_back(v);
    }
    EXPECT_TRUE(nullspace_basis(id, 6).empty());
}

TEST(DualBasis, OrthogonalAndInvolutive) {
    for (auto family : {Family::hamming, Family::bch2, Family::melas}) {
        for (int m : {3, 4}) {
            const auto code = build_named_code(family, m);
            const auto gen = code.generator_matrix();
            const auto dual = dual_basis(code);
            EXPECT_EQ(dual.size(), code.length() - code.dimension());
            for (const auto& d : dual)
                for (const auto& g : gen) ASSERT_FALSE(d.dot(g));
            const auto back = nullspace_basis(dual, code.length());
            EXPECT_EQ(span_words(back, code.length()), span_words(gen, code.length()));
        }
    }
}

TEST(TraceDual, Examples) {
    EXPECT_EQ(dual_trace_distribution(Family::hamming, 3), WeightEnumerator::from_sparse(7, {{0, 1}, {4, 7}}));
    EXPECT_EQ(dual_trace_distribution(Family::bch2, 3), WeightEnumerator::from_sparse(7, {{0, 1}, {2, 21}, {4, 35}, {6, 7}}));
    // direct enumeration at q = 16
    EXPECT_EQ(dual_trace_distribution(Family::melas, 4),
              WeightEnumerator::from_sparse(15, {{0, 1}, {4, 30}, {6, 60}, {8, 105}, {10, 60}}));
}

TEST(TraceDual, Totals) {
    for (int m = 3; m <= 7; ++m) {
        const BigInt q = pow2(static_cast<unsigned>(m));
        EXPECT_EQ(dual_trace_distribution(Family::hamming, m).total(), q);
        EXPECT_EQ(dual_trace_distribution(Family::bch2, m).total(), q * q);
        EXPECT_EQ(dual_trace_distribution(Family::melas, m).total(), q * q);
    }
}

TEST(TraceDual, MatchesNullspaceEnumeration) {
    for (auto family : {Family::hamming, Family::bch2, Family::melas}) {
        for (int m : {3, 4}) {
            const auto code = build_named_code(family, m);
            EXPECT_EQ(enumerate_span_distribution(dual_basis(code), code.length()), dual_trace_distribution(family, m));
        }
    }
}

TEST(TraceDual, DelsarteSetEquality) {
    for (auto family : {Family::hamming, Family::bch2, Family::melas}) {
        for (int m : {3, 4}) {
            const auto code = build_named_code(family, m);
            EXPECT_EQ(span_words(dual_basis(code), code.length()), trace_code_words(family, m))
                << family_name(family) << " m=" << m;
        }
    }
}

TEST(TraceDual, LambdaMuZeroWordCount) {
    // words with exactly one of lambda, mu zero all have weight q/2; there are 2(q-1) of them
    const FieldContext ctx(4);
    int count = 0;
    for (std::uint32_t l = 0; l < ctx.q(); ++l)
        for (std::uint32_t u = 0; u < ctx.q(); ++u)
            if ((l == 0) != (u == 0)) {
                EXPECT_EQ(trace_word(ctx, Family::melas, FieldElement{l}, FieldElement{u}).weight(), 8U);
                ++count;
            }
    EXPECT_EQ(count, 2 * 15);
}
