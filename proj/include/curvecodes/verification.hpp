/*
   Copyright 2026 The curvecodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CURVECODES_VERIFICATION_HPP
#define CURVECODES_VERIFICATION_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "classnum.hpp"
#include "curves.hpp"
#include "cyclic.hpp"
#include "distributions.hpp"
#include "enumerator.hpp"
#include "hecke.hpp"

namespace curvecodes {

// Cross-checks between independent routes. Every comparison is exact.

struct VerificationCheck {
    std::string name;
    std::string parameters;
    std::string expected_source;
    bool passed = false;
    double elapsed_seconds = 0.0;
    std::string detail;  // first mismatch, or empty
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool overall() const {
        return std::all_of(checks.begin(), checks.end(), [](const VerificationCheck& c) { return c.passed; });
    }
};

struct VerificationOptions {
    int max_m = 16;  // caps every m range; valid range 5..16
    unsigned workers = std::max(1U, std::thread::hardware_concurrency());
    std::uint64_t random_seed = 20261019;
    int random_codes = 100;
};

inline constexpr int kMinVerifyM = 5;
inline constexpr int kMaxVerifyM = 16;

/// Published class numbers H(d) for -d = 3..100 with d = 0, 1 mod 4.
inline const std::vector<std::pair<std::int64_t, std::int64_t>>& printed_class_number_table() {
    static const std::vector<std::pair<std::int64_t, std::int64_t>> table = {
        {-3, 1},  {-4, 1},  {-7, 1},  {-8, 1},  {-11, 1}, {-12, 2}, {-15, 2}, {-16, 2}, {-19, 1}, {-20, 2},
        {-23, 3}, {-24, 2}, {-27, 2}, {-28, 2}, {-31, 3}, {-32, 3}, {-35, 2}, {-36, 3}, {-39, 4}, {-40, 2},
        {-43, 1}, {-44, 4}, {-47, 5}, {-48, 4}, {-51, 2}, {-52, 2}, {-55, 4}, {-56, 4}, {-59, 3}, {-60, 4},
        {-63, 5}, {-64, 4}, {-67, 1}, {-68, 4}, {-71, 7}, {-72, 3}, {-75, 3}, {-76, 4}, {-79, 5}, {-80, 6},
        {-83, 3}, {-84, 4}, {-87, 6}, {-88, 2}, {-91, 2}, {-92, 6}, {-95, 8}, {-96, 6}, {-99, 3}, {-100, 3}};
    return table;
}

namespace detail {

// Records the first failure; later expectations are still evaluated but not reported.
class Expect {
   public:
    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& where) {
        if (!(got == want)) fail(where);
    }
    void that(bool ok, const std::string& where) {
        if (!ok) fail(where);
    }
    void fail(const std::string& where) {
        if (ok_) detail_ = where;
        ok_ = false;
    }
    bool ok() const { return ok_; }
    const std::string& detail() const { return detail_; }

   private:
    bool ok_ = true;
    std::string detail_;
};

inline std::string m_range(int lo, int hi) {
    return lo == hi ? "m=" + std::to_string(lo) : "m=" + std::to_string(lo) + ".." + std::to_string(hi);
}

inline VerificationCheck timed_check(std::string name, std::string parameters, std::string source, double limit_seconds,
                                     const std::function<void(Expect&)>& body) {
    VerificationCheck c{std::move(name), std::move(parameters), std::move(source), false, 0.0, {}};
    Expect e;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(e);
    } catch (const std::exception& ex) {
        e.fail(std::string("exception: ") + ex.what());
    }
    c.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && c.elapsed_seconds > limit_seconds && e.ok())
        e.fail("runtime " + std::to_string(c.elapsed_seconds) + " s over budget " + std::to_string(limit_seconds) + " s");
    c.passed = e.ok();
    c.detail = e.detail();
    return c;
}

inline std::vector<BitVector> random_basis(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    std::vector<BitVector> rows;
    for (std::size_t r = 0; r < k; ++r) {
        BitVector v(n);
        for (std::size_t j = 0; j < n; ++j)
            if (rng() & 1U) v.set(j);
        rows.push_back(std::move(v));
    }
    return row_reduce(std::move(rows));
}

}  // namespace detail

/// Runs the ten acceptance checks with m ranges capped at options.max_m.
inline VerificationReport run_verification(const VerificationOptions& options = {}) {
    if (options.max_m < kMinVerifyM || options.max_m > kMaxVerifyM)
        throw std::invalid_argument("max-m must lie in " + std::to_string(kMinVerifyM) + ".." + std::to_string(kMaxVerifyM));
    const int M = options.max_m;
    const auto cap = [M](int hi) { return std::min(hi, M); };
    VerificationReport report;
    using detail::Expect;
    using detail::m_range;

    report.checks.push_back(detail::timed_check(
        "class-number-table", "-d=3..100 (50 entries)", "printed class-number table", 1.0, [](Expect& e) {
            for (auto [d, h] : printed_class_number_table())
                e.equal(kronecker_class_number(d), h, "H(" + std::to_string(d) + ")");
        }));

    report.checks.push_back(detail::timed_check(
        "hamming-closed-form", m_range(3, 5) + " brute force; A_3 " + m_range(3, cap(10)),
        "brute-force enumeration; (q-1)(q-2)/6", 120.0, [&](Expect& e) {
            for (int m = 3; m <= 5; ++m) {
                const auto code = build_named_code(Family::hamming, m);
                const auto brute = enumerate_weight_distribution(code, std::uint64_t{1} << 26, options.workers);
                e.equal(hamming_distribution(m), brute, "hamming m=" + std::to_string(m));
            }
            for (int m = 3; m <= cap(10); ++m) {
                const std::int64_t q = std::int64_t{1} << m;
                e.equal(hamming_distribution(m)[3], BigInt((q - 1) * (q - 2) / 6), "A_3 m=" + std::to_string(m));
            }
        }));

    report.checks.push_back(detail::timed_check(
        "bch-dual-table", m_range(3, cap(8)), "trace enumeration over (lambda, mu)", 0, [&](Expect& e) {
            for (int m = 3; m <= cap(8); ++m) {
                const auto table = bch_dual_distribution(m);
                const BigInt q = pow2(static_cast<unsigned>(m));
                e.equal(table, dual_trace_distribution(Family::bch2, m), "bch dual m=" + std::to_string(m));
                e.equal(table.total(), q * q, "bch dual sum m=" + std::to_string(m));
            }
        }));

    report.checks.push_back(detail::timed_check(
        "bch-primal-transform", "m=4,5", "brute-force enumeration; minimum distance 5", 0, [&](Expect& e) {
            for (int m = 4; m <= 5; ++m) {
                const auto code = build_named_code(Family::bch2, m);
                const auto brute = enumerate_weight_distribution(code, kDefaultWorkLimit, options.workers);
                e.equal(bch_distribution(m), brute, "bch primal m=" + std::to_string(m));
                e.equal(poly_stats(brute).min_distance.value_or(0), std::size_t{5}, "bch d m=" + std::to_string(m));
            }
        }));

    report.checks.push_back(detail::timed_check(
        "melas-dual-class-numbers", m_range(4, cap(8)), "trace enumeration over (lambda, mu)", 0, [&](Expect& e) {
            for (int m = 4; m <= cap(8); ++m)
                e.equal(melas_dual_distribution(m), dual_trace_distribution(Family::melas, m),
                        "melas dual m=" + std::to_string(m));
        }));

    report.checks.push_back(detail::timed_check(
        "melas-trace-formula", "brute force m=4,5; transform " + m_range(4, cap(10)),
        "brute-force enumeration; MacWilliams transform of the dual", 0, [&](Expect& e) {
            for (int m = 4; m <= 5; ++m) {
                const auto code = build_named_code(Family::melas, m);
                e.equal(melas_distribution(m), enumerate_weight_distribution(code, kDefaultWorkLimit, options.workers),
                        "melas brute m=" + std::to_string(m));
            }
            for (int m = 4; m <= cap(10); ++m) {
                const BigInt q = pow2(static_cast<unsigned>(m));
                // melas_distribution itself rejects non-integral or negative A_i
                e.equal(melas_distribution(m), macwilliams_transform(melas_dual_distribution(m), q * q),
                        "melas transform m=" + std::to_string(m));
            }
        }));

    report.checks.push_back(detail::timed_check(
        "class-number-identities", m_range(2, M), "sum H = q-1, sum tH = -1, tau_3 = tau_4 = 0", 5.0, [&](Expect& e) {
            for (int m = 2; m <= M; ++m) {
                const std::int64_t q = std::int64_t{1} << m;
                const auto row = class_number_row(q);
                const std::string at = " m=" + std::to_string(m);
                e.equal(row.sum_h(), q - 1, "sum H" + at);
                e.equal(row.sum_t_h(), std::int64_t{-1}, "sum tH" + at);
                const HeckeTraceTable traces(q, 4);
                e.equal(traces.trace(3), BigInt(0), "tau_3" + at);
                e.equal(traces.trace(4), BigInt(0), "tau_4" + at);
            }
        }));

    report.checks.push_back(detail::timed_check(
        "curve-censuses", "bch " + m_range(3, cap(6)) + "; melas " + m_range(4, cap(10)),
        "supersingular class counts; class numbers H(t^2-4q)", 0, [&](Expect& e) {
            for (int m = 3; m <= cap(6); ++m) {
                const FieldContext ctx(m);
                const auto census = bch_family_census(ctx);
                e.equal(census, predicted_bch_census(m), "bch census m=" + std::to_string(m));
                std::int64_t total = 0;
                for (const auto& kv : census) total += kv.second;
                e.equal(total, std::int64_t{ctx.q()} * (ctx.q() - 1), "bch census total m=" + std::to_string(m));
            }
            for (int m = 4; m <= cap(10); ++m) {
                const FieldContext ctx(m);
                e.equal(melas_family_census(ctx), predicted_melas_census(ctx.q()), "melas census m=" + std::to_string(m));
            }
        }));

    report.checks.push_back(detail::timed_check(
        "delsarte-duality", "m=3,4; hamming, bch2, melas", "nullspace of the generator matrix", 0, [&](Expect& e) {
            for (auto family : {Family::hamming, Family::bch2, Family::melas})
                for (int m : {3, 4}) {
                    const auto code = build_named_code(family, m);
                    e.equal(span_words(dual_basis(code), code.length()), trace_code_words(family, m),
                            family_name(family) + " m=" + std::to_string(m));
                }
        }));

    report.checks.push_back(detail::timed_check(
        "macwilliams-involution",
        std::to_string(options.random_codes) + " random codes, n<=20, seed " + std::to_string(options.random_seed),
        "identity; nullspace enumeration", 0, [&](Expect& e) {
            std::mt19937_64 rng(options.random_seed);
            for (int s = 0; s < options.random_codes; ++s) {
                const std::size_t n = 1 + rng() % 20;
                const std::size_t k = 1 + rng() % n;
                const auto basis = detail::random_basis(rng, n, k);
                const auto w = enumerate_span_distribution(basis, n);
                const BigInt size = pow2(static_cast<unsigned>(basis.size()));
                const BigInt dual_size = pow2(static_cast<unsigned>(n - basis.size()));
                const auto dual = macwilliams_transform(w, size);
                const std::string at = "code " + std::to_string(s) + " n=" + std::to_string(n);
                e.equal(dual, enumerate_span_distribution(nullspace_basis(basis, n), n), "dual " + at);
                e.equal(macwilliams_transform(dual, dual_size), w, "involution " + at);
            }
        }));

    return report;
}

}  // namespace curvecodes

#endif  // CURVECODES_VERIFICATION_HPP
