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

#ifndef CURVECODES_DISTRIBUTIONS_HPP
#define CURVECODES_DISTRIBUTIONS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "classnum.hpp"
#include "enumerator.hpp"
#include "gf2m.hpp"
#include "hecke.hpp"

namespace curvecodes {

namespace detail {

inline std::int64_t checked_q(int m, int min_m, const char* what) {
    if (m < min_m || m > kMaxFieldDegree)
        throw std::invalid_argument(std::string(what) + " needs " + std::to_string(min_m) + " <= m <= " +
                                    std::to_string(kMaxFieldDegree) + ", got " + std::to_string(m));
    return std::int64_t{1} << m;
}

// (-1)^floor((i+1)/2)
inline int alternating_sign(std::size_t i) { return ((i + 1) / 2) % 2 == 0 ? 1 : -1; }

inline BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& what, std::size_t i) {
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(num, den, quotient, remainder);
    if (remainder != 0) throw std::domain_error(what + ": non-integral A_" + std::to_string(i) + " = " + num.str() + "/" + den.str());
    if (quotient < 0) throw std::domain_error(what + ": negative A_" + std::to_string(i) + " = " + quotient.str());
    return quotient;
}

}  // namespace detail

/// Even-weight code of length n: A_i = C(n, i) for even i.
inline WeightEnumerator parity_distribution(std::size_t n) {
    if (n < 1) throw std::invalid_argument("parity_distribution needs n >= 1");
    auto row = binomial_row(static_cast<std::int64_t>(n));
    for (std::size_t i = 1; i <= n; i += 2) row[i] = 0;
    return WeightEnumerator(std::move(row));
}

inline WeightEnumerator repetition_distribution(std::size_t n) {
    if (n < 1) throw std::invalid_argument("repetition_distribution needs n >= 1");
    WeightEnumerator w(n);
    w.add(0, 1);
    w.add(n, 1);
    return w;
}

/// A_i = (C(q-1, i) + (q-1)(-1)^floor((i+1)/2) C(q/2-1, floor(i/2))) / q.
inline WeightEnumerator hamming_distribution(int m) {
    const std::int64_t q = detail::checked_q(m, 2, "hamming_distribution");
    const std::size_t n = static_cast<std::size_t>(q - 1);
    const auto big = binomial_row(q - 1);
    const auto half = binomial_row(q / 2 - 1);
    std::vector<BigInt> a(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        BigInt num = big[i];
        if (i / 2 < half.size()) num += BigInt(q - 1) * half[i / 2] * detail::alternating_sign(i);
        a[i] = detail::exact_div(num, BigInt(q), "hamming_distribution", i);
    }
    return WeightEnumerator(std::move(a));
}

/// {0: 1, q/2: q-1}.
inline WeightEnumerator hamming_dual_distribution(int m) {
    const std::int64_t q = detail::checked_q(m, 2, "hamming_dual_distribution");
    WeightEnumerator w(static_cast<std::size_t>(q - 1));
    w.add(0, 1);
    w.add(static_cast<std::size_t>(q / 2), q - 1);
    return w;
}

/*
 * Dual of the double-error-correcting BCH code. Weight (q + t)/2 collects
 * the curves with q + 1 - t points; the conic words (mu = 0, lambda != 0)
 * land on q/2. Classes with equal point counts are folded into one row.
 */
inline WeightEnumerator bch_dual_distribution(int m) {
    const std::int64_t q = detail::checked_q(m, 3, "bch_dual_distribution");
    WeightEnumerator w(static_cast<std::size_t>(q - 1));
    w.add(0, 1);
    auto put = [&](std::int64_t weight, const BigInt& num, std::int64_t den) {
        w.add(static_cast<std::size_t>(weight), detail::exact_div(num, BigInt(den), "bch_dual_distribution",
                                                                  static_cast<std::size_t>(weight)));
    };
    if (m % 2 == 1) {
        const std::int64_t s = exact_isqrt(2 * q);
        put((q + s) / 2, BigInt(q - 1) * (q - s), 4);
        put(q / 2, BigInt(q - 1) * q / 2 + (q - 1), 1);
        put((q - s) / 2, BigInt(q - 1) * (q + s), 4);
    } else {
        const std::int64_t r = exact_isqrt(q);
        put((q + 2 * r) / 2, BigInt(q - 1) * (q - 2 * r), 24);
        put((q + r) / 2, BigInt(q - 1) * (q - r), 3);
        put(q / 2, BigInt(q - 1) * q / 4 + (q - 1), 1);
        put((q - r) / 2, BigInt(q - 1) * (q + r), 3);
        put((q - 2 * r) / 2, BigInt(q - 1) * (q + 2 * r), 24);
    }
    return w;
}

/// Primal BCH distribution by MacWilliams transform of the dual table.
inline WeightEnumerator bch_distribution(int m) {
    const std::int64_t q = detail::checked_q(m, 3, "bch_distribution");
    return macwilliams_transform(bch_dual_distribution(m), BigInt(q) * q);
}

/*
 * Dual of the Melas code: a word with lambda * mu != 0 has weight
 * (q - 1 + t)/2 where q + 1 - t points lie on Y^2 + XY = X^3 + nu^2 X,
 * nu^2 = lambda mu; each t occurs for H(t^2 - 4q) values of nu. The 2(q-1)
 * words with exactly one of lambda, mu zero have weight q/2 (t = 1).
 */
inline WeightEnumerator melas_dual_distribution(int m) {
    const std::int64_t q = detail::checked_q(m, 3, "melas_dual_distribution");
    WeightEnumerator w(static_cast<std::size_t>(q - 1));
    w.add(0, 1);
    for (const auto& e : class_number_row(q).entries) {
        const std::int64_t weight = (q - 1 + e.t) / 2;
        const std::int64_t extra = e.t == 1 ? 2 : 0;
        w.add(static_cast<std::size_t>(weight), BigInt(q - 1) * (e.h + extra));
    }
    return w;
}

/*
 * W_{i,j}(q), 0 <= j <= i <= i_max, from W_{0,0} = 1, W_{1,1} = -1 and
 *   (i+1) W_{i+1,j+1} = -q W_{i,j+2} - W_{i,j} - (q-i) W_{i-1,j+1}.
 * Stored as the integers V_{i,j} = i! W_{i,j}, for which the recursion reads
 *   V_{i+1,j+1} = -q V_{i,j+2} - V_{i,j} - i (q-i) V_{i-1,j+1}.
 */
class WTable {
   public:
    WTable(std::size_t i_max, std::int64_t q) : q_(q), i_max_(i_max), rows_(i_max + 1), factorial_(i_max + 1) {
        factorial_[0] = 1;
        for (std::size_t i = 1; i <= i_max; ++i) factorial_[i] = factorial_[i - 1] * i;
        for (std::size_t i = 0; i <= i_max; ++i) rows_[i].assign(i + 1, BigInt(0));
        rows_[0][0] = 1;
        if (i_max >= 1) rows_[1][1] = -1;
        for (std::size_t i = 1; i < i_max; ++i) {
            const BigInt c = BigInt(static_cast<std::int64_t>(i)) * (q - static_cast<std::int64_t>(i));
            for (std::size_t jj = 0; jj <= i + 1; ++jj) {  // jj = j + 1
                const std::int64_t j = static_cast<std::int64_t>(jj) - 1;
                BigInt v = -BigInt(q) * scaled(i, j + 2) - scaled(i, j) - c * scaled(i - 1, j + 1);
                rows_[i + 1][jj] = std::move(v);
            }
        }
    }

    std::int64_t q() const noexcept { return q_; }
    std::size_t i_max() const noexcept { return i_max_; }

    /// i! * W_{i,j}; zero outside 0 <= j <= i.
    BigInt scaled(std::size_t i, std::int64_t j) const {
        if (i > i_max_) throw std::out_of_range("WTable row beyond i_max");
        if (j < 0 || static_cast<std::size_t>(j) > i) return 0;
        return rows_[i][static_cast<std::size_t>(j)];
    }
    const BigInt& factorial(std::size_t i) const { return factorial_.at(i); }

    Rational at(std::size_t i, std::int64_t j) const { return Rational(scaled(i, j), factorial_.at(i)); }

   private:
    std::int64_t q_;
    std::size_t i_max_;
    std::vector<std::vector<BigInt>> rows_;
    std::vector<BigInt> factorial_;
};

inline WTable w_table(std::size_t i_max, std::int64_t q) { return WTable(i_max, q); }

/*
 * Melas code distribution from Hecke traces:
 *   q^2 A_i = C(q-1, i) + 2(-1)^floor((i+1)/2) (q-1) C(q/2-1, floor(i/2))
 *             - (q-1) sum_{j = i mod 2} W_{i,j}(q) (1 + tau_{j+2}(q)).
 * Throws std::domain_error when some A_i is non-integral or negative.
 */
inline WeightEnumerator melas_distribution(int m, const HeckeTraceTable& traces) {
    const std::int64_t q = detail::checked_q(m, 3, "melas_distribution");
    if (traces.q() != q) throw std::invalid_argument("melas_distribution: trace table is for a different q");
    const std::size_t n = static_cast<std::size_t>(q - 1);
    if (traces.k_max() < static_cast<int>(n) + 2)
        throw std::invalid_argument("melas_distribution needs traces up to k = " + std::to_string(n + 2));
    const WTable w(n, q);
    const auto big = binomial_row(q - 1);
    const auto half = binomial_row(q / 2 - 1);
    std::vector<BigInt> a(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        BigInt head = big[i];
        if (i / 2 < half.size()) head += BigInt(2) * (q - 1) * half[i / 2] * detail::alternating_sign(i);
        BigInt tail = 0;
        for (std::size_t j = i % 2; j <= i; j += 2)
            tail += w.scaled(i, static_cast<std::int64_t>(j)) * (1 + traces.trace(static_cast<int>(j) + 2));
        // q^2 A_i = head - (q-1) tail / i!
        const BigInt num = head * w.factorial(i) - BigInt(q - 1) * tail;
        a[i] = detail::exact_div(num, w.factorial(i) * q * q, "melas_distribution", i);
    }
    return WeightEnumerator(std::move(a));
}

inline WeightEnumerator melas_distribution(int m) {
    const std::int64_t q = detail::checked_q(m, 3, "melas_distribution");
    return melas_distribution(m, HeckeTraceTable(q, static_cast<int>(q) + 1));
}

}  // namespace curvecodes

#endif  // CURVECODES_DISTRIBUTIONS_HPP
