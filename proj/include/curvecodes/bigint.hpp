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

#ifndef CURVECODES_BIGINT_HPP
#define CURVECODES_BIGINT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace curvecodes {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline BigInt parse_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed integer literal: " + s);
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer literal: " + s);
    return BigInt(s);
}

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

/// Full row C(n, 0..n), built multiplicatively.
inline std::vector<BigInt> binomial_row(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("binomial_row: negative n");
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        row[i + 1] = row[i] * (n - i);
        row[i + 1] /= (i + 1);
    }
    return row;
}

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

/// True when x is a positive power of two (including 1).
inline bool is_power_of_two(const BigInt& x) {
    if (x <= 0) return false;
    return (x & (x - 1)) == 0;
}

/// Exact integer square root for perfect squares; throws otherwise.
inline std::int64_t exact_isqrt(std::int64_t x) {
    if (x < 0) throw std::domain_error("exact_isqrt of negative value");
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= x) ++r;
    if (r * r != x) throw std::domain_error("exact_isqrt: " + std::to_string(x) + " is not a square");
    return r;
}

}  // namespace curvecodes

#endif  // CURVECODES_BIGINT_HPP
