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

#ifndef CURVECODES_ENUMERATOR_HPP
#define CURVECODES_ENUMERATOR_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace curvecodes {

/// Weight distribution A_0..A_n of a binary code of length n.
class WeightEnumerator {
   public:
    WeightEnumerator() : counts_(1) {}
    explicit WeightEnumerator(std::size_t n) : counts_(n + 1) {}
    explicit WeightEnumerator(std::vector<BigInt> counts) : counts_(std::move(counts)) {
        if (counts_.empty()) throw std::invalid_argument("WeightEnumerator: need at least A_0");
        for (const auto& c : counts_)
            if (c < 0) throw std::invalid_argument("WeightEnumerator: negative count");
    }
    template <class Int>
    static WeightEnumerator from_counts(std::initializer_list<Int> values) {
        std::vector<BigInt> v;
        for (const auto& x : values) v.emplace_back(x);
        return WeightEnumerator(std::move(v));
    }
    /// Sparse weight -> count map on length n.
    static WeightEnumerator from_sparse(std::size_t n, const std::map<std::size_t, BigInt>& sparse) {
        WeightEnumerator w(n);
        for (const auto& [weight, count] : sparse) {
            if (weight > n) throw std::invalid_argument("weight " + std::to_string(weight) + " exceeds length " + std::to_string(n));
            if (count < 0) throw std::invalid_argument("WeightEnumerator: negative count");
            w.counts_[weight] += count;
        }
        return w;
    }

    std::size_t length() const noexcept { return counts_.size() - 1; }
    const BigInt& operator[](std::size_t i) const { return counts_.at(i); }
    const std::vector<BigInt>& counts() const noexcept { return counts_; }

    void add(std::size_t weight, const BigInt& count) {
        if (count < 0) throw std::invalid_argument("WeightEnumerator: negative increment");
        counts_.at(weight) += count;
    }

    BigInt total() const {
        BigInt s = 0;
        for (const auto& c : counts_) s += c;
        return s;
    }

    std::map<std::size_t, BigInt> sparse() const {
        std::map<std::size_t, BigInt> out;
        for (std::size_t i = 0; i < counts_.size(); ++i)
            if (counts_[i] != 0) out.emplace(i, counts_[i]);
        return out;
    }

    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;

   private:
    std::vector<BigInt> counts_;
};

/*
 * Coefficients of (1 - X)^i (1 + X)^(n - i), i.e. the binary Krawtchouk
 * values K_j(i) for j = 0..n, via
 *   (j + 1) K_{j+1} = (n - 2i) K_j - (n - j + 1) K_{j-1}.
 */
inline std::vector<BigInt> krawtchouk_row(std::size_t n, std::size_t i) {
    if (i > n) throw std::invalid_argument("krawtchouk_row: i > n");
    std::vector<BigInt> k(n + 1);
    k[0] = 1;
    if (n == 0) return k;
    const long long a = static_cast<long long>(n) - 2 * static_cast<long long>(i);
    k[1] = a;
    for (std::size_t j = 1; j < n; ++j) {
        BigInt next = k[j] * a - k[j - 1] * static_cast<long long>(n - j + 1);
        k[j + 1] = next / static_cast<long long>(j + 1);
    }
    return k;
}

/// Sum_i A_i (1 - X)^i (1 + X)^(n - i) divided exactly by code_size.
inline WeightEnumerator macwilliams_transform(const WeightEnumerator& w, const BigInt& code_size) {
    if (code_size != w.total())
        throw std::invalid_argument("macwilliams_transform: code size " + code_size.str() + " differs from sum of counts " +
                                    w.total().str());
    if (!is_power_of_two(code_size))
        throw std::invalid_argument("macwilliams_transform: code size " + code_size.str() + " is not a power of 2");
    const std::size_t n = w.length();
    std::vector<BigInt> acc(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (w[i] == 0) continue;
        const auto row = krawtchouk_row(n, i);
        for (std::size_t j = 0; j <= n; ++j) acc[j] += w[i] * row[j];
    }
    for (std::size_t j = 0; j <= n; ++j) {
        BigInt quotient, remainder;
        boost::multiprecision::divide_qr(acc[j], code_size, quotient, remainder);
        if (remainder != 0)
            throw std::domain_error("macwilliams_transform: coefficient " + std::to_string(j) +
                                    " not divisible by code size; input is not a linear code's enumerator");
        if (quotient < 0)
            throw std::domain_error("macwilliams_transform: negative coefficient at weight " + std::to_string(j));
        acc[j] = std::move(quotient);
    }
    return WeightEnumerator(std::move(acc));
}

inline WeightEnumerator macwilliams_transform(const WeightEnumerator& w) { return macwilliams_transform(w, w.total()); }

struct EnumeratorStats {
    std::optional<std::size_t> min_distance;  // empty when only the zero word is present
    BigInt total;
    Rational mean_weight;
};

inline EnumeratorStats poly_stats(const WeightEnumerator& w) {
    EnumeratorStats s;
    BigInt weighted = 0;
    for (std::size_t i = 0; i <= w.length(); ++i) {
        s.total += w[i];
        weighted += w[i] * i;
        if (i > 0 && w[i] != 0 && !s.min_distance) s.min_distance = i;
    }
    if (s.total != 0) s.mean_weight = Rational(weighted, s.total);
    return s;
}

}  // namespace curvecodes

#endif  // CURVECODES_ENUMERATOR_HPP
