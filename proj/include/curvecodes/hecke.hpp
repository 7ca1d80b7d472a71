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

#ifndef CURVECODES_HECKE_HPP
#define CURVECODES_HECKE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "classnum.hpp"

namespace curvecodes {

/// Q_0..Q_{kappa_max}(t, n): Q_0 = 1, Q_1 = t, Q_{k+1} = t Q_k - n Q_{k-1}.
inline std::vector<BigInt> q_poly_sequence(int kappa_max, std::int64_t t, std::int64_t n) {
    if (kappa_max < 0) throw std::invalid_argument("q_poly: kappa must be >= 0");
    std::vector<BigInt> qs(static_cast<std::size_t>(kappa_max) + 1);
    qs[0] = 1;
    if (kappa_max >= 1) qs[1] = t;
    for (int k = 1; k < kappa_max; ++k) qs[k + 1] = qs[k] * t - qs[k - 1] * n;
    return qs;
}

inline BigInt q_poly(int kappa, std::int64_t t, std::int64_t n) { return q_poly_sequence(kappa, t, n).back(); }

/*
 * Traces tau_k(q) of the Hecke operator T_q on cusp forms of weight k for
 * Gamma_1(4), for 2 <= k <= k_max:
 *   tau_k(q) = -1 - (-1)^{kq/2} sum_t Q_{k-2}(t, q) H(t^2 - 4q),
 * t odd, t^2 < 4q, t = q + 1 (mod 4); and tau_2(q) = -q by convention.
 */
class HeckeTraceTable {
   public:
    HeckeTraceTable(std::int64_t q, int k_max) : q_(q), k_max_(k_max) {
        checked_log2_q(q);
        if (k_max < 2) throw std::invalid_argument("hecke traces need k_max >= 2");
        const auto row = class_number_row(q);
        std::vector<BigInt> sums(static_cast<std::size_t>(k_max) + 1);  // sums[k] = sum_t Q_{k-2} H
        for (const auto& e : row.entries) {
            const auto qs = q_poly_sequence(k_max - 2, e.t, q);
            for (int k = 2; k <= k_max; ++k) sums[static_cast<std::size_t>(k)] += qs[static_cast<std::size_t>(k - 2)] * e.h;
        }
        formula_.resize(static_cast<std::size_t>(k_max) + 1);
        traces_.resize(static_cast<std::size_t>(k_max) + 1);
        for (int k = 2; k <= k_max; ++k) {
            const bool negative = ((static_cast<std::int64_t>(k) * (q / 2)) & 1) != 0;
            const BigInt& s = sums[static_cast<std::size_t>(k)];
            formula_[static_cast<std::size_t>(k)] = negative ? BigInt(-1) + s : BigInt(-1) - s;
            traces_[static_cast<std::size_t>(k)] = k == 2 ? BigInt(-q) : formula_[static_cast<std::size_t>(k)];
        }
    }

    std::int64_t q() const noexcept { return q_; }
    int k_max() const noexcept { return k_max_; }

    const BigInt& trace(int k) const {
        if (k < 2 || k > k_max_) throw std::out_of_range("hecke trace index " + std::to_string(k) + " outside [2, k_max]");
        return traces_[static_cast<std::size_t>(k)];
    }
    /// The sum formula evaluated at k (including k = 2, where the convention applies instead).
    const BigInt& formula_value(int k) const {
        if (k < 2 || k > k_max_) throw std::out_of_range("hecke trace index outside [2, k_max]");
        return formula_[static_cast<std::size_t>(k)];
    }
    /// Replace tau_k; used to probe sensitivity of downstream formulas.
    void override_trace(int k, BigInt value) {
        if (k < 2 || k > k_max_) throw std::out_of_range("hecke trace index outside [2, k_max]");
        traces_[static_cast<std::size_t>(k)] = std::move(value);
    }

   private:
    std::int64_t q_;
    int k_max_;
    std::vector<BigInt> traces_, formula_;
};

inline constexpr int kDefaultHeckeKMax = 40;

inline BigInt hecke_trace(int k, std::int64_t q) {
    if (k < 2) throw std::invalid_argument("hecke trace needs k >= 2");
    return HeckeTraceTable(q, k).trace(k);
}

}  // namespace curvecodes

#endif  // CURVECODES_HECKE_HPP
