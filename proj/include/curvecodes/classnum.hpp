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

#ifndef CURVECODES_CLASSNUM_HPP
#define CURVECODES_CLASSNUM_HPP

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace curvecodes {

namespace detail {

// Triples (a, b, c) with b^2 - 4ac = d, |b| <= a <= c, and b > 0 whenever |b| = a or a = c.
inline std::int64_t count_reduced_forms(std::int64_t d) {
    const std::int64_t D = -d;
    std::int64_t count = 0;
    for (std::int64_t b = D % 2; 3 * b * b <= D; b += 2) {
        const std::int64_t ac = (b * b + D) / 4;
        for (std::int64_t a = b == 0 ? 1 : b; a * a <= ac; ++a) {
            if (ac % a) continue;
            const std::int64_t c = ac / a;
            count += (b == 0 || b == a || a == c) ? 1 : 2;
        }
    }
    return count;
}

}  // namespace detail

/// Memo table for H(d); safe for concurrent use.
class ClassNumberCache {
   public:
    std::int64_t get(std::int64_t d) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = memo_.find(d); it != memo_.end()) return it->second;
        }
        const std::int64_t h = detail::count_reduced_forms(d);
        std::unique_lock lock(mutex_);
        memo_.emplace(d, h);
        return h;
    }

   private:
    std::shared_mutex mutex_;
    std::unordered_map<std::int64_t, std::int64_t> memo_;
};

inline ClassNumberCache& global_class_number_cache() {
    static ClassNumberCache cache;
    return cache;
}

/*
 * Kronecker class number H(d): the number of SL_2(Z)-classes of positive
 * definite binary quadratic forms of discriminant d, counted as reduced
 * triples. Non-primitive forms are included.
 */
inline std::int64_t kronecker_class_number(std::int64_t d) {
    if (d >= 0) throw std::invalid_argument("class number needs d < 0, got " + std::to_string(d));
    const std::int64_t r = ((d % 4) + 4) % 4;
    if (r != 0 && r != 1) throw std::invalid_argument("class number needs d = 0 or 1 (mod 4), got " + std::to_string(d));
    if (d < -(std::int64_t{1} << 40)) throw std::invalid_argument("|d| too large for triple counting");
    return global_class_number_cache().get(d);
}

/// Throws unless q = 2^m with 2 <= m <= 62; returns m.
inline int checked_log2_q(std::int64_t q) {
    if (q < 4 || (q & (q - 1)) != 0) throw std::invalid_argument("q must be 2^m with m >= 2, got " + std::to_string(q));
    int m = 0;
    while ((std::int64_t{1} << m) != q) ++m;
    return m;
}

/// Odd t with t^2 < 4q and t = q + 1 (mod 4), increasing.
inline std::vector<std::int64_t> admissible_traces(std::int64_t q) {
    checked_log2_q(q);
    std::vector<std::int64_t> ts;
    std::int64_t bound = 0;
    while ((bound + 1) * (bound + 1) < 4 * q) ++bound;
    for (std::int64_t t = -bound; t <= bound; ++t)
        if ((((t - (q + 1)) % 4) + 4) % 4 == 0) ts.push_back(t);
    return ts;
}

struct ClassNumberRow {
    struct Entry {
        std::int64_t t;
        std::int64_t d;  // t^2 - 4q
        std::int64_t h;
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    std::int64_t q = 0;
    std::vector<Entry> entries;

    std::int64_t sum_h() const {
        std::int64_t s = 0;
        for (const auto& e : entries) s += e.h;
        return s;
    }
    std::int64_t sum_t_h() const {
        std::int64_t s = 0;
        for (const auto& e : entries) s += e.t * e.h;
        return s;
    }
};

inline ClassNumberRow class_number_row(std::int64_t q) {
    ClassNumberRow row;
    row.q = q;
    for (std::int64_t t : admissible_traces(q)) {
        const std::int64_t d = t * t - 4 * q;
        row.entries.push_back({t, d, kronecker_class_number(d)});
    }
    return row;
}

}  // namespace curvecodes

#endif  // CURVECODES_CLASSNUM_HPP
