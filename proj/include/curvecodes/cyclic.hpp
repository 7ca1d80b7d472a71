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

#ifndef CURVECODES_CYCLIC_HPP
#define CURVECODES_CYCLIC_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "bitvector.hpp"
#include "enumerator.hpp"
#include "gf2m.hpp"

namespace curvecodes {

enum class Family { parity, repetition, hamming, bch2, melas, custom };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::parity: return "parity";
        case Family::repetition: return "repetition";
        case Family::hamming: return "hamming";
        case Family::bch2: return "bch2";
        case Family::melas: return "melas";
        case Family::custom: return "custom";
    }
    return "custom";
}

inline Family parse_family(std::string_view s) {
    if (s == "parity") return Family::parity;
    if (s == "repetition") return Family::repetition;
    if (s == "hamming") return Family::hamming;
    if (s == "bch2" || s == "bch") return Family::bch2;
    if (s == "melas") return Family::melas;
    if (s == "custom") return Family::custom;
    throw std::invalid_argument("unknown code family '" + std::string(s) + "'");
}

/// Smallest admissible m for the trace-defined families.
inline int min_degree(Family f) {
    switch (f) {
        case Family::hamming: return 2;
        case Family::bch2:
        case Family::melas: return 3;
        default: return 2;
    }
}

inline constexpr std::uint64_t kDefaultWorkLimit = std::uint64_t{1} << 28;

/*
 * A cyclic code: the ideal generated by g in F_2[T]/(T^n - 1).
 * Divisibility g | T^n - 1 is checked on construction.
 */
class CyclicCode {
   public:
    CyclicCode(std::size_t n, BitPolynomial generator, Family family = Family::custom, std::optional<int> m = {})
        : n_(n), generator_(std::move(generator)), family_(family), m_(m) {
        if (n == 0) throw std::invalid_argument("cyclic code length must be positive");
        const int d = generator_.degree();
        if (d <= 0 || static_cast<std::size_t>(d) > n)
            throw std::invalid_argument("generator degree must satisfy 0 < deg(g) <= n, got " + std::to_string(d));
        if (!generator_.divides(BitPolynomial::x_pow_n_minus_one(n)))
            throw std::invalid_argument("generator " + generator_.to_string() + " does not divide T^" + std::to_string(n) +
                                        " - 1");
    }

    std::size_t length() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return n_ - static_cast<std::size_t>(generator_.degree()); }
    const BitPolynomial& generator() const noexcept { return generator_; }
    Family family() const noexcept { return family_; }
    std::optional<int> degree_m() const noexcept { return m_; }

    /// Word for message polynomial u (bit j = coefficient of T^j), i.e. u*g.
    Codeword encode(const BitVector& message) const {
        if (message.size() != dimension()) throw std::invalid_argument("message length must equal k");
        BitPolynomial u;
        for (std::size_t j = 0; j < message.size(); ++j)
            if (message.get(j)) u.set_coeff(j, true);
        return to_word(u * generator_);
    }

    bool contains(const Codeword& w) const {
        if (w.size() != n_) return false;
        BitPolynomial p;
        for (std::size_t i = 0; i < n_; ++i)
            if (w.get(i)) p.set_coeff(i, true);
        return generator_.divides(p);
    }

    /// Rows g, Tg, ..., T^{k-1}g.
    std::vector<Codeword> generator_matrix() const {
        std::vector<Codeword> rows;
        rows.reserve(dimension());
        for (std::size_t j = 0; j < dimension(); ++j) rows.push_back(to_word(generator_.shifted(j)));
        return rows;
    }

   private:
    std::size_t n_;
    BitPolynomial generator_;
    Family family_;
    std::optional<int> m_;

    Codeword to_word(const BitPolynomial& p) const {
        Codeword w(n_);
        for (int d = 0; d <= p.degree(); ++d)
            if (p.coeff(static_cast<std::size_t>(d))) w.flip(static_cast<std::size_t>(d) % n_);
        return w;
    }
};

inline CyclicCode make_parity_code(std::size_t n) {
    if (n < 1) throw std::invalid_argument("parity code needs n >= 1");
    return CyclicCode(n, BitPolynomial(0b11), Family::parity);
}

inline CyclicCode make_repetition_code(std::size_t n) {
    if (n < 2) throw std::invalid_argument("repetition code needs n >= 2");
    BitPolynomial g;
    for (std::size_t i = 0; i < n; ++i) g.set_coeff(i, true);
    return CyclicCode(n, std::move(g), Family::repetition);
}

/// Exponent e in the trace words Tr(lambda x + mu x^e): 3 for bch2, -1 for melas.
inline int trace_exponent(Family f) {
    switch (f) {
        case Family::bch2: return 3;
        case Family::melas: return -1;
        case Family::hamming: return 1;
        default: throw std::invalid_argument("family " + family_name(f) + " has no trace representation");
    }
}

/*
 * The named families. Parity and repetition use length 2^m - 1 here;
 * make_parity_code / make_repetition_code take arbitrary n.
 */
inline CyclicCode build_named_code(Family family, int m) {
    if (family == Family::custom) throw std::invalid_argument("custom codes need an explicit generator");
    if (m < min_degree(family) || m > kMaxFieldDegree)
        throw std::invalid_argument(family_name(family) + " code needs " + std::to_string(min_degree(family)) +
                                    " <= m <= " + std::to_string(kMaxFieldDegree) + ", got m = " + std::to_string(m));
    const std::size_t n = (std::size_t{1} << m) - 1;
    if (family == Family::parity) return CyclicCode(n, BitPolynomial(0b11), Family::parity, m);
    if (family == Family::repetition) {
        BitPolynomial g;
        for (std::size_t i = 0; i < n; ++i) g.set_coeff(i, true);
        return CyclicCode(n, std::move(g), Family::repetition, m);
    }
    const FieldContext ctx(m);
    BitPolynomial g = ctx.minimal_polynomial(ctx.alpha());
    if (family != Family::hamming) {
        const BitPolynomial second = ctx.minimal_polynomial(ctx.alpha_power(trace_exponent(family)));
        if (second == g) throw std::logic_error("second zero is conjugate to alpha");
        g = g * second;
    }
    return CyclicCode(n, std::move(g), family, m);
}

namespace detail {

inline std::uint64_t gray(std::uint64_t s) { return s ^ (s >> 1); }

template <class Word>
struct GrayOps;

template <>
struct GrayOps<std::uint64_t> {
    static std::uint64_t zero(std::size_t) { return 0; }
    static void xor_into(std::uint64_t& a, const std::uint64_t& b) { a ^= b; }
    static std::size_t weight(std::uint64_t a) { return static_cast<std::size_t>(std::popcount(a)); }
};

template <>
struct GrayOps<BitVector> {
    static BitVector zero(std::size_t n) { return BitVector(n); }
    static void xor_into(BitVector& a, const BitVector& b) { a ^= b; }
    static std::size_t weight(const BitVector& a) { return a.weight(); }
};

// Histogram of weights over messages with Gray index in [begin, end).
template <class Word>
std::vector<std::uint64_t> gray_histogram(const std::vector<Word>& rows, std::size_t n, std::uint64_t begin,
                                          std::uint64_t end) {
    std::vector<std::uint64_t> hist(n + 1, 0);
    if (begin >= end) return hist;
    Word word = GrayOps<Word>::zero(n);
    const std::uint64_t g0 = gray(begin);
    for (std::size_t j = 0; j < rows.size(); ++j)
        if ((g0 >> j) & 1U) GrayOps<Word>::xor_into(word, rows[j]);
    for (std::uint64_t s = begin;;) {
        ++hist[GrayOps<Word>::weight(word)];
        if (++s == end) break;
        GrayOps<Word>::xor_into(word, rows[static_cast<std::size_t>(std::countr_zero(s))]);
    }
    return hist;
}

template <class Word>
WeightEnumerator partitioned_histogram(const std::vector<Word>& rows, std::size_t n, unsigned workers) {
    const std::uint64_t total = std::uint64_t{1} << rows.size();
    workers = std::max(1U, workers);
    if (total < (std::uint64_t{1} << 16)) workers = 1;
    std::vector<std::vector<std::uint64_t>> parts(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = total / workers * w;
            const std::uint64_t hi = w + 1 == workers ? total : total / workers * (w + 1);
            pool.emplace_back([&, w, lo, hi] { parts[w] = gray_histogram(rows, n, lo, hi); });
        }
    }
    WeightEnumerator out(n);
    for (const auto& h : parts)
        for (std::size_t i = 0; i <= n; ++i)
            if (h[i]) out.add(i, BigInt(h[i]));
    return out;
}

}  // namespace detail

/// Reduced row-echelon basis of the span of `rows` (dependent rows dropped).
inline std::vector<BitVector> row_reduce(std::vector<BitVector> rows) {
    if (rows.empty()) return rows;
    const std::size_t n = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

/*
 * Weight distribution of the span of linearly independent `basis` rows of
 * length n, by Gray-code walk: each step XORs one basis row and takes a
 * popcount. Throws std::length_error if 2^rank exceeds work_limit.
 */
inline WeightEnumerator enumerate_span_distribution(const std::vector<BitVector>& basis, std::size_t n,
                                                    std::uint64_t work_limit = kDefaultWorkLimit, unsigned workers = 1) {
    if (basis.size() >= 63 || (std::uint64_t{1} << basis.size()) > work_limit)
        throw std::length_error("enumeration of 2^" + std::to_string(basis.size()) + " codewords exceeds work limit " +
                                std::to_string(work_limit) + "; use a formula-based route");
    for (const auto& b : basis)
        if (b.size() != n) throw std::invalid_argument("basis row length differs from n");
    if (n <= 64) {
        std::vector<std::uint64_t> rows;
        for (const auto& b : basis) rows.push_back(b.low_word());
        return detail::partitioned_histogram(rows, n, workers);
    }
    return detail::partitioned_histogram(basis, n, workers);
}

inline WeightEnumerator enumerate_weight_distribution(const CyclicCode& code, std::uint64_t work_limit = kDefaultWorkLimit,
                                                      unsigned workers = 1) {
    return enumerate_span_distribution(code.generator_matrix(), code.length(), work_limit, workers);
}

inline std::size_t minimum_distance(const CyclicCode& code, std::uint64_t work_limit = kDefaultWorkLimit) {
    const auto stats = poly_stats(enumerate_weight_distribution(code, work_limit));
    if (!stats.min_distance) throw std::logic_error("code has no nonzero word");
    return *stats.min_distance;
}

/// Basis of {v : <v, r> = 0 for every row r}; n - rank vectors.
inline std::vector<BitVector> nullspace_basis(const std::vector<BitVector>& rows, std::size_t n) {
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("row length differs from n");
    const auto rref = row_reduce(rows);
    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot(n, false);
    for (const auto& r : rref) {
        std::size_t c = 0;
        while (!r.get(c)) ++c;
        pivots.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<BitVector> out;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        BitVector v(n);
        v.set(free);
        for (std::size_t r = 0; r < rref.size(); ++r)
            if (rref[r].get(free)) v.set(pivots[r]);
        out.push_back(std::move(v));
    }
    return out;
}

inline std::vector<Codeword> dual_basis(const CyclicCode& code) {
    return nullspace_basis(code.generator_matrix(), code.length());
}

/// All words in the span of independent `basis` rows, sorted.
inline std::vector<BitVector> span_words(const std::vector<BitVector>& basis, std::size_t n,
                                         std::uint64_t work_limit = std::uint64_t{1} << 22) {
    if (basis.size() >= 63 || (std::uint64_t{1} << basis.size()) > work_limit)
        throw std::length_error("span too large to list");
    std::vector<BitVector> words;
    BitVector w(n);
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t s = 0;;) {
        words.push_back(w);
        if (++s == total) break;
        w ^= basis[static_cast<std::size_t>(std::countr_zero(s))];
    }
    std::sort(words.begin(), words.end());
    return words;
}

/// (Tr(lambda x + mu x^e))_{x = alpha^0, ..., alpha^{q-2}}; coordinate i is x = alpha^i.
inline BitVector trace_word(const FieldContext& ctx, Family family, FieldElement lambda, FieldElement mu) {
    const int e = trace_exponent(family);
    const std::size_t n = ctx.order();
    BitVector w(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto x = ctx.alpha_power(static_cast<std::int64_t>(i));
        FieldElement v = ctx.mul(lambda, x);
        if (family != Family::hamming) v = ctx.add(v, ctx.mul(mu, ctx.alpha_power(e * static_cast<std::int64_t>(i))));
        if (ctx.trace(v)) w.set(i);
    }
    return w;
}

/// The trace-representation code, as a sorted list of distinct words.
inline std::vector<BitVector> trace_code_words(Family family, int m) {
    const FieldContext ctx(m);
    std::vector<BitVector> words;
    const std::uint32_t q = ctx.q();
    const std::uint32_t mus = family == Family::hamming ? 1 : q;
    for (std::uint32_t l = 0; l < q; ++l)
        for (std::uint32_t u = 0; u < mus; ++u) words.push_back(trace_word(ctx, family, FieldElement{l}, FieldElement{u}));
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

/*
 * Weight distribution of the dual of a trace-defined family by direct
 * evaluation over (lambda, mu): weight = #{x in F_q^* : Tr(lambda x + mu x^e) = 1}.
 */
inline WeightEnumerator dual_trace_distribution(Family family, int m) {
    if (family != Family::hamming && family != Family::bch2 && family != Family::melas)
        throw std::invalid_argument("dual_trace_distribution: family " + family_name(family) + " has no trace form");
    if (m < min_degree(family) || m > kMaxFieldDegree)
        throw std::invalid_argument(family_name(family) + " needs " + std::to_string(min_degree(family)) +
                                    " <= m <= " + std::to_string(kMaxFieldDegree));
    const FieldContext ctx(m);
    const std::uint32_t q = ctx.q(), n = q - 1;
    const std::int64_t e = trace_exponent(family);
    // le[i] = log of x^e at x = alpha^i
    std::vector<std::uint32_t> x(n), le(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        x[i] = ctx.alpha_power(i).bits;
        le[i] = static_cast<std::uint32_t>(((e * i) % n + n) % n);
    }
    std::vector<std::uint64_t> hist(n + 1, 0);
    const std::uint32_t mus = family == Family::hamming ? 1 : q;
    std::vector<std::uint32_t> lx(n);
    for (std::uint32_t l = 0; l < q; ++l) {
        for (std::uint32_t i = 0; i < n; ++i) lx[i] = ctx.mul(FieldElement{l}, FieldElement{x[i]}).bits;
        for (std::uint32_t u = 0; u < mus; ++u) {
            std::uint32_t w = 0;
            if (u == 0) {
                for (std::uint32_t i = 0; i < n; ++i) w += ctx.trace(FieldElement{lx[i]});
            } else {
                const std::uint32_t lu = ctx.log(FieldElement{u});
                for (std::uint32_t i = 0; i < n; ++i) {
                    const std::uint32_t t = ctx.alpha_power(le[i] + lu).bits;
                    w += ctx.trace(FieldElement{lx[i] ^ t});
                }
            }
            ++hist[w];
        }
    }
    WeightEnumerator out(n);
    for (std::size_t i = 0; i <= n; ++i)
        if (hist[i]) out.add(i, BigInt(hist[i]));
    return out;
}

}  // namespace curvecodes

#endif  // CURVECODES_CYCLIC_HPP
