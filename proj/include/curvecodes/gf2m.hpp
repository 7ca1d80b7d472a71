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

#ifndef CURVECODES_GF2M_HPP
#define CURVECODES_GF2M_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace curvecodes {

/*
 * Polynomials over F_2. Bit i of the packed representation is the
 * coefficient of T^i; the top word is never zero.
 */
class BitPolynomial {
   public:
    BitPolynomial() = default;
    explicit BitPolynomial(std::uint64_t bits) {
        if (bits) words.push_back(bits);
    }

    static BitPolynomial monomial(std::size_t d) {
        BitPolynomial p;
        p.words.assign(d / 64 + 1, 0);
        p.words.back() = std::uint64_t{1} << (d % 64);
        return p;
    }
    static BitPolynomial one() { return BitPolynomial(1); }
    /// T^n - 1 (= T^n + 1 over F_2).
    static BitPolynomial x_pow_n_minus_one(std::size_t n) {
        BitPolynomial p = monomial(n);
        p.words[0] ^= 1;
        p.normalize();
        return p;
    }

    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept {
        if (words.empty()) return -1;
        return static_cast<int>(64 * (words.size() - 1) + 63 - std::countl_zero(words.back()));
    }
    bool is_zero() const noexcept { return words.empty(); }
    bool coeff(std::size_t i) const noexcept {
        if (i / 64 >= words.size()) return false;
        return (words[i / 64] >> (i % 64)) & 1U;
    }
    void set_coeff(std::size_t i, bool value) {
        if (i / 64 >= words.size()) {
            if (!value) return;
            words.resize(i / 64 + 1, 0);
        }
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (value)
            words[i / 64] |= mask;
        else
            words[i / 64] &= ~mask;
        normalize();
    }
    std::size_t term_count() const noexcept {
        std::size_t c = 0;
        for (auto w : words) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Integer encoding; only valid for degree < 64.
    std::uint64_t to_u64() const {
        if (degree() >= 64) throw std::overflow_error("BitPolynomial::to_u64: degree >= 64");
        return words.empty() ? 0 : words[0];
    }
    const std::vector<std::uint64_t>& raw() const noexcept { return words; }

    BitPolynomial& operator+=(const BitPolynomial& rhs) {
        if (rhs.words.size() > words.size()) words.resize(rhs.words.size(), 0);
        for (std::size_t i = 0; i < rhs.words.size(); ++i) words[i] ^= rhs.words[i];
        normalize();
        return *this;
    }
    friend BitPolynomial operator+(BitPolynomial a, const BitPolynomial& b) { return a += b; }
    friend BitPolynomial operator-(BitPolynomial a, const BitPolynomial& b) { return a += b; }

    BitPolynomial shifted(std::size_t s) const {
        if (is_zero()) return {};
        BitPolynomial r;
        r.words.assign(words.size() + s / 64 + 1, 0);
        const std::size_t ws = s / 64, bs = s % 64;
        for (std::size_t i = 0; i < words.size(); ++i) {
            r.words[i + ws] ^= words[i] << bs;
            if (bs) r.words[i + ws + 1] ^= words[i] >> (64 - bs);
        }
        r.normalize();
        return r;
    }

    friend BitPolynomial operator*(const BitPolynomial& a, const BitPolynomial& b) {
        const BitPolynomial& small = a.term_count() <= b.term_count() ? a : b;
        const BitPolynomial& large = &small == &a ? b : a;
        BitPolynomial r;
        for (int d = 0; d <= small.degree(); ++d)
            if (small.coeff(static_cast<std::size_t>(d))) r += large.shifted(static_cast<std::size_t>(d));
        return r;
    }

    /// Euclidean division; returns (quotient, remainder).
    friend std::pair<BitPolynomial, BitPolynomial> divmod(const BitPolynomial& a, const BitPolynomial& b) {
        if (b.is_zero()) throw std::domain_error("BitPolynomial: division by zero");
        BitPolynomial rem = a, quo;
        const int db = b.degree();
        // terms of b, so each elimination step touches only deg(b)+1 coefficients
        std::vector<std::size_t> bterms;
        for (int i = 0; i <= db; ++i)
            if (b.coeff(static_cast<std::size_t>(i))) bterms.push_back(static_cast<std::size_t>(i));
        for (int d = rem.degree(); d >= db; --d) {
            if (!rem.coeff(static_cast<std::size_t>(d))) continue;
            const std::size_t s = static_cast<std::size_t>(d - db);
            quo.set_coeff_raw(s);
            for (auto t : bterms) rem.words[(t + s) / 64] ^= std::uint64_t{1} << ((t + s) % 64);
        }
        rem.normalize();
        quo.normalize();
        return {std::move(quo), std::move(rem)};
    }
    friend BitPolynomial operator%(const BitPolynomial& a, const BitPolynomial& b) { return divmod(a, b).second; }
    friend BitPolynomial operator/(const BitPolynomial& a, const BitPolynomial& b) { return divmod(a, b).first; }

    friend BitPolynomial gcd(BitPolynomial a, BitPolynomial b) {
        while (!b.is_zero()) {
            BitPolynomial r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    bool divides(const BitPolynomial& other) const { return (other % *this).is_zero(); }

    /// Reversed polynomial T^deg p(1/T).
    BitPolynomial reciprocal() const {
        BitPolynomial r;
        const int d = degree();
        for (int i = 0; i <= d; ++i)
            if (coeff(static_cast<std::size_t>(i))) r.set_coeff(static_cast<std::size_t>(d - i), true);
        return r;
    }

    /// Lowercase hexadecimal of the integer encoding, no prefix ("0" for zero).
    std::string to_hex() const {
        if (is_zero()) return "0";
        static constexpr char digits[] = "0123456789abcdef";
        std::string s;
        const int d = degree();
        for (int nib = d / 4; nib >= 0; --nib) {
            unsigned v = 0;
            for (int b = 3; b >= 0; --b) v = (v << 1) | (coeff(static_cast<std::size_t>(4 * nib + b)) ? 1U : 0U);
            s.push_back(digits[v]);
        }
        return s;
    }

    static BitPolynomial from_hex(std::string_view hex) {
        if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
        if (hex.empty()) throw std::invalid_argument("BitPolynomial::from_hex: empty string");
        BitPolynomial p;
        std::size_t bit = 0;
        for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
            const char c = *it;
            unsigned v;
            if (c >= '0' && c <= '9')
                v = static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f')
                v = static_cast<unsigned>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F')
                v = static_cast<unsigned>(c - 'A' + 10);
            else
                throw std::invalid_argument("BitPolynomial::from_hex: bad digit in '" + std::string(hex) + "'");
            for (unsigned b = 0; b < 4; ++b)
                if ((v >> b) & 1U) p.set_coeff(bit + b, true);
        }
        return p;
    }

    /// Human-readable form, highest degree first: "T^8+T^7+T^6+T^4+1".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int d = degree(); d >= 0; --d) {
            if (!coeff(static_cast<std::size_t>(d))) continue;
            if (!s.empty()) s += '+';
            if (d == 0)
                s += '1';
            else if (d == 1)
                s += 'T';
            else
                s += "T^" + std::to_string(d);
        }
        return s;
    }

    /// Inverse of to_string; accepts whitespace and repeated terms (which cancel).
    static BitPolynomial parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (c != ' ' && c != '\t') s.push_back(c);
        if (s == "0") return {};
        if (s.empty()) throw std::invalid_argument("BitPolynomial::parse: empty string");
        BitPolynomial p;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t next = s.find('+', pos);
            if (next == std::string::npos) next = s.size();
            const std::string term = s.substr(pos, next - pos);
            std::size_t d;
            if (term == "1")
                d = 0;
            else if (term == "T" || term == "X" || term == "x")
                d = 1;
            else if (term.size() > 2 && (term[0] == 'T' || term[0] == 'X' || term[0] == 'x') && term[1] == '^' &&
                     term.find_first_not_of("0123456789", 2) == std::string::npos)
                d = std::stoul(term.substr(2));
            else
                throw std::invalid_argument("BitPolynomial::parse: bad term '" + term + "'");
            p.set_coeff(d, !p.coeff(d));
            pos = next + 1;
        }
        return p;
    }

    friend bool operator==(const BitPolynomial&, const BitPolynomial&) = default;
    /// Orders by integer encoding.
    friend std::strong_ordering operator<=>(const BitPolynomial& a, const BitPolynomial& b) {
        if (auto c = a.words.size() <=> b.words.size(); c != 0) return c;
        for (std::size_t i = a.words.size(); i-- > 0;)
            if (auto c = a.words[i] <=> b.words[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

   private:
    std::vector<std::uint64_t> words;

    void normalize() {
        while (!words.empty() && words.back() == 0) words.pop_back();
    }
    void set_coeff_raw(std::size_t i) {
        if (i / 64 >= words.size()) words.resize(i / 64 + 1, 0);
        words[i / 64] |= std::uint64_t{1} << (i % 64);
    }
};

/// (base^e) mod f in F_2[T].
inline BitPolynomial powmod(BitPolynomial base, std::uint64_t e, const BitPolynomial& f) {
    BitPolynomial result = BitPolynomial::one() % f;
    base = base % f;
    while (e) {
        if (e & 1) result = (result * base) % f;
        base = (base * base) % f;
        e >>= 1;
    }
    return result;
}

/// Ben-Or irreducibility test: gcd(f, T^{2^i} - T) = 1 for 1 <= i <= deg/2.
inline bool is_irreducible(const BitPolynomial& f) {
    const int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const BitPolynomial t(2);
    BitPolynomial power = t % f;
    for (int i = 1; i <= d / 2; ++i) {
        power = (power * power) % f;
        if (gcd(f, power + t).degree() != 0) return false;
    }
    return true;
}

/// An element of F_{2^m}: the residue of a polynomial modulo the field modulus.
struct FieldElement {
    std::uint32_t bits = 0;

    constexpr FieldElement() = default;
    constexpr explicit FieldElement(std::uint32_t b) : bits(b) {}

    constexpr bool is_zero() const noexcept { return bits == 0; }
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

constexpr int kMinFieldDegree = 2;
constexpr int kMaxFieldDegree = 16;

/*
 * A realized F_q, q = 2^m. The modulus is the irreducible polynomial of
 * degree m with the smallest integer encoding, and alpha is the primitive
 * element with the smallest encoding. Log/antilog and trace tables are
 * built eagerly; the context is immutable afterwards.
 */
class FieldContext {
   public:
    explicit FieldContext(int degree) : m_(degree) {
        if (degree < kMinFieldDegree || degree > kMaxFieldDegree)
            throw std::invalid_argument("field degree m must lie in [" + std::to_string(kMinFieldDegree) + ", " +
                                        std::to_string(kMaxFieldDegree) + "], got " + std::to_string(degree));
        q_ = std::uint32_t{1} << degree;
        for (std::uint64_t enc = (std::uint64_t{1} << degree) | 1; enc < (std::uint64_t{1} << (degree + 1)); enc += 2) {
            if (is_irreducible(BitPolynomial(enc))) {
                modulus_ = BitPolynomial(enc);
                modulus_bits_ = static_cast<std::uint32_t>(enc);
                break;
            }
        }
        find_primitive_element();
        build_tables();
    }

    int m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }
    std::uint32_t order() const noexcept { return q_ - 1; }
    const BitPolynomial& modulus() const noexcept { return modulus_; }
    FieldElement alpha() const noexcept { return alpha_; }
    FieldElement zero() const noexcept { return FieldElement{0}; }
    FieldElement one() const noexcept { return FieldElement{1}; }

    FieldElement element(std::uint32_t bits) const {
        if (bits >= q_) throw std::out_of_range("field element " + std::to_string(bits) + " outside F_" + std::to_string(q_));
        return FieldElement{bits};
    }

    /// alpha^e for any integer e.
    FieldElement alpha_power(std::int64_t e) const {
        const std::int64_t n = order();
        return FieldElement{antilog_[static_cast<std::size_t>(((e % n) + n) % n)]};
    }
    /// Discrete log base alpha, in [0, q-2].
    std::uint32_t log(FieldElement x) const {
        if (x.is_zero()) throw std::domain_error("log of zero");
        return log_[x.bits];
    }

    FieldElement add(FieldElement a, FieldElement b) const noexcept { return FieldElement{a.bits ^ b.bits}; }
    FieldElement mul(FieldElement a, FieldElement b) const noexcept {
        if (a.is_zero() || b.is_zero()) return FieldElement{0};
        std::uint32_t s = log_[a.bits] + log_[b.bits];
        if (s >= order()) s -= order();
        return FieldElement{antilog_[s]};
    }
    FieldElement square(FieldElement a) const noexcept { return mul(a, a); }
    FieldElement inverse(FieldElement a) const {
        if (a.is_zero()) throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
        return FieldElement{antilog_[log_[a.bits] == 0 ? 0 : order() - log_[a.bits]]};
    }
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inverse(b)); }
    /// a^e; negative exponents require a != 0, and 0^0 = 1.
    FieldElement pow(FieldElement a, std::int64_t e) const {
        if (a.is_zero()) {
            if (e < 0) throw std::domain_error("negative power of zero");
            return FieldElement{e == 0 ? 1U : 0U};
        }
        const std::int64_t n = order();
        const std::int64_t l = (static_cast<std::int64_t>(log_[a.bits]) * (((e % n) + n) % n)) % n;
        return FieldElement{antilog_[static_cast<std::size_t>(l)]};
    }
    /// Unique square root (Frobenius is a bijection): a^(2^(m-1)).
    FieldElement sqrt(FieldElement a) const noexcept {
        for (int i = 0; i < m_ - 1; ++i) a = square(a);
        return a;
    }

    /// Absolute trace Tr(x) = x + x^2 + ... + x^(2^(m-1)), in {0, 1}.
    unsigned trace(FieldElement x) const { return trace_.at(x.bits); }

    /// Shift-and-add multiplication independent of the tables.
    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t r = 0;
        while (b) {
            if (b & 1U) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a & q_) a ^= modulus_bits_;
        }
        return r;
    }

    FieldElement evaluate(const BitPolynomial& p, FieldElement x) const {
        FieldElement acc{0};
        for (int d = p.degree(); d >= 0; --d) {
            acc = mul(acc, x);
            if (p.coeff(static_cast<std::size_t>(d))) acc = add(acc, one());
        }
        return acc;
    }

    /// Frobenius orbit {x, x^2, x^4, ...} without repetition.
    std::vector<FieldElement> conjugates(FieldElement x) const {
        std::vector<FieldElement> orbit{x};
        for (FieldElement y = square(x); y != x; y = square(y)) orbit.push_back(y);
        return orbit;
    }

    /// Product over the Frobenius orbit of (T - c), expanded; coefficients land in F_2.
    BitPolynomial minimal_polynomial(FieldElement x) const {
        std::vector<FieldElement> coeffs{one()};  // coeffs[i] = coefficient of T^i
        for (FieldElement c : conjugates(x)) {
            std::vector<FieldElement> next(coeffs.size() + 1, zero());
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                next[i + 1] = add(next[i + 1], coeffs[i]);
                next[i] = add(next[i], mul(coeffs[i], c));
            }
            coeffs = std::move(next);
        }
        BitPolynomial p;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i].bits > 1) throw std::logic_error("minimal polynomial coefficient outside F_2");
            if (coeffs[i].bits) p.set_coeff(i, true);
        }
        return p;
    }

    /// Multiplicative order of a nonzero element.
    std::uint32_t multiplicative_order(FieldElement x) const {
        if (x.is_zero()) throw std::domain_error("order of zero");
        const std::uint32_t n = order();
        const std::uint32_t l = log_[x.bits];
        return n / std::gcd(n, l == 0 ? n : l);
    }

   private:
    int m_;
    std::uint32_t q_ = 0;
    BitPolynomial modulus_;
    std::uint32_t modulus_bits_ = 0;
    FieldElement alpha_;
    std::vector<std::uint32_t> log_, antilog_;
    std::vector<std::uint8_t> trace_;

    std::uint32_t pow_raw(std::uint32_t a, std::uint64_t e) const noexcept {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul_raw(r, a);
            a = mul_raw(a, a);
            e >>= 1;
        }
        return r;
    }

    void find_primitive_element() {
        const std::uint32_t n = q_ - 1;
        std::vector<std::uint32_t> primes;
        std::uint32_t rest = n;
        for (std::uint32_t p = 2; p * p <= rest; ++p) {
            if (rest % p) continue;
            primes.push_back(p);
            while (rest % p == 0) rest /= p;
        }
        if (rest > 1) primes.push_back(rest);
        for (std::uint32_t cand = 2; cand < q_; ++cand) {
            bool primitive = pow_raw(cand, n) == 1;
            for (auto p : primes)
                if (primitive && pow_raw(cand, n / p) == 1) primitive = false;
            if (primitive) {
                alpha_ = FieldElement{cand};
                return;
            }
        }
        // q = 2^m with m >= 2 means n >= 3 so a candidate >= 2 always exists
        throw std::logic_error("no primitive element found");
    }

    void build_tables() {
        log_.assign(q_, 0);
        antilog_.assign(q_ - 1, 0);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            antilog_[i] = x;
            log_[x] = i;
            x = mul_raw(x, alpha_.bits);
        }
        trace_.assign(q_, 0);
        // Tr is F_2-linear, so tabulate it on the polynomial basis and extend.
        std::vector<std::uint8_t> basis(static_cast<std::size_t>(m_));
        for (int b = 0; b < m_; ++b) {
            std::uint32_t y = std::uint32_t{1} << b, acc = 0;
            for (int i = 0; i < m_; ++i) {
                acc ^= y;
                y = mul_raw(y, y);
            }
            basis[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(acc);
        }
        for (std::uint32_t v = 1; v < q_; ++v) {
            const int low = std::countr_zero(v);
            trace_[v] = trace_[v & (v - 1)] ^ basis[static_cast<std::size_t>(low)];
        }
    }
};

inline FieldContext make_field(int m) { return FieldContext(m); }

}  // namespace curvecodes

#endif  // CURVECODES_GF2M_HPP
