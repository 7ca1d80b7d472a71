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

#ifndef CURVECODES_BITVECTOR_HPP
#define CURVECODES_BITVECTOR_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvecodes {

/// Fixed-length vector over F_2, packed 64 coordinates per word.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t length) : len(length), words((length + 63) / 64, 0) {}

    static BitVector from_word(std::uint64_t w, std::size_t length) {
        if (length > 64) throw std::invalid_argument("BitVector::from_word: length exceeds 64");
        BitVector v(length);
        if (length > 0) v.words[0] = length == 64 ? w : (w & ((std::uint64_t{1} << length) - 1));
        return v;
    }

    std::size_t size() const noexcept { return len; }

    bool get(std::size_t i) const { return (words.at(i / 64) >> (i % 64)) & 1U; }
    void set(std::size_t i, bool value = true) {
        if (i >= len) throw std::out_of_range("BitVector::set");
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (value)
            words[i / 64] |= mask;
        else
            words[i / 64] &= ~mask;
    }
    void flip(std::size_t i) {
        if (i >= len) throw std::out_of_range("BitVector::flip");
        words[i / 64] ^= std::uint64_t{1} << (i % 64);
    }

    std::size_t weight() const noexcept {
        std::size_t w = 0;
        for (auto x : words) w += static_cast<std::size_t>(std::popcount(x));
        return w;
    }
    bool is_zero() const noexcept {
        for (auto x : words)
            if (x) return false;
        return true;
    }

    BitVector& operator^=(const BitVector& rhs) {
        if (rhs.len != len) throw std::invalid_argument("BitVector: length mismatch");
        for (std::size_t i = 0; i < words.size(); ++i) words[i] ^= rhs.words[i];
        return *this;
    }
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

    /// Standard bilinear form over F_2.
    bool dot(const BitVector& rhs) const {
        if (rhs.len != len) throw std::invalid_argument("BitVector: length mismatch");
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < words.size(); ++i) acc ^= words[i] & rhs.words[i];
        return std::popcount(acc) & 1;
    }

    /// Cyclic rotation (v_0..v_{n-1}) -> (v_{n-1}, v_0, ..., v_{n-2}), i.e. multiplication by T.
    BitVector rotated() const {
        BitVector r(len);
        for (std::size_t i = 0; i < len; ++i)
            if (get(i)) r.set((i + 1) % len);
        return r;
    }

    std::uint64_t low_word() const noexcept { return words.empty() ? 0 : words[0]; }
    const std::vector<std::uint64_t>& raw() const noexcept { return words; }

    /// Coefficients v_0 v_1 ... v_{n-1} as a '0'/'1' string.
    std::string to_string() const {
        std::string s(len, '0');
        for (std::size_t i = 0; i < len; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    friend bool operator==(const BitVector&, const BitVector&) = default;
    friend auto operator<=>(const BitVector& a, const BitVector& b) {
        if (auto c = a.len <=> b.len; c != 0) return c;
        return a.words <=> b.words;
    }

   private:
    std::size_t len = 0;
    std::vector<std::uint64_t> words;
};

using Codeword = BitVector;

}  // namespace curvecodes

template <>
struct std::hash<curvecodes::BitVector> {
    std::size_t operator()(const curvecodes::BitVector& v) const noexcept {
        std::size_t h = v.size();
        for (auto w : v.raw()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

#endif  // CURVECODES_BITVECTOR_HPP
