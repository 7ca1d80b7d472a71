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

#ifndef CURVECODES_CURVES_HPP
#define CURVECODES_CURVES_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "classnum.hpp"
#include "gf2m.hpp"

namespace curvecodes {

/// Point count N = #E(F_q) and Frobenius trace t = q + 1 - N of one curve.
struct CurveCount {
    std::vector<FieldElement> parameters;  // (lambda, mu) or (nu)
    std::int64_t points = 0;
    std::int64_t frobenius_trace = 0;
};

namespace detail {

inline CurveCount make_count(const FieldContext& ctx, std::vector<FieldElement> params, std::int64_t points) {
    CurveCount c{std::move(params), points, static_cast<std::int64_t>(ctx.q()) + 1 - points};
    if (c.frobenius_trace * c.frobenius_trace > 4 * static_cast<std::int64_t>(ctx.q()))
        throw std::logic_error("Hasse bound violated: t = " + std::to_string(c.frobenius_trace));
    return c;
}

}  // namespace detail

/*
 * E : Y^2 + Y = lambda X + mu X^3 over F_q, mu != 0. Above each x there are
 * two affine points iff Tr(lambda x + mu x^3) = 0, none otherwise.
 */
inline CurveCount count_points_cubic(const FieldContext& ctx, FieldElement lambda, FieldElement mu) {
    if (mu.is_zero()) throw std::invalid_argument("count_points_cubic: mu = 0 gives a conic, not an elliptic curve");
    std::int64_t zeros = 0;
    for (std::uint32_t xb = 0; xb < ctx.q(); ++xb) {
        const FieldElement x{xb};
        const FieldElement rhs = ctx.add(ctx.mul(lambda, x), ctx.mul(mu, ctx.mul(x, ctx.square(x))));
        if (ctx.trace(rhs) == 0) ++zeros;
    }
    const CurveCount c = detail::make_count(ctx, {lambda, mu}, 1 + 2 * zeros);
    if (c.frobenius_trace % 2 != 0) throw std::logic_error("supersingular family produced odd trace");
    return c;
}

/// Same curve, counted by scanning all (x, y).
inline CurveCount count_points_cubic_naive(const FieldContext& ctx, FieldElement lambda, FieldElement mu) {
    if (mu.is_zero()) throw std::invalid_argument("count_points_cubic_naive: mu = 0");
    std::int64_t n = 1;
    for (std::uint32_t xb = 0; xb < ctx.q(); ++xb) {
        const FieldElement x{xb};
        const FieldElement rhs = ctx.add(ctx.mul(lambda, x), ctx.mul(mu, ctx.mul(x, ctx.square(x))));
        for (std::uint32_t yb = 0; yb < ctx.q(); ++yb) {
            const FieldElement y{yb};
            if (ctx.add(ctx.square(y), y) == rhs) ++n;
        }
    }
    return detail::make_count(ctx, {lambda, mu}, n);
}

/// Weight of (Tr(lambda x + mu x^3))_{x in F_q^*} recovered from the point count.
inline std::int64_t cubic_word_weight(const FieldContext& ctx, const CurveCount& c) {
    return static_cast<std::int64_t>(ctx.q()) - 1 - (c.points - 3) / 2;
}

/*
 * E : Y^2 + XY = X^3 + nu^2 X, nu != 0. The point (0, 0) is the only one
 * with X = 0; for x != 0 substituting Y = xZ gives Z^2 + Z = x + nu^2/x.
 */
inline CurveCount count_points_melas_curve(const FieldContext& ctx, FieldElement nu) {
    if (nu.is_zero()) throw std::invalid_argument("count_points_melas_curve: nu = 0 gives a singular curve");
    const FieldElement nu2 = ctx.square(nu);
    // (nu, 0) lies on E: nu^3 + nu^2 * nu = 0
    if (!ctx.add(ctx.mul(nu, ctx.square(nu)), ctx.mul(nu2, nu)).is_zero()) throw std::logic_error("(nu, 0) not on curve");
    std::int64_t zeros = 0;
    for (std::uint32_t xb = 1; xb < ctx.q(); ++xb) {
        const FieldElement x{xb};
        if (ctx.trace(ctx.add(x, ctx.div(nu2, x))) == 0) ++zeros;
    }
    const CurveCount c = detail::make_count(ctx, {nu}, 2 + 2 * zeros);
    const std::int64_t q = ctx.q();
    if (c.frobenius_trace % 2 == 0 || (((c.frobenius_trace - (q + 1)) % 4) + 4) % 4 != 0)
        throw std::logic_error("ordinary family trace violates t = q + 1 (mod 4)");
    return c;
}

inline CurveCount count_points_melas_curve_naive(const FieldContext& ctx, FieldElement nu) {
    if (nu.is_zero()) throw std::invalid_argument("count_points_melas_curve_naive: nu = 0");
    const FieldElement nu2 = ctx.square(nu);
    std::int64_t n = 1;
    for (std::uint32_t xb = 0; xb < ctx.q(); ++xb) {
        const FieldElement x{xb};
        const FieldElement rhs = ctx.add(ctx.mul(x, ctx.square(x)), ctx.mul(nu2, x));
        for (std::uint32_t yb = 0; yb < ctx.q(); ++yb) {
            const FieldElement y{yb};
            if (ctx.add(ctx.square(y), ctx.mul(x, y)) == rhs) ++n;
        }
    }
    return detail::make_count(ctx, {nu}, n);
}

/// Supersingular isomorphism classes over F_{2^m}, sorted by point count.
struct SupersingularClassTable {
    struct Row {
        std::string points_expression;
        std::int64_t trace_offset;  // #E - (q + 1)
        int frequency;
        int aut_size;
    };
    int m = 0;
    bool m_odd = false;
    std::vector<Row> rows;

    std::int64_t q() const { return std::int64_t{1} << m; }
    int class_count() const {
        int s = 0;
        for (const auto& r : rows) s += r.frequency;
        return s;
    }
};

inline SupersingularClassTable supersingular_classes(int m) {
    if (m < 2 || m > 62) throw std::invalid_argument("supersingular_classes needs m >= 2");
    SupersingularClassTable table;
    table.m = m;
    table.m_odd = m % 2 == 1;
    const std::int64_t q = std::int64_t{1} << m;
    if (table.m_odd) {
        const std::int64_t s = exact_isqrt(2 * q);
        table.rows = {{"q+1-sqrt(2q)", -s, 1, 4}, {"q+1", 0, 1, 2}, {"q+1+sqrt(2q)", s, 1, 4}};
    } else {
        const std::int64_t r = exact_isqrt(q);
        table.rows = {{"q+1-2sqrt(q)", -2 * r, 1, 24},
                      {"q+1-sqrt(q)", -r, 2, 6},
                      {"q+1", 0, 1, 4},
                      {"q+1+sqrt(q)", r, 2, 6},
                      {"q+1+2sqrt(q)", 2 * r, 1, 24}};
    }
    return table;
}

/// Multiplicity of each point count in the family, from the class table and the orbit count (q-1)(N-1)/#Aut.
inline std::map<std::int64_t, std::int64_t> predicted_bch_census(int m) {
    const auto table = supersingular_classes(m);
    const std::int64_t q = table.q();
    std::map<std::int64_t, std::int64_t> out;
    for (const auto& r : table.rows) {
        const std::int64_t n = q + 1 + r.trace_offset;
        const std::int64_t num = (q - 1) * (n - 1) * r.frequency;
        if (num % r.aut_size != 0) throw std::logic_error("non-integral class multiplicity");
        out[n] += num / r.aut_size;
    }
    return out;
}

/// Point-count histogram over Y^2 + Y = lambda X + mu X^3, lambda in F_q, mu in F_q^*.
inline std::map<std::int64_t, std::int64_t> bch_family_census(const FieldContext& ctx) {
    std::map<std::int64_t, std::int64_t> hist;
    for (std::uint32_t u = 1; u < ctx.q(); ++u)
        for (std::uint32_t l = 0; l < ctx.q(); ++l) ++hist[count_points_cubic(ctx, FieldElement{l}, FieldElement{u}).points];
    return hist;
}

/// Frobenius-trace histogram over Y^2 + XY = X^3 + nu^2 X, nu in F_q^*.
inline std::map<std::int64_t, std::int64_t> melas_family_census(const FieldContext& ctx) {
    std::map<std::int64_t, std::int64_t> hist;
    for (std::uint32_t v = 1; v < ctx.q(); ++v) ++hist[count_points_melas_curve(ctx, FieldElement{v}).frobenius_trace];
    return hist;
}

/// t -> H(t^2 - 4q) over the admissible traces with nonzero class number.
inline std::map<std::int64_t, std::int64_t> predicted_melas_census(std::int64_t q) {
    std::map<std::int64_t, std::int64_t> out;
    for (const auto& e : class_number_row(q).entries)
        if (e.h != 0) out[e.t] = e.h;
    return out;
}

}  // namespace curvecodes

#endif  // CURVECODES_CURVES_HPP
