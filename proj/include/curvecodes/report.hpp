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

#ifndef CURVECODES_REPORT_HPP
#define CURVECODES_REPORT_HPP

// Serialization of results. Requires nlohmann/json on the include path.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "classnum.hpp"
#include "cyclic.hpp"
#include "enumerator.hpp"
#include "gf2m.hpp"
#include "hecke.hpp"
#include "verification.hpp"

namespace curvecodes {

using json = nlohmann::ordered_json;

enum class OutputFormat { json, csv, table };

inline OutputFormat parse_output_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "table") return OutputFormat::table;
    throw std::invalid_argument("unknown format '" + s + "' (json|csv|table)");
}

/// Header fields that travel with a distribution.
struct DistributionMeta {
    std::string family;
    std::optional<int> m;
    std::size_t n = 0;
    std::size_t k = 0;
    std::string method;
};

inline json distribution_json(const DistributionMeta& meta, const WeightEnumerator& w) {
    json j;
    j["family"] = meta.family;
    j["m"] = meta.m ? json(*meta.m) : json(nullptr);
    j["n"] = meta.n;
    j["k"] = meta.k;
    j["method"] = meta.method;
    json dist = json::array();
    for (const auto& [weight, count] : w.sparse()) dist.push_back({{"weight", weight}, {"count", to_decimal(count)}});
    j["distribution"] = std::move(dist);
    return j;
}

inline std::string distribution_csv(const WeightEnumerator& w) {
    std::ostringstream out;
    out << "weight,count\n";
    for (std::size_t i = 0; i <= w.length(); ++i) out << i << ',' << to_decimal(w[i]) << '\n';
    return out.str();
}

namespace detail {

// Right-aligned columns. Cell widths count code points so that a label such as the sigma sign lines up.
inline std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

inline std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = display_width(header[c]);
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], display_width(r[c]));
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) out << "  ";
            out << std::string(width[c] - display_width(cells[c]), ' ') << cells[c];
        }
        out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out.str();
}

}  // namespace detail

/// Nonzero rows plus a sigma row holding the total.
inline std::string distribution_table(const WeightEnumerator& w) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [weight, count] : w.sparse()) rows.push_back({std::to_string(weight), to_decimal(count)});
    rows.push_back({"Σ", to_decimal(w.total())});
    return detail::render_table({"weight", "count"}, rows);
}

inline std::string format_distribution(const DistributionMeta& meta, const WeightEnumerator& w, OutputFormat f) {
    switch (f) {
        case OutputFormat::csv:
            return distribution_csv(w);
        case OutputFormat::table: {
            std::ostringstream head;
            head << meta.family;
            if (meta.m) head << " m=" << *meta.m;
            head << " n=" << meta.n << " k=" << meta.k << " (" << meta.method << ")\n";
            return head.str() + distribution_table(w);
        }
        case OutputFormat::json:
            break;
    }
    return distribution_json(meta, w).dump(2) + "\n";
}

/// Accepts either the JSON distribution schema or "weight,count" CSV with dense or sparse rows.
inline std::pair<DistributionMeta, WeightEnumerator> parse_distribution(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty distribution input");
    if (text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
        }
        try {
            DistributionMeta meta;
            meta.family = j.value("family", std::string("custom"));
            if (j.contains("m") && !j["m"].is_null()) meta.m = j["m"].get<int>();
            meta.n = j.at("n").get<std::size_t>();
            meta.k = j.value("k", std::size_t{0});
            meta.method = j.value("method", std::string{});
            std::map<std::size_t, BigInt> sparse;
            for (const auto& row : j.at("distribution")) {
                const auto& c = row.at("count");
                const BigInt count = c.is_string() ? parse_decimal(c.get<std::string>()) : BigInt(c.get<std::int64_t>());
                sparse[row.at("weight").get<std::size_t>()] += count;
            }
            return {meta, WeightEnumerator::from_sparse(meta.n, sparse)};
        } catch (const json::exception& e) {
            throw std::invalid_argument(std::string("distribution JSON missing or mistyped field: ") + e.what());
        }
    }
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "weight,count") throw std::invalid_argument("CSV input must start with header 'weight,count'");
    std::map<std::size_t, BigInt> sparse;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("CSV row without comma: " + line);
        std::size_t used = 0;
        const std::string ws = line.substr(0, comma);
        const unsigned long weight = std::stoul(ws, &used);
        if (used != ws.size()) throw std::invalid_argument("bad weight: " + ws);
        sparse[weight] += parse_decimal(line.substr(comma + 1));
        n = std::max<std::size_t>(n, weight);
    }
    DistributionMeta meta{"custom", std::nullopt, n, 0, {}};
    return {meta, WeightEnumerator::from_sparse(n, sparse)};
}

inline json field_json(const FieldContext& ctx) {
    return {{"m", ctx.m()},
            {"q", ctx.q()},
            {"modulus", ctx.modulus().to_string()},
            {"modulus-hex", ctx.modulus().to_hex()},
            {"alpha", ctx.alpha().bits},
            {"alpha-minimal-polynomial", ctx.minimal_polynomial(ctx.alpha()).to_string()}};
}

inline json code_json(const CyclicCode& code) {
    json j;
    j["family"] = family_name(code.family());
    j["m"] = code.degree_m() ? json(*code.degree_m()) : json(nullptr);
    j["n"] = code.length();
    j["k"] = code.dimension();
    j["generator-hex"] = code.generator().to_hex();
    j["generator"] = code.generator().to_string();
    return j;
}

inline json histogram_json(const std::map<std::int64_t, std::int64_t>& h) {
    json j = json::object();
    for (const auto& [key, count] : h) j[std::to_string(key)] = count;
    return j;
}

inline json census_json(std::int64_t q, const std::string& family, const std::map<std::int64_t, std::int64_t>& histogram,
                        const std::map<std::int64_t, std::int64_t>& predicted) {
    return {{"q", q},
            {"family", family},
            {"key", family == "melas" ? "frobenius-trace" : "point-count"},
            {"histogram", histogram_json(histogram)},
            {"predicted", histogram_json(predicted)},
            {"match", histogram == predicted}};
}

inline json class_number_row_json(const ClassNumberRow& row) {
    json entries = json::array();
    for (const auto& e : row.entries) entries.push_back({{"t", e.t}, {"d", e.d}, {"h", e.h}});
    return {{"q", row.q}, {"rows", std::move(entries)}, {"sum-h", row.sum_h()}, {"sum-t-h", row.sum_t_h()}};
}

inline json hecke_json(const HeckeTraceTable& t) {
    json traces = json::array();
    for (int k = 2; k <= t.k_max(); ++k) traces.push_back({{"k", k}, {"trace", to_decimal(t.trace(k))}});
    return {{"q", t.q()}, {"k-max", t.k_max()}, {"traces", std::move(traces)}};
}

inline json verification_json(const VerificationReport& r, int max_m) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"parameters", c.parameters},
                          {"expected-source", c.expected_source},
                          {"status", c.passed ? "pass" : "fail"},
                          {"elapsed-seconds", c.elapsed_seconds},
                          {"detail", c.detail}});
    return {{"max-m", max_m}, {"checks", std::move(checks)}, {"overall", r.overall()}};
}

inline std::string verification_table(const VerificationReport& r) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        const auto& c = r.checks[i];
        std::ostringstream secs;
        secs.setf(std::ios::fixed);
        secs.precision(3);
        secs << c.elapsed_seconds;
        rows.push_back({std::to_string(i + 1), c.name, c.parameters, c.passed ? "PASS" : "FAIL", secs.str()});
    }
    std::string out = detail::render_table({"#", "check", "parameters", "status", "seconds"}, rows);
    for (const auto& c : r.checks)
        if (!c.passed) out += "  " + c.name + ": " + c.detail + "\n";
    out += std::string("overall: ") + (r.overall() ? "PASS" : "FAIL") + "\n";
    return out;
}

}  // namespace curvecodes

#endif  // CURVECODES_REPORT_HPP
