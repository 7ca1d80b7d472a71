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

// curvecodes: command-line front end.
// Exit status: 0 success, 1 verification failure, 2 usage or parameter error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "curvecodes/classnum.hpp"
#include "curvecodes/curves.hpp"
#include "curvecodes/cyclic.hpp"
#include "curvecodes/distributions.hpp"
#include "curvecodes/enumerator.hpp"
#include "curvecodes/gf2m.hpp"
#include "curvecodes/hecke.hpp"
#include "curvecodes/report.hpp"
#include "curvecodes/verification.hpp"

namespace cc = curvecodes;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CodeArgs {
    std::string family;
    int m = 0;
    std::optional<std::size_t> n;
};

unsigned default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

cc::CyclicCode make_code(const CodeArgs& a) {
    const auto f = cc::parse_family(a.family);
    if (f == cc::Family::parity || f == cc::Family::repetition) {
        const std::size_t n = a.n ? *a.n : (std::size_t{1} << a.m) - 1;
        if (a.n && *a.n < 2) throw UsageError("--n must be at least 2");
        if (!a.n && (a.m < cc::kMinFieldDegree || a.m > cc::kMaxFieldDegree))
            throw UsageError("--m must lie in 2..16 (or pass --n)");
        return f == cc::Family::parity ? cc::make_parity_code(n) : cc::make_repetition_code(n);
    }
    if (a.n) throw UsageError("--n applies only to parity and repetition codes");
    return cc::build_named_code(f, a.m);
}

cc::DistributionMeta meta_for(const cc::CyclicCode& code, std::string method) {
    return {cc::family_name(code.family()), code.degree_m(), code.length(), code.dimension(), std::move(method)};
}

// Flat key/value rendering for small records.
std::string format_record(const cc::json& j, cc::OutputFormat f) {
    if (f == cc::OutputFormat::json) return j.dump(2) + "\n";
    std::ostringstream out;
    if (f == cc::OutputFormat::csv) {
        out << "key,value\n";
        for (const auto& [k, v] : j.items()) out << k << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        return out.str();
    }
    std::size_t w = 0;
    for (const auto& [k, v] : j.items()) w = std::max(w, k.size());
    for (const auto& [k, v] : j.items())
        out << std::string(w - k.size(), ' ') << k << "  " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    return out.str();
}

std::string format_census(const cc::json& j, const std::map<std::int64_t, std::int64_t>& hist,
                          const std::map<std::int64_t, std::int64_t>& predicted, cc::OutputFormat f) {
    if (f == cc::OutputFormat::json) return j.dump(2) + "\n";
    const std::string key = j["key"].get<std::string>();
    std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> merged;
    for (auto [k, c] : hist) merged[k].first = c;
    for (auto [k, c] : predicted) merged[k].second = c;
    std::ostringstream out;
    if (f == cc::OutputFormat::csv) {
        out << key << ",count,predicted\n";
        for (auto [k, p] : merged) out << k << ',' << p.first << ',' << p.second << '\n';
        return out.str();
    }
    std::vector<std::vector<std::string>> rows;
    std::int64_t s1 = 0, s2 = 0;
    for (auto [k, p] : merged) {
        rows.push_back({std::to_string(k), std::to_string(p.first), std::to_string(p.second)});
        s1 += p.first;
        s2 += p.second;
    }
    rows.push_back({"Σ", std::to_string(s1), std::to_string(s2)});
    out << j["family"].get<std::string>() << " q=" << j["q"].get<std::int64_t>() << '\n'
        << cc::detail::render_table({key, "count", "predicted"}, rows)
        << "match: " << (j["match"].get<bool>() ? "yes" : "no") << '\n';
    return out.str();
}

std::string format_class_row(const cc::ClassNumberRow& row, cc::OutputFormat f) {
    if (f == cc::OutputFormat::json) return cc::class_number_row_json(row).dump(2) + "\n";
    std::ostringstream out;
    if (f == cc::OutputFormat::csv) {
        out << "t,d,h\n";
        for (const auto& e : row.entries) out << e.t << ',' << e.d << ',' << e.h << '\n';
        return out.str();
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : row.entries) rows.push_back({std::to_string(e.t), std::to_string(e.d), std::to_string(e.h)});
    rows.push_back({"Σ", "", std::to_string(row.sum_h())});
    out << "q=" << row.q << '\n' << cc::detail::render_table({"t", "d", "H(d)"}, rows);
    return out.str();
}

std::string format_hecke(const cc::HeckeTraceTable& t, cc::OutputFormat f) {
    if (f == cc::OutputFormat::json) return cc::hecke_json(t).dump(2) + "\n";
    std::ostringstream out;
    if (f == cc::OutputFormat::csv) {
        out << "k,trace\n";
        for (int k = 2; k <= t.k_max(); ++k) out << k << ',' << cc::to_decimal(t.trace(k)) << '\n';
        return out.str();
    }
    std::vector<std::vector<std::string>> rows;
    for (int k = 2; k <= t.k_max(); ++k) rows.push_back({std::to_string(k), cc::to_decimal(t.trace(k))});
    out << "q=" << t.q() << '\n' << cc::detail::render_table({"k", "trace"}, rows);
    return out.str();
}

std::string format_verification(const cc::VerificationReport& r, int max_m, cc::OutputFormat f) {
    if (f == cc::OutputFormat::json) return cc::verification_json(r, max_m).dump(2) + "\n";
    if (f == cc::OutputFormat::table) return cc::verification_table(r);
    std::ostringstream out;
    out << "name,parameters,expected_source,status,elapsed_seconds\n";
    for (const auto& c : r.checks)
        out << c.name << ",\"" << c.parameters << "\",\"" << c.expected_source << "\"," << (c.passed ? "pass" : "fail")
            << ',' << c.elapsed_seconds << '\n';
    return out.str();
}

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

cc::WeightEnumerator closed_form(const cc::CyclicCode& code) {
    const int m = code.degree_m().value_or(0);
    switch (code.family()) {
        case cc::Family::parity:
            return cc::parity_distribution(code.length());
        case cc::Family::repetition:
            return cc::repetition_distribution(code.length());
        case cc::Family::hamming:
            return cc::hamming_distribution(m);
        case cc::Family::melas:
            return cc::melas_distribution(m);
        default:
            throw UsageError("no closed form for " + cc::family_name(code.family()) + "; use --method macwilliams");
    }
}

// Primal distribution as the transform of a known dual distribution.
cc::WeightEnumerator via_transform(const cc::CyclicCode& code) {
    const std::size_t n = code.length();
    const int m = code.degree_m().value_or(0);
    const cc::BigInt dual_size = cc::pow2(static_cast<unsigned>(n - code.dimension()));
    switch (code.family()) {
        case cc::Family::parity:
            return cc::macwilliams_transform(cc::repetition_distribution(n), dual_size);
        case cc::Family::repetition:
            return cc::macwilliams_transform(cc::parity_distribution(n), dual_size);
        case cc::Family::hamming:
            return cc::macwilliams_transform(cc::hamming_dual_distribution(m), dual_size);
        case cc::Family::bch2:
            return cc::bch_distribution(m);
        case cc::Family::melas:
            return cc::macwilliams_transform(cc::melas_dual_distribution(m), dual_size);
        default:
            throw UsageError("no dual formula for this family");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"curvecodes: weight distributions of binary cyclic codes via curves and class numbers"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));

    const auto add_code_args = [](CLI::App* sub, CodeArgs& a, bool with_n) {
        sub->add_option("--family", a.family, "parity | repetition | hamming | bch2 | melas")->required();
        sub->add_option("--m", a.m, "Field degree, q = 2^m");
        if (with_n) sub->add_option("--n", a.n, "Length for parity/repetition (default 2^m - 1)");
    };

    int field_m = 0;
    auto* field = app.add_subcommand("field", "Canonical GF(2^m): modulus and primitive element");
    field->add_option("--m", field_m, "Field degree")->required();

    CodeArgs code_args;
    auto* code = app.add_subcommand("code", "Generator polynomial of a named cyclic code");
    add_code_args(code, code_args, true);

    CodeArgs enum_args;
    std::uint64_t work_limit = cc::kDefaultWorkLimit;
    unsigned workers = default_workers();
    auto* enumerate = app.add_subcommand("enumerate", "Weight distribution by exhaustive enumeration");
    add_code_args(enumerate, enum_args, true);
    enumerate->add_option("--work-limit", work_limit, "Maximum number of codewords to enumerate");
    enumerate->add_option("--workers", workers, "Enumeration threads")->check(CLI::Range(1U, 256U));

    CodeArgs dual_args;
    std::string dual_method = "trace";
    auto* dual = app.add_subcommand("dual", "Weight distribution of the dual code by enumeration");
    add_code_args(dual, dual_args, true);
    dual->add_option("--method", dual_method, "trace | nullspace")->check(CLI::IsMember({"trace", "nullspace"}));
    dual->add_option("--work-limit", work_limit, "Maximum number of codewords to enumerate");

    std::string mw_in;
    auto* mw = app.add_subcommand("macwilliams", "MacWilliams transform of a distribution (JSON or CSV; '-' for stdin)");
    mw->add_option("--in", mw_in, "Input file")->required();

    CodeArgs dist_args;
    std::string dist_method;
    auto* dist = app.add_subcommand("dist", "Weight distribution by formula, transform, or enumeration");
    add_code_args(dist, dist_args, true);
    dist->add_option("--method", dist_method, "closed-form | macwilliams | brute-force")
        ->check(CLI::IsMember({"closed-form", "macwilliams", "brute-force"}));
    dist->add_option("--work-limit", work_limit, "Enumeration limit for brute-force");

    std::optional<std::int64_t> class_d, class_row_q;
    auto* classnum = app.add_subcommand("class-number", "Kronecker class number H(d), or a row over admissible traces");
    auto* opt_d = classnum->add_option("--d", class_d, "Discriminant d < 0, d = 0 or 1 mod 4");
    auto* opt_q = classnum->add_option("--row-q", class_row_q, "q = 2^m: H(t^2 - 4q) for admissible t");
    opt_d->excludes(opt_q);
    classnum->require_option(1);

    int hecke_m = 0, hecke_kmax = cc::kDefaultHeckeKMax;
    auto* hecke = app.add_subcommand("hecke-trace", "Traces of Hecke operators T_q on S_k(Gamma_1(4))");
    hecke->add_option("--m", hecke_m, "q = 2^m")->required();
    hecke->add_option("--kmax", hecke_kmax, "Largest weight k")->check(CLI::Range(2, 100000));

    std::string census_family;
    int census_m = 0;
    auto* census = app.add_subcommand("census", "Point-count census of the curve family behind a dual code");
    census->add_option("--family", census_family, "bch2 | melas")->required();
    census->add_option("--m", census_m, "Field degree")->required();

    int max_m = cc::kMaxVerifyM;
    auto* verify = app.add_subcommand("verify-all", "Run every cross-check and report pass/fail");
    verify->add_option("--max-m", max_m, "Cap on field degrees")->check(CLI::Range(cc::kMinVerifyM, cc::kMaxVerifyM));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }
    const auto fmt = cc::parse_output_format(format);
    const auto need_m = [](const CodeArgs& a) {
        const auto f = cc::parse_family(a.family);
        if (f != cc::Family::parity && f != cc::Family::repetition && a.m == 0) throw UsageError("--m is required");
    };

    if (*field) {
        std::cout << format_record(cc::field_json(cc::FieldContext(field_m)), fmt);
        return kExitOk;
    }
    if (*code) {
        need_m(code_args);
        std::cout << format_record(cc::code_json(make_code(code_args)), fmt);
        return kExitOk;
    }
    if (*enumerate) {
        need_m(enum_args);
        const auto c = make_code(enum_args);
        const auto w = cc::enumerate_weight_distribution(c, work_limit, workers);
        std::cout << cc::format_distribution(meta_for(c, "brute-force"), w, fmt);
        return kExitOk;
    }
    if (*dual) {
        need_m(dual_args);
        const auto c = make_code(dual_args);
        cc::WeightEnumerator w;
        if (dual_method == "trace") {
            if (c.family() == cc::Family::parity || c.family() == cc::Family::repetition)
                throw UsageError("trace representation exists for hamming, bch2, melas; use --method nullspace");
            w = cc::dual_trace_distribution(c.family(), *c.degree_m());
        } else {
            w = cc::enumerate_span_distribution(cc::dual_basis(c), c.length(), work_limit, default_workers());
        }
        auto meta = meta_for(c, "brute-force");
        meta.family += "-dual";
        meta.k = c.length() - c.dimension();
        auto j = cc::distribution_json(meta, w);
        j["route"] = dual_method;
        std::cout << (fmt == cc::OutputFormat::json ? j.dump(2) + "\n" : cc::format_distribution(meta, w, fmt));
        return kExitOk;
    }
    if (*mw) {
        auto [meta, w] = cc::parse_distribution(read_input(mw_in));
        const auto size = w.total();
        const auto out = cc::macwilliams_transform(w, size);
        const auto dim = static_cast<std::size_t>(boost::multiprecision::msb(size));
        meta.k = meta.n - dim;
        meta.method = "macwilliams";
        const std::string suffix = "-dual";
        if (meta.family.size() > suffix.size() && meta.family.ends_with(suffix))
            meta.family.resize(meta.family.size() - suffix.size());
        else
            meta.family += suffix;
        std::cout << cc::format_distribution(meta, out, fmt);
        return kExitOk;
    }
    if (*dist) {
        need_m(dist_args);
        const auto c = make_code(dist_args);
        std::string method = dist_method;
        if (method.empty()) method = c.family() == cc::Family::bch2 ? "macwilliams" : "closed-form";
        cc::WeightEnumerator w;
        if (method == "closed-form")
            w = closed_form(c);
        else if (method == "macwilliams")
            w = via_transform(c);
        else
            w = cc::enumerate_weight_distribution(c, work_limit, default_workers());
        std::cout << cc::format_distribution(meta_for(c, method), w, fmt);
        return kExitOk;
    }
    if (*classnum) {
        if (class_d) {
            const cc::json j = {{"d", *class_d}, {"h", cc::kronecker_class_number(*class_d)}};
            std::cout << format_record(j, fmt);
        } else {
            std::cout << format_class_row(cc::class_number_row(*class_row_q), fmt);
        }
        return kExitOk;
    }
    if (*hecke) {
        if (hecke_m < 2 || hecke_m > 62) throw UsageError("--m must lie in 2..62");
        std::cout << format_hecke(cc::HeckeTraceTable(std::int64_t{1} << hecke_m, hecke_kmax), fmt);
        return kExitOk;
    }
    if (*census) {
        const auto f = cc::parse_family(census_family);
        const cc::FieldContext ctx(census_m);
        std::map<std::int64_t, std::int64_t> hist, predicted;
        if (f == cc::Family::bch2) {
            hist = cc::bch_family_census(ctx);
            predicted = cc::predicted_bch_census(census_m);
        } else if (f == cc::Family::melas) {
            hist = cc::melas_family_census(ctx);
            predicted = cc::predicted_melas_census(ctx.q());
        } else {
            throw UsageError("census is defined for bch2 and melas");
        }
        const auto j = cc::census_json(ctx.q(), cc::family_name(f), hist, predicted);
        std::cout << format_census(j, hist, predicted, fmt);
        return hist == predicted ? kExitOk : kExitVerification;
    }
    if (*verify) {
        cc::VerificationOptions opts;
        opts.max_m = max_m;
        const auto report = cc::run_verification(opts);
        std::cout << format_verification(report, max_m, fmt);
        return report.overall() ? kExitOk : kExitVerification;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::domain_error& e) {
        // non-integral or negative result: a failed consistency check
        std::cerr << "verification failure: " << e.what() << '\n';
        return kExitVerification;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitVerification;
    }
}
