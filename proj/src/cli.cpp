// Copyright 2026 The cqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cqec/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cqec/analysis.hpp"
#include "cqec/code_file.hpp"
#include "cqec/composite_builder.hpp"
#include "cqec/ldi.hpp"

namespace cqec::cli {

namespace {

enum class Format { Text, Kv };

// Scalar facts print as key=value in both formats; `notes` are human-only
// lines shown in text mode.
struct Report {
    std::vector<std::pair<std::string, std::string>> fields;
    std::vector<std::string> notes;

    template <typename T>
    void add(std::string key, const T& value) {
        std::ostringstream s;
        s << value;
        fields.emplace_back(std::move(key), s.str());
    }
};

std::string join_entries(const IntVector& v) {
    std::ostringstream s;
    for (Eigen::Index i = 0; i < v.size(); ++i) s << (i ? " " : "") << v(i).get_str();
    return s.str();
}

std::string format_double(double v) {
    std::ostringstream s;
    s << std::setprecision(15) << v;
    return s.str();
}

void emit(const Report& report, Format format, std::ostream& out) {
    for (const auto& [key, value] : report.fields) out << key << '=' << value << '\n';
    if (format == Format::Text) {
        for (const std::string& note : report.notes) out << note << '\n';
    }
}

struct Options {
    Format format = Format::Text;
    bool no_validate = false;
};

struct Outcome {
    Report report;
    std::optional<StabilizerCode> code;
    int exit_code = kExitOk;
};

StabilizerCode load(const std::string& path, const Options& opts) { return read_code_file(path, !opts.no_validate); }

LdiCode load_ldi(const std::string& path, const Options& opts) {
    StabilizerCode code = load(path, opts);
    if (!code.modulus().is_unbounded()) throw std::invalid_argument(path + ": expected an integer (q=Z) code");
    if (!code.origin_prime()) throw std::invalid_argument(path + ": integer code needs origin=<prime> in its header");
    return LdiCode(code, *code.origin_prime());
}

std::int64_t resolve_q(const StabilizerCode& code, std::optional<std::int64_t> q) {
    if (q) return *q;
    if (code.modulus().is_finite()) return code.modulus().value();
    throw std::invalid_argument("--Q is required for integer (q=Z) codes");
}

PauliVec parse_error_vector(const std::string& text, Eigen::Index n) {
    std::istringstream in(text);
    std::vector<Integer> values;
    std::string token;
    while (in >> token) {
        try {
            values.emplace_back(token);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("--error: not an integer: '" + token + "'");
        }
    }
    if (static_cast<Eigen::Index>(values.size()) != 2 * n) {
        throw std::invalid_argument("--error: expected " + std::to_string(2 * n) + " integers, got " +
                                    std::to_string(values.size()));
    }
    IntVector v(2 * n);
    for (Eigen::Index i = 0; i < 2 * n; ++i) v(i) = values[static_cast<std::size_t>(i)];
    return PauliVec(std::move(v), Modulus::unbounded());
}

PrimeComponent parse_component(const std::string& arg, const Options& opts) {
    const std::size_t at = arg.rfind('@');
    if (at == std::string::npos || at + 2 > arg.size() || arg[at + 1] != 'p') {
        throw std::invalid_argument("mix: expected FILE@pPRIME, got '" + arg + "'");
    }
    std::int64_t p = 0;
    try {
        std::size_t used = 0;
        p = std::stoll(arg.substr(at + 2), &used);
        if (used != arg.size() - at - 2) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::invalid_argument("mix: bad prime in '" + arg + "'");
    }
    return PrimeComponent::from(load(arg.substr(0, at), opts), p);
}

void describe_code(Report& r, const StabilizerCode& code) {
    r.add("n", code.n());
    r.add("modulus", code.modulus().to_string());
    r.add("generators", code.num_generators());
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Build, transform and check stabilizer codes over composite local dimensions", "cqec"};
    app.require_subcommand(1);
    Options opts;
    std::string format_name = "text";
    app.add_option("--format", format_name, "Report format")->check(CLI::IsMember({"text", "kv"}));
    app.add_flag("--no-validate", opts.no_validate, "Skip validation when reading code files");

    std::string file, output, error_text, lift_name = "nonneg", known_name;
    std::optional<std::int64_t> q_opt, p_star;
    std::int64_t m = 1, total_n = 0, offset = 0, max_weight = 0;
    unsigned jobs = 1;
    std::vector<std::string> components;

    auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Code file")->required(); };
    auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", output, "Write the resulting code here"); };

    auto* validate_cmd = app.add_subcommand("validate", "Check commutation and independence");
    add_file(validate_cmd);

    auto* canon_cmd = app.add_subcommand("canon", "Canonical form [I X2 | Z1 Z2] over a prime modulus");
    add_file(canon_cmd);
    add_output(canon_cmd);

    auto* ldi_cmd = app.add_subcommand("ldi", "Local-dimension-invariant form of a prime-field code");
    add_file(ldi_cmd);
    add_output(ldi_cmd);

    auto* inst_cmd = app.add_subcommand("instantiate", "Reduce an integer code mod Q");
    inst_cmd->add_option("--Q", q_opt, "Target modulus")->required();
    add_file(inst_cmd);
    add_output(inst_cmd);

    auto* scale_cmd = app.add_subcommand("scale", "Multiply an integer code by m inside Z_{mQ}");
    scale_cmd->add_option("--m", m, "Multiplier")->required();
    scale_cmd->add_option("--Q", q_opt, "Base modulus")->required();
    add_file(scale_cmd);
    add_output(scale_cmd);

    auto* mix_cmd = app.add_subcommand("mix", "Pick-and-mix prime components into one code mod Q");
    mix_cmd->add_option("--Q", q_opt, "Square-free composite modulus")->required();
    mix_cmd->add_option("components", components, "FILE@pPRIME per component")->required();
    add_output(mix_cmd);

    auto* embed_cmd = app.add_subcommand("embed", "Pad a code with identity registers");
    embed_cmd->add_option("--n", total_n, "Total register count")->required();
    embed_cmd->add_option("--offset", offset, "First register of the block (0-based)")->required();
    add_file(embed_cmd);
    add_output(embed_cmd);

    auto* info_cmd = app.add_subcommand("info", "Logical dimension, generator orders and logical operators");
    info_cmd->add_option("--Q", q_opt, "Modulus (defaults to the code's)");
    add_file(info_cmd);

    auto* dist_cmd = app.add_subcommand("distance", "Exhaustive minimum-distance search");
    dist_cmd->add_option("--Q", q_opt, "Modulus (defaults to the code's)");
    dist_cmd->add_option("--max-weight", max_weight, "Largest weight to search")->required();
    dist_cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
    add_file(dist_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "Unavoidable vs artifact classification of an error");
    classify_cmd->add_option("--error", error_text, "2n integers, X powers first")->required();
    classify_cmd->add_option("--lift", lift_name, "Integer lift of the error")
        ->check(CLI::IsMember({"nonneg", "symmetric"}));
    classify_cmd->add_option("--Q", q_opt, "Modulus (defaults to the code's)");
    add_file(classify_cmd);

    auto* cond_cmd = app.add_subcommand("check-cond", "Distance-preservation conditions for an integer code at Q");
    cond_cmd->add_option("--Q", q_opt, "Target modulus")->required();
    cond_cmd->add_option("--p-star", p_star, "Cutoff prime p*");
    add_file(cond_cmd);

    auto* known_cmd = app.add_subcommand("known", "Emit a built-in code (five_qubit, five_qudit:P, steane, ...)");
    known_cmd->add_option("name", known_name, "Code name")->required();
    add_output(known_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return kExitUsage;
    }
    opts.format = format_name == "kv" ? Format::Kv : Format::Text;

    Outcome result;
    Report& r = result.report;
    try {
        if (*validate_cmd) {
            const StabilizerCode code = read_code_file(file, false);
            const ValidationReport report = validate(code);
            describe_code(r, code);
            r.add("valid", report.valid() ? "true" : "false");
            for (const auto& v : report.violations) {
                r.add("violation", std::to_string(v.first + 1) + "," + std::to_string(v.second + 1) + ":" +
                                       v.product.get_str());
            }
            for (Eigen::Index i : report.dependent) r.add("dependent", i + 1);
            if (!report.valid()) {
                r.notes.push_back(report.summary());
                result.exit_code = kExitDomainError;
            }
        } else if (*canon_cmd) {
            const CanonicalForm canon = canonical_form(load(file, opts));
            r.add("rank", canon.rank);
            std::ostringstream perm, swaps;
            for (std::size_t k = 0; k < canon.register_permutation.size(); ++k) {
                perm << (k ? "," : "") << canon.register_permutation[k] + 1;
            }
            bool first = true;
            for (std::size_t k = 0; k < canon.hadamard_swaps.size(); ++k) {
                if (!canon.hadamard_swaps[k]) continue;
                swaps << (first ? "" : ",") << k + 1;
                first = false;
            }
            r.add("permutation", perm.str());
            r.add("swaps", swaps.str().empty() ? "none" : swaps.str());
            result.code = canon.code;
        } else if (*ldi_cmd) {
            const LdiCode ldi = to_ldi(load(file, opts));
            const LdiMetrics metrics = ldi_metrics(ldi);
            r.add("B", metrics.max_entry.get_str());
            r.add("is_ldi", metrics.is_ldi ? "true" : "false");
            r.add("origin", ldi.origin_prime());
            result.code = ldi.inner();
        } else if (*inst_cmd) {
            const StabilizerCode code = instantiate(load_ldi(file, opts), *q_opt);
            describe_code(r, code);
            r.add("valid", validate(code).valid() ? "true" : "false");
            result.code = code;
        } else if (*scale_cmd) {
            const StabilizerCode code = scale_by_m(load_ldi(file, opts), m, *q_opt);
            describe_code(r, code);
            r.add("valid", validate(code).valid() ? "true" : "false");
            result.code = code;
        } else if (*mix_cmd) {
            std::vector<PrimeComponent> parts;
            for (const std::string& c : components) parts.push_back(parse_component(c, opts));
            const StabilizerCode code = mix_codes(parts, *q_opt);
            const LogicalDimension dim = logical_dimension(code, *q_opt);
            describe_code(r, code);
            r.add("K", dim.K.get_str());
            r.add("k", format_double(dim.k));
            if (code.claimed_distance()) r.add("claimed_d", *code.claimed_distance());
            result.code = code;
        } else if (*embed_cmd) {
            const StabilizerCode code = block_embed(load(file, opts), total_n, offset);
            describe_code(r, code);
            result.code = code;
        } else if (*info_cmd) {
            const StabilizerCode code = load(file, opts);
            const std::int64_t q = resolve_q(code, q_opt);
            const CodeReport report = analyze(code, q);
            describe_code(r, code);
            r.add("Q", q);
            r.add("K", report.K.get_str());
            r.add("k", format_double(report.k));
            std::ostringstream orders;
            for (std::size_t i = 0; i < report.generator_orders.size(); ++i) {
                orders << (i ? "," : "") << report.generator_orders[i];
            }
            r.add("generator_orders", orders.str());
            r.add("logicals", report.logical_generators.size());
            for (std::size_t i = 0; i < report.logical_generators.size(); ++i) {
                const auto& l = report.logical_generators[i];
                r.add("logical." + std::to_string(i), join_entries(l.op.entries()));
                r.add("logical." + std::to_string(i) + ".order", l.order);
            }
        } else if (*dist_cmd) {
            const StabilizerCode code = load(file, opts);
            const std::int64_t q = resolve_q(code, q_opt);
            const DistanceResult d = brute_force_distance(code, q, max_weight, DistanceOptions{jobs});
            if (d.distance) {
                r.add("d", *d.distance);
                r.add("witness", join_entries(d.witness->entries()));
            } else {
                r.add("d", ">" + std::to_string(d.searched_up_to));
            }
            r.add("searched_up_to", d.searched_up_to);
            if (d.budget_exhausted) {
                r.add("budget_exhausted", "true");
                r.notes.push_back("search budget exhausted; the bound is partial");
            }
        } else if (*classify_cmd) {
            const StabilizerCode code = load(file, opts);
            const std::int64_t q = resolve_q(code, q_opt);
            const PauliVec raw = parse_error_vector(error_text, code.n());
            const LiftPolicy policy = lift_name == "symmetric" ? LiftPolicy::Symmetric : LiftPolicy::NonNegative;
            const PauliVec lift = lift_and_reduce(lift_and_reduce(raw, Modulus::finite(q)), Modulus::unbounded(), policy);
            const UndetectableError e = classify_undetectable(code, lift, q);
            r.add("class", to_string(e.classification));
            r.add("lift", join_entries(e.error.entries()));
            r.add("weight", e.weight);
            r.add("integer_syndrome", join_entries(e.integer_syndrome));
        } else if (*cond_cmd) {
            const LdiCode ldi = load_ldi(file, opts);
            const DistanceCondition c = check_distance_condition(ldi, *q_opt, p_star);
            r.add("B", ldi.max_entry().get_str());
            r.add("origin", ldi.origin_prime());
            r.add("condition", to_string(c));
            if (c != DistanceCondition::Unknown && ldi.inner().claimed_distance()) {
                r.add("claimed_d", *ldi.inner().claimed_distance());
            }
        } else if (*known_cmd) {
            const codes::KnownCode known = codes::known_code(known_name);
            result.code = std::holds_alternative<LdiCode>(known) ? std::get<LdiCode>(known).inner()
                                                                 : std::get<StabilizerCode>(known);
            describe_code(r, *result.code);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }

    if (result.code) {
        if (!output.empty()) {
            try {
                write_code_file(output, *result.code);
            } catch (const std::exception& e) {
                err << "error: " << e.what() << '\n';
                return kExitDomainError;
            }
            result.report.add("output", output);
            emit(result.report, opts.format, out);
        } else {
            emit(result.report, opts.format, err);
            out << serialize_code_file(*result.code);
        }
    } else {
        emit(result.report, opts.format, out);
    }
    return result.exit_code;
}

}  // namespace cqec::cli
