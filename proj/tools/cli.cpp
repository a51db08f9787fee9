/*
   Copyright 2026 The manypoints Authors

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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <manypoints/manypoints.hpp>

namespace manypoints::cli {
namespace {

using json = nlohmann::ordered_json;

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    return Format::Default;
}

unsigned default_threads() {
    if (const char* env = std::getenv("THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + cell(v[i]);
        return s;
    }
    if (v.is_object()) return v.dump();
    return v.dump();
}

// Renders one record or an array of flat records.
void emit(const json& data, Format fmt, std::ostream& out) {
    if (fmt == Format::Json || fmt == Format::Default) {
        out << data.dump(2) << '\n';
        return;
    }
    const json rows = data.is_array() ? data : json::array({data});
    if (fmt == Format::Csv) {
        if (rows.empty()) return;
        bool first = true;
        for (const auto& [key, _] : rows[0].items()) {
            out << (first ? "" : ",") << key;
            first = false;
        }
        out << '\n';
        for (const auto& row : rows) {
            first = true;
            for (const auto& [_, value] : row.items()) {
                out << (first ? "" : ",") << cell(value);
                first = false;
            }
            out << '\n';
        }
        return;
    }
    for (const auto& row : rows) {
        bool first = true;
        for (const auto& [key, value] : row.items()) {
            out << (first ? "" : " ") << key << '=' << cell(value);
            first = false;
        }
        out << '\n';
    }
}

std::vector<u64> parse_coefficients(const std::string& s) {
    std::vector<u64> c;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            c.push_back(std::stoull(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw DomainError(Errc::InvalidElement, "bad coefficient '" + item + "'");
        }
    }
    return c;
}

// Element from either its canonical index or a comma-separated coefficient list.
ElementIndex element_arg(const Field& f, const std::optional<u64>& index, const std::optional<std::string>& poly,
                         const char* what) {
    if (poly) {
        auto c = parse_coefficients(*poly);
        if (c.size() > f.n()) throw DomainError(Errc::InvalidElement, std::string(what) + " has too many coefficients");
        c.resize(f.n(), 0);
        return f.index(FieldElement{c});
    }
    if (!index) throw DomainError(Errc::InvalidElement, std::string(what) + " is required");
    f.check(*index);
    return *index;
}

SearchLimits limits_of(const CliConfig& cfg) {
    SearchLimits l;
    l.sweep_cap = cfg.sweep_cap;
    l.quartic_cap = cfg.quartic_cap;
    return l;
}

json count_json(u64 q, const char* kind, ElementIndex lambda, ElementIndex twist, u64 count) {
    return json{{"curve", kind},   {"q", q},         {"lambda", lambda},
                {"twist", twist},  {"count", count}, {"trace", frobenius_trace(q, count)}};
}

json survey_json(const SurveyReport& r) {
    json achieved = json::array();
    for (const auto& [count, lambda] : r.achieved) achieved.push_back({{"count", count}, {"lambda", lambda}});
    json tags = json::array();
    for (auto t : r.tags) tags.push_back(std::string(tag_name(t)));
    return json{{"q", r.q}, {"achieved", achieved}, {"missing", r.missing}, {"tags", tags}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Genus-3 plane quartics with many points via twisted Legendre curves", "manypoints"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    cfg.threads = default_threads();
    std::string format = "default";
    app.add_option("--threads", cfg.threads, "Worker threads (default: THREADS or hardware concurrency)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Seed for root-finding splits");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--sweep-cap", cfg.sweep_cap, "Largest q for full lambda sweeps")->check(CLI::Range(u64{3}, u64{kMaxFieldSize}));
    app.add_option("--quartic-cap", cfg.quartic_cap, "Largest q for brute-force quartic counts")
        ->check(CLI::Range(u64{3}, u64{kMaxFieldSize}));

    u64 p = 0, q = 0, target = 0, q_max = 0, q_min = 3;
    unsigned n = 1, n_max = 0;
    std::optional<u64> lambda, twist, genus;
    std::optional<std::string> lambda_poly, twist_poly;
    std::string kind, method = "naive", table_kind;
    std::vector<u64> q_list;

    auto* field_cmd = app.add_subcommand("field", "Print the canonical model of F_{p^n}");
    field_cmd->add_option("--p", p, "Odd prime")->required();
    field_cmd->add_option("--n", n, "Extension degree")->required();

    auto* count_cmd = app.add_subcommand("count", "Count points on one curve");
    count_cmd->add_option("kind", kind, "legendre | twisted | quartic")
        ->required()
        ->check(CLI::IsMember({"legendre", "twisted", "quartic"}));
    count_cmd->add_option("--q", q, "Field size")->required();
    auto* lambda_opt = count_cmd->add_option("--lambda", lambda, "Lambda as a canonical index");
    count_cmd->add_option("--lambda-poly", lambda_poly, "Lambda as coefficients c0,c1,...")->excludes(lambda_opt);
    auto* twist_opt = count_cmd->add_option("--twist", twist, "Twist d as a canonical index (default lambda+3)");
    count_cmd->add_option("--twist-poly", twist_poly, "Twist d as coefficients")->excludes(twist_opt);

    auto* best_cmd = app.add_subcommand("best", "Best curve C_lambda over F_q");
    best_cmd->add_option("--q", q, "Field size")->required();

    auto* survey_cmd = app.add_subcommand("survey", "Missing family counts over F_q");
    auto* survey_q = survey_cmd->add_option("--q", q, "Single field size");
    auto* survey_qmax = survey_cmd->add_option("--q-max", q_max, "Survey every odd prime power up to this bound");
    survey_cmd->add_option("--q-min", q_min, "Lower bound for --q-max")->needs(survey_qmax);
    survey_q->excludes(survey_qmax);

    auto* find_cmd = app.add_subcommand("find", "Find lambda with a given twisted count");
    find_cmd->add_option("--q", q, "Field size")->required();
    find_cmd->add_option("--target", target, "Wanted #E^(lambda+3)_lambda")->required();
    find_cmd->add_option("--method", method, "naive | hasse")->check(CLI::IsMember({"naive", "hasse"}));

    auto* table_cmd = app.add_subcommand("table", "Lower-bound tables");
    table_cmd->add_option("kind", table_kind, "nq3")->required()->check(CLI::IsMember({"nq3"}));
    table_cmd->add_option("--q-list", q_list, "Comma-separated field sizes")->required()->delimiter(',');

    auto* char3_cmd = app.add_subcommand("char3", "Characteristic-3 gaps for n = 1..n-max");
    char3_cmd->add_option("--n-max", n_max, "Largest exponent")->required()->check(CLI::PositiveNumber);

    auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form bounds for q");
    bounds_cmd->add_option("--q", q, "Prime power")->required();
    bounds_cmd->add_option("--genus", genus, "Genus for the HWS bound (default 3)");

    auto* achievable_cmd = app.add_subcommand("achievable", "Is N the count of a Legendre curve over F_q");
    achievable_cmd->add_option("--q", q, "Odd prime power")->required();
    achievable_cmd->add_option("--target", target, "Group order N")->required();

    auto* hasse_cmd = app.add_subcommand("hasse-poly", "Coefficients of the Hasse polynomial, constant first");
    hasse_cmd->add_option("--p", p, "Odd prime")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    cfg.format = parse_format(format);
    const SearchLimits limits = limits_of(cfg);

    try {
        if (*field_cmd) {
            const FieldSpec spec = make_field(p, n);
            emit(json{{"p", spec.p}, {"n", spec.n}, {"q", spec.q}, {"modulus", spec.modulus}}, cfg.format, out);
        } else if (*count_cmd) {
            const Field f = Field::of_order(q);
            const ElementIndex l = element_arg(f, lambda, lambda_poly, "--lambda");
            if (kind == "legendre") {
                emit(count_json(q, "legendre", l, f.one(), legendre_count(f, l)), cfg.format, out);
            } else if (kind == "twisted") {
                const ElementIndex d = (twist || twist_poly) ? element_arg(f, twist, twist_poly, "--twist")
                                                             : family_twist(f, l);
                emit(count_json(q, "twisted", l, d, twisted_count(f, l, d)), cfg.format, out);
            } else {
                emit(count_json(q, "quartic", l, family_twist(f, l), quartic_count(f, l, limits.quartic_cap)),
                     cfg.format, out);
            }
        } else if (*best_cmd) {
            const BestCurveRecord b = best_curve(q, cfg.threads, limits);
            emit(json{{"q", b.q},
                      {"best_lambda", b.best_lambda},
                      {"elliptic_count", b.elliptic_count},
                      {"quartic_count_predicted", b.quartic_count_predicted},
                      {"hws_gap", b.hws_gap}},
                 cfg.format, out);
        } else if (*survey_cmd) {
            std::vector<u64> qs;
            if (*survey_q) {
                require_odd_prime_power(q);
                qs.push_back(q);
            } else if (*survey_qmax) {
                qs = odd_prime_powers(q_min, q_max);
            } else {
                throw CLI::RequiredError("--q or --q-max");
            }
            if (cfg.format == Format::Csv) {
                out << kSurveyCsvHeader << '\n';
                for (u64 qq : qs) out << survey_csv_row(family_survey(qq, cfg.threads, limits)) << '\n';
            } else {
                json rows = json::array();
                for (u64 qq : qs) rows.push_back(survey_json(family_survey(qq, cfg.threads, limits)));
                if (cfg.format == Format::Text) {
                    for (const auto& r : rows)
                        out << "q=" << r["q"] << " missing=" << cell(r["missing"]) << " tags=" << cell(r["tags"])
                            << '\n';
                } else {
                    emit(rows, cfg.format, out);
                }
            }
        } else if (*find_cmd) {
            const FindMethod m = method == "hasse" ? FindMethod::Hasse : FindMethod::Naive;
            if (target % 4 != 0) throw DomainError(Errc::BadTarget, "target must be a multiple of 4");
            const LegendreSweep sweep = make_sweep(q, limits);
            const auto found = find_lambda(sweep, target, m, cfg.seed, limits);
            json r{{"q", q}, {"target", target}, {"method", method}, {"found", found.has_value()}};
            r["lambda"] = found ? json(*found) : json(nullptr);
            r["count"] = found ? json(sweep.family_count(*found)) : json(nullptr);
            emit(r, cfg.format, out);
        } else if (*table_cmd) {
            json rows = json::array();
            for (const Nq3Row& row : nq3_lower_table(q_list, cfg.threads, limits)) {
                json j{{"q", row.q}, {"family_best", row.family_best}};
                j["known_value"] = row.known ? json(row.known->value) : json(nullptr);
                j["known_exact"] = row.known ? json(row.known->exact) : json(nullptr);
                j["hws"] = row.hws;
                j["gap_to_hws"] = row.gap_to_hws;
                rows.push_back(j);
            }
            emit(rows, cfg.format, out);
        } else if (*char3_cmd) {
            json rows = json::array();
            for (const Char3Row& row : char3_verify(n_max, cfg.threads, limits)) {
                rows.push_back(json{{"n", row.n},
                                    {"q", row.q},
                                    {"hws", row.hws},
                                    {"family_best", row.family_best},
                                    {"gap", row.gap},
                                    {"guaranteed_gap", row.guaranteed_gap},
                                    {"proof_count", row.proof_count},
                                    {"within_guarantee", row.within_guarantee}});
            }
            emit(rows, cfg.format, out);
        } else if (*bounds_cmd) {
            const BoundsRecord b = bounds(q);
            const u64 g = genus.value_or(3);
            emit(json{{"q", b.q},
                      {"m", b.m},
                      {"hws_g3", b.hws_g3},
                      {"nq1", b.nq1},
                      {"nq2", b.nq2},
                      {"genus", g},
                      {"hws", hws_bound(q, g)}},
                 cfg.format, out);
        } else if (*achievable_cmd) {
            const AchievabilityVerdict v = legendre_achievable(q, target);
            emit(json{{"q", v.q},
                      {"target_count", v.target_count},
                      {"achievable", v.achievable},
                      {"reason", std::string(reason_name(v.reason))}},
                 cfg.format, out);
        } else if (*hasse_cmd) {
            const PolyFp h = hasse_polynomial(p);
            if (cfg.format == Format::Json) {
                emit(json{{"p", p}, {"coefficients", h.coeffs()}}, cfg.format, out);
            } else {
                for (std::size_t i = 0; i < h.coeffs().size(); ++i) out << (i ? "," : "") << h.coeffs()[i];
                out << '\n';
            }
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace manypoints::cli
