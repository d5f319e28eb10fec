#pragma once

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "balans/balancing.hpp"
#include "balans/exactnum.hpp"
#include "balans/gridlab.hpp"
#include "balans/parallel.hpp"
#include "balans/recdetect.hpp"
#include "balans/recipsum.hpp"
#include "balans/sequences.hpp"
#include "balans/verify.hpp"

namespace balans::cli {

using json = nlohmann::ordered_json;

// Exit codes: 0 success / all pass, 1 verification mismatch, 2 usage error,
// 3 undecidable at the given budget.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUndecidable = 3;

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline Rat parse_rat(const std::string& text) {
    auto parts = split(text, '/');
    if (parts.size() == 1) return Rat(Int(parts[0]));
    if (parts.size() == 2) return Rat(Int(parts[0]), Int(parts[1]));
    throw domain_error("cannot parse rational: " + text);
}

inline std::optional<std::pair<std::int64_t, std::int64_t>> parse_range(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto pos = text.find("..");
    if (pos == std::string::npos)
        throw domain_error("range must look like lo..hi, got: " + text);
    auto lo = std::stoll(text.substr(0, pos));
    auto hi = std::stoll(text.substr(pos + 2));
    if (lo > hi) throw domain_error("range is empty: " + text);
    return std::make_pair(lo, hi);
}

// --jobs beats BALANS_JOBS beats the hardware default.
inline int resolve_jobs(int flag_jobs) {
    if (flag_jobs > 0) return flag_jobs;
    if (const char* env = std::getenv("BALANS_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return default_jobs();
}

inline Recurrence family_by_name(const std::string& name, std::int64_t a, std::int64_t b,
                                 const std::vector<std::int64_t>& params) {
    if (name == "fibonacci") return fibonacci();
    if (name == "tribonacci") return tribonacci();
    if (name == "pell") return pell();
    if (name == "balancing") return balancing_rec();
    if (name == "cobalancing") return cobalancing_rec(a, b);
    if (name == "cobalancer") return cobalancer_rec(a, b);
    if (name == "gentrib" || name == "generalized_tribonacci") {
        if (params.size() != 6)
            throw domain_error("gentrib needs --params p,q,r,X,Y,Z");
        return generalized_tribonacci(params[0], params[1], params[2], params[3], params[4],
                                      params[5]);
    }
    throw domain_error("unknown family: " + name);
}

inline json interval_json(const RatInterval& iv) {
    return json{{"lo", iv.lo.str()}, {"hi", iv.hi.str()}};
}

inline json verify_row_json(const VerifyRow& row) {
    json j{{"subject", row.subject}, {"status", to_string(row.status)}};
    if (!row.expected.empty()) j["expected"] = row.expected;
    if (!row.answer.empty()) j["answer"] = row.answer;
    if (!row.note.empty()) j["note"] = row.note;
    j["failure"] = row.failure;
    return j;
}

inline void print_verify_text(const VerifySummary& sum, std::ostream& out) {
    std::size_t w_subject = 7, w_status = 6, w_expected = 8, w_answer = 6;
    for (const auto& row : sum.rows) {
        w_subject = std::max(w_subject, row.subject.size());
        w_status = std::max(w_status, std::string(to_string(row.status)).size());
        w_expected = std::max(w_expected, row.expected.size());
        w_answer = std::max(w_answer, row.answer.size());
    }
    out << std::left << std::setw(static_cast<int>(w_subject + 2)) << "subject"
        << std::setw(static_cast<int>(w_status + 2)) << "status"
        << std::setw(static_cast<int>(w_expected + 2)) << "expected"
        << std::setw(static_cast<int>(w_answer + 2)) << "answer" << "note" << "\n";
    std::size_t counts[5] = {0, 0, 0, 0, 0};
    for (const auto& row : sum.rows) {
        out << std::left << std::setw(static_cast<int>(w_subject + 2)) << row.subject
            << std::setw(static_cast<int>(w_status + 2)) << to_string(row.status)
            << std::setw(static_cast<int>(w_expected + 2)) << row.expected
            << std::setw(static_cast<int>(w_answer + 2)) << row.answer << row.note << "\n";
        counts[static_cast<int>(row.status)]++;
    }
    out << sum.id << ": match=" << counts[0] << " mismatch=" << counts[1]
        << " vacuous=" << counts[2] << " undecidable=" << counts[3]
        << " branch-undefined=" << counts[4]
        << " -> " << (sum.exit_code() == 0 ? "PASS" : sum.exit_code() == 1 ? "FAIL" : "UNDECIDED")
        << "\n";
}

}  // namespace detail

// Runs one invocation; argv excludes the program name. All output is written
// to the supplied streams, so the whole surface is testable in-process.
inline int run(std::vector<std::string> argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact explorer for balancing-type sequences, linear recurrence detection,\n"
                 "and certified reciprocal sums"};
    app.require_subcommand(1);

    std::string format = "json";
    int jobs = 0;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format: json, csv, or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--jobs", jobs, "worker threads (default: BALANS_JOBS or hardware)");
    };

    // seq
    auto* seq = app.add_subcommand("seq", "generate terms of a named sequence family");
    add_common(seq);
    std::string seq_family;
    std::int64_t seq_a = 1, seq_b = 1, seq_start = 0;
    std::size_t seq_count = 10;
    std::vector<std::int64_t> seq_params;
    seq->add_option("--family", seq_family,
                    "fibonacci|tribonacci|pell|balancing|cobalancing|cobalancer|gentrib")
        ->required();
    seq->add_option("--a", seq_a, "left coefficient for (a,b) families");
    seq->add_option("--b", seq_b, "right coefficient for (a,b) families");
    seq->add_option("--params", seq_params, "gentrib parameters p,q,r,X,Y,Z")->delimiter(',');
    seq->add_option("--start", seq_start, "first index (may be negative)")->required();
    seq->add_option("--count", seq_count, "number of terms")->required();

    // detect
    auto* detect = app.add_subcommand("detect", "recover a linear recurrence from terms");
    add_common(detect);
    std::string detect_terms;
    int detect_depth = 0, detect_max_depth = 5;
    bool detect_constant = false;
    detect->add_option("--terms", detect_terms, "comma-separated terms (rationals allowed)")
        ->required();
    detect->add_option("--depth", detect_depth, "fixed depth (omit to search minimal depth)");
    detect->add_flag("--constant", detect_constant, "allow a constant term at fixed depth");
    detect->add_option("--max-depth", detect_max_depth, "depth cap for the minimal search");

    // find
    auto* find = app.add_subcommand("find", "enumerate (a,b) balancing/cobalancing numbers");
    add_common(find);
    std::int64_t find_a = 0, find_b = 0, find_nmax = 0;
    std::string find_variant;
    bool find_square = false;
    find->add_option("--a", find_a)->required();
    find->add_option("--b", find_b)->required();
    find->add_option("--variant", find_variant, "balancing or cobalancing")
        ->required()
        ->check(CLI::IsMember({"balancing", "cobalancing"}));
    find->add_flag("--square", find_square, "square variants (sums of squares, r >= 0)");
    find->add_option("--nmax", find_nmax, "scan bound on n")->required();

    // recip
    auto* recip = app.add_subcommand("recip", "certified floor/nearest of an inverted "
                                              "reciprocal sum");
    add_common(recip);
    std::string recip_family, recip_mode;
    std::int64_t recip_a = 1, recip_b = 1, recip_start = 1, recip_stride = 1;
    std::vector<std::int64_t> recip_params;
    bool recip_alternating = false, recip_partial = false;
    std::size_t recip_budget = kDefaultBudget;
    recip->add_option("--family", recip_family, "sequence family (see seq)")->required();
    recip->add_option("--a", recip_a);
    recip->add_option("--b", recip_b);
    recip->add_option("--params", recip_params)->delimiter(',');
    recip->add_option("--start", recip_start, "first summed index")->required();
    recip->add_option("--stride", recip_stride, "index stride");
    recip->add_flag("--alternating", recip_alternating, "alternate signs (+ - + ...)");
    recip->add_flag("--partial-sum-denoms", recip_partial,
                    "denominators are prefix sums of the sequence");
    recip->add_option("--mode", recip_mode, "floor or nearest")
        ->required()
        ->check(CLI::IsMember({"floor", "nearest"}));
    recip->add_option("--budget", recip_budget, "term budget cap for refinement");

    // verify
    auto* verify = app.add_subcommand("verify", "run a named verification table");
    add_common(verify);
    std::string verify_id, verify_range;
    std::size_t verify_budget = kDefaultBudget;
    verify->add_option("--theorem", verify_id, "one of: eq1.1 eq1.2 eq1.5 thm1.4 thm1.5 thm1.6 "
                                               "thm3.11 thm3.12 thm3.13 thm3.15 lemma3.9 thm1.7 "
                                               "thm1.8 thm1.9 thmA.1 conj4.1")
        ->required();
    verify->add_option("--range", verify_range,
                       "override the n-range, lo..hi (defaults: eq1.1 2..25, eq1.2 2..20, "
                       "eq1.5 1..12, thm1.4/thm1.5 1..12, thm1.6 m..30, thm3.11 2..15, "
                       "thm3.12 6..15, thm3.13 3..12, lemma3.9 1..50, thm1.7 2..1000, "
                       "thm1.9 y 1..5, thmA.1 n to 10^5, conj4.1 y to 25)");
    verify->add_option("--budget", verify_budget, "term budget cap for refinement");

    // grid
    auto* grid = app.add_subcommand("grid", "square-solution frequency grid over (a,b)");
    add_common(grid);
    std::string grid_variant, grid_csv, grid_ppm;
    std::int64_t grid_amax = 0, grid_bmax = 0, grid_nmax = 5000;
    bool grid_pattern = false;
    grid->add_option("--variant", grid_variant)
        ->required()
        ->check(CLI::IsMember({"balancing", "cobalancing"}));
    grid->add_option("--amax", grid_amax)->required();
    grid->add_option("--bmax", grid_bmax)->required();
    grid->add_option("--nmax", grid_nmax, "scan bound on n per cell");
    grid->add_option("--out-csv", grid_csv, "write the cell table here");
    grid->add_option("--out-ppm", grid_ppm, "write the frequency image here");
    grid->add_flag("--pattern-report", grid_pattern, "summarize the cobalancing cell pattern");

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    const int njobs = detail::resolve_jobs(jobs);
    try {
        if (*seq) {
            Recurrence rec = detail::family_by_name(seq_family, seq_a, seq_b, seq_params);
            auto w = window(rec, seq_start, seq_count);
            if (format == "json") {
                json j{{"family", rec.label}, {"start", seq_start}, {"count", seq_count}};
                json terms = json::array();
                for (const auto& t : w.terms) terms.push_back(t.str());
                j["terms"] = terms;
                out << j.dump(2) << "\n";
            } else {
                if (format == "csv") out << "index,value\n";
                for (std::size_t i = 0; i < w.terms.size(); ++i)
                    out << (seq_start + static_cast<std::int64_t>(i))
                        << (format == "csv" ? "," : " ") << w.terms[i].str() << "\n";
            }
            return kExitOk;
        }

        if (*detect) {
            std::vector<Rat> terms;
            for (const auto& piece : detail::split(detect_terms, ','))
                terms.push_back(detail::parse_rat(piece));
            std::optional<DetectionResult> res =
                detect_depth > 0 ? detect_fixed(terms, detect_depth, detect_constant)
                                 : detect_minimal(terms, detect_max_depth);
            if (format == "json") {
                json j{{"found", res.has_value()}};
                if (res) {
                    j["tuple"] = res->tuple_text;
                    json coeffs = json::array();
                    for (const auto& c : res->recurrence.coeffs) coeffs.push_back(c.str());
                    j["coefficients"] = coeffs;
                    j["constant"] = res->recurrence.constant.str();
                    j["depth"] = res->recurrence.depth();
                    j["verified_terms"] = res->verified_terms;
                }
                out << j.dump(2) << "\n";
            } else {
                out << (res ? res->tuple_text : "no recurrence found") << "\n";
            }
            return kExitOk;
        }

        if (*find) {
            Variant v = find_variant == "balancing" ? Variant::balancing : Variant::cobalancing;
            std::vector<std::pair<Int, Int>> sols;
            if (find_square) {
                CoeffPair c{find_a, find_b};
                for (std::int64_t n = 1; n <= find_nmax; ++n)
                    if (auto r = square_balancer_of(n, c, v)) sols.emplace_back(n, *r);
            } else {
                for (const auto& s : find_all(CoeffPair{find_a, find_b}, v, find_nmax))
                    sols.emplace_back(s.n, s.r);
            }
            if (format == "json") {
                json j{{"a", find_a},
                       {"b", find_b},
                       {"variant", find_variant},
                       {"power", find_square ? 2 : 1},
                       {"n_max", find_nmax}};
                json list = json::array();
                for (const auto& [n, r] : sols)
                    list.push_back(json{{"n", n.str()}, {"r", r.str()}});
                j["solutions"] = list;
                out << j.dump(2) << "\n";
            } else {
                if (format == "csv") out << "n,r\n";
                for (const auto& [n, r] : sols)
                    out << n.str() << (format == "csv" ? "," : " ") << r.str() << "\n";
            }
            return kExitOk;
        }

        if (*recip) {
            Recurrence rec = detail::family_by_name(recip_family, recip_a, recip_b, recip_params);
            SumSpec spec{rec, recip_start, recip_stride,
                         recip_alternating ? SumSign::alternating : SumSign::plain,
                         recip_partial ? DenomKind::partial_sum : DenomKind::term};
            AnswerMode mode = recip_mode == "floor" ? AnswerMode::floor : AnswerMode::nearest;
            SumVerdict v;
            try {
                v = inverse_answer(spec, mode, recip_budget);
            } catch (const budget_error& e) {
                err << "undecidable: " << e.what() << "\n";
                return kExitUndecidable;
            }
            if (format == "json") {
                json j{{"family", rec.label},
                       {"start", recip_start},
                       {"stride", recip_stride},
                       {"sign", recip_alternating ? "alternating" : "plain"},
                       {"denominators", recip_partial ? "partial_sum" : "term"},
                       {"mode", to_string(v.mode)},
                       {"answer", v.answer.str()},
                       {"terms_used", v.terms_used},
                       {"enclosure", detail::interval_json(v.enclosure)},
                       {"tail_certificate", v.tail_certificate}};
                out << j.dump(2) << "\n";
            } else {
                out << v.answer.str() << "\n";
            }
            return kExitOk;
        }

        if (*verify) {
            auto range = detail::parse_range(verify_range);
            VerifySummary sum = verify_theorem(verify_id, range, verify_budget, njobs);
            if (format == "json") {
                json rows = json::array();
                for (const auto& row : sum.rows) rows.push_back(detail::verify_row_json(row));
                json j{{"theorem", sum.id}, {"rows", rows}, {"exit", sum.exit_code()}};
                out << j.dump(2) << "\n";
            } else if (format == "csv") {
                out << "subject,status,expected,answer,note\n";
                for (const auto& row : sum.rows)
                    out << '"' << row.subject << "\"," << to_string(row.status) << ",\""
                        << row.expected << "\",\"" << row.answer << "\",\"" << row.note << "\"\n";
            } else {
                detail::print_verify_text(sum, out);
            }
            return sum.exit_code();
        }

        if (*grid) {
            Variant v = grid_variant == "balancing" ? Variant::balancing : Variant::cobalancing;
            GridScan scan = scan_grid(grid_amax, grid_bmax, grid_nmax, v, njobs);
            json j{{"variant", grid_variant},
                   {"a_max", grid_amax},
                   {"b_max", grid_bmax},
                   {"n_max", grid_nmax},
                   {"coprime_cells", scan.cells.size()}};
            std::size_t nonempty = 0, max_count = 0;
            for (const auto& cell : scan.cells) {
                nonempty += cell.solutions.empty() ? 0 : 1;
                max_count = std::max(max_count, cell.solutions.size());
            }
            j["nonempty_cells"] = nonempty;
            j["max_count"] = max_count;
            if (!grid_csv.empty()) {
                std::ofstream f(grid_csv, std::ios::binary);
                f << emit_csv(scan);
                j["csv"] = grid_csv;
            }
            if (!grid_ppm.empty()) {
                std::ofstream f(grid_ppm, std::ios::binary);
                f << emit_ppm(scan);
                j["ppm"] = grid_ppm;
            }
            if (grid_pattern) {
                auto rep = pattern_report(scan);
                j["pattern"] = json{{"nonempty_cells", rep.nonempty_cells},
                                    {"conforming_cells", rep.conforming_cells},
                                    {"a_shift_pairs", rep.a_shift_pairs},
                                    {"a_shift_agreements", rep.a_shift_agreements},
                                    {"b_shift_pairs", rep.b_shift_pairs},
                                    {"b_shift_agreements", rep.b_shift_agreements},
                                    {"nonconforming", rep.nonconforming}};
            }
            out << j.dump(2) << "\n";
            return kExitOk;
        }
    } catch (const budget_error& e) {
        err << "undecidable: " << e.what() << "\n";
        return kExitUndecidable;
    } catch (const balans_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "no subcommand given\n" << app.help();
    return kExitUsage;
}

}  // namespace balans::cli
