#pragma once

// Command-line front end: solve, count, bound, extremal, tightness, runner.
//
// Exit status: 0 ok, 1 no solution or infeasible, 2 usage error, overflow or
// refused enumeration. With --json every invocation writes one JSON object
// to the output stream; integers are plain JSON integers and rationals are
// split into *_numerator / *_denominator fields.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dcrt/collections.hpp"
#include "dcrt/congruence.hpp"
#include "dcrt/density.hpp"
#include "dcrt/errors.hpp"
#include "dcrt/runner.hpp"

namespace dcrt::cli {

enum exit_status : int { exit_ok = 0, exit_no_solution = 1, exit_usage = 2 };

/// Malformed command-line text.
class parse_error : public invalid_input {
public:
    using invalid_input::invalid_input;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline integer parse_integer(std::string_view token) {
    token = trim(token);
    integer value{};
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
        throw parse_error("integer out of range: '" + std::string(token) + "'");
    }
    if (ec != std::errc{} || ptr != last || first == last) {
        throw parse_error("not an integer: '" + std::string(token) + "'");
    }
    return value;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = s.find(sep, pos);
        parts.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return parts;
}

}  // namespace detail

/// Parses "a:m" into the congruence x = a (mod m).
inline Congruence parse_congruence(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw parse_error("expected residue:modulus, got '" + std::string(text) + "'");
    }
    const integer modulus = detail::parse_integer(text.substr(colon + 1));
    if (modulus < 1) {
        throw parse_error("modulus must be positive in '" + std::string(text) + "'");
    }
    return Congruence(detail::parse_integer(text.substr(0, colon)), modulus);
}

/// Parses "{r1,r2,...}" (explicit set) or "start+len" (cyclic interval) modulo `modulus`.
/// Residues and starts are reduced into [0, modulus).
inline ResidueCollection parse_collection(std::string_view text, integer modulus) {
    if (modulus < 1) {
        throw parse_error("collection modulus must be positive, got " + std::to_string(modulus));
    }
    text = detail::trim(text);
    if (!text.empty() && text.front() == '{') {
        if (text.back() != '}') {
            throw parse_error("unterminated residue set '" + std::string(text) + "'");
        }
        const std::string_view body = detail::trim(text.substr(1, text.size() - 2));
        std::vector<integer> members;
        if (!body.empty()) {
            for (std::string_view token : detail::split(body, ',')) {
                const integer r = floor_mod(detail::parse_integer(token), modulus);
                if (std::find(members.begin(), members.end(), r) != members.end()) {
                    throw parse_error("duplicate residue '" + std::string(detail::trim(token)) + "' (" +
                                      std::to_string(r) + " mod " + std::to_string(modulus) + ")");
                }
                members.push_back(r);
            }
        }
        return ResidueSet(modulus, std::move(members));
    }
    const auto plus = text.find('+', 1);
    if (plus == std::string_view::npos) {
        throw parse_error("expected '{r1,...}' or 'start+len', got '" + std::string(text) + "'");
    }
    const integer start = detail::parse_integer(text.substr(0, plus));
    const std::string_view len_token = detail::trim(text.substr(plus + 1));
    const integer length = detail::parse_integer(len_token);
    if (length < 0 || length > modulus) {
        throw parse_error("interval length '" + std::string(len_token) + "' is outside [0, " +
                          std::to_string(modulus) + "]");
    }
    return CyclicInterval(modulus, start, length);
}

namespace detail {

using json = nlohmann::ordered_json;

inline std::string format_members(const ResidueCollection& c) {
    std::ostringstream os;
    os << '{';
    const ResidueSet set = std::holds_alternative<ResidueSet>(c) ? std::get<ResidueSet>(c)
                                                                 : interval_members(std::get<CyclicInterval>(c));
    const auto& members = set.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        os << (i ? "," : "") << members[i];
    }
    os << '}';
    return os.str();
}

inline std::string format_list(const std::vector<integer>& values) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        os << (i ? ", " : "") << values[i];
    }
    os << ']';
    return os.str();
}

inline json interval_json(const CyclicInterval& iv) {
    return {{"modulus", iv.modulus()}, {"start", iv.start()}, {"length", iv.length()}};
}

struct Report {
    int status = exit_ok;
    json record;
    std::string text;
};

inline std::string status_name(int status) {
    return status == exit_ok ? "ok" : (status == exit_no_solution ? "no-solution" : "error");
}

inline Report do_solve(const std::vector<std::string>& items) {
    CongruenceSystem system;
    for (const auto& item : items) {
        system.push_back(parse_congruence(item));
    }
    Report r;
    r.record["command"] = "solve";
    const auto solution = solve(system);
    if (!solution) {
        r.status = exit_no_solution;
        r.text = "no solution";
        return r;
    }
    r.record["residue"] = solution->residue;
    r.record["modulus"] = solution->modulus;
    r.text = "x ≡ " + std::to_string(solution->residue) + " (mod " + std::to_string(solution->modulus) + ")";
    return r;
}

struct CountArgs {
    integer m = 0, n = 0;
    std::string a, b;
    bool enumerate = false;
    integer cap = default_enumeration_cap;
};

inline Report do_count(const CountArgs& args) {
    const ResidueCollection a = parse_collection(args.a, args.m);
    const ResidueCollection b = parse_collection(args.b, args.n);
    const integer count = exact_count(a, b);
    const integer modulus = checked_lcm(args.m, args.n);
    Report r;
    r.record["command"] = "count";
    r.record["modulus"] = modulus;
    r.record["count"] = count;
    std::ostringstream text;
    text << "count = " << count << " solutions modulo " << modulus;
    if (args.enumerate) {
        const auto solutions = enumerate_solutions(a, b, args.cap);
        std::vector<integer> residues;
        residues.reserve(solutions.size());
        for (const auto& s : solutions) residues.push_back(s.residue);
        r.record["solutions"] = residues;
        text << "\nsolutions = " << format_list(residues);
    }
    r.text = text.str();
    return r;
}

struct BoundArgs {
    std::string mode = "arbitrary";
    integer m = 0, n = 0, size_a = 0, size_b = 0;
};

inline Report do_bound(const BoundArgs& args) {
    Report r;
    r.record["command"] = "bound";
    r.record["mode"] = args.mode;
    r.record["modulus"] = checked_lcm(args.m, args.n);
    std::ostringstream text;
    if (args.mode == "arbitrary") {
        const BoundResult b = bound_arbitrary(args.m, args.n, args.size_a, args.size_b);
        r.record["bound"] = b.lower_bound;
        r.record["case"] = std::string(to_string(b.case_tag));
        text << "bound = " << b.lower_bound << " (case " << to_string(b.case_tag) << ")";
    } else {
        const integer b = bound_intervals(args.m, args.n, args.size_a, args.size_b);
        r.record["bound"] = b;
        text << "bound = " << b;
    }
    r.record["density_guarantee"] = density_guarantee(args.m, args.n, args.size_a, args.size_b);
    r.text = text.str();
    return r;
}

struct ExtremalArgs {
    integer size_a = 0, cap_a = 1, size_b = 0, cap_b = 1, length = 1;
};

inline Report do_extremal(const ExtremalArgs& args) {
    const ExtremalProfile pa = extremal_profile(args.size_a, args.cap_a, args.length);
    const ExtremalProfile pb = extremal_profile(args.size_b, args.cap_b, args.length);
    const BoundResult sum = extremal_sum(args.size_a, args.cap_a, args.size_b, args.cap_b, args.length);
    Report r;
    r.record["command"] = "extremal";
    r.record["profile_a"] = pa.values;
    r.record["profile_b"] = pb.values;
    r.record["bound"] = sum.lower_bound;
    r.record["case"] = std::string(to_string(sum.case_tag));
    r.text = "a* = " + format_list(pa.values) + "\nb* = " + format_list(pb.values) +
             "\nextremal sum = " + std::to_string(sum.lower_bound) + " (case " + std::string(to_string(sum.case_tag)) +
             ")";
    return r;
}

inline Report do_tightness(integer scale) {
    const TightnessInstance inst = tightness_instance(scale);
    const integer count = exact_count(inst.a, inst.b);
    Report r;
    r.record["command"] = "tightness";
    r.record["M"] = scale;
    r.record["m"] = inst.a.modulus();
    r.record["n"] = inst.b.modulus();
    r.record["modulus"] = checked_lcm(inst.a.modulus(), inst.b.modulus());
    r.record["A"] = interval_json(inst.a);
    r.record["B"] = interval_json(inst.b);
    r.record["count"] = count;
    std::ostringstream text;
    text << "M = " << scale << ": m = " << inst.a.modulus() << ", n = " << inst.b.modulus() << "\n"
         << "A = " << inst.a.start() << "+" << inst.a.length() << " (mod " << inst.a.modulus() << ")\n"
         << "B = " << inst.b.start() << "+" << inst.b.length() << " (mod " << inst.b.modulus() << ")\n"
         << "count = " << count;
    r.text = text.str();
    return r;
}

inline Report do_runner(const std::vector<integer>& speeds) {
    if (speeds.size() != 2) {
        throw parse_error("--speeds takes exactly two speeds, got " + std::to_string(speeds.size()));
    }
    const DistantWitness w = two_runner_witness(RunnerPair(speeds[0], speeds[1]));
    Report r;
    r.record["command"] = "runner";
    r.record["speeds"] = speeds;
    r.record["modulus"] = w.period;
    r.record["witness_numerator"] = w.time.numerator();
    r.record["witness_denominator"] = w.time.denominator();
    r.record["distance_m_numerator"] = w.distance_m.numerator();
    r.record["distance_m_denominator"] = w.distance_m.denominator();
    r.record["distance_n_numerator"] = w.distance_n.numerator();
    r.record["distance_n_denominator"] = w.distance_n.denominator();
    r.text = "t = " + w.time.value().str() + ", distances " + w.distance_m.str() + ", " + w.distance_n.str();
    return r;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counting and density bounds for two-congruence systems over residue collections", "dcrt"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit one JSON record instead of text");
    app.fallthrough();

    std::vector<std::string> congruences;
    auto* solve_cmd = app.add_subcommand("solve", "Solve x = a_i (mod m_i) given as a:m pairs");
    solve_cmd->add_option("congruences", congruences, "Congruences as residue:modulus")->required();

    detail::CountArgs count_args;
    auto* count_cmd = app.add_subcommand("count", "Exact number of solutions over A x B");
    count_cmd->add_option("--m", count_args.m, "Modulus of A")->required();
    count_cmd->add_option("--n", count_args.n, "Modulus of B")->required();
    count_cmd->add_option("--A", count_args.a, "Collection A: {r1,...} or start+len")->required();
    count_cmd->add_option("--B", count_args.b, "Collection B: {r1,...} or start+len")->required();
    count_cmd->add_flag("--enumerate", count_args.enumerate, "Also list the solutions by brute force");
    count_cmd->add_option("--cap", count_args.cap, "Largest mn/g the enumeration will scan");

    detail::BoundArgs bound_args;
    auto* bound_cmd = app.add_subcommand("bound", "Lower bound on the solution count from collection sizes");
    bound_cmd->add_option("--mode", bound_args.mode, "arbitrary or interval")
        ->check(CLI::IsMember({"arbitrary", "interval"}));
    bound_cmd->add_option("--m", bound_args.m, "Modulus of A")->required();
    bound_cmd->add_option("--n", bound_args.n, "Modulus of B")->required();
    bound_cmd->add_option("--size-a", bound_args.size_a, "|A|")->required();
    bound_cmd->add_option("--size-b", bound_args.size_b, "|B|")->required();

    detail::ExtremalArgs ext_args;
    auto* ext_cmd = app.add_subcommand("extremal", "Extremal profiles and their reversed dot product");
    ext_cmd->add_option("--size-a", ext_args.size_a)->required();
    ext_cmd->add_option("--cap-a", ext_args.cap_a)->required();
    ext_cmd->add_option("--size-b", ext_args.size_b)->required();
    ext_cmd->add_option("--cap-b", ext_args.cap_b)->required();
    ext_cmd->add_option("--length", ext_args.length)->required();

    integer scale = 0;
    auto* tight_cmd = app.add_subcommand("tightness", "Density-1/3 instance with no solutions");
    tight_cmd->add_option("--M", scale, "Scale M: moduli 3M and 6M")->required();

    std::vector<integer> speeds;
    auto* runner_cmd = app.add_subcommand("runner", "Time at which two runners are both at distance >= 1/3");
    runner_cmd->add_option("--speeds", speeds, "Two distinct positive speeds, e.g. 1,2")->required()->delimiter(',');

    const bool wants_json = std::find(args.begin(), args.end(), "--json") != args.end();
    auto fail = [&](int status, const std::string& message) {
        if (wants_json) {
            detail::json record;
            record["status"] = detail::status_name(status);
            record["message"] = message;
            out << record.dump() << "\n";
        }
        err << "error: " << message << "\n";
        return status;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        fail(exit_usage, e.what());
        err << "run with --help for usage\n";
        return exit_usage;
    }

    try {
        detail::Report report;
        if (solve_cmd->parsed()) {
            report = detail::do_solve(congruences);
        } else if (count_cmd->parsed()) {
            report = detail::do_count(count_args);
        } else if (bound_cmd->parsed()) {
            report = detail::do_bound(bound_args);
        } else if (ext_cmd->parsed()) {
            report = detail::do_extremal(ext_args);
        } else if (tight_cmd->parsed()) {
            report = detail::do_tightness(scale);
        } else {
            report = detail::do_runner(speeds);
        }
        if (as_json) {
            detail::json record;
            record["status"] = detail::status_name(report.status);
            record.update(report.record);
            out << record.dump() << "\n";
        } else {
            out << report.text << "\n";
        }
        return report.status;
    } catch (const infeasible_error& e) {
        return fail(exit_no_solution, e.what());
    } catch (const std::exception& e) {
        // overflow_error, invalid_input, enumeration_cap_exceeded, bad_alloc
        return fail(exit_usage, e.what());
    }
}

}  // namespace dcrt::cli
