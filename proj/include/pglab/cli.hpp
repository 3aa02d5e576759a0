#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pglab/cayley_io.hpp"
#include "pglab/families.hpp"
#include "pglab/report.hpp"

namespace pglab {

// Exit codes: 0 success, 1 verification disagreement, 2 bad input,
// 3 instance exceeds exact-solver limits.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitSolverLimit = 3;

namespace detail {

inline std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

inline int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        raise(ErrorCode::ParseError, "expected integer for " + what + ", got '" + s + "'");
    }
}

}  // namespace detail

// Grammar: cyclic:N | dihedral:N | dicyclic:N | semidihedral:K |
//          modular:P,K | heisenberg:P | product(SPEC,SPEC,...)
inline FamilySpec parse_family_spec(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) raise(ErrorCode::ParseError, "empty family spec");

    if (s.rfind("product(", 0) == 0) {
        if (s.back() != ')')
            raise(ErrorCode::ParseError, "unbalanced parentheses in '" + text + "'");
        std::string inner = s.substr(8, s.size() - 9);
        if (inner.empty())
            raise(ErrorCode::ParseError, "product() needs at least one factor");
        std::vector<FamilySpec> factors;
        for (const auto& part : detail::split_top_level(inner))
            factors.push_back(parse_family_spec(part));
        if (factors.size() == 1) return factors[0];
        return FamilySpec::product(std::move(factors));
    }

    auto colon = s.find(':');
    if (colon == std::string::npos)
        raise(ErrorCode::ParseError,
              "family spec '" + text + "' must look like name:params or product(...)");
    std::string head = s.substr(0, colon);
    auto params = detail::split_top_level(s.substr(colon + 1));

    auto want = [&](size_t k) {
        if (params.size() != k)
            raise(ErrorCode::ParseError, "family '" + head + "' takes " +
                                             std::to_string(k) + " parameter(s), got " +
                                             std::to_string(params.size()));
    };
    if (head == "cyclic") {
        want(1);
        return FamilySpec::cyclic(detail::parse_int(params[0], "cyclic order"));
    }
    if (head == "dihedral") {
        want(1);
        return FamilySpec::dihedral(detail::parse_int(params[0], "dihedral parameter"));
    }
    if (head == "dicyclic") {
        want(1);
        return FamilySpec::dicyclic(detail::parse_int(params[0], "dicyclic parameter"));
    }
    if (head == "semidihedral") {
        want(1);
        return FamilySpec::semidihedral(
            detail::parse_int(params[0], "semidihedral exponent"));
    }
    if (head == "modular") {
        want(2);
        return FamilySpec::modular(detail::parse_int(params[0], "modular prime"),
                                   detail::parse_int(params[1], "modular exponent"));
    }
    if (head == "heisenberg") {
        want(1);
        return FamilySpec::heisenberg(detail::parse_int(params[0], "heisenberg prime"));
    }
    raise(ErrorCode::ParseError, "unknown family '" + head + "'");
}

namespace detail {

inline FiniteGroup load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::ParseError, "cannot open table file '" + path + "'");
    // Sniff: a leading '{' means the JSON form, otherwise whitespace-separated text.
    char first = 0;
    in >> std::ws;
    first = static_cast<char>(in.peek());
    std::string name = path;
    auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);
    auto dot = name.find_last_of('.');
    if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
    if (first == '{') return read_cayley_table_json(in, name);
    return read_cayley_table(in, name);
}

inline FiniteGroup resolve_group(const std::string& family, const std::string& table) {
    if (!family.empty() && !table.empty())
        raise(ErrorCode::ParseError, "--family and --table are mutually exclusive");
    if (family.empty() && table.empty())
        raise(ErrorCode::ParseError, "one of --family or --table is required");
    if (!family.empty()) return build_group(parse_family_spec(family));
    return load_table_file(table);
}

inline int emit(const std::string& text, const std::string& out_path, std::ostream& out,
                std::ostream& err) {
    if (out_path.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        err << "error: cannot write to '" << out_path << "'\n";
        return kExitInputError;
    }
    f << text;
    return kExitOk;
}

inline std::map<int, int> default_survey_bounds() {
    return {{2, 64}, {3, 81}, {5, 125}, {7, 49}};
}

inline std::map<int, int> parse_bounds(const std::vector<std::string>& overrides) {
    auto bounds = default_survey_bounds();
    for (const auto& ov : overrides) {
        auto eq = ov.find('=');
        if (eq == std::string::npos)
            raise(ErrorCode::ParseError,
                  "--max-order expects p=N (e.g. 2=64), got '" + ov + "'");
        int p = parse_int(ov.substr(0, eq), "--max-order prime");
        int n = parse_int(ov.substr(eq + 1), "--max-order bound");
        if (!is_prime(p))
            raise(ErrorCode::ParseError,
                  "--max-order prime " + std::to_string(p) + " is not prime");
        if (n < 1)
            raise(ErrorCode::ParseError, "--max-order bound must be positive");
        bounds[p] = n;
    }
    return bounds;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{
        "powergraph-lab: power graphs of finite groups, their connectivity "
        "invariants, and mechanical checks of the classification criteria"};
    app.require_subcommand(1);

    std::string family, table, out_path;
    SolverOptions solver;

    auto add_group_source = [&](CLI::App* sub, bool table_only) {
        if (!table_only)
            sub->add_option("--family", family,
                            "family spec, e.g. cyclic:8, dicyclic:2, modular:3,3, "
                            "product(cyclic:4,cyclic:2)");
        sub->add_option("--table", table, "path to a Cayley table file (text or JSON)");
    };

    std::string info_format = "text";
    auto* info = app.add_subcommand("group-info",
                                    "structure of one group: orders, maximal cyclic "
                                    "subgroups, difference number");
    add_group_source(info, false);
    info->add_option("--format", info_format, "text|json (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    info->add_option("--out", out_path, "write to file instead of stdout");

    std::string gkind = "power", gformat = "dot";
    auto* gexport =
        app.add_subcommand("graph-export", "emit the power graph as DOT or an edge list");
    add_group_source(gexport, false);
    gexport->add_option("--kind", gkind, "power|enhanced")
        ->check(CLI::IsMember({"power", "enhanced"}));
    gexport->add_option("--format", gformat, "dot|edges")
        ->check(CLI::IsMember({"dot", "edges"}));
    gexport->add_option("--out", out_path, "write to file instead of stdout");

    std::string conn_kind = "power", conn_format = "json";
    auto* conn = app.add_subcommand(
        "connectivity", "kappa, edge connectivity, cyclic separability and "
                        "cyclic vertex connectivity of the power graph");
    add_group_source(conn, false);
    conn->add_option("--kind", conn_kind, "power|enhanced (default power)")
        ->check(CLI::IsMember({"power", "enhanced"}));
    conn->add_option("--format", conn_format, "json|text (default json)")
        ->check(CLI::IsMember({"json", "text"}));
    conn->add_option("--brute-limit", solver.brute_force_limit,
                     "max vertices for brute-force fallbacks (default 16)");
    conn->add_option("--cycle-bound", solver.cycle_bound,
                     "chordless-cycle length bound for candidate enumeration "
                     "(default 6)");
    conn->add_option("--out", out_path, "write to file instead of stdout");

    std::vector<std::string> bound_overrides;
    SurveyOptions survey_opts;
    std::string survey_format = "json";
    auto* surv = app.add_subcommand(
        "survey", "run every group in the catalog through both classification "
                  "criteria and the supporting checks");
    surv->add_option("--max-order", bound_overrides,
                     "override a per-prime order bound as p=N (repeatable); defaults "
                     "2=64 3=81 5=125 7=49");
    surv->add_option("--brute-limit", survey_opts.solver.brute_force_limit,
                     "max vertices for brute-force fallbacks (default 16)");
    surv->add_option("--cycle-bound", survey_opts.solver.cycle_bound,
                     "chordless-cycle length bound (default 6)");
    surv->add_option("--jobs", survey_opts.jobs,
                     "worker threads (default 1; env POWERGRAPH_LAB_JOBS)")
        ->envname("POWERGRAPH_LAB_JOBS");
    surv->add_option("--seed", survey_opts.lemmas.seed,
                     "seed for the adjacency sampling check (default 12345)");
    surv->add_option("--format", survey_format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    surv->add_option("--out", out_path, "write to file instead of stdout");

    std::string ingest_format = "table";
    auto* ingest = app.add_subcommand(
        "ingest-check", "validate a Cayley table file and echo the normalized table");
    ingest->add_option("--table", table, "path to a Cayley table file (text or JSON)")
        ->required();
    ingest->add_option("--format", ingest_format,
                       "output format for the normalized table: table|json")
        ->check(CLI::IsMember({"table", "json"}));
    ingest->add_option("--out", out_path,
                       "write the normalized table to file (summary still on stdout)");

    std::vector<std::string> argv_store;
    argv_store.push_back("powergraph-lab");
    for (const auto& a : args) argv_store.push_back(a);
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (info->parsed()) {
            FiniteGroup g = detail::resolve_group(family, table);
            std::string text = (info_format == "json") ? group_info_json(g).dump(2) + "\n"
                                                  : group_info_text(g);
            return detail::emit(text, out_path, out, err);
        }

        if (gexport->parsed()) {
            FiniteGroup g = detail::resolve_group(family, table);
            PowerGraph pg =
                (gkind == "enhanced") ? enhanced_power_graph(g) : power_graph(g);
            std::ostringstream buf;
            if (gformat == "dot")
                write_dot(pg.graph, buf, gkind + "_graph_of_" + g.name());
            else
                write_edge_list(pg.graph, buf);
            return detail::emit(buf.str(), out_path, out, err);
        }

        if (conn->parsed()) {
            FiniteGroup g = detail::resolve_group(family, table);
            PowerGraph pg =
                (conn_kind == "enhanced") ? enhanced_power_graph(g) : power_graph(g);
            ConnectivityReport rep;
            try {
                rep = connectivity_report(pg.graph, solver);
            } catch (const Error& e) {
                if (e.code() == ErrorCode::InstanceTooLargeForExact) {
                    err << "error: exact cyclic-connectivity computation gave up: "
                        << e.what() << "\n";
                    return kExitSolverLimit;
                }
                throw;
            }
            std::string gname = conn_kind + "(" + g.name() + ")";
            std::string text = (conn_format == "text")
                                   ? connectivity_text(gname, pg.graph, rep)
                                   : connectivity_json(gname, pg.graph, rep).dump(2) + "\n";
            return detail::emit(text, out_path, out, err);
        }

        if (surv->parsed()) {
            auto bounds = detail::parse_bounds(bound_overrides);
            auto entries = catalog(bounds);
            SurveyReport report = survey(entries, survey_opts);

            ordered_json config;
            ordered_json b;
            for (auto [p, n] : bounds) b[std::to_string(p)] = n;
            config["max_order"] = std::move(b);
            config["brute_force_limit"] = survey_opts.solver.brute_force_limit;
            config["cycle_bound"] = survey_opts.solver.cycle_bound;
            config["adjacency_pairs"] = survey_opts.lemmas.adjacency_pairs;
            config["seed"] = survey_opts.lemmas.seed;
            config["jobs"] = survey_opts.jobs;

            std::string text;
            if (survey_format == "csv") text = survey_csv(report);
            else if (survey_format == "text") text = survey_text(report);
            else text = survey_json(report, config).dump(2) + "\n";

            int rc = detail::emit(text, out_path, out, err);
            if (rc != kExitOk) return rc;
            if (report.disagreements > 0 || report.lemma_failures > 0) {
                err << "survey: " << report.disagreements << " disagreement(s), "
                    << report.lemma_failures << " lemma failure(s)\n";
                return kExitDisagreement;
            }
            if (report.skipped > 0) {
                err << "survey: " << report.skipped
                    << " group(s) skipped (solver limits)\n";
                return kExitSolverLimit;
            }
            return kExitOk;
        }

        if (ingest->parsed()) {
            FiniteGroup g = detail::load_table_file(table);
            std::ostringstream buf;
            if (ingest_format == "json") write_cayley_table_json(g, buf);
            else write_cayley_table(g, buf);
            out << "ok: valid group of order " << g.order();
            auto p = g.p_group_prime();
            if (p) out << " (p-group, p=" << *p << ")";
            out << "\n";
            if (!out_path.empty()) {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) {
                    err << "error: cannot write to '" << out_path << "'\n";
                    return kExitInputError;
                }
                f << buf.str();
            } else {
                out << buf.str();
            }
            return kExitOk;
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InstanceTooLargeForExact) {
            err << "error: " << e.what() << "\n";
            return kExitSolverLimit;
        }
        err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    err << "error: no subcommand selected\n";
    return kExitInputError;
}

}  // namespace pglab
