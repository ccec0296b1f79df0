#ifndef PASCENT_TOOLS_CLI_HPP
#define PASCENT_TOOLS_CLI_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <pascent/pascent.hpp>

namespace pascent::cli
{

enum ExitCode : int { ok = 0, verification_failed = 1, usage = 2 };

struct usage_error : error {
    using error::error;
};

/// Parses "u=1,v=1,z=1,x=0"; "all=c" assigns c to every variable.
inline std::map<Var, BigInt> parse_assignments(const std::string &text)
{
    std::map<Var, BigInt> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw usage_error("--set expects name=value pairs, got '" + item + "'");
        }
        std::string name = item.substr(0, eq);
        BigInt value;
        try {
            value = from_decimal(item.substr(eq + 1));
        } catch (const error &) {
            throw usage_error("--set value for '" + name + "' is not an integer");
        }
        if (name == "all") {
            for (Var v : all_vars) {
                out[v] = value;
            }
        } else if (auto v = var_from_name(name)) {
            out[*v] = value;
        } else {
            throw usage_error("--set: unknown variable '" + name + "' (expected u, v, z, x or all)");
        }
    }
    return out;
}

inline Word parse_word(const std::string &text)
{
    Word w;
    if (text.empty()) {
        return w;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            unsigned long c = std::stoul(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            w.push_back(Letter(c));
        } catch (const std::logic_error &) {
            throw usage_error("malformed word '" + text + "'");
        }
    }
    return w;
}

struct SeriesRequest {
    std::string gf;
    unsigned p = 1;
    unsigned order = 6;
    std::optional<unsigned> k;
    std::optional<unsigned> udeg;
    std::string set;
};

// First index of each b-file: P counts the empty sequence, the rest start at 1.
inline unsigned bfile_offset(const std::string &gf)
{
    return gf == "P" ? 0 : 1;
}

inline TSeries evaluate(const SeriesRequest &r)
{
    const auto &g = r.gf;
    if (g == "maxk" && !r.k) {
        throw usage_error("--gf maxk requires --k");
    }
    TSeries s;
    if (g == "A") {
        s = eval_A(r.p, r.order);
    } else if (g == "R") {
        s = eval_R(r.p, r.order);
    } else if (g == "P") {
        s = eval_P(r.order);
    } else if (g == "G1u") {
        s = eval_G1_u(r.p, r.order, r.udeg);
    } else if (g == "G1") {
        s = eval_G1_full(r.p, r.order, r.udeg);
    } else if (g == "G") {
        s = eval_G(r.p, r.order, r.udeg);
    } else if (g == "H") {
        s = eval_H(r.p, r.order, r.udeg);
    } else if (g == "maxk") {
        s = eval_maxk(r.p, *r.k, r.order);
    } else {
        throw usage_error("unknown generating function '" + g + "'");
    }
    if (!r.set.empty()) {
        s = s.specialize(parse_assignments(r.set));
    }
    return s;
}

struct AvoidRequest {
    unsigned p = 1;
    std::string pattern;
    unsigned n = 0;
    bool primitive = false;
    bool closed = false;
    bool oracle = false;
    bool both = false;
};

struct AvoidRow {
    unsigned n;
    std::optional<BigInt> closed;
    std::optional<BigInt> oracle;
};

inline std::vector<AvoidRow> avoid_table(const AvoidRequest &r, std::ostream &err)
{
    Pattern pat = Pattern::parse(r.pattern);
    bool want_closed = r.closed || r.both;
    bool want_oracle = r.oracle || r.both || !r.closed;
    if (want_closed) {
        try {
            (void)closed_count(r.p, pat, 1, r.primitive);
        } catch (const no_closed_form &e) {
            if (!r.both) {
                throw;
            }
            err << e.what() << "; showing brute-force counts only\n";
            want_closed = false;
        }
    }
    std::vector<AvoidRow> rows;
    for (unsigned n = 1; n <= r.n; ++n) {
        AvoidRow row{n, std::nullopt, std::nullopt};
        if (want_closed) {
            row.closed = closed_count(r.p, pat, n, r.primitive);
        }
        if (want_oracle) {
            row.oracle = count_avoiders(r.p, pat, n, r.primitive);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// Writes to --out FILE when given, otherwise to `out`.
inline void emit(const std::string &path, const std::string &text, std::ostream &out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw usage_error("cannot open '" + path + "' for writing");
    }
    f << text;
}

inline std::string bfile_from_series(const TSeries &s, unsigned first)
{
    std::string text;
    for (unsigned n = first; n <= s.order(); ++n) {
        const MultiPoly &c = s.coefficient(n);
        if (!c.is_constant()) {
            throw usage_error("coefficient of t^" + std::to_string(n) + " still depends on variables ("
                              + c.to_string() + "); specialize them with --set");
        }
        text += std::to_string(n) + " " + to_decimal(c.constant_term()) + "\n";
    }
    return text;
}

inline int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Enumerate p-ascent sequences, evaluate their generating functions and verify identities.",
                 "pascent"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    // enumerate / count
    unsigned e_p = 1, e_n = 0;
    std::string e_pattern, e_format = "lines";
    bool e_primitive = false, e_updown = false;
    auto add_word_filters = [&](CLI::App *sub) {
        sub->add_option("--p", e_p, "Ascent allowance p")->required()->check(CLI::PositiveNumber);
        sub->add_option("--n", e_n, "Sequence length")->required();
        sub->add_option("--pattern", e_pattern, "Keep only sequences avoiding this pattern (e.g. 012, 21-2)");
        sub->add_flag("--primitive", e_primitive, "Keep only sequences without equal adjacent letters");
        sub->add_flag("--updown", e_updown, "Keep only up-down sequences");
    };
    auto *enumerate_cmd = app.add_subcommand("enumerate", "List p-ascent sequences in lexicographic order");
    add_word_filters(enumerate_cmd);
    enumerate_cmd->add_option("--format", e_format, "Output format")->check(CLI::IsMember({"lines", "json"}));
    auto *count_cmd = app.add_subcommand("count", "Count p-ascent sequences of a given length");
    add_word_filters(count_cmd);

    // series
    SeriesRequest sr;
    std::string out_path;
    auto add_series_options = [&](CLI::App *sub, bool required) {
        auto *gf = sub->add_option("--gf", sr.gf, "Generating function")
                       ->check(CLI::IsMember({"A", "R", "P", "G1u", "G1", "G", "H", "maxk"}));
        if (required) {
            gf->required();
        }
        sub->add_option("--p", sr.p, "Ascent allowance p")->check(CLI::PositiveNumber);
        sub->add_option("--order", sr.order, "Truncation order N (terms through t^N)");
        sub->add_option("--k", sr.k, "Repetition bound for maxk")->check(CLI::PositiveNumber);
        sub->add_option("--udeg", sr.udeg, "u-degree bound for G1u, G1, G and H (default: order)");
        sub->add_option("--set", sr.set, "Specialize variables, e.g. u=1,v=1,z=1,x=0 or all=1");
        sub->add_option("--out", out_path, "Write to this file instead of stdout");
    };
    auto *series_cmd = app.add_subcommand("series", "Evaluate a generating function as truncated-series JSON");
    add_series_options(series_cmd, true);

    // avoid
    AvoidRequest ar;
    auto add_avoid_options = [&](CLI::App *sub, bool required) {
        auto *p = sub->add_option("--pattern", ar.pattern, "Pattern, e.g. 012, 10, 00 or vincular 21-2");
        auto *n = sub->add_option("--n", ar.n, "Largest length");
        if (required) {
            p->required();
            n->required();
        }
        sub->add_flag("--primitive", ar.primitive, "Count primitive sequences only");
        auto *c = sub->add_flag("--closed", ar.closed, "Use the closed form");
        auto *o = sub->add_flag("--oracle", ar.oracle, "Use brute-force enumeration (default)");
        auto *b = sub->add_flag("--both", ar.both, "Print both and require equality");
        c->excludes(o)->excludes(b);
        o->excludes(b);
    };
    auto *avoid_cmd = app.add_subcommand("avoid", "Count pattern-avoiding p-ascent sequences for n = 1..N");
    avoid_cmd->add_option("--p", ar.p, "Ascent allowance p")->required()->check(CLI::PositiveNumber);
    add_avoid_options(avoid_cmd, true);

    // bijection
    std::string b_map, b_word;
    unsigned b_p = 2;
    auto *bij_cmd = app.add_subcommand("bijection", "Apply a structural map to one sequence");
    bij_cmd->add_option("--map", b_map, "10to012, 012to10, embed or project")
        ->required()
        ->check(CLI::IsMember({"10to012", "012to10", "embed", "project"}));
    bij_cmd->add_option("--p", b_p, "p for embed/project")->check(CLI::PositiveNumber);
    bij_cmd->add_option("--word", b_word, "Comma-separated letters")->required();

    // verify
    std::string v_suite;
    unsigned v_p = 1, v_order = 8, v_budget = 8, v_k = 2;
    auto *verify_cmd = app.add_subcommand("verify", "Run verification suites, one JSON report per line");
    verify_cmd->add_option("--suite", v_suite, "all, an identity name, or oracle_<gf>")->required();
    verify_cmd->add_option("--p", v_p, "Ascent allowance p")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--order", v_order, "Truncation order / maximal length");
    verify_cmd->add_option("--budget", v_budget, "Enumeration length per p for --suite all")->check(CLI::Range(4u, 64u));
    verify_cmd->add_option("--k", v_k, "Repetition bound for oracle_maxk")->check(CLI::PositiveNumber);

    // bfile
    bool bf_avoid = false;
    auto *bfile_cmd = app.add_subcommand("bfile", "Print a sequence as 'n a(n)' lines");
    add_series_options(bfile_cmd, false);
    bfile_cmd->add_flag("--avoid", bf_avoid, "Tabulate avoidance counts instead of a generating function");
    add_avoid_options(bfile_cmd, false);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        for (auto *sub : app.get_subcommands()) {
            err << sub->help();
        }
        return usage;
    }

    try {
        if (*enumerate_cmd || *count_cmd) {
            WordPredicate keep;
            std::optional<Pattern> pat;
            if (!e_pattern.empty()) {
                pat = Pattern::parse(e_pattern);
            }
            keep = [pat, prim = e_primitive, ud = e_updown](WordView w) {
                if (prim && !primitive_prefix()(w)) {
                    return false;
                }
                if (ud && !up_down_prefix()(w)) {
                    return false;
                }
                return !pat || !occurs(*pat, w);
            };
            if (*count_cmd) {
                out << to_decimal(count_sequences(e_p, e_n, keep)) << "\n";
                return ok;
            }
            if (e_format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto &w : enumerate(e_p, e_n, {}, keep)) {
                    arr.push_back(w.letters());
                }
                out << arr.dump() << "\n";
            } else {
                for (const auto &w : enumerate(e_p, e_n, {}, keep)) {
                    out << format_word(w.letters()) << "\n";
                }
            }
            return ok;
        }
        if (*series_cmd) {
            emit(out_path, to_json(evaluate(sr)).dump() + "\n", out);
            return ok;
        }
        if (*avoid_cmd) {
            auto rows = avoid_table(ar, err);
            int code = ok;
            for (const auto &row : rows) {
                out << row.n;
                if (row.closed) {
                    out << " " << to_decimal(*row.closed);
                }
                if (row.oracle) {
                    out << " " << to_decimal(*row.oracle);
                }
                if (row.closed && row.oracle && *row.closed != *row.oracle) {
                    out << " MISMATCH";
                    code = verification_failed;
                }
                out << "\n";
            }
            return code;
        }
        if (*bij_cmd) {
            Word w = parse_word(b_word);
            PAscentSequence result(1, {});
            if (b_map == "10to012") {
                result = bijection_10_to_012(PAscentSequence(2, w));
            } else if (b_map == "012to10") {
                result = bijection_012_to_10(PAscentSequence(2, w));
            } else if (b_map == "embed") {
                result = embed(PAscentSequence(b_p, w));
            } else {
                result = project(PAscentSequence(1, w), b_p);
            }
            out << format_word(result.letters()) << "\n";
            return ok;
        }
        if (*verify_cmd) {
            std::vector<verify::CheckReport> reports;
            if (v_suite == "all") {
                reports = verify::run_all(v_budget);
            } else if (v_suite.starts_with("oracle_") && verify::is_suite(v_suite)) {
                reports.push_back(verify::check_oracle_vs(v_suite.substr(7), v_p, v_order, v_k));
            } else if (verify::is_suite(v_suite)) {
                reports.push_back(verify::check_identity(v_suite, v_p, v_order));
            } else {
                throw usage_error("unknown suite '" + v_suite + "'");
            }
            bool all_pass = true;
            for (const auto &r : reports) {
                out << r.to_json_line() << "\n";
                all_pass = all_pass && r.pass;
            }
            return all_pass ? ok : verification_failed;
        }
        // bfile
        if (bf_avoid == !sr.gf.empty()) {
            throw usage_error("bfile needs exactly one of --gf or --avoid");
        }
        if (bf_avoid) {
            if (ar.pattern.empty()) {
                throw usage_error("bfile --avoid requires --pattern");
            }
            ar.p = sr.p;
            std::string text;
            for (const auto &row : avoid_table(ar, err)) {
                if (row.closed && row.oracle && *row.closed != *row.oracle) {
                    err << "closed form and enumeration disagree at n = " << row.n << "\n";
                    return verification_failed;
                }
                text += std::to_string(row.n) + " " + to_decimal(row.closed ? *row.closed : *row.oracle) + "\n";
            }
            emit(out_path, text, out);
            return ok;
        }
        emit(out_path, bfile_from_series(evaluate(sr), bfile_offset(sr.gf)), out);
        return ok;
    } catch (const error &e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
}

} // namespace pascent::cli

#endif
