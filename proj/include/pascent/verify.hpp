#ifndef PASCENT_VERIFY_HPP
#define PASCENT_VERIFY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bigint.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "gf.hpp"
#include "patterns.hpp"
#include "series.hpp"

namespace pascent::verify
{

struct Discrepancy {
    unsigned t_order = 0;
    std::string monomial;
    std::string expected;
    std::string actual;

    friend bool operator==(const Discrepancy &, const Discrepancy &) = default;
};

struct CheckReport {
    std::string suite;
    std::vector<std::pair<std::string, long long>> params;
    bool pass = true;
    std::optional<Discrepancy> first_discrepancy;

    friend bool operator==(const CheckReport &, const CheckReport &) = default;

    nlohmann::ordered_json to_json() const
    {
        nlohmann::ordered_json j;
        j["suite"] = suite;
        nlohmann::ordered_json ps = nlohmann::ordered_json::object();
        for (const auto &[k, v] : params) {
            ps[k] = v;
        }
        j["params"] = std::move(ps);
        j["status"] = pass ? "pass" : "fail";
        if (first_discrepancy) {
            const auto &d = *first_discrepancy;
            j["first_discrepancy"] = {{"t", d.t_order},
                                      {"monomial", d.monomial},
                                      {"expected", d.expected},
                                      {"actual", d.actual}};
        }
        return j;
    }

    std::string to_json_line() const
    {
        return to_json().dump();
    }
};

inline std::string monomial_label(Monomial m)
{
    return m.is_one() ? std::string("1") : MultiPoly(m, 1).to_string();
}

/// First (t-order, monomial) at which the two series differ, scanning t-orders
/// upward and monomials in canonical order. Only monomials with u-exponent at
/// most the tightest bound among `udeg` and the operands' own bounds count.
inline std::optional<Discrepancy> first_difference(const TSeries &expected, const TSeries &actual,
                                                   std::optional<unsigned> udeg = std::nullopt)
{
    std::optional<unsigned> cap = udeg;
    for (auto c : {expected.ucap(), actual.ucap()}) {
        if (c && (!cap || *c < *cap)) {
            cap = c;
        }
    }
    unsigned order = std::min(expected.order(), actual.order());
    for (unsigned n = 0; n <= order; ++n) {
        MultiPoly diff = actual.coefficient(n) - expected.coefficient(n);
        for (const auto &[m, c] : diff.terms()) {
            if (cap && m.exponent(Var::u) > *cap) {
                continue;
            }
            return Discrepancy{n, monomial_label(m), to_decimal(expected.coefficient(n).coefficient(m)),
                               to_decimal(actual.coefficient(n).coefficient(m))};
        }
    }
    return std::nullopt;
}

/// Coefficient of x^r, as a series in the remaining variables.
inline TSeries x_part(const TSeries &s, unsigned r)
{
    TSeries out(s.order(), s.ucap());
    for (unsigned n = 0; n <= s.order(); ++n) {
        std::vector<MultiPoly::Term> terms;
        for (const auto &[m, c] : s.coefficient(n).terms()) {
            if (m.exponent(Var::x) == r) {
                terms.emplace_back(m.with(Var::x, 0), c);
            }
        }
        out.set_coefficient(n, MultiPoly::from_terms(std::move(terms)));
    }
    return out;
}

/// Everything a suite can exercise; the registry below must cover each one.
enum class Target : unsigned {
    delta,
    gamma,
    delta_bar,
    gamma_bar,
    G1_u,
    G1_full,
    Gr,
    G,
    H,
    A,
    P,
    R,
    maxk,
    psi,
    jelinek_rhs,
    oracle_table,
    closed_01,
    closed_10,
    closed_00,
    closed_012,
    recursion_012,
    gf_01,
    gf_10,
    gf_00,
    count_avoiders,
    embed,
    project,
    bijection,
    vincular_212,
    count_ // sentinel
};

constexpr std::uint64_t bit(Target t)
{
    return std::uint64_t(1) << static_cast<unsigned>(t);
}

template <class... Ts>
constexpr std::uint64_t bits(Ts... ts)
{
    return (bit(ts) | ...);
}

struct SuiteInfo {
    std::string_view name;
    std::uint64_t covers;
};

inline constexpr std::array<SuiteInfo, 23> registry{{
    {"oracle_G", bits(Target::oracle_table, Target::G, Target::G1_full)},
    {"oracle_G1_full", bits(Target::oracle_table, Target::G1_full)},
    {"oracle_G1_u", bits(Target::oracle_table, Target::G1_u)},
    {"oracle_A", bits(Target::oracle_table, Target::A)},
    {"oracle_H", bits(Target::oracle_table, Target::H)},
    {"oracle_R", bits(Target::oracle_table, Target::R)},
    {"oracle_maxk", bits(Target::oracle_table, Target::maxk)},
    {"oracle_P", bits(Target::oracle_table, Target::P)},
    {"kernel_G", bits(Target::oracle_table)},
    {"kernel_H", bits(Target::oracle_table)},
    {"run_shift", bits(Target::oracle_table, Target::Gr)},
    {"psi", bits(Target::psi, Target::gamma)},
    {"jelinek", bits(Target::jelinek_rhs, Target::A)},
    {"H_gives_A", bits(Target::H, Target::A)},
    {"primitive_substitution", bits(Target::A, Target::R)},
    {"delta_gamma_calculus", bits(Target::delta, Target::gamma, Target::delta_bar, Target::gamma_bar)},
    {"cancellation", bits(Target::G1_u, Target::H)},
    {"maxk_boundary", bits(Target::maxk, Target::R, Target::A)},
    {"avoid_closed",
     bits(Target::closed_01, Target::closed_10, Target::closed_00, Target::closed_012, Target::recursion_012, Target::count_avoiders)},
    {"avoid_gf", bits(Target::gf_01, Target::gf_10, Target::gf_00, Target::count_avoiders)},
    {"embed_project", bits(Target::embed, Target::project)},
    {"bijection_10_012", bits(Target::bijection, Target::count_avoiders)},
    {"vincular_212", bits(Target::vincular_212, Target::count_avoiders)},
}};

constexpr bool registry_covers_everything()
{
    std::uint64_t all = 0;
    for (const auto &s : registry) {
        all |= s.covers;
    }
    return all == (bit(Target::count_) - 1);
}

static_assert(registry_covers_everything(), "every evaluator and closed form must be exercised by some suite");

inline bool is_suite(std::string_view name)
{
    for (const auto &s : registry) {
        if (s.name == name) {
            return true;
        }
    }
    return false;
}

/// Enumeration size bound: an oracle run of length N visits
/// Σ_{n<=N} |p-ascent sequences of length n| words.
inline constexpr std::uint64_t default_enumeration_budget = 60'000'000;

inline BigInt enumeration_size(unsigned p, unsigned N)
{
    TSeries a = eval_A(p, N).specialize(Var::z, 1);
    BigInt total = 0;
    for (unsigned n = 0; n <= N; ++n) {
        total += a.coefficient(n).constant_term();
    }
    return total;
}

inline void require_feasible(unsigned p, unsigned N, std::uint64_t budget = default_enumeration_budget)
{
    if (enumeration_size(p, N) > budget) {
        throw budget_exceeded("enumerating " + std::to_string(p) + "-ascent sequences through length "
                              + std::to_string(N) + " exceeds the budget of " + std::to_string(budget) + " words");
    }
}

namespace detail
{

using pascent::detail::U;
using pascent::detail::V;
using pascent::detail::Z;

inline CheckReport report(std::string suite, std::vector<std::pair<std::string, long long>> params,
                          std::optional<Discrepancy> d)
{
    return CheckReport{std::move(suite), std::move(params), !d.has_value(), std::move(d)};
}

inline TSeries oracle_H(unsigned p, unsigned N)
{
    StatSelector sel{true, true, true, false};
    return oracle_table(p, N, sel) - TSeries::one(N);
}

inline Discrepancy count_discrepancy(unsigned n, std::string label, const BigInt &expected, const BigInt &actual)
{
    return Discrepancy{n, std::move(label), to_decimal(expected), to_decimal(actual)};
}

// Residual of (vδ_1 - 1) F = lead + t(z(v-1) - v) F|_{v=1} + t u v^(p+1) F|_{v=1, u->uv}.
inline std::optional<Discrepancy> kernel_residual(unsigned p, const TSeries &f, const TSeries &lead)
{
    unsigned N = f.order();
    TSeries f1 = f.specialize(Var::v, 1);
    TSeries lhs = (TSeries::constant(V() - 1, N) + TSeries::monomial(V() * (U() - 1), 1, N)) * f;
    TSeries rhs = lead + ((Z() * (V() - 1) - V()) * f1).shifted_t(1)
                  + f1.subst_u_to_uv().shifted_t(1).shifted(Monomial::from(1, p + 1));
    return first_difference(rhs, lhs);
}

} // namespace detail

using Evaluator = std::function<TSeries(unsigned p, unsigned N)>;

/// Compares an evaluator against the brute-force table, filtered and
/// specialized to the statistics the evaluator tracks. `k` is the repetition
/// bound for maxk. A non-empty `evaluator` replaces the built-in one.
inline CheckReport check_oracle_vs(std::string_view gf_name, unsigned p, unsigned N, unsigned k = 2,
                                   const Evaluator &evaluator = {})
{
    require_p(p);
    std::string suite = "oracle_" + std::string(gf_name);
    if (!is_suite(suite)) {
        throw invalid_parameter("unknown generating function '" + std::string(gf_name) + "'");
    }
    if (gf_name == "P" && p != 1) {
        throw unsupported("P is the p = 1 series");
    }
    require_feasible(p, N);
    std::vector<std::pair<std::string, long long>> params{{"p", p}, {"N", N}};
    auto lazy = [&](auto make) { return evaluator ? evaluator(p, N) : make(); };
    TSeries expected, actual;
    if (gf_name == "G") {
        expected = oracle_table(p, N);
        actual = lazy([&] { return eval_G(p, N); });
    } else if (gf_name == "G1_full") {
        expected = x_part(oracle_table(p, N), 1);
        actual = lazy([&] { return eval_G1_full(p, N); });
    } else if (gf_name == "G1_u") {
        expected = x_part(oracle_table(p, N, StatSelector{true, false, true, true}), 1);
        actual = lazy([&] { return eval_G1_u(p, N); });
    } else if (gf_name == "A") {
        expected = oracle_table(p, N, StatSelector{false, false, true, false});
        actual = lazy([&] { return eval_A(p, N); });
    } else if (gf_name == "H") {
        expected = detail::oracle_H(p, N).specialize(Var::v, 1);
        actual = lazy([&] { return eval_H(p, N); });
    } else if (gf_name == "R") {
        expected = oracle_table(p, N, StatSelector::none(), primitive_prefix());
        actual = lazy([&] { return eval_R(p, N); });
    } else if (gf_name == "maxk") {
        params.emplace_back("k", k);
        expected = oracle_table(p, N, StatSelector::none(), max_repetition_prefix(k));
        actual = evaluator ? evaluator(p, N) : eval_maxk(p, k, N);
    } else {
        expected = oracle_table(1, N, StatSelector::none());
        actual = lazy([&] { return eval_P(N); });
    }
    return detail::report(std::move(suite), std::move(params), first_difference(expected, actual));
}

inline const std::vector<std::string> &identity_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &s : registry) {
            if (!s.name.starts_with("oracle_")) {
                out.emplace_back(s.name);
            }
        }
        return out;
    }();
    return names;
}

/// Default loop extents: r <= 3 (run_shift), m <= 6 (psi), s, k <= 6
/// (delta_gamma_calculus).
inline unsigned default_extent(std::string_view name)
{
    if (name == "run_shift") {
        return 3;
    }
    return 6;
}

/// Runs the named identity or invariant through t^N (or length N for
/// combinatorial suites).
inline CheckReport check_identity(std::string_view name, unsigned p, unsigned N,
                                  std::optional<unsigned> extent = std::nullopt)
{
    using namespace detail;
    if (!is_suite(name) || name.starts_with("oracle_")) {
        throw invalid_parameter("unknown identity '" + std::string(name) + "'");
    }
    const unsigned ext = extent.value_or(default_extent(name));
    std::string suite(name);
    std::vector<std::pair<std::string, long long>> params{{"p", p}, {"N", N}};

    if (name == "psi") {
        params = {{"N", N}, {"D", N}, {"m", ext}};
        PsiEvaluator ev(N, N);
        for (unsigned m = 0; m <= ext; ++m) {
            if (auto d = first_difference(ev.rhs(m), ev.lhs(m))) {
                params.back().second = m;
                return report(suite, params, d);
            }
        }
        return report(suite, params, std::nullopt);
    }
    if (name == "delta_gamma_calculus") {
        params = {{"N", N}, {"s", ext}, {"k", ext}};
        TSeries u = TSeries::constant(U(), N);
        TSeries uv = TSeries::constant(U() * V(), N);
        for (unsigned k = 0; k <= ext; ++k) {
            TSeries dk = delta(k, N);
            TSeries sub = u * invert(dk);
            for (unsigned s = 0; s <= ext; ++s) {
                std::optional<Discrepancy> d = first_difference(delta(s + k, N), delta(s, N).subst_u(sub) * dk);
                if (!d && s >= 1) {
                    d = first_difference(gamma(s + k, N), gamma(s, N).subst_u(sub) * dk);
                }
                if (!d) {
                    d = first_difference(delta(s, N).subst_u(uv), delta_bar(s, N));
                }
                if (!d) {
                    d = first_difference(gamma(s, N).subst_u(uv), gamma_bar(s, N));
                }
                if (d) {
                    params = {{"N", N}, {"s", s}, {"k", k}};
                    return report(suite, params, d);
                }
            }
        }
        return report(suite, params, std::nullopt);
    }
    if (name == "bijection_10_012") {
        params = {{"p", 2}, {"N", N}};
        const Pattern p10 = Pattern::parse("10");
        const Pattern p012 = Pattern::parse("012");
        for (unsigned n = 0; n <= N; ++n) {
            std::set<Word> targets;
            for (const auto &w : enumerate(2, n, {}, avoiding_prefix(p012))) {
                targets.insert(w.letters());
            }
            std::set<Word> images;
            BigInt sources = 0;
            for (const auto &w : enumerate(2, n, {}, avoiding_prefix(p10))) {
                ++sources;
                PAscentSequence img = bijection_10_to_012(w);
                std::string label = "(" + format_word(w.letters()) + ")";
                if (!targets.contains(img.letters()) || !images.insert(img.letters()).second) {
                    return report(suite, params, count_discrepancy(n, label, 1, 0));
                }
                if (bijection_012_to_10(img) != w) {
                    return report(suite, params, count_discrepancy(n, label + " round trip", 1, 0));
                }
            }
            if (sources != targets.size() || images.size() != targets.size()) {
                return report(suite, params, count_discrepancy(n, "class sizes", BigInt(targets.size()), sources));
            }
            BigInt expected_size = BigInt(n + 1) * pow2(n) / 4;
            if (n >= 2 && sources != expected_size) {
                return report(suite, params, count_discrepancy(n, "(n+1)2^(n-2)", expected_size, sources));
            }
        }
        return report(suite, params, std::nullopt);
    }
    if (name == "vincular_212") {
        params = {{"p", 3}, {"N", N}};
        const Pattern p00 = Pattern::parse("00");
        for (unsigned n = 1; n <= N; ++n) {
            BigInt expected = count_avoiders(3, p00, n);
            BigInt actual = count_vincular_212_ternary(n);
            if (expected != actual) {
                return report(suite, params, count_discrepancy(n, "21-2", expected, actual));
            }
        }
        return report(suite, params, std::nullopt);
    }

    require_p(p);
    if (name == "kernel_G") {
        require_feasible(p, N);
        TSeries table = oracle_table(p, N);
        for (unsigned r = 1; r < N; ++r) {
            TSeries lead = TSeries::monomial(
                MultiPoly::var(Var::z, r) * U() * V() * (MultiPoly::var(Var::v, p) - 1), r + 1, N);
            if (auto d = kernel_residual(p, x_part(table, r), lead)) {
                params.emplace_back("r", r);
                return report(suite, params, d);
            }
        }
        return report(suite, params, std::nullopt);
    }
    if (name == "kernel_H") {
        require_feasible(p, N);
        TSeries lead = TSeries::monomial(Z() * (V() - 1), 1, N);
        return report(suite, params, kernel_residual(p, oracle_H(p, N), lead));
    }
    if (name == "run_shift") {
        require_feasible(p, N);
        params.emplace_back("r", ext);
        TSeries table = oracle_table(p, N);
        TSeries g1 = x_part(table, 1);
        for (unsigned r = 1; r <= ext; ++r) {
            TSeries gr = x_part(table, r);
            auto d = first_difference(gr, g1.shifted_t(r - 1).shifted(Monomial::of(Var::z, r - 1)));
            if (!d) {
                d = first_difference(gr, eval_Gr(p, r, N));
            }
            if (d) {
                params.back().second = r;
                return report(suite, params, d);
            }
        }
        return report(suite, params, std::nullopt);
    }
    if (name == "jelinek") {
        if (p != 1) {
            throw unsupported("the zeros identity is only known for p = 1");
        }
        return report(suite, params, first_difference(jelinek_rhs(N), eval_A(1, N)));
    }
    if (name == "H_gives_A") {
        TSeries h = eval_H(p, N, N);
        return report(suite, params, first_difference(eval_A(p, N), TSeries::one(N) + h.specialize(Var::u, 1)));
    }
    if (name == "primitive_substitution") {
        TSeries t_over = divide(TSeries::t(N), TSeries::from_ints({1, -1}, N));
        return report(suite, params,
                      first_difference(eval_A(p, N).specialize(Var::z, 1), compose_t(eval_R(p, N), t_over)));
    }
    if (name == "cancellation") {
        for (const TSeries &s : {eval_G1_u(p, N), eval_H(p, N)}) {
            for (unsigned n = 0; n <= N; ++n) {
                for (const auto &[m, c] : s.coefficient(n).terms()) {
                    if (m.exponent(Var::u) >= n) {
                        return report(suite, params, Discrepancy{n, monomial_label(m), "0", to_decimal(c)});
                    }
                }
            }
        }
        return report(suite, params, std::nullopt);
    }
    if (name == "maxk_boundary") {
        auto d = first_difference(eval_R(p, N), eval_maxk(p, 1, N));
        TSeries a1 = eval_A(p, N).specialize(Var::z, 1);
        for (unsigned k = std::max(N, 1u); !d && k <= N + 2; ++k) {
            d = first_difference(a1, eval_maxk(p, k, N));
        }
        return report(suite, params, d);
    }
    if (name == "avoid_closed") {
        std::vector<std::pair<std::string, bool>> cases{{"01", false}, {"01", true}, {"10", false}, {"10", true}};
        if (p == 2 || p == 3) {
            cases.insert(cases.end(), {{"00", false}, {"00", true}});
        }
        if (p >= 2) {
            cases.emplace_back("012", false);
        }
        for (const auto &[text, primitive] : cases) {
            Pattern pat = Pattern::parse(text);
            for (unsigned n = 0; n <= N; ++n) {
                BigInt expected = count_avoiders(p, pat, n, primitive);
                BigInt actual = closed_count(p, pat, n, primitive);
                if (expected != actual) {
                    return report(suite, params,
                                  count_discrepancy(n, text + (primitive ? "/primitive" : ""), expected, actual));
                }
            }
        }
        if (p >= 3) {
            Avoid012Recursion rec;
            const Pattern p012 = Pattern::parse("012");
            for (unsigned n = 0; n <= N; ++n) {
                BigInt expected = closed_count(p, p012, n);
                BigInt actual = rec(p, n);
                if (expected != actual) {
                    return report(suite, params, count_discrepancy(n, "012/recursion", expected, actual));
                }
            }
        }
        return report(suite, params, std::nullopt);
    }
    if (name == "avoid_gf") {
        std::vector<std::pair<std::string, bool>> cases{{"01", false}, {"01", true}, {"10", false}, {"10", true}};
        if (p == 3) {
            cases.insert(cases.end(), {{"00", false}, {"00", true}});
        }
        for (const auto &[text, primitive] : cases) {
            Pattern pat = Pattern::parse(text);
            TSeries g = gf_avoiders(p, pat, N, primitive);
            for (unsigned n = 0; n <= N; ++n) {
                BigInt expected = count_avoiders(p, pat, n, primitive);
                BigInt actual = g.coefficient(n).constant_term();
                if (expected != actual) {
                    return report(suite, params,
                                  count_discrepancy(n, text + (primitive ? "/primitive" : ""), expected, actual));
                }
            }
        }
        return report(suite, params, std::nullopt);
    }
    // embed_project: every p-ascent sequence embeds to an ascent sequence and
    // projects back; every ascent sequence with the (01)^(p-1)0 prefix projects
    // to a p-ascent sequence and embeds back. The two classes have equal size.
    const std::size_t prefix = 2 * std::size_t(p - 1);
    auto in_prefix_tree = [prefix](WordView w) {
        for (std::size_t i = 0; i < w.size() && i <= prefix; ++i) {
            if (w[i] != (i < prefix ? Letter(i % 2) : 0u)) {
                return false;
            }
        }
        return true;
    };
    for (unsigned n = 0; n <= N; ++n) {
        BigInt forward = 0;
        for (const auto &w : enumerate(p, n)) {
            ++forward;
            std::string label = "(" + format_word(w.letters()) + ")";
            if (!is_p_ascent(embed_word(w.letters(), p), 1)) {
                return report(suite, params, count_discrepancy(n, label + " embeds invalid", 1, 0));
            }
            if (project(embed(w), p) != w) {
                return report(suite, params, count_discrepancy(n, label + " round trip", 1, 0));
            }
        }
        BigInt backward = 0;
        unsigned len = n == 0 ? 0 : n + unsigned(prefix);
        for (const auto &w : enumerate(1, len, {}, in_prefix_tree)) {
            ++backward;
            std::string label = "(" + format_word(w.letters()) + ")";
            try {
                if (embed(project(w, p)) != w) {
                    return report(suite, params, count_discrepancy(n, label + " round trip", 1, 0));
                }
            } catch (const invalid_input &) {
                return report(suite, params, count_discrepancy(n, label + " projects invalid", 1, 0));
            }
        }
        if (forward != backward) {
            return report(suite, params, count_discrepancy(n, "class sizes", forward, backward));
        }
    }
    return report(suite, params, std::nullopt);
}

/// Runs the full matrix for p = 1..4 with enumeration length `budget`, in
/// registry-determined order. Suites are independent and run on `threads`
/// workers; the report order does not depend on scheduling.
inline std::vector<CheckReport> run_all(unsigned budget, unsigned threads = default_parallelism())
{
    if (budget < 4) {
        throw invalid_parameter("budget must be at least 4");
    }
    std::vector<std::function<CheckReport()>> jobs;
    for (unsigned p = 1; p <= 4; ++p) {
        for (std::string_view gf : {"G", "G1_full", "G1_u", "A", "H", "R", "maxk"}) {
            jobs.emplace_back([=] { return check_oracle_vs(gf, p, budget); });
        }
        if (p == 1) {
            jobs.emplace_back([=] { return check_oracle_vs("P", 1, budget); });
        }
        for (std::string_view id : {"kernel_G", "kernel_H", "run_shift", "H_gives_A", "primitive_substitution",
                                    "cancellation", "maxk_boundary", "avoid_closed", "avoid_gf", "embed_project"}) {
            jobs.emplace_back([=] { return check_identity(id, p, budget); });
        }
    }
    jobs.emplace_back([=] { return check_identity("jelinek", 1, 3 * budget); });
    jobs.emplace_back([=] { return check_identity("psi", 1, budget); });
    jobs.emplace_back([=] { return check_identity("delta_gamma_calculus", 1, budget); });
    jobs.emplace_back([=] { return check_identity("bijection_10_012", 2, budget); });
    jobs.emplace_back([=] { return check_identity("vincular_212", 3, budget); });

    std::vector<CheckReport> reports(jobs.size());
    threads = std::max(1u, std::min<unsigned>(threads, unsigned(jobs.size())));
    if (threads == 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            reports[i] = jobs[i]();
        }
        return reports;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < jobs.size(); i += threads) {
                    reports[i] = jobs[i]();
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return reports;
}

} // namespace pascent::verify

#endif
