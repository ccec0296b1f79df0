#ifndef PASCENT_MULTIPOLY_HPP
#define PASCENT_MULTIPOLY_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace pascent
{

/// The four coefficient variables, in canonical order.
enum class Var : unsigned { u = 0, v = 1, z = 2, x = 3 };

inline constexpr std::array<Var, 4> all_vars{Var::u, Var::v, Var::z, Var::x};

inline constexpr char var_name(Var var)
{
    constexpr char names[] = {'u', 'v', 'z', 'x'};
    return names[static_cast<unsigned>(var)];
}

inline std::optional<Var> var_from_name(std::string_view s)
{
    if (s.size() != 1) {
        return std::nullopt;
    }
    for (Var var : all_vars) {
        if (var_name(var) == s[0]) {
            return var;
        }
    }
    return std::nullopt;
}

/// Exponent vector (e_u, e_v, e_z, e_x) packed into 16-bit fields. The packed
/// integer order is lexicographic order on the exponent vector.
class Monomial
{
public:
    static constexpr unsigned field_bits = 16;
    static constexpr std::uint64_t field_mask = 0xFFFF;
    static constexpr unsigned max_exponent = 0xFFFF;

    constexpr Monomial() = default;

    static Monomial from(unsigned eu, unsigned ev = 0, unsigned ez = 0, unsigned ex = 0)
    {
        for (unsigned e : {eu, ev, ez, ex}) {
            if (e > max_exponent) {
                throw invalid_parameter("monomial exponent out of range");
            }
        }
        Monomial m;
        m.key_ = (std::uint64_t(eu) << 48) | (std::uint64_t(ev) << 32) | (std::uint64_t(ez) << 16)
                 | std::uint64_t(ex);
        return m;
    }

    static Monomial of(Var var, unsigned e = 1)
    {
        std::array<unsigned, 4> ex{};
        ex[static_cast<unsigned>(var)] = e;
        return from(ex[0], ex[1], ex[2], ex[3]);
    }

    static constexpr Monomial from_key(std::uint64_t key)
    {
        Monomial m;
        m.key_ = key;
        return m;
    }

    constexpr std::uint64_t key() const
    {
        return key_;
    }

    constexpr unsigned exponent(Var var) const
    {
        return unsigned((key_ >> shift(var)) & field_mask);
    }

    std::array<unsigned, 4> exponents() const
    {
        return {exponent(Var::u), exponent(Var::v), exponent(Var::z), exponent(Var::x)};
    }

    constexpr bool is_one() const
    {
        return key_ == 0;
    }

    Monomial with(Var var, unsigned e) const
    {
        auto ex = exponents();
        ex[static_cast<unsigned>(var)] = e;
        return from(ex[0], ex[1], ex[2], ex[3]);
    }

    friend Monomial operator*(Monomial a, Monomial b)
    {
        std::array<unsigned, 4> ex{};
        for (Var var : all_vars) {
            ex[static_cast<unsigned>(var)] = a.exponent(var) + b.exponent(var);
        }
        return from(ex[0], ex[1], ex[2], ex[3]);
    }

    friend constexpr bool operator==(Monomial a, Monomial b) = default;
    friend constexpr auto operator<=>(Monomial a, Monomial b)
    {
        return a.key_ <=> b.key_;
    }

private:
    static constexpr unsigned shift(Var var)
    {
        return 48 - field_bits * static_cast<unsigned>(var);
    }

    std::uint64_t key_ = 0;
};

class MultiPoly;

namespace detail
{

// Sums products into a hash table keyed by packed exponents; `take` returns the
// canonical sorted form.
class PolyAccumulator
{
public:
    void add(Monomial m, const BigInt &c);
    void add(const MultiPoly &a);
    void add_product(const MultiPoly &a, const MultiPoly &b, std::optional<unsigned> ucap);
    bool empty() const
    {
        return acc_.empty();
    }
    MultiPoly take();

private:
    std::unordered_map<std::uint64_t, BigInt> acc_;
};

} // namespace detail

/// Sparse polynomial in (u, v, z, x) with arbitrary-precision integer
/// coefficients. Terms are kept sorted by monomial with no zero coefficients,
/// so equal polynomials have identical representations.
class MultiPoly
{
public:
    using Term = std::pair<Monomial, BigInt>;

    MultiPoly() = default;
    MultiPoly(long long c)
    {
        if (c != 0) {
            terms_.emplace_back(Monomial{}, BigInt(c));
        }
    }
    MultiPoly(const BigInt &c)
    {
        if (c != 0) {
            terms_.emplace_back(Monomial{}, c);
        }
    }
    MultiPoly(Monomial m, const BigInt &c)
    {
        if (c != 0) {
            terms_.emplace_back(m, c);
        }
    }

    static MultiPoly var(Var v, unsigned e = 1)
    {
        return MultiPoly(Monomial::of(v, e), 1);
    }

    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    static MultiPoly from_terms(std::vector<Term> terms)
    {
        std::sort(terms.begin(), terms.end(),
                  [](const Term &a, const Term &b) { return a.first < b.first; });
        MultiPoly r;
        for (auto &t : terms) {
            if (!r.terms_.empty() && r.terms_.back().first == t.first) {
                r.terms_.back().second += t.second;
            } else {
                r.terms_.push_back(std::move(t));
            }
        }
        std::erase_if(r.terms_, [](const Term &t) { return t.second == 0; });
        return r;
    }

    const std::vector<Term> &terms() const
    {
        return terms_;
    }
    std::size_t size() const
    {
        return terms_.size();
    }
    bool is_zero() const
    {
        return terms_.empty();
    }
    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
    }

    BigInt coefficient(Monomial m) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term &t, Monomial k) { return t.first < k; });
        if (it != terms_.end() && it->first == m) {
            return it->second;
        }
        return 0;
    }

    BigInt constant_term() const
    {
        return coefficient(Monomial{});
    }

    /// Highest exponent of `var`; -1 for the zero polynomial.
    int degree(Var var) const
    {
        int d = -1;
        for (const auto &t : terms_) {
            d = std::max(d, int(t.first.exponent(var)));
        }
        return d;
    }

    MultiPoly operator-() const
    {
        MultiPoly r = *this;
        for (auto &t : r.terms_) {
            t.second = -t.second;
        }
        return r;
    }

    MultiPoly &operator+=(const MultiPoly &b)
    {
        merge(b, false);
        return *this;
    }
    MultiPoly &operator-=(const MultiPoly &b)
    {
        merge(b, true);
        return *this;
    }
    MultiPoly &operator*=(const BigInt &c)
    {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto &t : terms_) {
                t.second *= c;
            }
        }
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b)
    {
        return a += b;
    }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b)
    {
        return a -= b;
    }
    friend MultiPoly operator*(MultiPoly a, const BigInt &c)
    {
        return a *= c;
    }
    friend MultiPoly operator*(const BigInt &c, MultiPoly a)
    {
        return a *= c;
    }

    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
    {
        return multiply(a, b, std::nullopt);
    }

    /// Product keeping only monomials with u-exponent <= ucap (when given).
    static MultiPoly multiply(const MultiPoly &a, const MultiPoly &b, std::optional<unsigned> ucap)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        if (a.is_constant() && !ucap) {
            return b * a.terms_[0].second;
        }
        if (b.is_constant() && !ucap) {
            return a * b.terms_[0].second;
        }
        detail::PolyAccumulator acc;
        acc.add_product(a, b, ucap);
        return acc.take();
    }

    /// Multiplies every term by the monomial m.
    MultiPoly shifted(Monomial m) const
    {
        MultiPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto &t : terms_) {
            r.terms_.emplace_back(t.first * m, t.second);
        }
        return r;
    }

    MultiPoly truncated_u(unsigned cap) const
    {
        MultiPoly r;
        for (const auto &t : terms_) {
            if (t.first.exponent(Var::u) <= cap) {
                r.terms_.push_back(t);
            }
        }
        return r;
    }

    /// Substitutes var := value.
    MultiPoly specialized(Var var, const BigInt &value) const
    {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto &t : terms_) {
            unsigned e = t.first.exponent(var);
            BigInt c = t.second;
            if (e > 0) {
                c *= boost::multiprecision::pow(value, e);
            }
            out.emplace_back(t.first.with(var, 0), std::move(c));
        }
        return from_terms(std::move(out));
    }

    /// u^a v^b -> u^a v^(a+b).
    MultiPoly subst_u_to_uv() const
    {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto &t : terms_) {
            unsigned a = t.first.exponent(Var::u);
            out.emplace_back(t.first.with(Var::v, t.first.exponent(Var::v) + a), t.second);
        }
        return from_terms(std::move(out));
    }

    /// Exact quotient by (v - 1); nullopt if (v - 1) does not divide.
    std::optional<MultiPoly> divided_by_v_minus_one() const
    {
        // Group by the exponents of u, z, x; each group is a polynomial in v.
        std::map<std::uint64_t, std::vector<std::pair<unsigned, BigInt>>> groups;
        for (const auto &[m, c] : terms_) {
            groups[rest_key(m)].emplace_back(m.exponent(Var::v), c);
        }
        std::vector<Term> out;
        for (auto &[group, coeffs] : groups) {
            // Synthetic division by (v - 1), from the top degree down.
            unsigned top = 0;
            for (const auto &c : coeffs) {
                top = std::max(top, c.first);
            }
            std::vector<BigInt> dense(top + 1);
            for (auto &c : coeffs) {
                dense[c.first] = std::move(c.second);
            }
            BigInt carry = 0;
            Monomial base = Monomial::from_key(group);
            for (unsigned d = top; d >= 1; --d) {
                carry += dense[d];
                if (carry != 0) {
                    out.emplace_back(base.with(Var::v, d - 1), carry);
                }
            }
            if (carry + dense[0] != 0) {
                return std::nullopt;
            }
        }
        return from_terms(std::move(out));
    }

    friend bool operator==(const MultiPoly &a, const MultiPoly &b) = default;

    std::string to_string() const;

    /// Parses "3*u*v^2*z - 2*z^2 + 5"; whitespace is ignored and '*' between
    /// factors is optional.
    static MultiPoly parse(std::string_view text);

private:
    static std::uint64_t rest_key(Monomial m)
    {
        return m.with(Var::v, 0).key();
    }

    void merge(const MultiPoly &b, bool negate)
    {
        std::vector<Term> out;
        out.reserve(terms_.size() + b.terms_.size());
        auto i = terms_.begin();
        auto j = b.terms_.begin();
        while (i != terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != terms_.end() && i->first < j->first)) {
                out.push_back(std::move(*i++));
            } else if (i == terms_.end() || j->first < i->first) {
                out.emplace_back(j->first, negate ? BigInt(-j->second) : j->second);
                ++j;
            } else {
                BigInt c = negate ? BigInt(i->second - j->second) : BigInt(i->second + j->second);
                if (c != 0) {
                    out.emplace_back(i->first, std::move(c));
                }
                ++i;
                ++j;
            }
        }
        terms_ = std::move(out);
    }

    std::vector<Term> terms_;
};

namespace detail
{

inline void PolyAccumulator::add(Monomial m, const BigInt &c)
{
    auto [it, inserted] = acc_.try_emplace(m.key(), c);
    if (!inserted) {
        it->second += c;
    }
}

inline void PolyAccumulator::add(const MultiPoly &a)
{
    for (const auto &t : a.terms()) {
        add(t.first, t.second);
    }
}

inline void PolyAccumulator::add_product(const MultiPoly &a, const MultiPoly &b,
                                         std::optional<unsigned> ucap)
{
    for (const auto &ta : a.terms()) {
        unsigned ua = ta.first.exponent(Var::u);
        if (ucap && ua > *ucap) {
            break; // terms are sorted with u most significant
        }
        for (const auto &tb : b.terms()) {
            if (ucap && ua + tb.first.exponent(Var::u) > *ucap) {
                break;
            }
            Monomial m = ta.first * tb.first;
            auto [it, inserted] = acc_.try_emplace(m.key());
            if (inserted) {
                it->second = ta.second * tb.second;
            } else {
                it->second += ta.second * tb.second;
            }
        }
    }
}

inline MultiPoly PolyAccumulator::take()
{
    std::vector<MultiPoly::Term> terms;
    terms.reserve(acc_.size());
    for (auto &[k, c] : acc_) {
        if (c != 0) {
            terms.emplace_back(Monomial::from_key(k), std::move(c));
        }
    }
    acc_.clear();
    return MultiPoly::from_terms(std::move(terms));
}

} // namespace detail

inline std::string MultiPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) {
                os << '-';
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (mag != 1 || m.is_one()) {
            os << mag;
            need_star = true;
        }
        for (Var var : all_vars) {
            unsigned e = m.exponent(var);
            if (e == 0) {
                continue;
            }
            if (need_star) {
                os << '*';
            }
            os << var_name(var);
            if (e > 1) {
                os << '^' << e;
            }
            need_star = true;
        }
    }
    return os.str();
}

inline MultiPoly MultiPoly::parse(std::string_view text)
{
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(ch);
        }
    }
    if (s.empty()) {
        throw invalid_input("empty polynomial");
    }
    std::vector<Term> terms;
    std::size_t i = 0;
    auto read_uint = [&](std::size_t &pos) {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            ++pos;
        }
        if (start == pos) {
            throw invalid_input("expected a number in polynomial '" + s + "'");
        }
        return s.substr(start, pos - start);
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!terms.empty()) {
            throw invalid_input("expected '+' or '-' in polynomial '" + s + "'");
        }
        BigInt coeff = 1;
        std::array<unsigned, 4> ex{};
        bool any = false;
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            if (s[i] == '*') {
                ++i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                coeff *= BigInt(read_uint(i));
            } else {
                auto var = var_from_name(std::string_view(&s[i], 1));
                if (!var) {
                    throw invalid_input(std::string("unknown variable '") + s[i] + "'");
                }
                ++i;
                unsigned e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    e = static_cast<unsigned>(std::stoul(read_uint(i)));
                }
                ex[static_cast<unsigned>(*var)] += e;
            }
            any = true;
        }
        if (!any) {
            throw invalid_input("empty term in polynomial '" + s + "'");
        }
        terms.emplace_back(Monomial::from(ex[0], ex[1], ex[2], ex[3]), sign * coeff);
    }
    return from_terms(std::move(terms));
}

inline std::ostream &operator<<(std::ostream &os, const MultiPoly &p)
{
    return os << p.to_string();
}

} // namespace pascent

#endif
