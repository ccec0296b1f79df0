#ifndef PASCENT_SERIES_HPP
#define PASCENT_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "multipoly.hpp"

namespace pascent
{

/// Power series in t truncated after t^order, with MultiPoly coefficients.
///
/// A series may additionally carry a u-degree cap D: only monomials with
/// u-exponent <= D are stored, and every coefficient is exact up to that
/// degree. Truncation modulo t^(N+1) and u^(D+1) are both ring homomorphisms,
/// so every operation stays exact within the recorded bounds. Mixing operands
/// with different bounds yields the minimum of each bound.
class TSeries
{
public:
    TSeries() : TSeries(0) {}

    explicit TSeries(unsigned order, std::optional<unsigned> ucap = std::nullopt)
        : coeffs_(order + 1), ucap_(ucap)
    {
    }

    TSeries(std::vector<MultiPoly> coeffs, unsigned order, std::optional<unsigned> ucap = std::nullopt)
        : coeffs_(std::move(coeffs)), ucap_(ucap)
    {
        coeffs_.resize(order + 1);
        if (ucap_) {
            for (auto &c : coeffs_) {
                c = c.truncated_u(*ucap_);
            }
        }
    }

    static TSeries zero(unsigned order)
    {
        return TSeries(order);
    }

    static TSeries constant(const MultiPoly &c, unsigned order)
    {
        TSeries r(order);
        r.coeffs_[0] = c;
        return r;
    }

    static TSeries one(unsigned order)
    {
        return constant(1, order);
    }

    /// c * t^k (zero when k exceeds the order).
    static TSeries monomial(const MultiPoly &c, unsigned k, unsigned order)
    {
        TSeries r(order);
        if (k <= order) {
            r.coeffs_[k] = c;
        }
        return r;
    }

    static TSeries t(unsigned order)
    {
        return monomial(1, 1, order);
    }

    /// Univariate polynomial in t from its integer coefficients.
    static TSeries from_ints(const std::vector<BigInt> &cs, unsigned order)
    {
        TSeries r(order);
        for (std::size_t i = 0; i < cs.size() && i <= order; ++i) {
            r.coeffs_[i] = cs[i];
        }
        return r;
    }

    unsigned order() const
    {
        return unsigned(coeffs_.size() - 1);
    }

    std::optional<unsigned> ucap() const
    {
        return ucap_;
    }

    const std::vector<MultiPoly> &coeffs() const
    {
        return coeffs_;
    }

    const MultiPoly &coefficient(unsigned n) const
    {
        if (n > order()) {
            throw out_of_truncation("coefficient t^" + std::to_string(n) + " requested from series of order "
                                    + std::to_string(order()));
        }
        return coeffs_[n];
    }

    BigInt monomial_coefficient(unsigned n, Monomial m) const
    {
        if (ucap_ && m.exponent(Var::u) > *ucap_) {
            throw out_of_truncation("u-exponent beyond the series u-degree cap");
        }
        return coefficient(n).coefficient(m);
    }

    void set_coefficient(unsigned n, MultiPoly c)
    {
        if (n > order()) {
            throw out_of_truncation("set_coefficient beyond order");
        }
        coeffs_[n] = ucap_ ? c.truncated_u(*ucap_) : std::move(c);
    }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MultiPoly &c) { return c.is_zero(); });
    }

    /// Smallest n with a nonzero t^n coefficient; order()+1 for the zero series.
    unsigned valuation() const
    {
        for (unsigned n = 0; n <= order(); ++n) {
            if (!coeffs_[n].is_zero()) {
                return n;
            }
        }
        return order() + 1;
    }

    TSeries truncated(unsigned order) const
    {
        if (order > this->order()) {
            throw out_of_truncation("cannot extend a truncated series");
        }
        TSeries r = *this;
        r.coeffs_.resize(order + 1);
        return r;
    }

    TSeries with_ucap(unsigned cap) const
    {
        unsigned c = ucap_ ? std::min(*ucap_, cap) : cap;
        return TSeries(coeffs_, order(), c);
    }

    /// Drops the u-degree cap. Only sound when the caller knows that no
    /// coefficient has true u-degree above the cap.
    TSeries without_ucap() const
    {
        TSeries r = *this;
        r.ucap_.reset();
        return r;
    }

    TSeries operator-() const
    {
        TSeries r = *this;
        for (auto &c : r.coeffs_) {
            c = -c;
        }
        return r;
    }

    friend TSeries operator+(const TSeries &a, const TSeries &b)
    {
        return combine(a, b, false);
    }
    friend TSeries operator-(const TSeries &a, const TSeries &b)
    {
        return combine(a, b, true);
    }
    TSeries &operator+=(const TSeries &b)
    {
        return *this = *this + b;
    }
    TSeries &operator-=(const TSeries &b)
    {
        return *this = *this - b;
    }

    friend TSeries operator*(const TSeries &a, const TSeries &b)
    {
        unsigned order = std::min(a.order(), b.order());
        auto cap = min_cap(a.ucap_, b.ucap_);
        TSeries r(order, cap);
        unsigned va = a.valuation();
        unsigned vb = b.valuation();
        detail::PolyAccumulator acc;
        for (unsigned n = va + vb; n <= order; ++n) {
            for (unsigned i = va; i + vb <= n; ++i) {
                const auto &x = a.coeffs_[i];
                const auto &y = b.coeffs_[n - i];
                if (!x.is_zero() && !y.is_zero()) {
                    acc.add_product(x, y, cap);
                }
            }
            r.coeffs_[n] = acc.take();
        }
        return r;
    }
    TSeries &operator*=(const TSeries &b)
    {
        return *this = *this * b;
    }

    /// Coefficientwise product with a t-free polynomial.
    friend TSeries operator*(const MultiPoly &c, const TSeries &a)
    {
        TSeries r(a.order(), a.ucap_);
        for (unsigned n = 0; n <= a.order(); ++n) {
            r.coeffs_[n] = MultiPoly::multiply(c, a.coeffs_[n], a.ucap_);
        }
        return r;
    }
    friend TSeries operator*(const TSeries &a, const MultiPoly &c)
    {
        return c * a;
    }

    /// Multiplies by t^k.
    TSeries shifted_t(unsigned k) const
    {
        TSeries r(order(), ucap_);
        for (unsigned n = k; n <= order(); ++n) {
            r.coeffs_[n] = coeffs_[n - k];
        }
        return r;
    }

    /// Multiplies every coefficient by the monomial m.
    TSeries shifted(Monomial m) const
    {
        TSeries r(order(), ucap_);
        for (unsigned n = 0; n <= order(); ++n) {
            r.coeffs_[n] = coeffs_[n].shifted(m);
            if (ucap_) {
                r.coeffs_[n] = r.coeffs_[n].truncated_u(*ucap_);
            }
        }
        return r;
    }

    TSeries pow(unsigned e) const
    {
        TSeries result = one(order());
        result.ucap_ = ucap_;
        TSeries base = *this;
        while (e > 0) {
            if (e & 1u) {
                result *= base;
            }
            e >>= 1u;
            if (e > 0) {
                base *= base;
            }
        }
        return result;
    }

    /// a / b by long division in t; b must have t^0 coefficient +1 or -1.
    friend TSeries divide(const TSeries &a, const TSeries &b)
    {
        const BigInt unit = unit_constant(b);
        unsigned order = std::min(a.order(), b.order());
        auto cap = min_cap(a.ucap_, b.ucap_);
        TSeries q(order, cap);
        detail::PolyAccumulator acc;
        for (unsigned n = 0; n <= order; ++n) {
            acc.add(cap ? a.coeffs_[n].truncated_u(*cap) : a.coeffs_[n]);
            for (unsigned i = 1; i <= n; ++i) {
                if (!b.coeffs_[i].is_zero() && !q.coeffs_[n - i].is_zero()) {
                    acc.add_product(-b.coeffs_[i], q.coeffs_[n - i], cap);
                }
            }
            q.coeffs_[n] = acc.take() * unit;
        }
        return q;
    }

    TSeries inverse() const
    {
        TSeries one_ = one(order());
        one_.ucap_ = ucap_;
        return divide(one_, *this);
    }

    /// Replaces u^a v^b by u^a v^(a+b) in every coefficient.
    TSeries subst_u_to_uv() const
    {
        TSeries r(order(), ucap_);
        for (unsigned n = 0; n <= order(); ++n) {
            r.coeffs_[n] = coeffs_[n].subst_u_to_uv();
        }
        return r;
    }

    /// Substitutes integers for the given variables.
    TSeries specialize(const std::map<Var, BigInt> &assignments) const
    {
        if (ucap_ && assignments.count(Var::u)) {
            throw invalid_parameter("cannot specialize u on a series truncated in u");
        }
        TSeries r = *this;
        for (const auto &[var, value] : assignments) {
            for (auto &c : r.coeffs_) {
                c = c.specialized(var, value);
            }
        }
        return r;
    }

    TSeries specialize(Var var, const BigInt &value) const
    {
        return specialize(std::map<Var, BigInt>{{var, value}});
    }

    /// Replaces u by the series s in every coefficient.
    TSeries subst_u(const TSeries &s) const
    {
        unsigned order = std::min(this->order(), s.order());
        int maxdeg = 0;
        for (unsigned n = 0; n <= order; ++n) {
            maxdeg = std::max(maxdeg, coeffs_[n].degree(Var::u));
        }
        std::vector<TSeries> powers;
        powers.push_back(one(order));
        for (int j = 1; j <= maxdeg; ++j) {
            powers.push_back(powers.back() * s);
        }
        TSeries r(order, s.ucap_);
        for (unsigned n = 0; n <= order; ++n) {
            // Group the coefficient by u-degree.
            std::vector<std::vector<MultiPoly::Term>> by_deg(std::size_t(maxdeg) + 1);
            for (const auto &[m, c] : coeffs_[n].terms()) {
                by_deg[m.exponent(Var::u)].emplace_back(m.with(Var::u, 0), c);
            }
            for (std::size_t j = 0; j < by_deg.size(); ++j) {
                if (by_deg[j].empty()) {
                    continue;
                }
                MultiPoly cj = MultiPoly::from_terms(std::move(by_deg[j]));
                r += (cj * powers[j]).shifted_t(n);
            }
        }
        return r;
    }

    friend bool operator==(const TSeries &a, const TSeries &b) = default;

    std::string to_string() const
    {
        std::string s;
        for (unsigned n = 0; n <= order(); ++n) {
            if (coeffs_[n].is_zero()) {
                continue;
            }
            if (!s.empty()) {
                s += " + ";
            }
            s += "(" + coeffs_[n].to_string() + ")*t^" + std::to_string(n);
        }
        s += (s.empty() ? "O(t^" : " + O(t^") + std::to_string(order() + 1) + ")";
        return s;
    }

private:
    static std::optional<unsigned> min_cap(std::optional<unsigned> a, std::optional<unsigned> b)
    {
        if (a && b) {
            return std::min(*a, *b);
        }
        return a ? a : b;
    }

    static BigInt unit_constant(const TSeries &b)
    {
        const MultiPoly &c0 = b.coeffs_[0];
        if (!c0.is_constant() || c0.is_zero() || (c0.constant_term() != 1 && c0.constant_term() != -1)) {
            throw not_invertible("series with t^0 coefficient " + c0.to_string() + " is not invertible");
        }
        return c0.constant_term();
    }

    static TSeries combine(const TSeries &a, const TSeries &b, bool negate)
    {
        unsigned order = std::min(a.order(), b.order());
        auto cap = min_cap(a.ucap_, b.ucap_);
        TSeries r(order, cap);
        for (unsigned n = 0; n <= order; ++n) {
            MultiPoly x = a.coeffs_[n];
            if (negate) {
                x -= b.coeffs_[n];
            } else {
                x += b.coeffs_[n];
            }
            r.coeffs_[n] = cap ? x.truncated_u(*cap) : std::move(x);
        }
        return r;
    }

    std::vector<MultiPoly> coeffs_;
    std::optional<unsigned> ucap_;
};

inline TSeries invert(const TSeries &a)
{
    return a.inverse();
}

/// a(s(t)); s must have zero constant term.
inline TSeries compose_t(const TSeries &a, const TSeries &s)
{
    if (!s.coefficient(0).is_zero()) {
        throw invalid_composition("inner series of a composition must have zero constant term");
    }
    unsigned order = std::min(a.order(), s.order());
    TSeries r = TSeries::constant(a.coefficient(order), order);
    for (unsigned n = order; n-- > 0;) {
        r = r * s + TSeries::constant(a.coefficient(n), order);
    }
    if (a.ucap() || s.ucap()) {
        unsigned cap = a.ucap() && s.ucap() ? std::min(*a.ucap(), *s.ucap()) : (a.ucap() ? *a.ucap() : *s.ucap());
        r = r.with_ucap(cap);
    }
    return r;
}

inline TSeries subst_u_to_uv(const TSeries &a)
{
    return a.subst_u_to_uv();
}

inline std::ostream &operator<<(std::ostream &os, const TSeries &s)
{
    return os << s.to_string();
}

} // namespace pascent

#endif
