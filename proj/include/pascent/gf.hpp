#ifndef PASCENT_GF_HPP
#define PASCENT_GF_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "multipoly.hpp"
#include "series.hpp"

namespace pascent
{

namespace detail
{

inline MultiPoly U()
{
    return MultiPoly::var(Var::u);
}
inline MultiPoly V()
{
    return MultiPoly::var(Var::v);
}
inline MultiPoly Z()
{
    return MultiPoly::var(Var::z);
}
inline MultiPoly X()
{
    return MultiPoly::var(Var::x);
}

// (1 - t)^k as a series with integer coefficients.
inline TSeries one_minus_t_pow(unsigned k, unsigned order)
{
    std::vector<BigInt> cs;
    for (unsigned j = 0; j <= k && j <= order; ++j) {
        BigInt c = binomial(k, j);
        cs.push_back(j % 2 ? BigInt(-c) : c);
    }
    return TSeries::from_ints(cs, order);
}

// 1 - c t for a t-free polynomial c.
inline TSeries one_minus(const MultiPoly &c, unsigned order)
{
    return TSeries::one(order) - TSeries::monomial(c, 1, order);
}

// The u-exactness bound can be dropped once every t^n coefficient (whose true
// u-degree is at most n - 1) is known in full.
inline TSeries settle_ucap(TSeries s, unsigned D)
{
    if (D + 1 >= s.order()) {
        return s.without_ucap();
    }
    return s;
}

} // namespace detail

/// δ_k = u - (1-t)^k (u-1); δ_0 = 1.
inline TSeries delta(unsigned k, unsigned N)
{
    if (k == 0) {
        return TSeries::one(N);
    }
    TSeries r = TSeries::one(N);
    TSeries b = detail::one_minus_t_pow(k, N);
    MultiPoly um1 = detail::U() - 1;
    for (unsigned j = 1; j <= N; ++j) {
        r.set_coefficient(j, -(um1 * b.coefficient(j).constant_term()));
    }
    return r;
}

/// γ_k = u - (1-zt)(1-t)^(k-1) (u-1); γ_0 = 1.
inline TSeries gamma(unsigned k, unsigned N)
{
    if (k == 0) {
        return TSeries::one(N);
    }
    TSeries b = detail::one_minus(detail::Z(), N) * detail::one_minus_t_pow(k - 1, N);
    TSeries r = TSeries::one(N);
    MultiPoly um1 = detail::U() - 1;
    for (unsigned j = 1; j <= N; ++j) {
        r.set_coefficient(j, -(um1 * b.coefficient(j)));
    }
    return r;
}

inline TSeries delta_bar(unsigned k, unsigned N)
{
    return delta(k, N).subst_u_to_uv();
}

inline TSeries gamma_bar(unsigned k, unsigned N)
{
    return gamma(k, N).subst_u_to_uv();
}

struct KernelFamily {
    enum class Kind { delta, gamma, delta_bar, gamma_bar };

    Kind kind;
    unsigned k;
    TSeries realized;

    static KernelFamily make(Kind kind, unsigned k, unsigned N)
    {
        switch (kind) {
        case Kind::delta:
            return {kind, k, delta(k, N)};
        case Kind::gamma:
            return {kind, k, gamma(k, N)};
        case Kind::delta_bar:
            return {kind, k, delta_bar(k, N)};
        case Kind::gamma_bar:
            return {kind, k, gamma_bar(k, N)};
        }
        throw invalid_parameter("unknown kernel family");
    }
};

/// Σ_{k=1}^{D} u^k (δ_{k-1}^p - δ_k^p) / (γ_1⋯γ_k δ_{k-1}^p δ_k^p), exact for
/// u-exponents <= D. This is G^{(p)}_1(t,u,1,z) / (tz).
///
/// The k-th summand is u^k times a unit-denominator series, so its cofactor is
/// only needed to u-degree D - k; the running product 1/(γ_1⋯γ_k) is kept at
/// that shrinking bound.
inline TSeries kernel_sum(unsigned p, unsigned N, unsigned D)
{
    if (p < 1) {
        throw invalid_parameter("p must be at least 1");
    }
    TSeries sum = TSeries(N, D);
    TSeries inv_gammas = TSeries::one(N).with_ucap(D);
    TSeries prev_e = TSeries::one(N).with_ucap(D); // 1/δ_0^p
    for (unsigned k = 1; k <= D; ++k) {
        unsigned cap = D - k;
        inv_gammas = divide(inv_gammas.with_ucap(cap), gamma(k, N));
        TSeries e = delta(k, N).with_ucap(cap).pow(p).inverse();
        TSeries term = inv_gammas * (e - prev_e.with_ucap(cap));
        sum += term.without_ucap().shifted(Monomial::of(Var::u, k)).with_ucap(D);
        prev_e = e;
    }
    return sum;
}

/// G^{(p)}_1(t,u,1,z) truncated at t^N, exact for u-exponents <= D.
inline TSeries eval_G1_u(unsigned p, unsigned N, std::optional<unsigned> D = std::nullopt)
{
    unsigned d = D.value_or(N);
    TSeries s = kernel_sum(p, N, d);
    TSeries g = s.shifted_t(1).shifted(Monomial::of(Var::z));
    return detail::settle_ucap(g, d);
}

/// Divides s by (vδ_1 - 1) = (v - 1) + t v (u - 1), order by order in t.
inline TSeries divide_by_kernel(const TSeries &s)
{
    TSeries q(s.order(), s.ucap());
    MultiPoly vum1 = detail::V() * (detail::U() - 1);
    MultiPoly prev;
    for (unsigned n = 0; n <= s.order(); ++n) {
        MultiPoly rest = s.coefficient(n) - MultiPoly::multiply(vum1, prev, s.ucap());
        auto quotient = rest.divided_by_v_minus_one();
        if (!quotient) {
            throw division_impossible("numerator not divisible by (v - 1) at t^" + std::to_string(n));
        }
        q.set_coefficient(n, *quotient);
        prev = q.coefficient(n);
    }
    return q;
}

/// G^{(p)}_1(t,u,v,z) truncated at t^N.
///
/// G_1 = tz [ t u v (v^p - 1) + t (z(v-1) - v) S + t u v^(p+1) S̄ ] / (vδ_1 - 1)
/// with S = kernel_sum and S̄ = S under u -> uv.
inline TSeries eval_G1_full(unsigned p, unsigned N, std::optional<unsigned> D = std::nullopt)
{
    unsigned d = D.value_or(N);
    using namespace detail;
    TSeries s = kernel_sum(p, N, d);
    TSeries sbar = s.subst_u_to_uv();
    MultiPoly vp = MultiPoly::var(Var::v, p);
    TSeries num = TSeries::monomial(U() * V() * (vp - 1), 1, N).with_ucap(d);
    num += (Z() * (V() - 1) - V()) * s.shifted_t(1);
    num += sbar.shifted_t(1).shifted(Monomial::from(1, p + 1));
    TSeries g = divide_by_kernel(num).shifted_t(1).shifted(Monomial::of(Var::z));
    return settle_ucap(g, d);
}

/// G^{(p)}_r = (tz)^(r-1) G^{(p)}_1.
inline TSeries eval_Gr(unsigned p, unsigned r, unsigned N, std::optional<unsigned> D = std::nullopt)
{
    if (r < 1) {
        throw invalid_parameter("r must be at least 1");
    }
    return eval_G1_full(p, N, D).shifted_t(r - 1).shifted(Monomial::of(Var::z, r - 1));
}

/// G^{(p)}(t,u,v,z,x) = 1/(1 - tz) + x/(1 - tzx) G^{(p)}_1(t,u,v,z).
inline TSeries eval_G(unsigned p, unsigned N, std::optional<unsigned> D = std::nullopt)
{
    using namespace detail;
    TSeries g1 = eval_G1_full(p, N, D);
    TSeries zeros = one_minus(Z(), N).inverse();
    TSeries runs = divide(g1, one_minus(Z() * X(), N)).shifted(Monomial::of(Var::x));
    return zeros + runs;
}

/// H^{(p)}(t,u,1,z) = Σ_{n=0}^{D} zt(1-u) u^n (1-t)^n / (δ_n^p Π_{i=1}^{n+1} γ_i),
/// exact for u-exponents <= D.
inline TSeries eval_H(unsigned p, unsigned N, std::optional<unsigned> D = std::nullopt)
{
    if (p < 1) {
        throw invalid_parameter("p must be at least 1");
    }
    using namespace detail;
    unsigned d = D.value_or(N);
    TSeries sum(N, d);
    TSeries inv_gammas = TSeries::one(N).with_ucap(d);
    TSeries lead = TSeries::monomial(Z() * (1 - U()), 1, N); // zt(1-u)
    for (unsigned n = 0; n <= d; ++n) {
        unsigned cap = d - n;
        inv_gammas = divide(inv_gammas.with_ucap(cap), gamma(n + 1, N));
        TSeries e = delta(n, N).with_ucap(cap).pow(p).inverse();
        TSeries term = lead.with_ucap(cap) * one_minus_t_pow(n, N) * e * inv_gammas;
        sum += term.without_ucap().shifted(Monomial::of(Var::u, n)).with_ucap(d);
    }
    return settle_ucap(sum, d);
}

/// A^{(p)}(t,z) = 1 + Σ_n C(p-1+n, n) zt/(1-zt)^(n+1) Π_{i=1}^n (1-(1-t)^i).
inline TSeries eval_A(unsigned p, unsigned N)
{
    if (p < 1) {
        throw invalid_parameter("p must be at least 1");
    }
    using namespace detail;
    TSeries one_minus_zt = one_minus(Z(), N);
    TSeries frac = divide(TSeries::monomial(Z(), 1, N), one_minus_zt); // zt/(1-zt)
    TSeries prod = TSeries::one(N);
    TSeries sum = TSeries::one(N);
    for (unsigned n = 0; n < N; ++n) {
        if (n > 0) {
            prod *= TSeries::one(N) - one_minus_t_pow(n, N);
            frac = divide(frac, one_minus_zt);
        }
        sum += MultiPoly(binomial(p - 1 + n, n)) * (frac * prod);
    }
    return sum;
}

/// P(t) = Σ_n Π_{i=1}^n (1-(1-t)^i), the Fishburn series.
inline TSeries eval_P(unsigned N)
{
    TSeries prod = TSeries::one(N);
    TSeries sum = TSeries::one(N);
    for (unsigned n = 1; n <= N; ++n) {
        prod *= TSeries::one(N) - detail::one_minus_t_pow(n, N);
        sum += prod;
    }
    return sum;
}

/// R^{(p)}(t) = 1 + t Σ_n C(p-1+n, n) (1+t)^n Π_{i=1}^n (1 - (1+t)^(-i)).
inline TSeries eval_R(unsigned p, unsigned N)
{
    if (p < 1) {
        throw invalid_parameter("p must be at least 1");
    }
    TSeries one_plus_t = TSeries::from_ints({1, 1}, N);
    TSeries inv = one_plus_t.inverse();
    TSeries inv_pow = TSeries::one(N);
    TSeries term = TSeries::one(N); // (1+t)^n Π (1 - (1+t)^(-i))
    TSeries sum = TSeries::zero(N);
    for (unsigned n = 0; n < N; ++n) {
        if (n > 0) {
            inv_pow *= inv;
            term = term * one_plus_t * (TSeries::one(N) - inv_pow);
        }
        sum += MultiPoly(binomial(p - 1 + n, n)) * term;
    }
    return TSeries::one(N) + sum.shifted_t(1);
}

/// Sequences whose runs of equal consecutive letters have length <= k:
/// R^{(p)} with t replaced by t + t^2 + ... + t^k.
inline TSeries eval_maxk(unsigned p, unsigned k, unsigned N)
{
    if (k < 1) {
        throw invalid_parameter("k must be at least 1");
    }
    std::vector<BigInt> inner(std::min(k, N) + 1, 1);
    inner[0] = 0;
    return compose_t(eval_R(p, N), TSeries::from_ints(inner, N));
}

/// Both sides of the ψ_{m+1} identity: the u-graded sum
///   (u-1)^(m+1) (1-zt)^(m+1) Σ_{k=0}^{D} u^k (1-t)^(k(m+1)) / Π_{i=1}^{k+1} γ_i
/// and the finite form
///   -Σ_{j=0}^{m} (u-1)^j (1-zt)^j u^(m-j) Π_{i=j+1}^{m} (1-(1-t)^i).
/// The products 1/(γ_1⋯γ_{k+1}) do not depend on m and are computed once.
class PsiEvaluator
{
public:
    PsiEvaluator(unsigned N, unsigned D) : N_(N), D_(D)
    {
        TSeries inv_gammas = TSeries::one(N).with_ucap(D);
        for (unsigned k = 0; k <= D; ++k) {
            inv_gammas = divide(inv_gammas.with_ucap(D - k), gamma(k + 1, N));
            inv_gammas_.push_back(inv_gammas);
        }
    }

    TSeries lhs(unsigned m) const
    {
        using namespace detail;
        TSeries sum(N_, D_);
        for (unsigned k = 0; k <= D_; ++k) {
            TSeries term = one_minus_t_pow(k * (m + 1), N_) * inv_gammas_[k];
            sum += term.without_ucap().shifted(Monomial::of(Var::u, k)).with_ucap(D_);
        }
        TSeries factor = (TSeries::constant(U() - 1, N_) * one_minus(Z(), N_)).pow(m + 1);
        return factor.with_ucap(D_) * sum;
    }

    TSeries rhs(unsigned m) const
    {
        using namespace detail;
        TSeries total = TSeries::zero(N_);
        TSeries uz = TSeries::constant(U() - 1, N_) * one_minus(Z(), N_);
        for (unsigned j = 0; j <= m; ++j) {
            TSeries term = uz.pow(j) * TSeries::constant(MultiPoly::var(Var::u, m - j), N_);
            for (unsigned i = j + 1; i <= m; ++i) {
                term *= TSeries::one(N_) - one_minus_t_pow(i, N_);
            }
            total -= term;
        }
        return total.with_ucap(D_);
    }

private:
    unsigned N_;
    unsigned D_;
    std::vector<TSeries> inv_gammas_;
};

inline std::pair<TSeries, TSeries> psi(unsigned m, unsigned N, std::optional<unsigned> D = std::nullopt)
{
    PsiEvaluator ev(N, D.value_or(N));
    return {ev.lhs(m), ev.rhs(m)};
}

/// Right-hand side of the p = 1 zeros identity:
/// 1 + Σ_{m>=1} Π_{i=1}^m (1 - (1-t)^(i-1) (1-zt)).
inline TSeries jelinek_rhs(unsigned N)
{
    using namespace detail;
    TSeries one_minus_zt = one_minus(Z(), N);
    TSeries prod = TSeries::one(N);
    TSeries sum = TSeries::one(N);
    for (unsigned m = 1; m <= N; ++m) {
        prod *= TSeries::one(N) - one_minus_t_pow(m - 1, N) * one_minus_zt;
        sum += prod;
    }
    return sum;
}

} // namespace pascent

#endif
