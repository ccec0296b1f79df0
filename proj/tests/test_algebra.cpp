#include <gtest/gtest.h>

#include <pascent/bigint.hpp>
#include <pascent/multipoly.hpp>
#include <pascent/series.hpp>
#include <pascent/series_json.hpp>

using namespace pascent;

namespace
{

MultiPoly P(const char *s)
{
    return MultiPoly::parse(s);
}

TSeries series(std::vector<MultiPoly> cs, unsigned order)
{
    cs.resize(order + 1);
    return TSeries(std::move(cs), order);
}

} // namespace

TEST(BigInt, DecimalRoundTrip)
{
    BigInt big = pow2(200) + 12345;
    EXPECT_EQ(from_decimal(to_decimal(big)), big);
    EXPECT_EQ(to_decimal(BigInt(-42)), "-42");
    EXPECT_THROW(from_decimal("12x"), invalid_input);
    EXPECT_THROW(from_decimal(""), invalid_input);
}

TEST(BigInt, Binomial)
{
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(0, 0), 1);
    EXPECT_EQ(binomial(4, 5), 0);
    EXPECT_EQ(binomial(4, -1), 0);
    EXPECT_EQ(binomial(-1, 2), 0);
    EXPECT_EQ(binomial(100, 50), from_decimal("100891344545564193334812497256"));
}

TEST(Monomial, PackedOrderIsLexicographic)
{
    Monomial a = Monomial::from(1, 0, 5, 0);
    Monomial b = Monomial::from(1, 1, 0, 0);
    Monomial c = Monomial::from(2, 0, 0, 0);
    EXPECT_LT(a, b);
    EXPECT_LT(b, c);
    EXPECT_EQ((a * b).exponents(), (std::array<unsigned, 4>{2, 1, 5, 0}));
    EXPECT_EQ(a.with(Var::z, 2).exponent(Var::z), 2u);
    EXPECT_TRUE(Monomial{}.is_one());
    EXPECT_THROW(Monomial::from(70000), invalid_parameter);
    EXPECT_THROW(Monomial::of(Var::u, 40000) * Monomial::of(Var::u, 40000), invalid_parameter);
}

TEST(MultiPoly, ParseAndPrintRoundTrip)
{
    for (const char *s : {"3*u*v^2*z - 2", "u*z + 2*u^2*z^3", "-x", "7", "0"}) {
        EXPECT_EQ(P(s).to_string(), MultiPoly::parse(P(s).to_string()).to_string()) << s;
    }
    EXPECT_EQ(P("2 u v + 3uv"), P("5*u*v"));
    EXPECT_EQ(P("u - u"), MultiPoly());
    EXPECT_EQ(P("z^2 + 2*z + 1").to_string(), "1 + 2*z + z^2");
    EXPECT_THROW(P("u +"), invalid_input);
    EXPECT_THROW(P("3*q"), invalid_input);
    EXPECT_THROW(P(""), invalid_input);
}

TEST(MultiPoly, Arithmetic)
{
    MultiPoly a = P("u + 1");
    MultiPoly b = P("u - 1");
    EXPECT_EQ(a * b, P("u^2 - 1"));
    EXPECT_EQ(a - a, MultiPoly());
    EXPECT_EQ(a * MultiPoly(), MultiPoly());
    EXPECT_EQ(a * BigInt(3), P("3*u + 3"));
    EXPECT_EQ(P("u*v + z").degree(Var::v), 1);
    EXPECT_EQ(MultiPoly().degree(Var::u), -1);
    EXPECT_EQ(P("3*u*z").coefficient(Monomial::from(1, 0, 1)), 3);
    EXPECT_TRUE(P("5").is_constant());
    EXPECT_FALSE(P("5 + x").is_constant());
}

TEST(MultiPoly, TruncatedMultiplication)
{
    MultiPoly a = P("1 + u + u^2");
    EXPECT_EQ(MultiPoly::multiply(a, a, 2), P("1 + 2*u + 3*u^2"));
    EXPECT_EQ(MultiPoly::multiply(a, a, std::nullopt), a * a);
    EXPECT_EQ((a * a).truncated_u(1), P("1 + 2*u"));
}

TEST(MultiPoly, SpecializeAndSubstitute)
{
    MultiPoly a = P("u^2 + u*v + z");
    EXPECT_EQ(a.specialized(Var::u, 2), P("4 + 2*v + z"));
    EXPECT_EQ(a.subst_u_to_uv(), P("u^2*v^2 + u*v^2 + z"));
    EXPECT_EQ(a.subst_u_to_uv().specialized(Var::v, 1), a.specialized(Var::v, 1));
}

TEST(MultiPoly, DivisionByVMinusOne)
{
    EXPECT_EQ(*P("v^2 - 2*v + 1").divided_by_v_minus_one(), P("v - 1"));
    EXPECT_FALSE(P("v + 1").divided_by_v_minus_one().has_value());
    EXPECT_EQ(*MultiPoly().divided_by_v_minus_one(), MultiPoly());
    // Groups sharing (u, z, x) exponents are interleaved with others in the
    // canonical order; each must be divided separately.
    MultiPoly q = P("u*z + 3*u*v*z^2 - u*v^2 + 2*u^2*v");
    MultiPoly prod = q * P("v - 1");
    ASSERT_TRUE(prod.divided_by_v_minus_one().has_value());
    EXPECT_EQ(*prod.divided_by_v_minus_one(), q);
    EXPECT_FALSE((prod + P("u*z")).divided_by_v_minus_one().has_value());
}

TEST(TSeries, GeometricIdentity)
{
    const unsigned N = 8;
    TSeries geo = TSeries::from_ints(std::vector<BigInt>(N + 1, 1), N);
    EXPECT_EQ(TSeries::from_ints({1, -1}, N) * geo, TSeries::one(N));
    EXPECT_EQ(geo * TSeries::zero(N), TSeries::zero(N));
}

TEST(TSeries, ProductCoefficient)
{
    const unsigned N = 3;
    TSeries d1 = series({1, P("u - 1")}, N);
    TSeries g1 = series({1, P("z*u - z")}, N);
    EXPECT_EQ((d1 * g1).coefficient(1), P("u - 1") * P("1 + z"));
}

TEST(TSeries, Inverse)
{
    const unsigned N = 6;
    TSeries one_minus_zt = series({1, P("-z")}, N);
    TSeries inv = invert(one_minus_zt);
    for (unsigned n = 0; n <= N; ++n) {
        EXPECT_EQ(inv.coefficient(n), MultiPoly::var(Var::z, n));
    }
    TSeries gamma1 = series({1, P("z*u - z")}, N);
    EXPECT_EQ(invert(gamma1).coefficient(1), P("z - z*u"));
    TSeries alt = invert(TSeries::from_ints({1, 1}, N));
    for (unsigned n = 0; n <= N; ++n) {
        EXPECT_EQ(alt.coefficient(n), MultiPoly(n % 2 ? -1 : 1));
    }
    EXPECT_EQ(invert(TSeries::from_ints({-1, 1}, N)) * TSeries::from_ints({-1, 1}, N), TSeries::one(N));
    EXPECT_THROW(invert(TSeries::from_ints({2, 1}, N)), not_invertible);
    EXPECT_THROW(invert(series({P("u"), 1}, N)), not_invertible);
}

TEST(TSeries, Compose)
{
    const unsigned N = 7;
    TSeries geo = invert(TSeries::from_ints({1, -1}, N));
    TSeries t_over_1pt = divide(TSeries::t(N), TSeries::from_ints({1, 1}, N));
    EXPECT_EQ(compose_t(geo, t_over_1pt), TSeries::from_ints({1, 1}, N));
    EXPECT_EQ(compose_t(geo, TSeries::t(N)), geo);
    EXPECT_THROW(compose_t(geo, TSeries::from_ints({1, 1}, N)), invalid_composition);
}

TEST(TSeries, SubstUToUV)
{
    const unsigned N = 3;
    EXPECT_EQ(subst_u_to_uv(series({0, P("u")}, N)), series({0, P("u*v")}, N));
    EXPECT_EQ(subst_u_to_uv(TSeries::from_ints({5, 3}, N)), TSeries::from_ints({5, 3}, N));
    EXPECT_EQ(subst_u_to_uv(series({0, 0, 0, P("u^2 + u*v")}, N)), series({0, 0, 0, P("u^2*v^2 + u*v^2")}, N));
}

TEST(TSeries, SpecializeNothingIsIdentity)
{
    TSeries s = series({1, P("u*z + x"), P("v^3")}, 2);
    EXPECT_EQ(s.specialize(std::map<Var, BigInt>{}), s);
    EXPECT_EQ(s.specialize(Var::v, 2).coefficient(2), MultiPoly(8));
}

TEST(TSeries, CoefficientBounds)
{
    TSeries s = TSeries::one(3);
    EXPECT_EQ(s.coefficient(0), MultiPoly(1));
    EXPECT_THROW(s.coefficient(4), out_of_truncation);
    EXPECT_THROW(s.truncated(5), out_of_truncation);
    EXPECT_EQ(s.truncated(1).order(), 1u);
}

TEST(TSeries, MixedOrdersTruncateToMinimum)
{
    TSeries a = TSeries::from_ints({1, 1, 1, 1, 1}, 4);
    TSeries b = TSeries::from_ints({1, 1}, 2);
    EXPECT_EQ((a + b).order(), 2u);
    EXPECT_EQ((a * b).order(), 2u);
}

TEST(TSeries, UDegreeCap)
{
    const unsigned N = 4;
    TSeries a = series({1, P("u + u^3"), P("u^2")}, N).with_ucap(2);
    EXPECT_EQ(a.coefficient(1), P("u"));
    EXPECT_EQ(a.ucap(), std::optional<unsigned>(2));
    TSeries b = series({1, P("u^2")}, N);
    EXPECT_EQ((a * b).ucap(), std::optional<unsigned>(2));
    EXPECT_EQ((a * b).coefficient(2), P("u^2")); // u * u^2 is beyond the cap
    EXPECT_THROW(a.specialize(Var::u, 1), invalid_parameter);
    EXPECT_NO_THROW(a.specialize(Var::z, 1));
    EXPECT_THROW(a.monomial_coefficient(1, Monomial::of(Var::u, 3)), out_of_truncation);
    EXPECT_EQ(a.without_ucap().ucap(), std::nullopt);
}

TEST(TSeries, JsonRoundTrip)
{
    TSeries s = series({1, P("3*u*v^2*z - 2"), 0, P("x^4")}, 3);
    auto j = to_json(s);
    EXPECT_EQ(j["vars"], nlohmann::json({"t", "u", "v", "z", "x"}));
    EXPECT_EQ(j["terms"][1]["exp"], nlohmann::json({1, 0, 0, 0, 0}));
    EXPECT_EQ(j["terms"][1]["coeff"], "-2");
    EXPECT_EQ(series_from_json(nlohmann::json::parse(j.dump())), s);
    TSeries capped = s.with_ucap(0);
    EXPECT_EQ(series_from_json(nlohmann::json::parse(to_json(capped).dump())), capped);
    EXPECT_THROW(series_from_json(nlohmann::json::parse(R"({"order":1})")), invalid_input);
    EXPECT_THROW(series_from_json(nlohmann::json::parse(
                     R"({"order":1,"vars":["t","u","v","z","x"],"terms":[{"exp":[2,0,0,0,0],"coeff":"1"}]})")),
                 invalid_input);
}
