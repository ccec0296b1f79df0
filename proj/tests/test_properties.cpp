// Randomized property tests. Every generator is seeded, so failures reproduce.

#include <gtest/gtest.h>

#include <random>
#include <set>

#include <pascent/pascent.hpp>

using namespace pascent;

namespace
{

class Gen
{
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi)
    {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    MultiPoly poly(unsigned terms = 4, unsigned maxdeg = 3, int maxc = 5)
    {
        std::vector<MultiPoly::Term> ts;
        unsigned k = unsigned(uniform(0, int(terms)));
        for (unsigned i = 0; i < k; ++i) {
            Monomial m = Monomial::from(uniform(0, maxdeg), uniform(0, maxdeg), uniform(0, maxdeg), uniform(0, 1));
            ts.emplace_back(m, BigInt(uniform(-maxc, maxc)));
        }
        return MultiPoly::from_terms(std::move(ts));
    }

    TSeries series(unsigned order, bool unit_constant = false)
    {
        std::vector<MultiPoly> cs;
        for (unsigned n = 0; n <= order; ++n) {
            cs.push_back(poly(3, 2, 4));
        }
        if (unit_constant) {
            cs[0] = MultiPoly(uniform(0, 1) ? 1 : -1);
        }
        return TSeries(std::move(cs), order);
    }

    /// Uniform choice at each step among the allowed letters.
    Word p_ascent_word(unsigned p, unsigned n)
    {
        Word w;
        unsigned a = 0;
        for (unsigned i = 0; i < n; ++i) {
            Letter c = i == 0 ? 0 : Letter(uniform(0, int(p + a)));
            if (i > 0 && w.back() < c) {
                ++a;
            }
            w.push_back(c);
        }
        return w;
    }

    Word any_word(unsigned n, unsigned alphabet)
    {
        Word w;
        for (unsigned i = 0; i < n; ++i) {
            w.push_back(Letter(uniform(0, int(alphabet) - 1)));
        }
        return w;
    }

private:
    std::mt19937 rng_;
};

bool naive_is_p_ascent(const Word &w, unsigned p)
{
    for (std::size_t i = 0; i < w.size(); ++i) {
        Word prefix(w.begin(), w.begin() + std::ptrdiff_t(i));
        unsigned rises = 0;
        for (std::size_t j = 1; j < prefix.size(); ++j) {
            rises += prefix[j - 1] < prefix[j] ? 1 : 0;
        }
        unsigned bound = i == 0 ? 0 : p + rises;
        if (w[i] > bound) {
            return false;
        }
    }
    return true;
}

// Tries every index subset of the right size.
bool naive_occurs(const Pattern &pat, const Word &w)
{
    const std::size_t k = pat.size();
    if (k > w.size()) {
        return false;
    }
    std::vector<bool> pick(w.size(), false);
    std::fill(pick.begin(), pick.begin() + std::ptrdiff_t(k), true);
    do {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (pick[i]) {
                idx.push_back(i);
            }
        }
        bool adjacent_ok = true;
        for (unsigned a : pat.adjacent()) {
            adjacent_ok = adjacent_ok && idx[a + 1] == idx[a] + 1;
        }
        Word sub;
        for (auto i : idx) {
            sub.push_back(w[i]);
        }
        if (adjacent_ok && red(sub) == pat.letters()) {
            return true;
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

constexpr int trials = 200;

} // namespace

TEST(Properties, PolynomialRingAxioms)
{
    Gen g(1);
    for (int i = 0; i < trials; ++i) {
        MultiPoly a = g.poly(), b = g.poly(), c = g.poly();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, MultiPoly());
        EXPECT_EQ(a * MultiPoly(1), a);
    }
}

TEST(Properties, PolynomialTextRoundTrip)
{
    Gen g(2);
    for (int i = 0; i < trials; ++i) {
        MultiPoly a = g.poly(6, 4, 1000);
        EXPECT_EQ(MultiPoly::parse(a.to_string()), a) << a.to_string();
    }
}

TEST(Properties, SpecializationIsAHomomorphism)
{
    Gen g(3);
    for (int i = 0; i < trials; ++i) {
        MultiPoly a = g.poly(), b = g.poly();
        Var var = all_vars[std::size_t(g.uniform(0, 3))];
        BigInt value = g.uniform(-3, 3);
        EXPECT_EQ((a * b).specialized(var, value), a.specialized(var, value) * b.specialized(var, value));
        EXPECT_EQ((a + b).specialized(var, value), a.specialized(var, value) + b.specialized(var, value));
    }
}

TEST(Properties, SubstitutionThenVOneIsIdentityOnVFreeInput)
{
    Gen g(4);
    for (int i = 0; i < trials / 4; ++i) {
        TSeries a = g.series(5).specialize(Var::v, 1);
        EXPECT_EQ(subst_u_to_uv(a).specialize(Var::v, 1), a);
        TSeries b = g.series(5).specialize(Var::v, 1);
        EXPECT_EQ(subst_u_to_uv(a * b), subst_u_to_uv(a) * subst_u_to_uv(b));
    }
}

TEST(Properties, DivisionByVMinusOneInvertsMultiplication)
{
    Gen g(5);
    MultiPoly v1 = MultiPoly::parse("v - 1");
    for (int i = 0; i < trials; ++i) {
        MultiPoly q = g.poly(8, 4);
        auto back = (q * v1).divided_by_v_minus_one();
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(*back, q);
    }
}

TEST(Properties, SeriesInverse)
{
    Gen g(6);
    for (int i = 0; i < trials / 4; ++i) {
        TSeries a = g.series(6, true);
        EXPECT_EQ(a * invert(a), TSeries::one(6));
    }
}

TEST(Properties, ComposeRoundTrip)
{
    Gen g(7);
    const unsigned N = 7;
    TSeries there = divide(TSeries::t(N), TSeries::from_ints({1, -1}, N));
    TSeries back = divide(TSeries::t(N), TSeries::from_ints({1, 1}, N));
    for (int i = 0; i < trials / 10; ++i) {
        TSeries a = g.series(N);
        EXPECT_EQ(compose_t(compose_t(a, there), back), a);
    }
}

TEST(Properties, SeriesJsonRoundTrip)
{
    Gen g(8);
    for (int i = 0; i < trials / 4; ++i) {
        TSeries a = g.series(4);
        if (g.uniform(0, 1)) {
            a = a.with_ucap(unsigned(g.uniform(0, 3)));
        }
        EXPECT_EQ(series_from_json(nlohmann::json::parse(to_json(a).dump())), a);
    }
}

TEST(Properties, MembershipMatchesNaiveDefinition)
{
    Gen g(9);
    for (int i = 0; i < trials * 5; ++i) {
        unsigned p = unsigned(g.uniform(1, 4));
        Word w = g.any_word(unsigned(g.uniform(0, 7)), 5);
        EXPECT_EQ(is_p_ascent(w, p), naive_is_p_ascent(w, p)) << format_word(w) << " p=" << p;
    }
}

TEST(Properties, RandomSequencesAreValidAndPrefixClosed)
{
    Gen g(10);
    for (int i = 0; i < trials; ++i) {
        unsigned p = unsigned(g.uniform(1, 5));
        Word w = g.p_ascent_word(p, unsigned(g.uniform(0, 12)));
        ASSERT_TRUE(is_p_ascent(w, p));
        EXPECT_TRUE(is_p_ascent(w, p + 1));
        for (std::size_t k = 0; k <= w.size(); ++k) {
            EXPECT_TRUE(is_p_ascent(Word(w.begin(), w.begin() + std::ptrdiff_t(k)), p));
        }
        StatProfile s = stats(w);
        unsigned flats = 0;
        for (std::size_t j = 1; j < w.size(); ++j) {
            flats += w[j] == w[j - 1] ? 1 : 0;
        }
        if (!w.empty()) {
            EXPECT_EQ(s.ascents + s.descents + flats, w.size() - 1);
        }
    }
}

TEST(Properties, CountsMatchNaiveEnumeration)
{
    for (unsigned p = 1; p <= 3; ++p) {
        for (unsigned n = 0; n <= 5; ++n) {
            // Letters never exceed p + n - 2, so this alphabet suffices.
            unsigned alphabet = p + n;
            std::uint64_t total = 1;
            for (unsigned i = 0; i < n; ++i) {
                total *= alphabet;
            }
            std::uint64_t count = 0;
            Word w(n, 0);
            for (std::uint64_t code = 0; code < total; ++code) {
                std::uint64_t c = code;
                for (unsigned i = 0; i < n; ++i) {
                    w[i] = Letter(c % alphabet);
                    c /= alphabet;
                }
                count += naive_is_p_ascent(w, p) ? 1 : 0;
            }
            EXPECT_EQ(count_sequences(p, n), BigInt(count)) << p << " " << n;
        }
    }
}

TEST(Properties, EnumerationIsMonotoneInP)
{
    Gen g(11);
    for (int i = 0; i < 10; ++i) {
        unsigned p = unsigned(g.uniform(1, 3));
        unsigned n = unsigned(g.uniform(1, 5));
        std::set<Word> bigger;
        for (auto s : enumerate(p + 1, n)) {
            bigger.insert(s.letters());
        }
        for (auto s : enumerate(p, n)) {
            EXPECT_TRUE(bigger.count(s.letters())) << format_word(s.letters());
        }
    }
}

TEST(Properties, OccursMatchesSubsetSearch)
{
    Gen g(12);
    const std::vector<Pattern> patterns{Pattern::parse("012"), Pattern::parse("00"), Pattern::parse("10"),
                                        Pattern::parse("21-2"), Pattern::parse("021"), Pattern::parse("000")};
    for (int i = 0; i < trials * 2; ++i) {
        Word w = g.any_word(unsigned(g.uniform(0, 8)), 4);
        const Pattern &pat = patterns[std::size_t(g.uniform(0, int(patterns.size()) - 1))];
        EXPECT_EQ(occurs(pat, w), naive_occurs(pat, w)) << pat.to_string() << " in " << format_word(w);
    }
}

TEST(Properties, ReductionIsIdempotentAndOrderPreserving)
{
    Gen g(13);
    for (int i = 0; i < trials; ++i) {
        Word w = g.any_word(unsigned(g.uniform(0, 9)), 10);
        Word r = red(w);
        EXPECT_EQ(red(r), r);
        for (std::size_t a = 0; a < w.size(); ++a) {
            for (std::size_t b = 0; b < w.size(); ++b) {
                EXPECT_EQ(w[a] < w[b], r[a] < r[b]);
            }
        }
    }
}

TEST(Properties, EmbeddingPreservesValidity)
{
    Gen g(14);
    for (int i = 0; i < trials * 2; ++i) {
        unsigned p = unsigned(g.uniform(1, 4));
        Word w = g.any_word(unsigned(g.uniform(1, 8)), p + 4);
        w[0] = 0;
        Word e = embed_word(w, p);
        EXPECT_EQ(is_p_ascent(e, 1), is_p_ascent(w, p)) << format_word(w) << " p=" << p;
        if (is_p_ascent(w, p)) {
            EXPECT_EQ(project(PAscentSequence(1, e), p).letters(), w);
        }
    }
}

TEST(Properties, OracleTableSpecializesToCounts)
{
    Gen g(15);
    for (int i = 0; i < 5; ++i) {
        unsigned p = unsigned(g.uniform(1, 4));
        unsigned N = unsigned(g.uniform(1, 6));
        TSeries t = oracle_table(p, N).specialize(std::map<Var, BigInt>{
            {Var::u, 1}, {Var::v, 1}, {Var::z, 1}, {Var::x, 1}});
        for (unsigned n = 0; n <= N; ++n) {
            EXPECT_EQ(t.coefficient(n), MultiPoly(count_sequences(p, n)));
        }
    }
}
