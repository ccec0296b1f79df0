#include <gtest/gtest.h>

#include <set>

#include <pascent/patterns.hpp>

#include "reference_values.hpp"

using namespace pascent;

namespace
{

Pattern pat(const char *s)
{
    return Pattern::parse(s);
}

} // namespace

TEST(Reduce, Examples)
{
    EXPECT_EQ(red(Word{2, 3, 8, 5, 4, 3, 6, 2, 3}), (Word{0, 1, 5, 3, 2, 1, 4, 0, 1}));
    EXPECT_EQ(red(Word{0, 0, 0}), (Word{0, 0, 0}));
    EXPECT_EQ(red(Word{7}), Word{0});
    EXPECT_EQ(red(Word{}), Word{});
}

TEST(Pattern, Parse)
{
    Pattern a = pat("012");
    EXPECT_TRUE(a.is_classical());
    EXPECT_EQ(a.letters(), (Word{0, 1, 2}));
    EXPECT_EQ(a.to_string(), "012");
    Pattern v = pat("21-2");
    EXPECT_EQ(v.letters(), (Word{1, 0, 1}));
    EXPECT_EQ(v.adjacent(), std::vector<unsigned>{0});
    EXPECT_TRUE(v.must_be_adjacent(0));
    EXPECT_FALSE(v.must_be_adjacent(1));
    EXPECT_EQ(v.to_string(), "10-1");
    EXPECT_EQ(pat("10-1"), v);
    EXPECT_EQ(pat("13"), pat("01"));
    for (const char *bad : {"", "0a", "-01", "01-", "0--1"}) {
        EXPECT_THROW(pat(bad), invalid_parameter) << bad;
    }
    EXPECT_THROW(Pattern(Word{0, 2}), invalid_parameter);
    EXPECT_THROW(Pattern(Word{0, 1}, {1}), invalid_parameter);
}

TEST(Occurs, Examples)
{
    EXPECT_TRUE(occurs(pat("012"), Word{0, 1, 0, 2}));
    EXPECT_FALSE(occurs(pat("012"), Word{0, 2, 0, 2}));
    EXPECT_TRUE(occurs(pat("00"), Word{0, 1, 2, 0}));
    EXPECT_TRUE(avoids(pat("00"), Word{0, 1, 2}));
    EXPECT_TRUE(avoids(pat("012"), Word{0, 1}));
}

TEST(Occurs, VincularNeedsAdjacency)
{
    Pattern v = pat("21-2");
    EXPECT_TRUE(occurs(v, Word{2, 1, 3, 2}));
    EXPECT_FALSE(occurs(v, Word{2, 3, 1, 2}));
    EXPECT_TRUE(occurs(pat("212"), Word{2, 3, 1, 2}));
}

TEST(CountAvoiders, Examples)
{
    const auto &a2 = reference::avoidance_tabulated.front();
    for (unsigned n = 1; n <= a2.values.size(); ++n) {
        EXPECT_EQ(count_avoiders(2, pat("012"), n), a2.values[n - 1]) << n;
    }
    for (unsigned p = 1; p <= 4; ++p) {
        for (unsigned n = 0; n <= 6; ++n) {
            EXPECT_EQ(count_avoiders(p, pat("01"), n), 1);
        }
    }
    std::vector<long long> a400{1, 4, 16, 58, 190, 564, 1526, 3794};
    for (unsigned n = 1; n <= 8; ++n) {
        EXPECT_EQ(count_avoiders(4, pat("00"), n), a400[n - 1]) << n;
    }
}

TEST(CountAvoiders, AvoidingZeroZeroMeansDistinctLetters)
{
    for (unsigned p = 1; p <= 3; ++p) {
        for (unsigned n = 1; n <= 6; ++n) {
            BigInt distinct = 0;
            for (auto s : enumerate(p, n)) {
                std::set<Letter> seen(s.letters().begin(), s.letters().end());
                distinct += seen.size() == s.size() ? 1 : 0;
            }
            EXPECT_EQ(count_avoiders(p, pat("00"), n), distinct) << p << " " << n;
        }
    }
}

TEST(ClosedCount, Examples)
{
    EXPECT_EQ(closed_count(2, pat("00"), 5), 11);
    EXPECT_EQ(closed_count(3, pat("012"), 4), 38);
    EXPECT_EQ(closed_count(2, pat("10"), 3), 8);
    EXPECT_EQ(closed_count(3, pat("10"), 4, true), 10);
    EXPECT_EQ(closed_count(5, pat("01"), 0), 1);
}

TEST(ClosedCount, UnsupportedPairs)
{
    EXPECT_THROW(closed_count(4, pat("000"), 3), no_closed_form);
    EXPECT_THROW(closed_count(5, pat("00"), 3), no_closed_form);
    EXPECT_THROW(closed_count(2, pat("21-2"), 3), no_closed_form);
    EXPECT_THROW(closed_count(3, pat("012"), 3, true), no_closed_form);
}

TEST(ClosedCount, AgreesWithEnumeration)
{
    const std::vector<std::pair<const char *, std::vector<unsigned>>> supported{
        {"01", {1, 2, 3, 4}}, {"10", {1, 2, 3, 4}}, {"00", {2, 3}}, {"012", {2, 3, 4, 5}}};
    for (const auto &[name, ps] : supported) {
        for (unsigned p : ps) {
            for (unsigned n = 0; n <= 8; ++n) {
                EXPECT_EQ(closed_count(p, pat(name), n), count_avoiders(p, pat(name), n))
                    << name << " p=" << p << " n=" << n;
            }
        }
    }
    for (const char *name : {"01", "10"}) {
        for (unsigned p = 1; p <= 4; ++p) {
            for (unsigned n = 0; n <= 8; ++n) {
                EXPECT_EQ(closed_count(p, pat(name), n, true), count_avoiders(p, pat(name), n, true))
                    << name << " primitive p=" << p << " n=" << n;
            }
        }
    }
}

TEST(ClosedCount, TenAvoidersFromPrimitiveOnes)
{
    for (unsigned p = 1; p <= 4; ++p) {
        for (unsigned n = 1; n <= 10; ++n) {
            BigInt sum = 0;
            for (unsigned s = 1; s <= n; ++s) {
                sum += binomial(n - 1, s - 1) * closed_count(p, pat("10"), s, true);
            }
            EXPECT_EQ(closed_count(p, pat("10"), n), sum) << p << " " << n;
        }
    }
}

TEST(Avoid012Recursion, SeededAndExtended)
{
    Avoid012Recursion rec;
    EXPECT_EQ(rec(2, 5), 48);
    EXPECT_EQ(rec(3, 5), 104);
    EXPECT_EQ(rec(4, 10), 26624);
    EXPECT_EQ(rec(4, 10), closed_count(4, pat("012"), 10));
    EXPECT_THROW(Avoid012Recursion::exact_div(7, 2), division_impossible);
}

TEST(GfAvoiders, Examples)
{
    TSeries a10 = gf_avoiders(2, pat("10"), 6);
    std::vector<long long> expected{1, 1, 3, 8, 20, 48, 112};
    for (unsigned n = 0; n <= 6; ++n) {
        EXPECT_EQ(a10.coefficient(n), MultiPoly(expected[n])) << n;
    }
    EXPECT_EQ(gf_avoiders(3, pat("10"), 4, true).coefficient(4), MultiPoly(10));
    TSeries a00 = gf_avoiders(3, pat("00"), 12);
    const auto &tabulated = reference::avoidance_tabulated[3].values;
    for (unsigned n = 1; n <= 12; ++n) {
        EXPECT_EQ(a00.coefficient(n), MultiPoly(tabulated[n - 1])) << n;
    }
    EXPECT_THROW(gf_avoiders(2, pat("012"), 5), no_closed_form);
}

TEST(Embed, Examples)
{
    EXPECT_EQ(embed(PAscentSequence(2, {0, 2, 0})).letters(), (Word{0, 1, 0, 2, 0}));
    PAscentSequence w(1, {0, 1, 1, 0});
    EXPECT_EQ(embed(w), w);
    EXPECT_TRUE(embed(PAscentSequence(3, {})).empty());
    EXPECT_EQ(project(PAscentSequence(1, {0, 1, 0, 2, 0}), 2), PAscentSequence(2, {0, 2, 0}));
}

TEST(Embed, ProjectRejectsWordsOutsideTheImage)
{
    EXPECT_THROW(project(PAscentSequence(1, {0, 0, 1}), 2), not_in_image);
    EXPECT_THROW(project(PAscentSequence(1, {0, 1}), 2), not_in_image);
    EXPECT_THROW(project(PAscentSequence(2, {0, 1, 0}), 2), invalid_parameter);
}

TEST(Embed, ValidityIsPreservedBothWays)
{
    for (unsigned p = 1; p <= 3; ++p) {
        for (unsigned n = 1; n <= 5; ++n) {
            for (auto s : enumerate(p + 1, n)) {
                Word e = embed_word(s.letters(), p);
                EXPECT_EQ(is_p_ascent(e, 1), is_p_ascent(s.letters(), p)) << format_word(s.letters());
            }
        }
    }
}

TEST(Bijection, Examples)
{
    EXPECT_EQ(bijection_10_to_012(PAscentSequence(2, {0, 1, 1, 2})).letters(), (Word{0, 2, 0, 2}));
    EXPECT_EQ(bijection_10_to_012(PAscentSequence(2, {0})).letters(), Word{0});
    EXPECT_EQ(bijection_012_to_10(PAscentSequence(2, {0, 2, 0, 2})).letters(), (Word{0, 1, 1, 2}));
    EXPECT_THROW(bijection_10_to_012(PAscentSequence(2, {0, 1, 0})), invalid_input);
    EXPECT_THROW(bijection_012_to_10(PAscentSequence(2, {0, 1, 2})), invalid_input);
    EXPECT_THROW(bijection_10_to_012(PAscentSequence(3, {0, 1})), invalid_input);
}

TEST(Bijection, IsABijectionForEachLength)
{
    for (unsigned n = 1; n <= 9; ++n) {
        std::set<Word> images;
        unsigned sources = 0;
        for (auto s : enumerate(2, n, {}, avoiding_prefix(pat("10")))) {
            auto img = bijection_10_to_012(s);
            EXPECT_TRUE(avoids(pat("012"), img.letters()));
            EXPECT_EQ(bijection_012_to_10(img), s);
            images.insert(img.letters());
            ++sources;
        }
        EXPECT_EQ(images.size(), sources);
        EXPECT_EQ(BigInt(sources), count_avoiders(2, pat("012"), n)) << n;
    }
}

TEST(Vincular, TernaryWords)
{
    EXPECT_EQ(count_vincular_212_ternary(1), 1);
    EXPECT_EQ(count_vincular_212_ternary(2), 3);
    EXPECT_EQ(count_vincular_212_ternary(5), 57);
    for (unsigned n = 1; n <= 8; ++n) {
        EXPECT_EQ(count_vincular_212_ternary(n), count_avoiders(3, pat("00"), n)) << n;
    }
    EXPECT_THROW(count_vincular_212_ternary(0), invalid_parameter);
}
