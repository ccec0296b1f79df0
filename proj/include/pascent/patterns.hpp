#ifndef PASCENT_PATTERNS_HPP
#define PASCENT_PATTERNS_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "series.hpp"

namespace pascent
{

/// Replaces each copy of the i-th smallest letter by i - 1.
inline Word red(WordView w)
{
    Word sorted(w.begin(), w.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Word out;
    out.reserve(w.size());
    for (Letter c : w) {
        out.push_back(Letter(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin()));
    }
    return out;
}

/// A reduced word, optionally vincular: position i listed in `adjacent`
/// forces pattern positions i and i+1 onto adjacent positions of the host.
class Pattern
{
public:
    explicit Pattern(Word letters, std::vector<unsigned> adjacent = {})
        : letters_(std::move(letters)), adjacent_(std::move(adjacent))
    {
        if (red(letters_) != letters_) {
            throw invalid_parameter("pattern letters must be a reduced word");
        }
        for (std::size_t i = 0; i < adjacent_.size(); ++i) {
            if (adjacent_[i] + 1 >= letters_.size() || (i > 0 && adjacent_[i] <= adjacent_[i - 1])) {
                throw invalid_parameter("invalid adjacency positions in pattern");
            }
        }
    }

    /// Digits are letters. Without hyphens the pattern is classical; with
    /// hyphens, juxtaposed letters must be adjacent and a hyphen marks a free
    /// gap ("21-2"). Letters are reduced, so "21-2" becomes 10-1.
    static Pattern parse(std::string_view text)
    {
        Word raw;
        std::vector<bool> gap_after;
        bool vincular = text.find('-') != std::string_view::npos;
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                raw.push_back(Letter(c - '0'));
                gap_after.push_back(false);
            } else if (c == '-' && !raw.empty() && !gap_after.back() && i + 1 < text.size()) {
                gap_after.back() = true;
            } else {
                throw invalid_parameter("malformed pattern '" + std::string(text) + "'");
            }
        }
        if (raw.empty()) {
            throw invalid_parameter("empty pattern");
        }
        std::vector<unsigned> adjacent;
        if (vincular) {
            for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
                if (!gap_after[i]) {
                    adjacent.push_back(unsigned(i));
                }
            }
        }
        return Pattern(red(raw), std::move(adjacent));
    }

    const Word &letters() const
    {
        return letters_;
    }
    const std::vector<unsigned> &adjacent() const
    {
        return adjacent_;
    }
    std::size_t size() const
    {
        return letters_.size();
    }
    bool is_classical() const
    {
        return adjacent_.empty();
    }
    bool must_be_adjacent(std::size_t i) const
    {
        return std::binary_search(adjacent_.begin(), adjacent_.end(), unsigned(i));
    }

    std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i > 0 && !is_classical() && !must_be_adjacent(i - 1)) {
                s += '-';
            }
            s += std::to_string(letters_[i]);
        }
        return s;
    }

    friend bool operator==(const Pattern &, const Pattern &) = default;

private:
    Word letters_;
    std::vector<unsigned> adjacent_;
};

namespace detail
{

inline int cmp(Letter a, Letter b)
{
    return (a > b) - (a < b);
}

inline bool match_from(const Pattern &pat, WordView w, std::vector<std::size_t> &idx, std::size_t j)
{
    const auto &pl = pat.letters();
    if (j == pl.size()) {
        return true;
    }
    std::size_t first = j == 0 ? 0 : idx[j - 1] + 1;
    std::size_t last = (j > 0 && pat.must_be_adjacent(j - 1)) ? first : w.size() - (pl.size() - j);
    for (std::size_t i = first; i <= last && i < w.size(); ++i) {
        bool ok = true;
        for (std::size_t l = 0; l < j && ok; ++l) {
            ok = cmp(w[i], w[idx[l]]) == cmp(pl[j], pl[l]);
        }
        if (ok) {
            idx[j] = i;
            if (match_from(pat, w, idx, j + 1)) {
                return true;
            }
        }
    }
    return false;
}

} // namespace detail

/// True iff some index set i_1 < ... < i_k (respecting adjacency) has
/// red(w[i_1] ... w[i_k]) equal to the pattern.
inline bool occurs(const Pattern &pat, WordView w)
{
    if (pat.size() > w.size()) {
        return false;
    }
    std::vector<std::size_t> idx(pat.size());
    return detail::match_from(pat, w, idx, 0);
}

inline bool avoids(const Pattern &pat, WordView w)
{
    return !occurs(pat, w);
}

/// Hereditary prefix predicate: keeps prefixes avoiding pat.
inline WordPredicate avoiding_prefix(const Pattern &pat, bool primitive_only = false)
{
    return [pat, primitive_only](WordView w) {
        if (primitive_only && w.size() >= 2 && w[w.size() - 1] == w[w.size() - 2]) {
            return false;
        }
        return !occurs(pat, w);
    };
}

/// Brute-force count of p-ascent sequences of length n avoiding pat
/// (a_{n,p,pat}, or r_{n,p,pat} when primitive_only).
inline BigInt count_avoiders(unsigned p, const Pattern &pat, unsigned n, bool primitive_only = false)
{
    return count_sequences(p, n, avoiding_prefix(pat, primitive_only));
}

/// a_{n,p,012} from the recursion
///   a_{n,p} = a_{n,p-1} + Σ_{k=2}^{n} a_{k-1,p-1} 2^(n-k),
/// seeded with the p = 2 closed form (n+1) 2^(n-2).
class Avoid012Recursion
{
public:
    BigInt operator()(unsigned p, unsigned n)
    {
        if (p < 2) {
            throw no_closed_form("012-avoidance recursion starts at p = 2");
        }
        if (n == 0) {
            return 1;
        }
        if (p == 2) {
            return exact_div(BigInt(n + 1) * pow2(n), 4);
        }
        auto key = std::make_pair(p, n);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        BigInt r = (*this)(p - 1, n);
        for (unsigned k = 2; k <= n; ++k) {
            r += (*this)(p - 1, k - 1) * pow2(n - k);
        }
        memo_.emplace(key, r);
        return r;
    }

    static BigInt exact_div(const BigInt &a, const BigInt &b)
    {
        if (a % b != 0) {
            throw division_impossible("closed form did not yield an integer");
        }
        return a / b;
    }

private:
    std::map<std::pair<unsigned, unsigned>, BigInt> memo_;
};

/// Closed-form avoidance counts. Supported: 01 (all p), 10 (all p), 00 for
/// p = 2, 3, and 012 for p >= 2 (explicit formulas for p <= 4, the recursion
/// beyond). A 00-avoider has distinct letters, so it is primitive and the
/// primitive count equals the plain one.
inline BigInt closed_count(unsigned p, const Pattern &pat, unsigned n, bool primitive_only = false)
{
    require_p(p);
    if (!pat.is_classical()) {
        throw no_closed_form("no closed form for vincular pattern " + pat.to_string());
    }
    const Word &l = pat.letters();
    auto none = [&]() {
        return no_closed_form("no closed form for p = " + std::to_string(p) + ", pattern " + pat.to_string()
                              + (primitive_only ? " (primitive)" : ""));
    };
    if (n == 0) {
        return 1;
    }
    const std::int64_t N = n;
    const std::int64_t P = p;
    if (l == Word{0, 1}) {
        if (primitive_only) {
            return n == 1 ? 1 : 0;
        }
        return 1;
    }
    if (l == Word{1, 0}) {
        if (primitive_only) {
            return binomial(P + N - 2, N - 1);
        }
        BigInt s = 0;
        for (std::int64_t k = 0; k <= N - 1; ++k) {
            s += binomial(N - 1, k) * binomial(P + k - 1, k);
        }
        return s;
    }
    if (l == Word{0, 0}) {
        if (p == 2) {
            return 1 + binomial(N, 2);
        }
        if (p == 3) {
            return binomial(N + 1, 2) + 2 * binomial(N, 3) + binomial(N - 1, 4) + binomial(N + 2, 5);
        }
        throw none();
    }
    if (l == Word{0, 1, 2} && !primitive_only) {
        BigInt b = BigInt(N);
        switch (p) {
        case 1:
            throw none();
        case 2:
            return Avoid012Recursion::exact_div((b + 1) * pow2(n), 4);
        case 3:
            return Avoid012Recursion::exact_div((b * b + 5 * b + 2) * pow2(n), 16);
        case 4:
            return Avoid012Recursion::exact_div((b * b * b + 12 * b * b + 29 * b + 6) * pow2(n), 96);
        default:
            return Avoid012Recursion{}(p, n);
        }
    }
    throw none();
}

/// Generating functions 1 + Σ_{n>=1} count_n t^n from the rational closed
/// forms: A_01 = 1/(1-t), R_01 = 1 + t, A_10 = 1 + t(1-t)^(p-1)/(1-2t)^p,
/// R_10 = 1 + t/(1-t)^p, and for p = 3 the 00 series
/// 1 + t(1-3t+6t^2-5t^3+3t^4-t^5)/(1-t)^6.
inline TSeries gf_avoiders(unsigned p, const Pattern &pat, unsigned N, bool primitive_only = false)
{
    require_p(p);
    const Word &l = pat.letters();
    TSeries one = TSeries::one(N);
    TSeries one_minus_t = TSeries::from_ints({1, -1}, N);
    if (pat.is_classical() && l == Word{0, 1}) {
        return primitive_only ? TSeries::from_ints({1, 1}, N) : one_minus_t.inverse();
    }
    if (pat.is_classical() && l == Word{1, 0}) {
        if (primitive_only) {
            return one + divide(TSeries::t(N), one_minus_t.pow(p));
        }
        TSeries one_minus_2t = TSeries::from_ints({1, -2}, N);
        return one + divide(TSeries::t(N) * one_minus_t.pow(p - 1), one_minus_2t.pow(p));
    }
    if (pat.is_classical() && l == Word{0, 0} && p == 3) {
        TSeries num = TSeries::from_ints({1, -3, 6, -5, 3, -1}, N).shifted_t(1);
        return one + divide(num, one_minus_t.pow(6));
    }
    throw no_closed_form("no generating function for p = " + std::to_string(p) + ", pattern " + pat.to_string()
                         + (primitive_only ? " (primitive)" : ""));
}

/// Prepends (0,1)^(p-1) to a nonempty word; the empty word maps to itself.
inline Word embed_word(WordView w, unsigned p)
{
    require_p(p);
    Word out;
    if (w.empty()) {
        return out;
    }
    for (unsigned i = 1; i < p; ++i) {
        out.push_back(0);
        out.push_back(1);
    }
    out.insert(out.end(), w.begin(), w.end());
    return out;
}

inline PAscentSequence embed(const PAscentSequence &w)
{
    return PAscentSequence(1, embed_word(w.letters(), w.p()));
}

/// Inverse of embed: strips the (0,1)^(p-1) prefix from an ascent sequence
/// beginning with (0,1)^(p-1) 0.
inline PAscentSequence project(const PAscentSequence &w, unsigned p)
{
    require_p(p);
    if (w.p() != 1) {
        throw invalid_parameter("project expects an ascent sequence (p = 1)");
    }
    const Word &l = w.letters();
    if (l.empty()) {
        return PAscentSequence(p, {});
    }
    std::size_t prefix = 2 * std::size_t(p - 1);
    bool ok = l.size() > prefix && l[prefix] == 0;
    for (std::size_t i = 0; ok && i < prefix; ++i) {
        ok = l[i] == (i % 2);
    }
    if (!ok) {
        throw not_in_image("(" + format_word(l) + ") does not start with (01)^" + std::to_string(p - 1) + "0");
    }
    return PAscentSequence(p, Word(l.begin() + std::ptrdiff_t(prefix), l.end()));
}

/// Bijection from 10-avoiding to 012-avoiding 2-ascent sequences of the same
/// length. Blocks 0^{i_0} 1^{i_1} 2^{i_2} ... map to 0^{i_0} 2 0^{i_1-1} 2 ...;
/// when the value a+1 is skipped, blocks above the gap start with 1 instead of 2.
inline PAscentSequence bijection_10_to_012(const PAscentSequence &w)
{
    if (w.p() != 2) {
        throw invalid_input("bijection_10_to_012 is defined for 2-ascent sequences");
    }
    const Word &l = w.letters();
    if (l.empty()) {
        return w;
    }
    if (!std::is_sorted(l.begin(), l.end())) {
        throw invalid_input("(" + format_word(l) + ") contains the pattern 10");
    }
    Word out;
    std::size_t i = 0;
    unsigned block = 0;
    bool gap_seen = false;
    while (i < l.size()) {
        std::size_t j = i;
        while (j < l.size() && l[j] == l[i]) {
            ++j;
        }
        Letter value = l[i];
        if (block == 0) {
            out.insert(out.end(), j - i, 0u);
        } else {
            if (value == block + 1) {
                gap_seen = true;
            } else if (value != block || gap_seen) {
                throw invalid_input("(" + format_word(l) + ") is not of either block form");
            }
            out.push_back(gap_seen ? 1u : 2u);
            out.insert(out.end(), j - i - 1, 0u);
        }
        ++block;
        i = j;
    }
    return PAscentSequence(2, std::move(out));
}

inline PAscentSequence bijection_012_to_10(const PAscentSequence &w)
{
    if (w.p() != 2) {
        throw invalid_input("bijection_012_to_10 is defined for 2-ascent sequences");
    }
    const Word &l = w.letters();
    if (l.empty()) {
        return w;
    }
    Word out;
    std::size_t i = 0;
    while (i < l.size() && l[i] == 0) {
        ++i;
    }
    out.insert(out.end(), i, 0u);
    unsigned block = 0;
    bool seen_one = false;
    while (i < l.size()) {
        Letter c = l[i];
        if (c == 2 && seen_one) {
            throw invalid_input("(" + format_word(l) + ") contains the pattern 012");
        }
        if (c != 1 && c != 2) {
            throw invalid_input("(" + format_word(l) + ") is not a 012-avoiding 2-ascent sequence");
        }
        seen_one = seen_one || c == 1;
        std::size_t j = i + 1;
        while (j < l.size() && l[j] == 0) {
            ++j;
        }
        ++block;
        out.insert(out.end(), j - i, c == 2 ? block : block + 1);
        i = j;
    }
    return PAscentSequence(2, std::move(out));
}

/// Number of words of length n-1 over {1,2,3} avoiding the vincular pattern
/// 21-2 (no w_i w_{i+1} w_j, i+1 < j, with w_i = w_j > w_{i+1}).
inline BigInt count_vincular_212_ternary(unsigned n)
{
    if (n < 1) {
        throw invalid_parameter("n must be at least 1");
    }
    const Pattern pat = Pattern::parse("21-2");
    const unsigned len = n - 1;
    Word w(len, 1);
    BigInt count = 0;
    while (true) {
        if (!occurs(pat, w)) {
            ++count;
        }
        std::size_t i = 0;
        while (i < len && w[i] == 3) {
            w[i++] = 1;
        }
        if (i == len) {
            break;
        }
        ++w[i];
    }
    return count;
}

} // namespace pascent

#endif
