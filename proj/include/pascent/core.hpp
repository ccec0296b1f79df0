#ifndef PASCENT_CORE_HPP
#define PASCENT_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "multipoly.hpp"
#include "series.hpp"

namespace pascent
{

using Letter = unsigned;
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

/// Number of j with w[j] < w[j+1].
inline unsigned asc(WordView w)
{
    unsigned a = 0;
    for (std::size_t j = 1; j < w.size(); ++j) {
        a += w[j - 1] < w[j];
    }
    return a;
}

inline unsigned des(WordView w)
{
    unsigned d = 0;
    for (std::size_t j = 1; j < w.size(); ++j) {
        d += w[j - 1] > w[j];
    }
    return d;
}

inline void require_p(unsigned p)
{
    if (p < 1) {
        throw invalid_parameter("p must be at least 1");
    }
}

/// True iff w is empty, or starts with 0 and every later letter is at most
/// p plus the number of ascents of the preceding prefix.
inline bool is_p_ascent(WordView w, unsigned p)
{
    require_p(p);
    if (w.empty()) {
        return true;
    }
    if (w[0] != 0) {
        return false;
    }
    unsigned a = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] > p + a) {
            return false;
        }
        a += w[i - 1] < w[i];
    }
    return true;
}

inline std::string format_word(WordView w, std::string_view sep = ",")
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
            s += sep;
        }
        s += std::to_string(w[i]);
    }
    return s;
}

/// A validated p-ascent sequence.
class PAscentSequence
{
public:
    PAscentSequence(unsigned p, Word letters) : p_(p), letters_(std::move(letters))
    {
        if (!is_p_ascent(letters_, p_)) {
            throw invalid_input("(" + format_word(letters_) + ") is not a " + std::to_string(p_)
                                + "-ascent sequence");
        }
    }

    unsigned p() const
    {
        return p_;
    }
    const Word &letters() const
    {
        return letters_;
    }
    std::size_t size() const
    {
        return letters_.size();
    }
    bool empty() const
    {
        return letters_.empty();
    }
    operator WordView() const
    {
        return letters_;
    }

    friend bool operator==(const PAscentSequence &, const PAscentSequence &) = default;

private:
    unsigned p_;
    Word letters_;
};

struct StatProfile {
    unsigned length = 0;
    unsigned ascents = 0;
    unsigned descents = 0;
    unsigned zeros = 0;
    std::optional<Letter> last; // absent for the empty word
    unsigned run = 0;
    std::optional<Letter> max; // absent for the empty word
    std::uint64_t sum = 0;
    bool primitive = true;
    bool up_down = true;

    friend bool operator==(const StatProfile &, const StatProfile &) = default;
};

/// Length of the initial block of zeros; 0 when the word has no nonzero letter.
inline unsigned run_of(WordView w)
{
    auto it = std::find_if(w.begin(), w.end(), [](Letter c) { return c != 0; });
    return it == w.end() ? 0 : unsigned(it - w.begin());
}

inline bool is_primitive(WordView w)
{
    return std::adjacent_find(w.begin(), w.end()) == w.end();
}

/// w1 < w2 > w3 < w4 > ... (1-indexed); vacuous for words shorter than 2.
inline bool is_up_down(WordView w)
{
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
        bool rise = w[j] < w[j + 1];
        bool fall = w[j] > w[j + 1];
        if ((j % 2 == 0 && !rise) || (j % 2 == 1 && !fall)) {
            return false;
        }
    }
    return true;
}

inline StatProfile stats(WordView w)
{
    StatProfile s;
    s.length = unsigned(w.size());
    s.ascents = asc(w);
    s.descents = des(w);
    s.zeros = unsigned(std::count(w.begin(), w.end(), 0u));
    if (!w.empty()) {
        s.last = w.back();
        s.max = *std::max_element(w.begin(), w.end());
    }
    s.run = run_of(w);
    for (Letter c : w) {
        s.sum += c;
    }
    s.primitive = is_primitive(w);
    s.up_down = is_up_down(w);
    return s;
}

inline StatProfile stats(const PAscentSequence &w)
{
    return stats(WordView(w.letters()));
}

using WordPredicate = std::function<bool(WordView)>;

/// Streams the p-ascent sequences of length n in lexicographic order.
///
/// `keep` is a hereditary predicate on prefixes (if it rejects a prefix it
/// must reject every extension); rejected prefixes are not extended. `filter`
/// is applied to complete words only.
class SequenceGenerator
{
public:
    SequenceGenerator(unsigned p, unsigned n, WordPredicate filter = {}, WordPredicate keep = {})
        : p_(p), n_(n), filter_(std::move(filter)), keep_(std::move(keep)), word_(n), asc_(n)
    {
        require_p(p);
    }

    /// Advances to the next sequence; false when exhausted.
    bool next()
    {
        if (done_) {
            return false;
        }
        Letter candidate = 0;
        if (!started_) {
            started_ = true;
            if (n_ == 0) {
                if ((!keep_ || keep_(WordView{})) && (!filter_ || filter_(WordView{}))) {
                    return true;
                }
                done_ = true;
                return false;
            }
        } else {
            if (n_ == 0) {
                done_ = true;
                return false;
            }
            candidate = word_[--len_] + 1;
        }
        while (true) {
            Letter bound = len_ == 0 ? 0 : p_ + asc_[len_ - 1];
            if (candidate > bound) {
                if (len_ == 0) {
                    done_ = true;
                    return false;
                }
                candidate = word_[--len_] + 1;
                continue;
            }
            word_[len_] = candidate;
            asc_[len_] = len_ == 0 ? 0 : asc_[len_ - 1] + (word_[len_ - 1] < candidate);
            ++len_;
            WordView prefix(word_.data(), len_);
            if (keep_ && !keep_(prefix)) {
                candidate = word_[--len_] + 1;
                continue;
            }
            if (len_ == n_) {
                if (!filter_ || filter_(prefix)) {
                    return true;
                }
                candidate = word_[--len_] + 1;
                continue;
            }
            candidate = 0;
        }
    }

    WordView current() const
    {
        return WordView(word_.data(), n_);
    }

    PAscentSequence current_sequence() const
    {
        return PAscentSequence(p_, Word(word_.begin(), word_.end()));
    }

private:
    unsigned p_;
    unsigned n_;
    WordPredicate filter_;
    WordPredicate keep_;
    Word word_;
    std::vector<unsigned> asc_;
    std::size_t len_ = 0;
    bool started_ = false;
    bool done_ = false;
};

/// Input range over SequenceGenerator, yielding PAscentSequence values.
class SequenceRange
{
public:
    SequenceRange(unsigned p, unsigned n, WordPredicate filter = {}, WordPredicate keep = {})
        : p_(p), n_(n), filter_(std::move(filter)), keep_(std::move(keep))
    {
        require_p(p);
    }

    class iterator
    {
    public:
        using value_type = PAscentSequence;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(SequenceGenerator gen) : gen_(std::move(gen))
        {
            advance();
        }

        PAscentSequence operator*() const
        {
            return gen_->current_sequence();
        }
        iterator &operator++()
        {
            advance();
            return *this;
        }
        void operator++(int)
        {
            advance();
        }
        friend bool operator==(const iterator &it, std::default_sentinel_t)
        {
            return !it.gen_;
        }

    private:
        void advance()
        {
            if (gen_ && !gen_->next()) {
                gen_.reset();
            }
        }
        std::optional<SequenceGenerator> gen_;
    };

    iterator begin() const
    {
        return iterator(SequenceGenerator(p_, n_, filter_, keep_));
    }
    std::default_sentinel_t end() const
    {
        return {};
    }

private:
    unsigned p_;
    unsigned n_;
    WordPredicate filter_;
    WordPredicate keep_;
};

inline SequenceRange enumerate(unsigned p, unsigned n, WordPredicate filter = {}, WordPredicate keep = {})
{
    return SequenceRange(p, n, std::move(filter), std::move(keep));
}

/// Worker count for partitioned enumeration: PASCENT_THREADS, default 1.
inline unsigned default_parallelism()
{
    if (const char *env = std::getenv("PASCENT_THREADS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) {
            return unsigned(v);
        }
    }
    return 1;
}

/// Runs fn(c) for each second letter c in [0, p], on up to `threads` workers.
/// Results are collected per partition so callers can merge in order.
template <class Result, class Fn>
std::vector<Result> run_partitions(unsigned p, unsigned threads, Fn fn)
{
    std::vector<Result> results(p + 1);
    if (threads <= 1) {
        for (unsigned c = 0; c <= p; ++c) {
            results[c] = fn(c);
        }
        return results;
    }
    std::vector<std::thread> workers;
    unsigned count = std::min(threads, p + 1);
    for (unsigned w = 0; w < count; ++w) {
        workers.emplace_back([&, w] {
            for (unsigned c = w; c <= p; c += count) {
                results[c] = fn(c);
            }
        });
    }
    for (auto &t : workers) {
        t.join();
    }
    return results;
}

namespace detail
{

// Depth-first walk over every nonempty prefix of length <= maxlen that starts
// with `start`. visit(prefix, ascents) returns whether to descend.
template <class Visit>
void walk_prefixes(unsigned p, unsigned maxlen, Word &word, unsigned ascents, Visit &visit)
{
    if (word.size() >= maxlen) {
        return;
    }
    Letter bound = p + ascents;
    Letter prev = word.back();
    for (Letter c = 0; c <= bound; ++c) {
        word.push_back(c);
        unsigned a = ascents + (prev < c);
        if (visit(WordView(word), a)) {
            walk_prefixes(p, maxlen, word, a, visit);
        }
        word.pop_back();
    }
}

} // namespace detail

/// Visits every p-ascent sequence of length 1..maxlen in lexicographic
/// preorder. visit(word, ascents) returns false to skip extensions of word.
/// With second_letter set, only the subtree below (0, second_letter) is walked
/// (plus the word (0) itself when second_letter is 0).
template <class Visit>
void for_each_prefix(unsigned p, unsigned maxlen, Visit &&visit, std::optional<Letter> second_letter = std::nullopt)
{
    require_p(p);
    if (maxlen == 0) {
        return;
    }
    Word word{0};
    if (!second_letter) {
        if (visit(WordView(word), 0u)) {
            detail::walk_prefixes(p, maxlen, word, 0, visit);
        }
        return;
    }
    if (*second_letter > p) {
        return;
    }
    bool descend = true;
    if (*second_letter == 0) {
        descend = visit(WordView(word), 0u);
    }
    if (!descend || maxlen < 2) {
        return;
    }
    word.push_back(*second_letter);
    unsigned a = *second_letter > 0 ? 1 : 0;
    if (visit(WordView(word), a)) {
        detail::walk_prefixes(p, maxlen, word, a, visit);
    }
}

/// Statistics tracked by oracle_table; unselected ones are specialized to 1.
struct StatSelector {
    bool ascents = true;
    bool last = true;
    bool zeros = true;
    bool run = true;

    static StatSelector all()
    {
        return {};
    }
    static StatSelector none()
    {
        return {false, false, false, false};
    }
};

/// Sum over all p-ascent sequences w with |w| <= N of
/// t^|w| u^asc(w) v^last(w) z^zeros(w) x^run(w), by exhaustive enumeration.
/// The empty word contributes 1. An optional hereditary `keep` predicate
/// restricts the enumeration (rejected prefixes and their extensions are
/// excluded).
inline TSeries oracle_table(unsigned p, unsigned N, StatSelector sel = StatSelector::all(), WordPredicate keep = {},
                            unsigned threads = default_parallelism())
{
    require_p(p);
    // Per-length counts keyed by packed monomial; machine words suffice for
    // any enumeration that terminates.
    using Table = std::vector<std::unordered_map<std::uint64_t, std::uint64_t>>;
    auto work = [&](Letter second) {
        Table table(N + 1);
        auto visit = [&](WordView w, unsigned a) {
            if (keep && !keep(w)) {
                return false;
            }
            unsigned zeros = unsigned(std::count(w.begin(), w.end(), 0u));
            Monomial m = Monomial::from(sel.ascents ? a : 0, sel.last ? w.back() : 0, sel.zeros ? zeros : 0,
                                        sel.run ? run_of(w) : 0);
            ++table[w.size()][m.key()];
            return true;
        };
        for_each_prefix(p, N, visit, second);
        return table;
    };
    auto parts = run_partitions<Table>(p, threads, work);
    TSeries out(N);
    out.set_coefficient(0, 1);
    for (unsigned n = 1; n <= N; ++n) {
        detail::PolyAccumulator acc;
        for (auto &part : parts) {
            for (auto &[k, c] : part[n]) {
                acc.add(Monomial::from_key(k), BigInt(c));
            }
        }
        out.set_coefficient(n, acc.take());
    }
    return out;
}

/// Number of p-ascent sequences of length n accepted by the hereditary
/// predicate `keep` (all of them when keep is empty).
inline BigInt count_sequences(unsigned p, unsigned n, const WordPredicate &keep = {},
                              unsigned threads = default_parallelism())
{
    require_p(p);
    if (n == 0) {
        return (!keep || keep(WordView{})) ? 1 : 0;
    }
    auto work = [&](Letter second) {
        std::uint64_t count = 0;
        auto visit = [&](WordView w, unsigned) {
            if (keep && !keep(w)) {
                return false;
            }
            if (w.size() == n) {
                ++count;
                return false;
            }
            return true;
        };
        for_each_prefix(p, n, visit, second);
        return count;
    };
    BigInt total = 0;
    for (auto c : run_partitions<std::uint64_t>(p, threads, work)) {
        total += c;
    }
    return total;
}

/// Hereditary prefix predicates used with the enumerators.
inline WordPredicate primitive_prefix()
{
    return [](WordView w) { return w.size() < 2 || w[w.size() - 1] != w[w.size() - 2]; };
}

/// Rejects prefixes ending in more than k equal consecutive letters.
inline WordPredicate max_repetition_prefix(unsigned k)
{
    return [k](WordView w) {
        unsigned r = 1;
        for (std::size_t i = w.size(); i >= 2 && w[i - 1] == w[i - 2]; --i) {
            ++r;
        }
        return w.empty() || r <= k;
    };
}

/// Keeps up-down prefixes.
inline WordPredicate up_down_prefix()
{
    return [](WordView w) {
        if (w.size() < 2) {
            return true;
        }
        std::size_t j = w.size() - 2;
        return j % 2 == 0 ? w[j] < w[j + 1] : w[j] > w[j + 1];
    };
}

} // namespace pascent

#endif
