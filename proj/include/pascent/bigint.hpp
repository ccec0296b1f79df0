#ifndef PASCENT_BIGINT_HPP
#define PASCENT_BIGINT_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace pascent
{

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt &x)
{
    return x.str();
}

inline BigInt from_decimal(const std::string &s)
{
    std::size_t digits = s.size() - ((!s.empty() && s[0] == '-') ? 1 : 0);
    if (digits == 0 || s.find_first_not_of("0123456789", s.size() - digits) != std::string::npos) {
        throw invalid_input("not a decimal integer: '" + s + "'");
    }
    return BigInt(s);
}

/// Binomial coefficient C(n, k) by the multiplicative recurrence; zero when
/// k < 0 or k > n, and for negative n.
inline BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt pow2(unsigned e)
{
    BigInt r = 1;
    r <<= e;
    return r;
}

} // namespace pascent

#endif
