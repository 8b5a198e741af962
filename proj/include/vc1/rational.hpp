#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vc1 {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator (boost maintains the canonical form).
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Renders "p/q", or just "p" when the value is integral.
inline std::string rat_str(const Rational& r)
{
    if (den(r) == 1)
        return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(BigInt(std::string(s)));
        BigInt p{std::string(s.substr(0, slash))};
        BigInt q{std::string(s.substr(slash + 1))};
        if (q == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(p, q);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + std::string(s) + "'");
    }
}

inline BigInt isqrt_floor(const BigInt& n)
{
    if (n < 0)
        throw std::invalid_argument("isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n)
{
    if (n < 0)
        return false;
    BigInt r = isqrt_floor(n);
    return r * r == n;
}

/// True when r = m^2 for a nonnegative integer m; reports m through out.
inline bool is_integer_square(const Rational& r, long& m_out)
{
    if (r < 0 || den(r) != 1)
        return false;
    BigInt n = num(r);
    if (!is_perfect_square(n))
        return false;
    m_out = static_cast<long>(isqrt_floor(n));
    return true;
}

inline Rational binom(long n, long k)
{
    if (k < 0)
        return 0;
    Rational r = 1;
    for (long i = 0; i < k; ++i)
        r *= Rational(n - i, i + 1);
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned e)
{
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i)
        r *= base;
    return r;
}

} // namespace vc1
