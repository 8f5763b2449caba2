#pragma once

// Arbitrary-precision integers and rationals plus small number-theory helpers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellalg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const BigRat& x)
{
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

inline BigRat parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return BigRat(BigInt(text));
    return BigRat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

inline bool is_integer(const BigRat& x) { return boost::multiprecision::denominator(x) == 1; }

inline BigInt pow(const BigInt& base, std::uint64_t exponent)
{
    BigInt result = 1;
    BigInt b = base;
    while (exponent != 0) {
        if (exponent & 1u)
            result *= b;
        exponent >>= 1;
        if (exponent != 0)
            b *= b;
    }
    return result;
}

inline bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

/// Sorted distinct prime divisors of m (trial division; m is desk-scale).
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t m)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0)
                m /= d;
        }
    }
    if (m > 1)
        out.push_back(m);
    return out;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= bound; ++p)
        if (is_prime(p))
            out.push_back(p);
    return out;
}

/// p-adic valuation of a positive integer.
inline unsigned valuation(std::uint64_t m, std::uint64_t p)
{
    unsigned v = 0;
    while (m != 0 && m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

} // namespace cellalg
