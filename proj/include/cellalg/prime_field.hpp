#pragma once

#include "cellalg/numeric.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cellalg {

/// Arithmetic in F_p on raw residues. Matrix kernels are written against
/// this interface (see RationalField for the characteristic-zero twin).
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint64_t p) : p_(p)
    {
        if (!is_prime(p) || p > 0xFFFFu)
            throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 65536");
    }

    std::uint64_t modulus() const noexcept { return p_; }

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1; }
    bool is_zero(value_type a) const noexcept { return a == 0; }

    value_type reduce(std::int64_t a) const noexcept
    {
        const auto p = static_cast<std::int64_t>(p_);
        return static_cast<value_type>(((a % p) + p) % p);
    }

    value_type reduce(const BigInt& a) const
    {
        BigInt r = a % p_;
        if (r < 0)
            r += p_;
        return static_cast<value_type>(r);
    }

    value_type add(value_type a, value_type b) const noexcept
    {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<value_type>(s >= p_ ? s - p_ : s);
    }
    value_type sub(value_type a, value_type b) const noexcept
    {
        return static_cast<value_type>(a >= b ? a - b : a + p_ - b);
    }
    value_type neg(value_type a) const noexcept { return a == 0 ? 0 : static_cast<value_type>(p_ - a); }
    value_type mul(value_type a, value_type b) const noexcept
    {
        return static_cast<value_type>((std::uint64_t{a} * b) % p_);
    }

    value_type pow(value_type a, std::uint64_t e) const noexcept
    {
        value_type r = 1;
        while (e != 0) {
            if (e & 1u)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    value_type inv(value_type a) const
    {
        if (a == 0)
            throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
        return pow(a, p_ - 2);
    }

    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

/// The rationals, with the same interface as PrimeField.
struct RationalField {
    using value_type = BigRat;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(const value_type& a) const { return a == 0; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const
    {
        if (a == 0)
            throw std::domain_error("inverse of zero rational");
        return 1 / a;
    }
    value_type div(const value_type& a, const value_type& b) const { return a * inv(b); }
};

/// A residue together with its modulus. Mixing moduli is an error.
class FpElement {
public:
    FpElement(std::int64_t value, std::uint64_t p) : field_(p), v_(field_.reduce(value)) {}
    FpElement(PrimeField field, PrimeField::value_type residue) : field_(field), v_(residue % field.modulus()) {}

    std::uint32_t value() const noexcept { return v_; }
    std::uint64_t modulus() const noexcept { return field_.modulus(); }

    FpElement operator+(const FpElement& o) const { return {field_, field_.add(v_, checked(o))}; }
    FpElement operator-(const FpElement& o) const { return {field_, field_.sub(v_, checked(o))}; }
    FpElement operator*(const FpElement& o) const { return {field_, field_.mul(v_, checked(o))}; }
    FpElement operator/(const FpElement& o) const { return {field_, field_.div(v_, checked(o))}; }
    FpElement operator-() const { return {field_, field_.neg(v_)}; }
    FpElement inverse() const { return {field_, field_.inv(v_)}; }
    FpElement pow(std::uint64_t e) const { return {field_, field_.pow(v_, e)}; }

    friend bool operator==(const FpElement& a, const FpElement& b)
    {
        return a.modulus() == b.modulus() && a.v_ == b.v_;
    }

    friend std::ostream& operator<<(std::ostream& os, const FpElement& a)
    {
        return os << a.v_ << " (mod " << a.modulus() << ")";
    }

private:
    std::uint32_t checked(const FpElement& o) const
    {
        if (o.modulus() != modulus())
            throw std::invalid_argument("mixed moduli in F_p arithmetic");
        return o.v_;
    }

    PrimeField field_;
    std::uint32_t v_;
};

} // namespace cellalg
