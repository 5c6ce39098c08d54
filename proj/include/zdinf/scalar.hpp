/**
 * @file scalar.hpp
 * @brief Exact field elements over Q or a prime field F_p, selected at run time.
 *
 * A Scalar always carries the FieldSpec it belongs to. Arithmetic between
 * scalars of different fields throws FieldMismatch; there is no coercion.
 */
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "zdinf/errors.hpp"

namespace zdinf {

/// The coefficient field k: the rationals (p == 0) or F_p for a prime p < 2^62.
class FieldSpec {
public:
    constexpr FieldSpec() = default;

    static constexpr FieldSpec rationals() { return FieldSpec(); }
    /// Throws NotPrime unless p is prime.
    static FieldSpec prime(std::uint64_t p);
    /// Accepts "Q" or "Fp:<p>".
    static FieldSpec parse(std::string_view text);

    constexpr bool is_rational() const { return p_ == 0; }
    constexpr std::uint64_t characteristic() const { return p_; }
    std::string to_string() const;

    friend constexpr bool operator==(FieldSpec a, FieldSpec b) { return a.p_ == b.p_; }

private:
    explicit constexpr FieldSpec(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

class Scalar {
public:
    Scalar() = default;
    Scalar(FieldSpec field, long long value);
    static Scalar zero(FieldSpec field) { return Scalar(field, 0); }
    static Scalar one(FieldSpec field) { return Scalar(field, 1); }
    /// Image of a rational number; throws std::domain_error if the denominator vanishes mod p.
    static Scalar from_rational(FieldSpec field, const mpq_class& value);
    /// Parses "3", "-2/5"; interpreted in `field`.
    static Scalar parse(FieldSpec field, std::string_view text);
    /// Small random element: integers in [-3, 3] over Q, uniform over F_p.
    static Scalar random(FieldSpec field, std::mt19937_64& rng);

    FieldSpec field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    /// Throws std::domain_error on zero.
    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// "a/b" over Q, the residue in [0, p) over F_p.
    std::string to_string() const;

private:
    void check_same_field(const Scalar& o) const;

    FieldSpec field_{};
    mpq_class q_{};           // used when field_ is Q
    std::uint64_t r_ = 0;     // used when field_ is F_p
};

}  // namespace zdinf
