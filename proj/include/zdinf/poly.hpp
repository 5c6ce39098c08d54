/**
 * @file poly.hpp
 * @brief Dense univariate polynomials in k[x].
 */
#pragma once

#include <string>

#include "zdinf/linalg.hpp"

namespace zdinf {

class Poly {
public:
    explicit Poly(FieldSpec field = {}) : field_(field) {}
    /// Coefficients in increasing degree; trailing zeros are dropped.
    Poly(FieldSpec field, Vec coefficients);
    /// c · x^degree.
    static Poly monomial(const Scalar& c, int degree);

    FieldSpec field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Smallest exponent with a nonzero coefficient, -1 for zero.
    int valuation() const;
    Scalar coefficient(int k) const;
    bool is_homogeneous() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    void trim();

    FieldSpec field_{};
    Vec coeffs_;
};

}  // namespace zdinf
