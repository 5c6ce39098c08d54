/**
 * @file singularity.hpp
 * @brief The graded rings R_m = {(f,g) : f ≡ g mod x^m}, singularity indices and y^n-linearity.
 */
#pragma once

#include "zdinf/hom_ext.hpp"
#include "zdinf/poly.hpp"

namespace zdinf {

/// An element (f, g) of R_m. Throws NotInRing if f - g is not divisible by x^m.
class RmElement {
public:
    RmElement(int m, Poly f, Poly g);

    /// u = (x, x) and v = (x^m, 0).
    static RmElement u(FieldSpec field, int m);
    static RmElement v(FieldSpec field, int m);
    static RmElement one(FieldSpec field, int m);

    int m() const { return m_; }
    const Poly& f() const { return f_; }
    const Poly& g() const { return g_; }
    bool is_zero() const { return f_.is_zero() && g_.is_zero(); }
    /// Both components homogeneous of one common degree (zero components allowed).
    bool is_homogeneous() const;

    RmElement operator+(const RmElement& o) const;
    RmElement operator-(const RmElement& o) const;
    RmElement operator*(const RmElement& o) const;
    RmElement pow(unsigned e) const;

    friend bool operator==(const RmElement& a, const RmElement& b) { return a.m_ == b.m_ && a.f_ == b.f_ && a.g_ == b.g_; }

    std::string to_string() const;

private:
    void check_index(const RmElement& o) const;

    int m_;
    Poly f_;
    Poly g_;
};

/// Least m >= 0 with v_m L ⊆ L, where v_m is x^m on type-0 coordinates and 0 on type-1.
int singularity_index(const CObject& f);

/// Least n >= the singularity indices of both ends with f(y^n -) = y^n f(-).
/// Throws NotLatticeMorphism if an end has torsion or f mixes the two types.
int y_linearity_bound(const Morphism& f);

}  // namespace zdinf
