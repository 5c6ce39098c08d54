#include "zdinf/singularity.hpp"

#include <algorithm>

namespace zdinf {

namespace {

bool divisible_by_power(const Poly& p, int m) { return p.is_zero() || p.valuation() >= m; }

Vec project_type0(const GradedLattice& l, Vec v) {
    for (std::size_t k = static_cast<std::size_t>(l.p()); k < v.size(); ++k) v[k] = Scalar::zero(l.field());
    return v;
}

}  // namespace

RmElement::RmElement(int m, Poly f, Poly g) : m_(m), f_(std::move(f)), g_(std::move(g)) {
    if (m < 0) throw RangeError("R_m needs m >= 0, got m = " + std::to_string(m));
    if (!(f_.field() == g_.field())) throw FieldMismatch("components of an R_m element over different fields");
    if (!divisible_by_power(f_ - g_, m)) throw NotInRing("(" + f_.to_string() + ", " + g_.to_string() + ") is not in R_" + std::to_string(m));
}

RmElement RmElement::u(FieldSpec field, int m) {
    const Poly x = Poly::monomial(Scalar::one(field), 1);
    return {m, x, x};
}

RmElement RmElement::v(FieldSpec field, int m) { return {m, Poly::monomial(Scalar::one(field), m), Poly(field)}; }

RmElement RmElement::one(FieldSpec field, int m) {
    const Poly c = Poly::monomial(Scalar::one(field), 0);
    return {m, c, c};
}

bool RmElement::is_homogeneous() const {
    if (!f_.is_homogeneous() || !g_.is_homogeneous()) return false;
    return f_.is_zero() || g_.is_zero() || f_.degree() == g_.degree();
}

void RmElement::check_index(const RmElement& o) const {
    if (m_ != o.m_) throw MixedIndex("R_" + std::to_string(m_) + " and R_" + std::to_string(o.m_) + " elements do not combine");
}

RmElement RmElement::operator+(const RmElement& o) const {
    check_index(o);
    return {m_, f_ + o.f_, g_ + o.g_};
}

RmElement RmElement::operator-(const RmElement& o) const {
    check_index(o);
    return {m_, f_ - o.f_, g_ - o.g_};
}

RmElement RmElement::operator*(const RmElement& o) const {
    check_index(o);
    return {m_, f_ * o.f_, g_ * o.g_};
}

RmElement RmElement::pow(unsigned e) const { return {m_, f_.pow(e), g_.pow(e)}; }

std::string RmElement::to_string() const { return "(" + f_.to_string() + ", " + g_.to_string() + ")"; }

int singularity_index(const CObject& f) {
    if (!f.is_torsion_free()) throw ShapeMismatch("singularity index needs a lattice object");
    if (f.lattice.is_zero()) return 0;
    const GradedLattice& l = f.lattice;
    int index = 0;
    for (const auto& gen : l.generators()) {
        const Vec moved = project_type0(l, gen.dir);
        int m = 0;
        while (!l.filtration(gen.jump + m).contains(moved)) ++m;
        index = std::max(index, m);
    }
    return index;
}

int y_linearity_bound(const Morphism& f) {
    if (!f.src.is_torsion_free() || !f.dst.is_torsion_free()) throw NotLatticeMorphism("y-linearity needs lattice objects at both ends");
    const int n = std::max(singularity_index(f.src), singularity_index(f.dst));
    if (f.src.lattice.is_zero() || f.dst.lattice.is_zero()) return n;
    // y^n is x^n times the type-0 projection on each end; f commutes with it iff it does so on generators.
    for (const auto& gen : f.src.lattice.generators()) {
        const Vec lhs = f.lat.apply(project_type0(f.src.lattice, gen.dir));
        const Vec rhs = project_type0(f.dst.lattice, f.lat.apply(gen.dir));
        if (lhs != rhs) throw NotLatticeMorphism("morphism does not commute with y^n for any n");
    }
    return n;
}

}  // namespace zdinf
