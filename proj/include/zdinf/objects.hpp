/**
 * @file objects.hpp
 * @brief Objects of the category: a torsion part ⊕ a typed lattice.
 *
 * Torsion convention: T(n, a) is the cyclic graded module k[x]/x^n with its
 * generator in degree -a, so it is one-dimensional in degrees -a .. -a+n-1.
 * With this convention shift(T(n,a), s) = T(n, a+s), which matches the lattice
 * shift (jumps e ↦ e - s), and the Serre twist sends T(n,a) to T(n,a-1).
 */
#pragma once

#include <string>
#include <vector>

#include "zdinf/lattice.hpp"

namespace zdinf {

struct TorsionSummand {
    int n = 1;  // length, >= 1
    int a = 0;  // generator sits in degree -a

    int bottom() const { return -a; }
    int top() const { return -a + n - 1; }
    bool covers(int degree) const { return degree >= bottom() && degree <= top(); }

    friend auto operator<=>(const TorsionSummand&, const TorsionSummand&) = default;
};

/// Multiset of T(n, a), kept sorted by (n, a).
class TorsionPart {
public:
    TorsionPart() = default;
    explicit TorsionPart(std::vector<TorsionSummand> summands);

    const std::vector<TorsionSummand>& summands() const { return summands_; }
    std::size_t size() const { return summands_.size(); }
    bool empty() const { return summands_.empty(); }
    /// Total k-dimension of the degree-d component.
    int dim_at(int degree) const;

    friend bool operator==(const TorsionPart&, const TorsionPart&) = default;

private:
    std::vector<TorsionSummand> summands_;
};

/// T ⊕ F with F a typed lattice of ambient rank p + q.
struct CObject {
    FieldSpec field{};
    TorsionPart torsion;
    GradedLattice lattice;

    CObject() : lattice(GradedLattice::zero(FieldSpec{})) {}
    CObject(FieldSpec f, TorsionPart t, GradedLattice l);
    static CObject zero(FieldSpec f) { return CObject(f, {}, GradedLattice::zero(f)); }
    static CObject from_lattice(GradedLattice l) { return CObject(l.field(), {}, std::move(l)); }
    static CObject from_torsion(FieldSpec f, std::vector<TorsionSummand> t) { return CObject(f, TorsionPart(std::move(t)), GradedLattice::zero(f)); }

    int p() const { return lattice.p(); }
    int q() const { return lattice.q(); }
    int rank() const { return lattice.rank(); }
    std::size_t torsion_count() const { return torsion.size(); }
    bool is_zero() const { return torsion.empty() && lattice.is_zero(); }
    bool is_torsion_free() const { return torsion.empty(); }
    bool is_torsion() const { return lattice.is_zero(); }

    std::string to_string() const;

    friend bool operator==(const CObject& a, const CObject& b) {
        return a.field == b.field && a.torsion == b.torsion && a.lattice == b.lattice;
    }
};

/// X(s): torsion T(n,a) ↦ T(n,a+s), lattice jumps e ↦ e - s.
CObject shift(const CObject& x, int s);
/// Swaps the roles of V0 and V1; torsion is untouched.
CObject sigma(const CObject& x);
/// V X = σ(X)(-1).
CObject serre_twist(const CObject& x);
/// V^{-1} X = σ(X(1)).
CObject inverse_serre_twist(const CObject& x);

/// Coordinate bookkeeping for a direct sum.
struct DirectSum {
    CObject object;
    /// coordinate_map[i][c]: ambient coordinate of the sum holding coordinate c of factor i.
    std::vector<std::vector<std::size_t>> coordinate_map;
    /// summand_map[i][s]: torsion summand index in the sum of summand s of factor i.
    std::vector<std::vector<std::size_t>> summand_map;
};

/// Type-0 coordinates of all factors come first (factor order), then type-1 ones.
DirectSum direct_sum(const std::vector<CObject>& factors);

/**
 * A homogeneous element of an object in a fixed degree.
 *
 * `tors[i]` is the coefficient of x^{degree + a_i} g_i for torsion summand i
 * and must vanish unless that summand covers `degree`. `lat` is the ambient
 * vector of the lattice component and lies in S_degree.
 */
struct Element {
    int degree = 0;
    Vec tors;
    Vec lat;

    Vec flatten() const { return concat(tors, lat); }
    bool is_zero() const { return is_zero_vec(tors) && is_zero_vec(lat); }
};

Element zero_element(const CObject& x, int degree);
/// x^k · e.
Element multiply_x(const CObject& x, const Element& e, int k);
Element add(const Element& u, const Element& v);
Element scale(const Scalar& c, const Element& e);
/// Rebuilds an element from its flattened coordinates.
Element unflatten(const CObject& x, int degree, std::span<const Scalar> flat);
/// The degree-d component of x inside k^{#summands + rank}.
Subspace degree_space(const CObject& x, int degree);
/// Throws ShapeMismatch if e is not an element of x.
void check_element(const CObject& x, const Element& e);

/**
 * A finite graded presentation coker(P1 → P0) together with its localization.
 *
 * Rows are generators of P0 (degree row_degrees[i]); columns are relations
 * (degree col_degrees[j]). Entry (i, j) is the homogeneous polynomial
 * coefficients(i, j) · x^{col_degrees[j] - row_degrees[i]}; a nonzero entry of
 * negative exponent is malformed. Column i of `localization` is the ambient
 * image of generator i after inverting x (the image is x^{row_degrees[i]}
 * times that constant vector). type_marks assigns 0 or 1 to each ambient
 * coordinate.
 */
struct Presentation {
    FieldSpec field{};
    std::vector<int> row_degrees;
    std::vector<int> col_degrees;
    Matrix coefficients;
    std::vector<int> type_marks;
    Matrix localization;
};

/// Σ coeff · x^{x_power} · g_generator, a homogeneous element of P0.
struct LiftTerm {
    std::size_t generator = 0;
    Scalar coeff;
    int x_power = 0;
};
using Lift = std::vector<LiftTerm>;

struct PresentationResult {
    CObject object;
    /// Image of each presentation generator as an element of `object`.
    std::vector<Element> generator_images;
    /// Lift to P0 of the generator of each torsion summand of `object`.
    std::vector<Lift> torsion_generator_lifts;
    /// Lift to P0 (inside the chosen torsion-free complement) of each canonical lattice generator.
    std::vector<Lift> lattice_generator_lifts;
    /// Ambient coordinates of `object` = type_permutation · presentation ambient coordinates.
    Matrix type_permutation;
};

/// Canonical object of coker(P) via a graded Smith normal form over k[x].
/// Throws ShapeMismatch for malformed input, InconsistentTypes if a relation
/// survives localization or the type marks are invalid, NotFullRank if the
/// localized rank differs from the number of ambient coordinates.
PresentationResult from_presentation(const Presentation& pres);

/// Finite sum of indecomposable injectives: E^0, E^1 and the x-divisible
/// modules k[x,x^-1]/x^c k[x] (one entry c per summand, c is the cutoff).
struct InjectiveProfile {
    int e0_copies = 0;
    int e1_copies = 0;
    std::vector<int> divisible;  // sorted cutoffs

    bool empty() const { return e0_copies == 0 && e1_copies == 0 && divisible.empty(); }
    friend bool operator==(const InjectiveProfile&, const InjectiveProfile&) = default;
};

struct InjectiveResolution {
    std::string embed;
    InjectiveProfile i0;
    InjectiveProfile i1;
};

/// 0 → X → I0 → I1 → 0: lattice F ↦ (p E^0 ⊕ q E^1, cutoffs = jumps of F),
/// T(n,a) ↦ (cutoff -a+n, cutoff -a).
InjectiveResolution injective_resolution(const CObject& x);

/// dim Hom(T(n,a), I) for a torsion summand and an injective profile.
int hom_dim_into(const TorsionSummand& t, const InjectiveProfile& injective);

}  // namespace zdinf
