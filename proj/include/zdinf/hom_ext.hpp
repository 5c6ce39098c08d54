/**
 * @file hom_ext.hpp
 * @brief Hom and Ext^1 spaces, Yoneda products, the trace map and the Serre pairings.
 *
 * Morphism layout. For f : X → Y,
 *  - `lat` is the constant block-diagonal matrix acting on the localized lattices,
 *  - `lat_to_tors[j]` holds the Y-torsion coordinates of f(x^{e_j} dir_j) for the
 *    canonical generators of X's lattice,
 *  - `tors_to_tors[i]` holds the Y-torsion coordinates of f(g_i) for the generator
 *    g_i of the i-th torsion summand of X (degree -a_i).
 * Torsion never maps to the lattice.
 *
 * Ext class layout. A class in Ext^1(X, Y) is a pair (H, z):
 *  - H is an off-diagonal r_Y × r_X matrix; the middle term of the extension has
 *    lattice generated by Y's lattice and the vectors (H d_j, d_j),
 *  - z_i is an element of Y in degree -a_i + n_i, one per torsion summand of X;
 *    the middle term has a lift g~_i of g_i with x^{n_i} g~_i = z_i.
 * Two representatives are equivalent modulo off-diagonal images of graded
 * k[x]-maps (for H) and modulo x^{n_i} Y_{-a_i} (for z_i).
 */
#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "zdinf/objects.hpp"

namespace zdinf {

struct Morphism {
    CObject src;
    CObject dst;
    Matrix lat;
    std::vector<Vec> lat_to_tors;
    std::vector<Vec> tors_to_tors;
};

Morphism zero_morphism(const CObject& x, const CObject& y);
Morphism identity_morphism(const CObject& x);

/// Throws InvalidMorphism unless f is a well-formed degree-0 morphism of the category.
void validate(const Morphism& f);

/// The element x^{e_j} dir_j of x (canonical generator j).
Element lattice_generator(const CObject& x, std::size_t j);
/// The generator of torsion summand i of x.
Element torsion_generator(const CObject& x, std::size_t i);

Element apply(const Morphism& f, const Element& e);

/// The morphism sending each canonical generator to the given image. Validated.
Morphism morphism_from_images(const CObject& src, const CObject& dst, const std::vector<Element>& lattice_images,
                              const std::vector<Element>& torsion_images);

/// g ∘ f. Throws ComposabilityError if f.dst != g.src.
Morphism compose(const Morphism& g, const Morphism& f);
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Scalar& c, const Morphism& f);
bool operator==(const Morphism& f, const Morphism& g);

/// Coordinates of all blocks in a fixed order (lat row-major, then lat_to_tors, then tors_to_tors).
Vec flatten(const Morphism& f);
Morphism unflatten_morphism(const CObject& src, const CObject& dst, std::span<const Scalar> flat);

/// Smallest and largest degree at which x or y can change; outside [lo, hi] every
/// degree component and every degree-0 map between them is constant.
std::pair<int, int> degree_window(const CObject& x, const CObject& y);

/// f restricted to degree d, as a map from degree_space(src, d) (basis listed in
/// `basis`) with the flattened images as columns of `images`.
struct DegreeMap {
    std::vector<Vec> basis;
    Matrix images;
};
DegreeMap degree_map(const Morphism& f, int degree);

bool is_mono(const Morphism& f);
bool is_epi(const Morphism& f);
/// Some e with f(e) = target, if one exists.
std::optional<Element> preimage(const Morphism& f, const Element& target);
/// Two-sided inverse if f is an isomorphism.
std::optional<Morphism> inverse(const Morphism& f);

class HomSpace {
public:
    HomSpace() = default;
    HomSpace(CObject src, CObject dst, std::vector<Morphism> basis);

    const CObject& src() const { return src_; }
    const CObject& dst() const { return dst_; }
    const std::vector<Morphism>& basis() const& { return basis_; }
    std::vector<Morphism> basis() && { return std::move(basis_); }
    std::size_t dim() const { return basis_.size(); }

    Vec coordinates(const Morphism& f) const;
    Morphism element(std::span<const Scalar> coeffs) const;

private:
    CObject src_;
    CObject dst_;
    std::vector<Morphism> basis_;
    Matrix flat_basis_;
};

/// Graded k[x]-maps between two lattices, as constant r'×r matrices.
struct KxHomSpace {
    std::vector<Matrix> basis;
    std::size_t dim() const { return basis.size(); }
};

KxHomSpace hom_kx_space(const CObject& f, const CObject& g);
HomSpace hom_space(const CObject& x, const CObject& y);

struct ExtClass {
    CObject src;
    CObject dst;
    Matrix offdiag;
    std::vector<Element> cocycles;
};

ExtClass zero_class(const CObject& x, const CObject& y);
ExtClass add(const ExtClass& c, const ExtClass& d);
ExtClass scale(const Scalar& s, const ExtClass& c);

class ExtSpace {
public:
    ExtSpace() = default;
    ExtSpace(const CObject& src, const CObject& dst);

    const CObject& src() const { return src_; }
    const CObject& dst() const { return dst_; }
    const std::vector<ExtClass>& basis() const& { return basis_; }
    std::vector<ExtClass> basis() && { return std::move(basis_); }
    std::size_t dim() const { return basis_.size(); }
    /// Dimension of the lattice-to-lattice part.
    std::size_t lattice_dim() const { return lattice_.dim(); }

    /// Canonical representative of the class of c.
    ExtClass reduce(const ExtClass& c) const;
    bool is_zero(const ExtClass& c) const;
    Vec coordinates(const ExtClass& c) const;
    ExtClass element(std::span<const Scalar> coeffs) const;

private:
    void check(const ExtClass& c) const;

    CObject src_;
    CObject dst_;
    QuotientSpace lattice_;
    std::vector<QuotientSpace> torsion_;
    std::vector<int> cocycle_degrees_;
    std::vector<ExtClass> basis_;
};

ExtSpace ext_space(const CObject& x, const CObject& y);

/// dim Ext^1(x, y) computed independently: through injective resolutions of y
/// for the torsion summands of x, and through the cokernel description for the
/// lattice part.
int ext_dim_via_injectives(const CObject& x, const CObject& y);

/// c ∘ f (pullback of c along f).
ExtClass compose(const ExtClass& c, const Morphism& f);
/// g ∘ c (pushout of c along g).
ExtClass compose(const Morphism& g, const ExtClass& c);

using Arrow = std::variant<Morphism, ExtClass>;

struct YonedaProduct {
    std::optional<Arrow> value;  // empty when both factors have degree one
    bool degree_two = false;     // the product lies in Ext^2 = 0
};

/// g ∘ f for arrows of total degree at most one; Ext classes are returned reduced.
YonedaProduct yoneda_compose(const Arrow& g, const Arrow& f);

/// V on morphisms: V f : V X → V Y.
Morphism serre_twist(const Morphism& f);
/// V on classes: V c ∈ Ext^1(V X, V Y).
ExtClass serre_twist(const ExtClass& c);

/// Trace map on Ext^1(F, V F) for a lattice object F. Throws ShapeMismatch otherwise.
Scalar eta(const CObject& f, const ExtClass& c);

/// Gram matrix of Hom(F,G) × Ext^1(G,VF) → k, (f,g) ↦ η_F(g∘f).
Matrix serre_gram(const CObject& f, const CObject& g);
/// Gram matrix of Ext^1(F,G) × Hom(G,VF) → k, (f,g) ↦ η_F(g∘f).
Matrix serre_gram_flipped(const CObject& f, const CObject& g);

struct SerreReport {
    std::size_t hom_dim = 0;
    std::size_t ext_dim = 0;  // dim Ext^1(Y, V X)
    bool dims_equal = false;
    bool torsion_free = false;
    std::size_t gram_rank = 0;
    std::size_t flipped_gram_rank = 0;
    bool pass = false;
};

/// dim Hom(X,Y) = dim Ext^1(Y,VX), and non-degenerate pairings for lattice pairs.
SerreReport serre_check(const CObject& x, const CObject& y);

}  // namespace zdinf
