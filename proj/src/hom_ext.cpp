#include "zdinf/hom_ext.hpp"

#include <algorithm>

namespace zdinf {

namespace {

std::size_t rank_of(const CObject& x) { return static_cast<std::size_t>(x.rank()); }

void check_same_field(const CObject& x, const CObject& y) {
    if (!(x.field == y.field)) throw FieldMismatch("objects over " + x.field.to_string() + " and " + y.field.to_string());
}

/// Torsion coordinates moved from degree `from` up to degree `to`.
Vec raise(const TorsionPart& t, const Vec& coords, int to) {
    Vec out = coords;
    const auto& s = t.summands();
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!s[i].covers(to)) out[i] = Scalar::zero(out[i].field());
    return out;
}

/// T(n_l, a_l) receives a degree-0 map from T(n_i, a_i) sending g_i to a multiple of x^k g_l.
bool admissible(const TorsionSummand& from, const TorsionSummand& to) {
    return to.covers(from.bottom()) && from.bottom() + from.n >= to.bottom() + to.n;
}

void add_into(Vec& acc, const Scalar& c, const Vec& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
}

Matrix matrix_from_flat(FieldSpec field, std::size_t rows, std::size_t cols, std::span<const Scalar> flat) {
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = flat[i * cols + j];
    return m;
}

Vec flat_from_matrix(const Matrix& m) {
    Vec out;
    out.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    return out;
}

/// Constant matrices A (restricted to `positions`) with A dir_j ∈ S'_{e_j} for every generator of f.
std::vector<Matrix> lattice_maps(const GradedLattice& f, const GradedLattice& g, bool block_diagonal) {
    const FieldSpec field = f.field();
    const auto r = static_cast<std::size_t>(f.rank());
    const auto rp = static_cast<std::size_t>(g.rank());
    std::vector<std::pair<std::size_t, std::size_t>> positions;
    for (std::size_t u = 0; u < rp; ++u)
        for (std::size_t v = 0; v < r; ++v)
            if (!block_diagonal || g.type_of(static_cast<int>(u)) == f.type_of(static_cast<int>(v))) positions.emplace_back(u, v);

    std::vector<Vec> constraints;
    for (const auto& gen : f.generators()) {
        for (const auto& alpha : g.filtration(gen.jump).annihilator()) {
            Vec row = zero_vec(field, positions.size());
            bool nonzero = false;
            for (std::size_t k = 0; k < positions.size(); ++k) {
                const auto [u, v] = positions[k];
                if (alpha[u].is_zero() || gen.dir[v].is_zero()) continue;
                row[k] = alpha[u] * gen.dir[v];
                nonzero = true;
            }
            if (nonzero) constraints.push_back(std::move(row));
        }
    }
    const Matrix system = Matrix::from_rows(field, positions.size(), constraints);
    std::vector<Matrix> out;
    for (const auto& sol : nullspace(system)) {
        Matrix a(field, rp, r);
        for (std::size_t k = 0; k < positions.size(); ++k) a(positions[k].first, positions[k].second) = sol[k];
        out.push_back(std::move(a));
    }
    return out;
}

Matrix offdiag_part(const Matrix& h, const GradedLattice& src, const GradedLattice& dst) {
    Matrix out = h;
    for (std::size_t u = 0; u < h.rows(); ++u)
        for (std::size_t v = 0; v < h.cols(); ++v)
            if (dst.type_of(static_cast<int>(u)) == src.type_of(static_cast<int>(v))) out(u, v) = Scalar::zero(h.field());
    return out;
}

Matrix lattice_dirs_inverse(const GradedLattice& l) {
    const auto r = static_cast<std::size_t>(l.rank());
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < r; ++k) cols.push_back(l.generator_coefficients(unit_vec(l.field(), r, k)));
    return Matrix::from_columns(l.field(), r, cols);
}

}  // namespace

Morphism zero_morphism(const CObject& x, const CObject& y) {
    check_same_field(x, y);
    Morphism f{x, y, Matrix(x.field, rank_of(y), rank_of(x)), {}, {}};
    f.lat_to_tors.assign(rank_of(x), zero_vec(x.field, y.torsion_count()));
    f.tors_to_tors.assign(x.torsion_count(), zero_vec(x.field, y.torsion_count()));
    return f;
}

Morphism identity_morphism(const CObject& x) {
    Morphism f = zero_morphism(x, x);
    f.lat = Matrix::identity(x.field, rank_of(x));
    for (std::size_t i = 0; i < x.torsion_count(); ++i) f.tors_to_tors[i] = unit_vec(x.field, x.torsion_count(), i);
    return f;
}

void validate(const Morphism& f) {
    const CObject& x = f.src;
    const CObject& y = f.dst;
    check_same_field(x, y);
    if (f.lat.rows() != rank_of(y) || f.lat.cols() != rank_of(x)) throw InvalidMorphism("lattice block has the wrong shape");
    if (f.lat_to_tors.size() != rank_of(x) || f.tors_to_tors.size() != x.torsion_count())
        throw InvalidMorphism("torsion blocks have the wrong number of entries");
    for (std::size_t u = 0; u < f.lat.rows(); ++u)
        for (std::size_t v = 0; v < f.lat.cols(); ++v)
            if (!f.lat(u, v).is_zero() && y.lattice.type_of(static_cast<int>(u)) != x.lattice.type_of(static_cast<int>(v)))
                throw InvalidMorphism("lattice block mixes types at (" + std::to_string(u) + "," + std::to_string(v) + ")");
    const auto& ys = y.torsion.summands();
    const auto& gens = x.lattice.generators();
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (!y.lattice.filtration(gens[j].jump).contains(f.lat.apply(gens[j].dir)))
            throw InvalidMorphism("lattice block does not preserve the filtration at degree " + std::to_string(gens[j].jump));
        if (f.lat_to_tors[j].size() != ys.size()) throw InvalidMorphism("lattice-to-torsion entry has the wrong length");
        for (std::size_t l = 0; l < ys.size(); ++l)
            if (!f.lat_to_tors[j][l].is_zero() && !ys[l].covers(gens[j].jump))
                throw InvalidMorphism("lattice generator mapped outside a torsion summand");
    }
    const auto& xs = x.torsion.summands();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (f.tors_to_tors[i].size() != ys.size()) throw InvalidMorphism("torsion-to-torsion entry has the wrong length");
        for (std::size_t l = 0; l < ys.size(); ++l)
            if (!f.tors_to_tors[i][l].is_zero() && !admissible(xs[i], ys[l]))
                throw InvalidMorphism("torsion generator mapped to an element not killed by the same power of x");
    }
}

Element lattice_generator(const CObject& x, std::size_t j) {
    const auto& g = x.lattice.generators().at(j);
    return {g.jump, zero_vec(x.field, x.torsion_count()), g.dir};
}

Element torsion_generator(const CObject& x, std::size_t i) {
    const auto& t = x.torsion.summands().at(i);
    return {t.bottom(), unit_vec(x.field, x.torsion_count(), i), zero_vec(x.field, rank_of(x))};
}

Element apply(const Morphism& f, const Element& e) {
    if (e.tors.size() != f.src.torsion_count() || e.lat.size() != rank_of(f.src)) throw DimensionMismatch("element does not belong to the source");
    Element out = zero_element(f.dst, e.degree);
    out.lat = f.lat.apply(e.lat);
    if (f.dst.torsion_count() == 0) return out;
    if (!is_zero_vec(e.lat)) {
        const Vec c = f.src.lattice.generator_coefficients(e.lat);
        for (std::size_t j = 0; j < c.size(); ++j)
            if (!c[j].is_zero()) add_into(out.tors, c[j], raise(f.dst.torsion, f.lat_to_tors[j], e.degree));
    }
    for (std::size_t i = 0; i < e.tors.size(); ++i)
        if (!e.tors[i].is_zero()) add_into(out.tors, e.tors[i], raise(f.dst.torsion, f.tors_to_tors[i], e.degree));
    return out;
}

Morphism morphism_from_images(const CObject& src, const CObject& dst, const std::vector<Element>& lattice_images,
                              const std::vector<Element>& torsion_images) {
    Morphism f = zero_morphism(src, dst);
    const auto& gens = src.lattice.generators();
    if (lattice_images.size() != gens.size() || torsion_images.size() != src.torsion_count())
        throw InvalidMorphism("one image per generator is required");
    const FieldSpec field = src.field;
    Matrix images(field, rank_of(dst), gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        const Element& e = lattice_images[j];
        if (e.degree != gens[j].jump) throw InvalidMorphism("image of a lattice generator has the wrong degree");
        if (e.lat.size() != rank_of(dst) || e.tors.size() != dst.torsion_count()) throw InvalidMorphism("image has the wrong shape");
        for (std::size_t u = 0; u < e.lat.size(); ++u) images(u, j) = e.lat[u];
        f.lat_to_tors[j] = e.tors;
    }
    if (!gens.empty()) f.lat = images * lattice_dirs_inverse(src.lattice);
    for (std::size_t i = 0; i < torsion_images.size(); ++i) {
        const Element& e = torsion_images[i];
        if (e.degree != src.torsion.summands()[i].bottom()) throw InvalidMorphism("image of a torsion generator has the wrong degree");
        if (e.tors.size() != dst.torsion_count()) throw InvalidMorphism("image has the wrong shape");
        if (!is_zero_vec(e.lat)) throw InvalidMorphism("torsion mapped to a nonzero lattice element");
        f.tors_to_tors[i] = e.tors;
    }
    validate(f);
    return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(f.dst == g.src)) throw ComposabilityError("target of the first morphism differs from the source of the second");
    Morphism h = zero_morphism(f.src, g.dst);
    h.lat = g.lat * f.lat;
    for (std::size_t j = 0; j < h.lat_to_tors.size(); ++j) h.lat_to_tors[j] = apply(g, apply(f, lattice_generator(f.src, j))).tors;
    for (std::size_t i = 0; i < h.tors_to_tors.size(); ++i) h.tors_to_tors[i] = apply(g, apply(f, torsion_generator(f.src, i))).tors;
    return h;
}

Morphism add(const Morphism& f, const Morphism& g) {
    if (!(f.src == g.src) || !(f.dst == g.dst)) throw ComposabilityError("adding morphisms between different objects");
    Morphism h = f;
    h.lat = f.lat + g.lat;
    for (std::size_t j = 0; j < h.lat_to_tors.size(); ++j) add_into(h.lat_to_tors[j], Scalar::one(f.src.field), g.lat_to_tors[j]);
    for (std::size_t i = 0; i < h.tors_to_tors.size(); ++i) add_into(h.tors_to_tors[i], Scalar::one(f.src.field), g.tors_to_tors[i]);
    return h;
}

Morphism scale(const Scalar& c, const Morphism& f) {
    Morphism h = f;
    h.lat = f.lat.scaled(c);
    for (auto& v : h.lat_to_tors) v = scale(c, v);
    for (auto& v : h.tors_to_tors) v = scale(c, v);
    return h;
}

bool operator==(const Morphism& f, const Morphism& g) {
    return f.src == g.src && f.dst == g.dst && f.lat == g.lat && f.lat_to_tors == g.lat_to_tors && f.tors_to_tors == g.tors_to_tors;
}

Vec flatten(const Morphism& f) {
    Vec out = flat_from_matrix(f.lat);
    for (const auto& v : f.lat_to_tors) out.insert(out.end(), v.begin(), v.end());
    for (const auto& v : f.tors_to_tors) out.insert(out.end(), v.begin(), v.end());
    return out;
}

Morphism unflatten_morphism(const CObject& src, const CObject& dst, std::span<const Scalar> flat) {
    Morphism f = zero_morphism(src, dst);
    const std::size_t s = dst.torsion_count();
    const std::size_t expected = rank_of(dst) * rank_of(src) + (rank_of(src) + src.torsion_count()) * s;
    if (flat.size() != expected) throw DimensionMismatch("flattened morphism has the wrong length");
    f.lat = matrix_from_flat(src.field, rank_of(dst), rank_of(src), flat.first(rank_of(dst) * rank_of(src)));
    std::size_t pos = rank_of(dst) * rank_of(src);
    for (auto& v : f.lat_to_tors)
        for (std::size_t l = 0; l < s; ++l) v[l] = flat[pos++];
    for (auto& v : f.tors_to_tors)
        for (std::size_t l = 0; l < s; ++l) v[l] = flat[pos++];
    return f;
}

std::pair<int, int> degree_window(const CObject& x, const CObject& y) {
    bool any = false;
    int lo = 0, hi = 0;
    auto take = [&](int lo_d, int hi_d) {
        lo = any ? std::min(lo, lo_d) : lo_d;
        hi = any ? std::max(hi, hi_d) : hi_d;
        any = true;
    };
    for (const CObject* o : {&x, &y}) {
        if (!o->lattice.is_zero()) take(o->lattice.min_jump(), o->lattice.max_jump());
        for (const auto& t : o->torsion.summands()) take(t.bottom(), t.top());
    }
    return {lo - 1, hi + 1};
}

DegreeMap degree_map(const Morphism& f, int degree) {
    DegreeMap out;
    out.basis = degree_space(f.src, degree).basis();
    std::vector<Vec> cols;
    for (const auto& b : out.basis) cols.push_back(apply(f, unflatten(f.src, degree, b)).flatten());
    out.images = Matrix::from_columns(f.src.field, f.dst.torsion_count() + rank_of(f.dst), cols);
    return out;
}

bool is_mono(const Morphism& f) {
    const auto [lo, hi] = degree_window(f.src, f.dst);
    for (int d = lo; d <= hi; ++d) {
        const DegreeMap m = degree_map(f, d);
        if (rank(m.images) != m.basis.size()) return false;
    }
    return true;
}

bool is_epi(const Morphism& f) {
    const auto [lo, hi] = degree_window(f.src, f.dst);
    for (int d = lo; d <= hi; ++d) {
        const DegreeMap m = degree_map(f, d);
        if (rank(m.images) != degree_space(f.dst, d).dim()) return false;
    }
    return true;
}

std::optional<Element> preimage(const Morphism& f, const Element& target) {
    const DegreeMap m = degree_map(f, target.degree);
    const auto c = solve(m.images, target.flatten());
    if (!c) return std::nullopt;
    Vec flat = zero_vec(f.src.field, f.src.torsion_count() + rank_of(f.src));
    for (std::size_t k = 0; k < m.basis.size(); ++k) add_into(flat, (*c)[k], m.basis[k]);
    return unflatten(f.src, target.degree, flat);
}

std::optional<Morphism> inverse(const Morphism& f) {
    std::vector<Element> lat_images, tors_images;
    for (std::size_t j = 0; j < rank_of(f.dst); ++j) {
        auto e = preimage(f, lattice_generator(f.dst, j));
        if (!e) return std::nullopt;
        lat_images.push_back(std::move(*e));
    }
    for (std::size_t i = 0; i < f.dst.torsion_count(); ++i) {
        auto e = preimage(f, torsion_generator(f.dst, i));
        if (!e) return std::nullopt;
        tors_images.push_back(std::move(*e));
    }
    Morphism g;
    try {
        g = morphism_from_images(f.dst, f.src, lat_images, tors_images);
    } catch (const InvalidMorphism&) {
        return std::nullopt;
    }
    if (!(compose(g, f) == identity_morphism(f.src)) || !(compose(f, g) == identity_morphism(f.dst))) return std::nullopt;
    return g;
}

HomSpace::HomSpace(CObject src, CObject dst, std::vector<Morphism> basis) : src_(std::move(src)), dst_(std::move(dst)), basis_(std::move(basis)) {
    std::vector<Vec> cols;
    for (const auto& f : basis_) cols.push_back(flatten(f));
    flat_basis_ = Matrix::from_columns(src_.field, flatten(zero_morphism(src_, dst_)).size(), cols);
}

Vec HomSpace::coordinates(const Morphism& f) const {
    const auto c = solve(flat_basis_, flatten(f));
    if (!c) throw InvalidMorphism("morphism is not in the span of the basis");
    return *c;
}

Morphism HomSpace::element(std::span<const Scalar> coeffs) const {
    if (coeffs.size() != basis_.size()) throw DimensionMismatch("coefficient vector does not match the Hom basis");
    return unflatten_morphism(src_, dst_, flat_basis_.apply(coeffs));
}

KxHomSpace hom_kx_space(const CObject& f, const CObject& g) {
    check_same_field(f, g);
    if (!f.is_torsion_free() || !g.is_torsion_free()) throw ShapeMismatch("hom_kx_space expects lattice objects");
    return {lattice_maps(f.lattice, g.lattice, false)};
}

HomSpace hom_space(const CObject& x, const CObject& y) {
    check_same_field(x, y);
    std::vector<Morphism> basis;
    for (auto& a : lattice_maps(x.lattice, y.lattice, true)) {
        Morphism f = zero_morphism(x, y);
        f.lat = std::move(a);
        basis.push_back(std::move(f));
    }
    const auto& ys = y.torsion.summands();
    const auto& gens = x.lattice.generators();
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t l = 0; l < ys.size(); ++l)
            if (ys[l].covers(gens[j].jump)) {
                Morphism f = zero_morphism(x, y);
                f.lat_to_tors[j][l] = Scalar::one(x.field);
                basis.push_back(std::move(f));
            }
    const auto& xs = x.torsion.summands();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t l = 0; l < ys.size(); ++l)
            if (admissible(xs[i], ys[l])) {
                Morphism f = zero_morphism(x, y);
                f.tors_to_tors[i][l] = Scalar::one(x.field);
                basis.push_back(std::move(f));
            }
    return HomSpace(x, y, std::move(basis));
}

ExtClass zero_class(const CObject& x, const CObject& y) {
    check_same_field(x, y);
    ExtClass c{x, y, Matrix(x.field, rank_of(y), rank_of(x)), {}};
    for (const auto& t : x.torsion.summands()) c.cocycles.push_back(zero_element(y, t.bottom() + t.n));
    return c;
}

ExtClass add(const ExtClass& c, const ExtClass& d) {
    if (!(c.src == d.src) || !(c.dst == d.dst)) throw ComposabilityError("adding classes in different Ext groups");
    ExtClass out = c;
    out.offdiag = c.offdiag + d.offdiag;
    for (std::size_t i = 0; i < out.cocycles.size(); ++i) out.cocycles[i] = add(c.cocycles[i], d.cocycles[i]);
    return out;
}

ExtClass scale(const Scalar& s, const ExtClass& c) {
    ExtClass out = c;
    out.offdiag = c.offdiag.scaled(s);
    for (auto& z : out.cocycles) z = scale(s, z);
    return out;
}

ExtSpace::ExtSpace(const CObject& src, const CObject& dst) : src_(src), dst_(dst) {
    check_same_field(src, dst);
    const FieldSpec field = src.field;
    const std::size_t r = rank_of(src), rp = rank_of(dst);
    const std::size_t n = r * rp;

    std::vector<Vec> killed;
    for (std::size_t u = 0; u < rp; ++u)
        for (std::size_t v = 0; v < r; ++v)
            if (dst.lattice.type_of(static_cast<int>(u)) == src.lattice.type_of(static_cast<int>(v))) killed.push_back(unit_vec(field, n, u * r + v));
    if (r > 0 && rp > 0)
        for (const auto& a : lattice_maps(src.lattice, dst.lattice, false)) killed.push_back(flat_from_matrix(a));
    lattice_ = QuotientSpace(Subspace::full(field, n), Subspace::span(field, n, killed));

    const std::size_t width = dst.torsion_count() + rp;
    for (const auto& t : src.torsion.summands()) {
        const int top = t.bottom() + t.n;
        std::vector<Vec> image;
        for (const auto& b : degree_space(dst, t.bottom()).basis()) image.push_back(multiply_x(dst, unflatten(dst, t.bottom(), b), t.n).flatten());
        torsion_.emplace_back(degree_space(dst, top), Subspace::span(field, width, image));
        cocycle_degrees_.push_back(top);
    }

    for (const auto& v : lattice_.complement()) {
        ExtClass c = zero_class(src, dst);
        c.offdiag = matrix_from_flat(field, rp, r, v);
        basis_.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        for (const auto& v : torsion_[i].complement()) {
            ExtClass c = zero_class(src, dst);
            c.cocycles[i] = unflatten(dst, cocycle_degrees_[i], v);
            basis_.push_back(std::move(c));
        }
}

void ExtSpace::check(const ExtClass& c) const {
    if (!(c.src == src_) || !(c.dst == dst_)) throw ComposabilityError("class belongs to a different Ext group");
    if (c.offdiag.rows() != rank_of(dst_) || c.offdiag.cols() != rank_of(src_) || c.cocycles.size() != torsion_.size())
        throw ShapeMismatch("class representative has the wrong shape");
    for (std::size_t i = 0; i < c.cocycles.size(); ++i)
        if (c.cocycles[i].degree != cocycle_degrees_[i]) throw ShapeMismatch("cocycle in the wrong degree");
}

ExtClass ExtSpace::reduce(const ExtClass& c) const {
    check(c);
    ExtClass out = c;
    out.offdiag = matrix_from_flat(src_.field, rank_of(dst_), rank_of(src_), lattice_.reduce(flat_from_matrix(c.offdiag)));
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        out.cocycles[i] = unflatten(dst_, cocycle_degrees_[i], torsion_[i].reduce(c.cocycles[i].flatten()));
    return out;
}

bool ExtSpace::is_zero(const ExtClass& c) const {
    const ExtClass r = reduce(c);
    if (!r.offdiag.is_zero()) return false;
    return std::all_of(r.cocycles.begin(), r.cocycles.end(), [](const Element& z) { return z.is_zero(); });
}

Vec ExtSpace::coordinates(const ExtClass& c) const {
    check(c);
    Vec out = lattice_.coordinates(flat_from_matrix(c.offdiag));
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        const Vec part = torsion_[i].coordinates(c.cocycles[i].flatten());
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

ExtClass ExtSpace::element(std::span<const Scalar> coeffs) const {
    if (coeffs.size() != basis_.size()) throw DimensionMismatch("coefficient vector does not match the Ext basis");
    ExtClass c = zero_class(src_, dst_);
    for (std::size_t k = 0; k < basis_.size(); ++k)
        if (!coeffs[k].is_zero()) c = add(c, scale(coeffs[k], basis_[k]));
    return c;
}

ExtSpace ext_space(const CObject& x, const CObject& y) { return ExtSpace(x, y); }

int ext_dim_via_injectives(const CObject& x, const CObject& y) {
    check_same_field(x, y);
    int total = 0;
    if (x.rank() > 0 && y.rank() > 0) {
        std::vector<std::pair<std::size_t, std::size_t>> off;
        for (std::size_t u = 0; u < rank_of(y); ++u)
            for (std::size_t v = 0; v < rank_of(x); ++v)
                if (y.lattice.type_of(static_cast<int>(u)) != x.lattice.type_of(static_cast<int>(v))) off.emplace_back(u, v);
        std::vector<Vec> rows;
        for (const auto& a : lattice_maps(x.lattice, y.lattice, false)) {
            Vec row;
            for (const auto& [u, v] : off) row.push_back(a(u, v));
            rows.push_back(std::move(row));
        }
        total += static_cast<int>(off.size()) - static_cast<int>(rank(Matrix::from_rows(x.field, off.size(), rows)));
    }
    const InjectiveResolution res = injective_resolution(y);
    for (const auto& t : x.torsion.summands()) {
        int hom = 0;
        for (const auto& s : y.torsion.summands())
            if (admissible(t, s)) ++hom;
        total += hom_dim_into(t, res.i1) - hom_dim_into(t, res.i0) + hom;
    }
    return total;
}

ExtClass compose(const ExtClass& c, const Morphism& f) {
    if (!(f.dst == c.src)) throw ComposabilityError("morphism target differs from the class source");
    const CObject& w = f.src;
    const CObject& y = c.dst;
    ExtClass out = zero_class(w, y);
    Matrix h = c.offdiag * f.lat;
    if (w.rank() > 0 && y.rank() > 0 && c.src.torsion_count() > 0) {
        Matrix u(w.field, rank_of(y), rank_of(w));
        for (std::size_t j = 0; j < rank_of(w); ++j)
            for (std::size_t i = 0; i < c.cocycles.size(); ++i) {
                const Scalar& beta = f.lat_to_tors[j][i];
                if (beta.is_zero()) continue;
                for (std::size_t k = 0; k < rank_of(y); ++k) u(k, j) += beta * c.cocycles[i].lat[k];
            }
        h = h + u * lattice_dirs_inverse(w.lattice);
    }
    out.offdiag = offdiag_part(h, w.lattice, y.lattice);
    const auto& ws = w.torsion.summands();
    const auto& xs = c.src.torsion.summands();
    for (std::size_t l = 0; l < ws.size(); ++l)
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const Scalar& alpha = f.tors_to_tors[l][i];
            if (alpha.is_zero()) continue;
            const int power = (ws[l].bottom() + ws[l].n) - (xs[i].bottom() + xs[i].n);
            out.cocycles[l] = add(out.cocycles[l], scale(alpha, multiply_x(y, c.cocycles[i], power)));
        }
    return out;
}

ExtClass compose(const Morphism& g, const ExtClass& c) {
    if (!(c.dst == g.src)) throw ComposabilityError("class target differs from the morphism source");
    ExtClass out = zero_class(c.src, g.dst);
    out.offdiag = offdiag_part(g.lat * c.offdiag, c.src.lattice, g.dst.lattice);
    for (std::size_t i = 0; i < c.cocycles.size(); ++i) out.cocycles[i] = apply(g, c.cocycles[i]);
    return out;
}

YonedaProduct yoneda_compose(const Arrow& g, const Arrow& f) {
    YonedaProduct out;
    const auto* gm = std::get_if<Morphism>(&g);
    const auto* fm = std::get_if<Morphism>(&f);
    if (gm && fm) {
        out.value = compose(*gm, *fm);
    } else if (gm) {
        const ExtClass c = compose(*gm, std::get<ExtClass>(f));
        out.value = ext_space(c.src, c.dst).reduce(c);
    } else if (fm) {
        const ExtClass c = compose(std::get<ExtClass>(g), *fm);
        out.value = ext_space(c.src, c.dst).reduce(c);
    } else {
        if (!(std::get<ExtClass>(f).dst == std::get<ExtClass>(g).src)) throw ComposabilityError("classes are not composable");
        out.degree_two = true;
    }
    return out;
}

Morphism serre_twist(const Morphism& f) {
    const CObject vx = serre_twist(f.src);
    const CObject vy = serre_twist(f.dst);
    const Matrix px = swap_types_matrix(f.src.field, f.src.p(), f.src.q());
    const Matrix py = swap_types_matrix(f.src.field, f.dst.p(), f.dst.q());
    Morphism out = zero_morphism(vx, vy);
    out.lat = py * f.lat * px.transpose();
    const Matrix back = px.transpose();
    for (std::size_t j = 0; j < rank_of(vx); ++j) {
        const auto& gen = vx.lattice.generators()[j];
        const Element e{gen.jump - 1, zero_vec(f.src.field, f.src.torsion_count()), back.apply(gen.dir)};
        out.lat_to_tors[j] = apply(f, e).tors;
    }
    out.tors_to_tors = f.tors_to_tors;
    return out;
}

ExtClass serre_twist(const ExtClass& c) {
    const Matrix px = swap_types_matrix(c.src.field, c.src.p(), c.src.q());
    const Matrix py = swap_types_matrix(c.src.field, c.dst.p(), c.dst.q());
    ExtClass out{serre_twist(c.src), serre_twist(c.dst), py * c.offdiag * px.transpose(), {}};
    for (const auto& z : c.cocycles) out.cocycles.push_back({z.degree + 1, z.tors, py.apply(z.lat)});
    return out;
}

Scalar eta(const CObject& f, const ExtClass& c) {
    if (!f.is_torsion_free()) throw ShapeMismatch("the trace map is defined on lattice objects");
    if (!(c.src == f) || !(c.dst == serre_twist(f))) throw ShapeMismatch("class does not lie in Ext^1(F, VF)");
    const auto p = static_cast<std::size_t>(f.p());
    const auto q = static_cast<std::size_t>(f.q());
    Scalar total = Scalar::zero(f.field);
    for (std::size_t j = 0; j < p; ++j) total += c.offdiag(q + j, j);
    for (std::size_t l = 0; l < q; ++l) total += c.offdiag(l, p + l);
    return total;
}

Matrix serre_gram(const CObject& f, const CObject& g) {
    const CObject vf = serre_twist(f);
    const HomSpace hom = hom_space(f, g);
    const ExtSpace ext = ext_space(g, vf);
    Matrix gram(f.field, hom.dim(), ext.dim());
    for (std::size_t a = 0; a < hom.dim(); ++a)
        for (std::size_t b = 0; b < ext.dim(); ++b) gram(a, b) = eta(f, compose(ext.basis()[b], hom.basis()[a]));
    return gram;
}

Matrix serre_gram_flipped(const CObject& f, const CObject& g) {
    const CObject vf = serre_twist(f);
    const ExtSpace ext = ext_space(f, g);
    const HomSpace hom = hom_space(g, vf);
    Matrix gram(f.field, ext.dim(), hom.dim());
    for (std::size_t a = 0; a < ext.dim(); ++a)
        for (std::size_t b = 0; b < hom.dim(); ++b) gram(a, b) = eta(f, compose(hom.basis()[b], ext.basis()[a]));
    return gram;
}

SerreReport serre_check(const CObject& x, const CObject& y) {
    SerreReport rep;
    rep.hom_dim = hom_space(x, y).dim();
    rep.ext_dim = ext_space(y, serre_twist(x)).dim();
    rep.dims_equal = rep.hom_dim == rep.ext_dim;
    rep.torsion_free = x.is_torsion_free() && y.is_torsion_free();
    rep.pass = rep.dims_equal;
    if (rep.torsion_free) {
        const Matrix gram = serre_gram(x, y);
        rep.gram_rank = rank(gram);
        const Matrix flipped = serre_gram_flipped(x, y);
        rep.flipped_gram_rank = rank(flipped);
        rep.pass = rep.pass && rep.gram_rank == gram.rows() && rep.gram_rank == gram.cols() && rep.flipped_gram_rank == flipped.rows() &&
                   rep.flipped_gram_rank == flipped.cols();
    }
    return rep;
}

}  // namespace zdinf
