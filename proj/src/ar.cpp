#include "zdinf/ar.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace zdinf {

namespace {

std::size_t rank_of(const CObject& x) { return static_cast<std::size_t>(x.rank()); }

}  // namespace

ShortExactSeq extension_object(const ExtClass& c) {
    const CObject& x = c.src;
    const CObject& y = c.dst;
    const FieldSpec field = x.field;
    const std::size_t sy = y.torsion_count(), ry = rank_of(y), rx = rank_of(x), sx = x.torsion_count();
    if (c.offdiag.rows() != ry || c.offdiag.cols() != rx || c.cocycles.size() != sx) throw ShapeMismatch("class representative has the wrong shape");

    // Generators: Y torsion, Y lattice, lifts of X's lattice generators, lifts of X's torsion generators.
    const std::size_t o_yl = sy, o_xl = sy + ry, o_xt = sy + ry + rx, g = o_xt + sx;
    Presentation pres;
    pres.field = field;
    pres.row_degrees.resize(g);
    const auto& yt = y.torsion.summands();
    const auto& xt = x.torsion.summands();
    for (std::size_t l = 0; l < sy; ++l) pres.row_degrees[l] = yt[l].bottom();
    for (std::size_t j = 0; j < ry; ++j) pres.row_degrees[o_yl + j] = y.lattice.generators()[j].jump;
    for (std::size_t j = 0; j < rx; ++j) pres.row_degrees[o_xl + j] = x.lattice.generators()[j].jump;
    for (std::size_t i = 0; i < sx; ++i) pres.row_degrees[o_xt + i] = xt[i].bottom();

    pres.coefficients = Matrix(field, g, sy + sx);
    for (std::size_t l = 0; l < sy; ++l) {
        pres.col_degrees.push_back(yt[l].bottom() + yt[l].n);
        pres.coefficients(l, l) = Scalar::one(field);
    }
    for (std::size_t i = 0; i < sx; ++i) {
        const std::size_t col = sy + i;
        const Element& z = c.cocycles[i];
        if (z.degree != xt[i].bottom() + xt[i].n) throw ShapeMismatch("cocycle in the wrong degree");
        pres.col_degrees.push_back(z.degree);
        pres.coefficients(o_xt + i, col) = Scalar::one(field);
        for (std::size_t l = 0; l < sy; ++l) pres.coefficients(l, col) = -z.tors[l];
        if (ry > 0) {
            const Vec coeff = y.lattice.generator_coefficients(z.lat);
            for (std::size_t j = 0; j < ry; ++j) pres.coefficients(o_yl + j, col) = -coeff[j];
        }
    }

    pres.localization = Matrix(field, ry + rx, g);
    for (std::size_t j = 0; j < ry; ++j) {
        const auto& d = y.lattice.generators()[j].dir;
        for (std::size_t k = 0; k < ry; ++k) pres.localization(k, o_yl + j) = d[k];
    }
    for (std::size_t j = 0; j < rx; ++j) {
        const auto& d = x.lattice.generators()[j].dir;
        const Vec hd = c.offdiag.apply(d);
        for (std::size_t k = 0; k < ry; ++k) pres.localization(k, o_xl + j) = hd[k];
        for (std::size_t k = 0; k < rx; ++k) pres.localization(ry + k, o_xl + j) = d[k];
    }
    for (std::size_t i = 0; i < sx; ++i)
        for (std::size_t k = 0; k < ry; ++k) pres.localization(k, o_xt + i) = c.cocycles[i].lat[k];
    for (std::size_t k = 0; k < ry; ++k) pres.type_marks.push_back(y.lattice.type_of(static_cast<int>(k)));
    for (std::size_t k = 0; k < rx; ++k) pres.type_marks.push_back(x.lattice.type_of(static_cast<int>(k)));

    const PresentationResult res = from_presentation(pres);
    const CObject& e = res.object;

    std::vector<Element> inj_lat, inj_tors;
    for (std::size_t j = 0; j < ry; ++j) inj_lat.push_back(res.generator_images[o_yl + j]);
    for (std::size_t l = 0; l < sy; ++l) inj_tors.push_back(res.generator_images[l]);

    auto image_in_x = [&](std::size_t gen) -> Element {
        if (gen >= o_xt) return torsion_generator(x, gen - o_xt);
        if (gen >= o_xl) return lattice_generator(x, gen - o_xl);
        return zero_element(x, pres.row_degrees[gen]);
    };
    auto lift_image = [&](const Lift& lift, int degree) {
        Element out = zero_element(x, degree);
        for (const auto& term : lift) out = add(out, scale(term.coeff, multiply_x(x, image_in_x(term.generator), term.x_power)));
        return out;
    };
    std::vector<Element> sur_lat, sur_tors;
    for (std::size_t j = 0; j < rank_of(e); ++j) sur_lat.push_back(lift_image(res.lattice_generator_lifts[j], e.lattice.generators()[j].jump));
    for (std::size_t i = 0; i < e.torsion_count(); ++i) sur_tors.push_back(lift_image(res.torsion_generator_lifts[i], e.torsion.summands()[i].bottom()));

    return {y, e, x, morphism_from_images(y, e, inj_lat, inj_tors), morphism_from_images(e, x, sur_lat, sur_tors), c};
}

ExtClass sequence_class(const Morphism& inject, const Morphism& surject) {
    if (!(inject.dst == surject.src)) throw ComposabilityError("the two maps do not meet in a middle term");
    const CObject& y = inject.src;
    const CObject& e = inject.dst;
    const CObject& x = surject.dst;
    const FieldSpec field = x.field;
    ExtClass out = zero_class(x, y);

    if (x.rank() > 0 && y.rank() > 0) {
        // A type-preserving section of the localized surjection.
        Matrix section(field, rank_of(e), rank_of(x));
        for (std::size_t v = 0; v < rank_of(x); ++v) {
            const int t = x.lattice.type_of(static_cast<int>(v));
            std::vector<std::size_t> cols;
            for (std::size_t k = 0; k < rank_of(e); ++k)
                if (e.lattice.type_of(static_cast<int>(k)) == t) cols.push_back(k);
            Matrix block(field, rank_of(x), cols.size());
            for (std::size_t u = 0; u < rank_of(x); ++u)
                for (std::size_t k = 0; k < cols.size(); ++k) block(u, k) = surject.lat(u, cols[k]);
            const auto w = solve(block, unit_vec(field, rank_of(x), v));
            if (!w) throw ShapeMismatch("second map is not onto after localization");
            for (std::size_t k = 0; k < cols.size(); ++k) section(cols[k], v) = (*w)[k];
        }
        Matrix ycols(field, rank_of(y), rank_of(x));
        for (std::size_t j = 0; j < rank_of(x); ++j) {
            const auto lift = preimage(surject, lattice_generator(x, j));
            if (!lift) throw ShapeMismatch("second map is not onto");
            const Vec diff = axpy(lift->lat, Scalar(field, -1), section.apply(x.lattice.generators()[j].dir));
            const auto yv = solve(inject.lat, diff);
            if (!yv) throw ShapeMismatch("sequence is not exact after localization");
            for (std::size_t k = 0; k < rank_of(y); ++k) ycols(k, j) = (*yv)[k];
        }
        Matrix dirs_inv(field, rank_of(x), rank_of(x));
        for (std::size_t k = 0; k < rank_of(x); ++k) {
            const Vec col = x.lattice.generator_coefficients(unit_vec(field, rank_of(x), k));
            for (std::size_t j = 0; j < rank_of(x); ++j) dirs_inv(j, k) = col[j];
        }
        Matrix h = ycols * dirs_inv;
        for (std::size_t u = 0; u < h.rows(); ++u)
            for (std::size_t v = 0; v < h.cols(); ++v)
                if (y.lattice.type_of(static_cast<int>(u)) == x.lattice.type_of(static_cast<int>(v))) h(u, v) = Scalar::zero(field);
        out.offdiag = h;
    }

    for (std::size_t i = 0; i < x.torsion_count(); ++i) {
        const auto lift = preimage(surject, torsion_generator(x, i));
        if (!lift) throw ShapeMismatch("second map is not onto");
        const Element top = multiply_x(e, *lift, x.torsion.summands()[i].n);
        const auto z = preimage(inject, top);
        if (!z) throw ShapeMismatch("sequence is not exact in the middle");
        out.cocycles[i] = *z;
    }
    return out;
}

bool is_exact(const ShortExactSeq& s) {
    if (!(s.inject.src == s.left) || !(s.inject.dst == s.middle) || !(s.surject.src == s.middle) || !(s.surject.dst == s.right)) return false;
    if (!(compose(s.surject, s.inject) == zero_morphism(s.left, s.right))) return false;
    if (!is_mono(s.inject) || !is_epi(s.surject)) return false;
    const auto [lo1, hi1] = degree_window(s.left, s.middle);
    const auto [lo2, hi2] = degree_window(s.middle, s.right);
    for (int d = std::min(lo1, lo2); d <= std::max(hi1, hi2); ++d)
        if (degree_space(s.middle, d).dim() != degree_space(s.left, d).dim() + degree_space(s.right, d).dim()) return false;
    return true;
}

AlmostSplit almost_split(const CObject& x) {
    if (x.is_zero() || hom_space(x, x).dim() != 1) throw NotIndecomposable(x.to_string() + " is not indecomposable");
    const CObject vx = serre_twist(x);
    const ExtSpace ext = ext_space(x, vx);
    if (ext.dim() == 0) throw NotIndecomposable("Ext^1(X, VX) vanishes for " + x.to_string());
    AlmostSplit out;
    out.seq = extension_object(ext.basis().front());
    out.middle = decompose(out.seq.middle).factors;
    out.left = identify(out.seq.left);
    out.right = identify(x);
    return out;
}

AlmostSplit almost_split(FieldSpec field, const IndecLabel& x) { return almost_split(synthesize(field, x)); }

std::string format_sequence(const AlmostSplit& a) {
    return "0 → " + a.left.to_string() + " → " + to_string(a.middle) + " → " + a.right.to_string() + " → 0";
}

QuiverWindow quiver_window(FieldSpec field, int m_max, int a_min, int a_max, int n_max, bool parallel) {
    if (m_max < 1 || n_max < 1 || a_max - a_min < 1)
        throw WindowTooSmall("window needs m_max >= 1, n_max >= 1 and a_max > a_min");
    QuiverWindow w;
    for (int a = a_min; a <= a_max; ++a) {
        w.nodes.push_back(IndecLabel::rank_one(0, a));
        w.nodes.push_back(IndecLabel::rank_one(1, a));
        for (int m = 1; m <= m_max; ++m) w.nodes.push_back(IndecLabel::rank_two(m, a));
        for (int n = 1; n <= n_max; ++n) w.nodes.push_back(IndecLabel::wing(n, a));
    }
    std::sort(w.nodes.begin(), w.nodes.end());
    const std::set<IndecLabel> inside(w.nodes.begin(), w.nodes.end());

    std::vector<AlmostSplit> meshes(w.nodes.size());
    const auto count = static_cast<long>(w.nodes.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long k = 0; k < count; ++k) meshes[static_cast<std::size_t>(k)] = almost_split(field, w.nodes[static_cast<std::size_t>(k)]);

    auto record = [&](const IndecLabel& from, const IndecLabel& to, int mult, std::map<std::pair<IndecLabel, IndecLabel>, int>& local) {
        auto& slot = local[{from, to}];
        slot = std::max(slot, mult);
    };
    std::map<std::pair<IndecLabel, IndecLabel>, int> all;
    for (std::size_t k = 0; k < meshes.size(); ++k) {
        const AlmostSplit& m = meshes[k];
        std::map<IndecLabel, int> mult;
        for (const auto& z : m.middle) ++mult[z];
        for (const auto& [z, c] : mult) {
            record(z, m.right, c, all);
            record(m.left, z, c, all);
        }
        if (inside.count(m.left)) w.translation[m.right] = m.left;
    }
    for (const auto& [edge, c] : all) {
        if (inside.count(edge.first) && inside.count(edge.second))
            w.arrows[edge] = c;
        else
            w.dropped_arrows += c;
    }
    return w;
}

QuiverWindow induced_subquiver(const QuiverWindow& w, const std::vector<IndecLabel>& nodes) {
    const std::set<IndecLabel> keep(nodes.begin(), nodes.end());
    QuiverWindow out;
    for (const auto& n : w.nodes)
        if (keep.count(n)) out.nodes.push_back(n);
    for (const auto& [edge, c] : w.arrows)
        if (keep.count(edge.first) && keep.count(edge.second)) out.arrows[edge] = c;
    for (const auto& [x, tx] : w.translation)
        if (keep.count(x) && keep.count(tx)) out.translation[x] = tx;
    return out;
}

std::string dot_node_id(const IndecLabel& label) {
    switch (label.kind) {
        case IndecKind::RankOne: return "F" + std::to_string(label.type) + "_" + std::to_string(label.a);
        case IndecKind::RankTwo: return "F_" + std::to_string(label.size) + "_" + std::to_string(label.a);
        case IndecKind::Wing: return "T_" + std::to_string(label.size) + "_" + std::to_string(label.a);
    }
    return "?";
}

std::string dot_export(const QuiverWindow& w) {
    std::ostringstream out;
    out << "digraph ar_quiver {\n";
    for (const auto& n : w.nodes) out << "  \"" << dot_node_id(n) << "\" [label=\"" << n.to_string() << "\"];\n";
    for (const auto& [edge, c] : w.arrows)
        for (int k = 0; k < c; ++k) out << "  \"" << dot_node_id(edge.first) << "\" -> \"" << dot_node_id(edge.second) << "\";\n";
    for (const auto& [x, tx] : w.translation) out << "  \"" << dot_node_id(x) << "\" -> \"" << dot_node_id(tx) << "\" [style=dashed];\n";
    out << "}\n";
    return out.str();
}

std::string quiver_json(const QuiverWindow& w) {
    nlohmann::ordered_json doc;
    doc["schema"] = "zdinf.quiver/1";
    doc["nodes"] = nlohmann::ordered_json::array();
    for (const auto& n : w.nodes) doc["nodes"].push_back(n.to_string());
    doc["arrows"] = nlohmann::ordered_json::array();
    for (const auto& [edge, c] : w.arrows) doc["arrows"].push_back({{"from", edge.first.to_string()}, {"to", edge.second.to_string()}, {"multiplicity", c}});
    doc["translation"] = nlohmann::ordered_json::array();
    for (const auto& [x, tx] : w.translation) doc["translation"].push_back({{"from", x.to_string()}, {"to", tx.to_string()}});
    doc["dropped_arrows"] = w.dropped_arrows;
    return doc.dump(2) + "\n";
}

Witnesses no_proj_no_inj_witness(const CObject& x, int bound) {
    Witnesses out;
    for (int n = 0; n <= bound && out.n_epi < 0; ++n)
        if (ext_space(x, sigma(shift(x, -n))).dim() > 0) out.n_epi = n;
    for (int n = 0; n <= bound && out.n_mono < 0; ++n)
        if (ext_space(sigma(shift(x, n)), x).dim() > 0) out.n_mono = n;
    if (out.n_epi < 0 || out.n_mono < 0) throw WitnessNotFound("no witness up to n = " + std::to_string(bound) + " for " + x.to_string());
    return out;
}

namespace {

template <typename Src, typename Dst, typename Map>
Matrix matrix_of(const Src& from, const Dst& to, Map map) {
    const FieldSpec field = from.src().field;
    std::vector<Vec> cols;
    for (const auto& b : from.basis()) cols.push_back(to.coordinates(map(b)));
    return Matrix::from_columns(field, to.dim(), cols);
}

LesReport assess(const std::vector<std::size_t>& dims, const std::vector<Matrix>& maps) {
    LesReport rep;
    rep.dims = dims;
    rep.exact = true;
    for (const auto& m : maps) rep.ranks.push_back(rank(m));
    for (std::size_t k = 0; k < dims.size(); ++k) {
        const std::size_t in = k == 0 ? 0 : rep.ranks[k - 1];
        const std::size_t out = k + 1 == dims.size() ? 0 : rep.ranks[k];
        if (dims[k] != in + out) rep.exact = false;
        rep.alternating_sum += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(dims[k]);
    }
    for (std::size_t k = 0; k + 1 < maps.size(); ++k)
        if (maps[k].rows() > 0 && maps[k].cols() > 0 && maps[k + 1].rows() > 0 && !(maps[k + 1] * maps[k]).is_zero()) rep.exact = false;
    return rep;
}

}  // namespace

LesReport les_contravariant(const ShortExactSeq& s, const CObject& g) {
    const HomSpace hc = hom_space(s.right, g), hb = hom_space(s.middle, g), ha = hom_space(s.left, g);
    const ExtSpace ec = ext_space(s.right, g), eb = ext_space(s.middle, g), ea = ext_space(s.left, g);
    std::vector<Matrix> maps;
    maps.push_back(matrix_of(hc, hb, [&](const Morphism& f) { return compose(f, s.surject); }));
    maps.push_back(matrix_of(hb, ha, [&](const Morphism& f) { return compose(f, s.inject); }));
    maps.push_back(matrix_of(ha, ec, [&](const Morphism& f) { return compose(f, s.cls); }));
    maps.push_back(matrix_of(ec, eb, [&](const ExtClass& c) { return compose(c, s.surject); }));
    maps.push_back(matrix_of(eb, ea, [&](const ExtClass& c) { return compose(c, s.inject); }));
    return assess({hc.dim(), hb.dim(), ha.dim(), ec.dim(), eb.dim(), ea.dim()}, maps);
}

LesReport les_covariant(const CObject& g, const ShortExactSeq& s) {
    const HomSpace ha = hom_space(g, s.left), hb = hom_space(g, s.middle), hc = hom_space(g, s.right);
    const ExtSpace ea = ext_space(g, s.left), eb = ext_space(g, s.middle), ec = ext_space(g, s.right);
    std::vector<Matrix> maps;
    maps.push_back(matrix_of(ha, hb, [&](const Morphism& f) { return compose(s.inject, f); }));
    maps.push_back(matrix_of(hb, hc, [&](const Morphism& f) { return compose(s.surject, f); }));
    maps.push_back(matrix_of(hc, ea, [&](const Morphism& f) { return compose(s.cls, f); }));
    maps.push_back(matrix_of(ea, eb, [&](const ExtClass& c) { return compose(s.inject, c); }));
    maps.push_back(matrix_of(eb, ec, [&](const ExtClass& c) { return compose(s.surject, c); }));
    return assess({ha.dim(), hb.dim(), hc.dim(), ea.dim(), eb.dim(), ec.dim()}, maps);
}

}  // namespace zdinf
