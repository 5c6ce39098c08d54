#include "zdinf/objects.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zdinf {

TorsionPart::TorsionPart(std::vector<TorsionSummand> summands) : summands_(std::move(summands)) {
    for (const auto& t : summands_)
        if (t.n < 1) throw RangeError("torsion summand of length " + std::to_string(t.n));
    std::sort(summands_.begin(), summands_.end());
}

int TorsionPart::dim_at(int degree) const {
    return static_cast<int>(std::count_if(summands_.begin(), summands_.end(), [&](const TorsionSummand& t) { return t.covers(degree); }));
}

CObject::CObject(FieldSpec f, TorsionPart t, GradedLattice l) : field(f), torsion(std::move(t)), lattice(std::move(l)) {
    if (!(lattice.field() == f)) {
        if (!lattice.is_zero()) throw FieldMismatch("lattice over " + lattice.field().to_string() + " in an object over " + f.to_string());
        lattice = GradedLattice::zero(f);
    }
}

std::string CObject::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& t : torsion.summands()) {
        out << (first ? "" : " + ") << "T(" << t.n << "," << t.a << ")";
        first = false;
    }
    if (!lattice.is_zero() || first) out << (first ? "" : " + ") << lattice.to_string();
    return out.str();
}

CObject shift(const CObject& x, int s) {
    auto summands = x.torsion.summands();
    for (auto& t : summands) t.a += s;
    return CObject(x.field, TorsionPart(std::move(summands)), shift_lattice(x.lattice, s));
}

CObject sigma(const CObject& x) { return CObject(x.field, x.torsion, swap_types(x.lattice)); }

CObject serre_twist(const CObject& x) { return shift(sigma(x), -1); }

CObject inverse_serre_twist(const CObject& x) { return sigma(shift(x, 1)); }

DirectSum direct_sum(const std::vector<CObject>& factors) {
    if (factors.empty()) throw DimensionMismatch("empty direct sum");
    const FieldSpec field = factors.front().field;
    int p = 0;
    int q = 0;
    for (const auto& f : factors) {
        if (!(f.field == field)) throw FieldMismatch("direct sum of objects over different fields");
        p += f.p();
        q += f.q();
    }

    DirectSum out;
    std::size_t next0 = 0;
    std::size_t next1 = static_cast<std::size_t>(p);
    for (const auto& f : factors) {
        std::vector<std::size_t> coords(static_cast<std::size_t>(f.rank()));
        for (int c = 0; c < f.rank(); ++c) coords[static_cast<std::size_t>(c)] = c < f.p() ? next0++ : next1++;
        out.coordinate_map.push_back(std::move(coords));
    }

    const auto r = static_cast<std::size_t>(p + q);
    std::vector<LatticeGenerator> gens;
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (const auto& g : factors[i].lattice.generators()) {
            Vec dir = zero_vec(field, r);
            for (std::size_t c = 0; c < g.dir.size(); ++c) dir[out.coordinate_map[i][c]] = g.dir[c];
            gens.push_back({g.jump, std::move(dir)});
        }

    struct Tagged {
        TorsionSummand t;
        std::size_t factor;
        std::size_t index;
    };
    std::vector<Tagged> tagged;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& s = factors[i].torsion.summands();
        for (std::size_t j = 0; j < s.size(); ++j) tagged.push_back({s[j], i, j});
    }
    std::stable_sort(tagged.begin(), tagged.end(), [](const Tagged& u, const Tagged& v) { return u.t < v.t; });
    out.summand_map.resize(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) out.summand_map[i].resize(factors[i].torsion.size());
    std::vector<TorsionSummand> summands;
    for (std::size_t k = 0; k < tagged.size(); ++k) {
        out.summand_map[tagged[k].factor][tagged[k].index] = k;
        summands.push_back(tagged[k].t);
    }

    out.object = CObject(field, TorsionPart(std::move(summands)), canonicalize(field, gens, p, q));
    return out;
}

Element zero_element(const CObject& x, int degree) {
    return {degree, zero_vec(x.field, x.torsion_count()), zero_vec(x.field, static_cast<std::size_t>(x.rank()))};
}

Element multiply_x(const CObject& x, const Element& e, int k) {
    if (k < 0) throw RangeError("negative power of x");
    Element out = e;
    out.degree += k;
    const auto& s = x.torsion.summands();
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!s[i].covers(out.degree)) out.tors[i] = Scalar::zero(x.field);
    return out;
}

Element add(const Element& u, const Element& v) {
    if (u.degree != v.degree) throw ShapeMismatch("adding elements of different degrees");
    if (u.tors.size() != v.tors.size() || u.lat.size() != v.lat.size()) throw DimensionMismatch("adding elements of different objects");
    Element out = u;
    for (std::size_t i = 0; i < v.tors.size(); ++i) out.tors[i] += v.tors[i];
    for (std::size_t i = 0; i < v.lat.size(); ++i) out.lat[i] += v.lat[i];
    return out;
}

Element scale(const Scalar& c, const Element& e) { return {e.degree, scale(c, e.tors), scale(c, e.lat)}; }

Element unflatten(const CObject& x, int degree, std::span<const Scalar> flat) {
    const std::size_t s = x.torsion_count();
    if (flat.size() != s + static_cast<std::size_t>(x.rank())) throw DimensionMismatch("flattened element has the wrong length");
    return {degree, Vec(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(s)), Vec(flat.begin() + static_cast<std::ptrdiff_t>(s), flat.end())};
}

Subspace degree_space(const CObject& x, int degree) {
    const std::size_t s = x.torsion_count();
    const std::size_t n = s + static_cast<std::size_t>(x.rank());
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < s; ++i)
        if (x.torsion.summands()[i].covers(degree)) basis.push_back(unit_vec(x.field, n, i));
    for (const auto& v : x.lattice.filtration(degree).basis()) basis.push_back(concat(zero_vec(x.field, s), v));
    return Subspace::span(x.field, n, basis);
}

void check_element(const CObject& x, const Element& e) {
    if (e.tors.size() != x.torsion_count() || e.lat.size() != static_cast<std::size_t>(x.rank()))
        throw DimensionMismatch("element does not match the object's shape");
    for (std::size_t i = 0; i < e.tors.size(); ++i)
        if (!e.tors[i].is_zero() && !x.torsion.summands()[i].covers(e.degree))
            throw ShapeMismatch("torsion coordinate outside the summand's degree range");
    if (!x.lattice.filtration(e.degree).contains(e.lat)) throw ShapeMismatch("lattice component is not in the lattice");
}

PresentationResult from_presentation(const Presentation& pres) {
    const FieldSpec field = pres.field;
    const std::size_t g = pres.row_degrees.size();
    const std::size_t c = pres.col_degrees.size();
    const std::size_t r = pres.type_marks.size();
    if (pres.coefficients.rows() != g || pres.coefficients.cols() != c)
        throw ShapeMismatch("coefficient matrix is " + std::to_string(pres.coefficients.rows()) + "x" + std::to_string(pres.coefficients.cols()) +
                            ", expected " + std::to_string(g) + "x" + std::to_string(c));
    if (pres.localization.rows() != r || pres.localization.cols() != g)
        throw ShapeMismatch("localization matrix must be (#coordinates) x (#generators)");
    if ((g > 0 && c > 0 && !(pres.coefficients.field() == field)) || (r > 0 && g > 0 && !(pres.localization.field() == field)))
        throw FieldMismatch("presentation matrices over a different field");
    for (int t : pres.type_marks)
        if (t != 0 && t != 1) throw InconsistentTypes("type mark " + std::to_string(t) + " is neither 0 nor 1");

    Matrix m = pres.coefficients;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (!m(i, j).is_zero() && pres.col_degrees[j] < pres.row_degrees[i])
                throw ShapeMismatch("entry (" + std::to_string(i) + "," + std::to_string(j) + ") has negative x-exponent");
    if (!(pres.localization * m).is_zero()) throw InconsistentTypes("a relation does not vanish after inverting x");

    // Graded Smith form: scalar row/column operations, each valid because the
    // pivot has minimal exponent. u tracks the row operations (new coords = u·old),
    // u_inv the new generators in terms of the old ones.
    Matrix u = Matrix::identity(field, g);
    Matrix u_inv = Matrix::identity(field, g);
    std::vector<bool> row_active(g, true);
    std::vector<bool> col_active(c, true);
    std::vector<int> row_exponent(g, -1);  // -1: free row
    const auto& rd = pres.row_degrees;
    const auto& cd = pres.col_degrees;
    for (;;) {
        std::size_t pi = g, pj = c;
        int best = 0;
        for (std::size_t i = 0; i < g; ++i) {
            if (!row_active[i]) continue;
            for (std::size_t j = 0; j < c; ++j) {
                if (!col_active[j] || m(i, j).is_zero()) continue;
                const int e = cd[j] - rd[i];
                if (pi == g || e < best) {
                    pi = i;
                    pj = j;
                    best = e;
                }
            }
        }
        if (pi == g) break;
        const Scalar piv_inv = m(pi, pj).inverse();
        for (std::size_t i = 0; i < g; ++i) {
            if (i == pi || m(i, pj).is_zero()) continue;
            const Scalar f = m(i, pj) * piv_inv;
            for (std::size_t j = 0; j < c; ++j) m(i, j) -= f * m(pi, j);
            for (std::size_t l = 0; l < g; ++l) u(i, l) -= f * u(pi, l);
            for (std::size_t l = 0; l < g; ++l) u_inv(l, pi) += f * u_inv(l, i);
        }
        for (std::size_t j = 0; j < c; ++j) {
            if (j == pj || m(pi, j).is_zero()) continue;
            const Scalar f = m(pi, j) * piv_inv;
            for (std::size_t i = 0; i < g; ++i) m(i, j) -= f * m(i, pj);
        }
        row_active[pi] = false;
        col_active[pj] = false;
        row_exponent[pi] = best;
    }

    std::vector<std::size_t> free_rows;
    for (std::size_t i = 0; i < g; ++i)
        if (row_exponent[i] < 0) free_rows.push_back(i);
    if (free_rows.size() != r)
        throw NotFullRank("torsion-free rank " + std::to_string(free_rows.size()) + " differs from the " + std::to_string(r) + " localized coordinates");

    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pres.type_marks[a] < pres.type_marks[b]; });
    Matrix perm(field, r, r);
    for (std::size_t k = 0; k < r; ++k) perm(k, order[k]) = Scalar::one(field);
    const int p = static_cast<int>(std::count(pres.type_marks.begin(), pres.type_marks.end(), 0));
    const Matrix loc = perm * pres.localization;
    const Matrix free_dirs_all = loc * u_inv;

    std::vector<LatticeGenerator> raw;
    std::vector<Vec> free_dirs;
    for (std::size_t k : free_rows) {
        free_dirs.push_back(free_dirs_all.column(k));
        raw.push_back({rd[k], free_dirs.back()});
    }
    GradedLattice lattice = canonicalize(field, raw, p, static_cast<int>(r) - p);

    struct TorsionRow {
        TorsionSummand t;
        std::size_t row;
    };
    std::vector<TorsionRow> tors_rows;
    for (std::size_t i = 0; i < g; ++i)
        if (row_exponent[i] > 0) tors_rows.push_back({{row_exponent[i], -rd[i]}, i});
    std::stable_sort(tors_rows.begin(), tors_rows.end(), [](const TorsionRow& a, const TorsionRow& b) { return a.t < b.t; });
    std::vector<TorsionSummand> summands;
    for (const auto& tr : tors_rows) summands.push_back(tr.t);

    PresentationResult out;
    out.object = CObject(field, TorsionPart(summands), lattice);
    out.type_permutation = perm;

    for (std::size_t i = 0; i < g; ++i) {
        Element e = zero_element(out.object, rd[i]);
        for (std::size_t s = 0; s < tors_rows.size(); ++s) {
            const std::size_t k = tors_rows[s].row;
            const int power = rd[i] - rd[k];
            if (power >= 0 && power < row_exponent[k]) e.tors[s] = u(k, i);
        }
        e.lat = loc.column(i);
        out.generator_images.push_back(std::move(e));
    }

    for (const auto& tr : tors_rows) {
        Lift lift;
        for (std::size_t i = 0; i < g; ++i)
            if (!u_inv(i, tr.row).is_zero()) lift.push_back({i, u_inv(i, tr.row), rd[tr.row] - rd[i]});
        out.torsion_generator_lifts.push_back(std::move(lift));
    }

    const Matrix free_basis = Matrix::from_columns(field, r, free_dirs);
    const Matrix free_basis_inv = r == 0 ? Matrix(field, 0, 0) : *inverse(free_basis);
    for (const auto& gen : lattice.generators()) {
        const Vec coeff = free_basis_inv.apply(gen.dir);
        Lift lift;
        for (std::size_t k = 0; k < r; ++k) {
            if (coeff[k].is_zero()) continue;
            const std::size_t row = free_rows[k];
            for (std::size_t i = 0; i < g; ++i)
                if (!u_inv(i, row).is_zero()) lift.push_back({i, coeff[k] * u_inv(i, row), gen.jump - rd[i]});
        }
        out.lattice_generator_lifts.push_back(std::move(lift));
    }
    return out;
}

InjectiveResolution injective_resolution(const CObject& x) {
    InjectiveResolution out;
    out.i0.e0_copies = x.p();
    out.i0.e1_copies = x.q();
    if (!x.lattice.is_zero()) out.i1.divisible = x.lattice.jumps();
    for (const auto& t : x.torsion.summands()) {
        out.i0.divisible.push_back(-t.a + t.n);
        out.i1.divisible.push_back(-t.a);
    }
    std::sort(out.i0.divisible.begin(), out.i0.divisible.end());
    std::sort(out.i1.divisible.begin(), out.i1.divisible.end());

    std::ostringstream d;
    d << "lattice -> " << x.p() << " E0 + " << x.q() << " E1";
    for (const auto& t : x.torsion.summands()) d << "; T(" << t.n << "," << t.a << ") -> k[x,x^-1]/x^" << (-t.a + t.n);
    out.embed = d.str();
    return out;
}

int hom_dim_into(const TorsionSummand& t, const InjectiveProfile& injective) {
    int total = 0;
    for (int cutoff : injective.divisible)
        if (-t.a < cutoff && cutoff <= -t.a + t.n) ++total;
    return total;
}

}  // namespace zdinf
