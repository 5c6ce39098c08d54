#include "zdinf/decomp.hpp"

#include <algorithm>
#include <random>

namespace zdinf {

IndecLabel IndecLabel::rank_two(int m, int a) {
    if (m < 1) throw RangeError("F[m,a] needs m >= 1, got m = " + std::to_string(m));
    return {IndecKind::RankTwo, m, a, 0};
}

IndecLabel IndecLabel::wing(int n, int a) {
    if (n < 1) throw RangeError("T[n,a] needs n >= 1, got n = " + std::to_string(n));
    return {IndecKind::Wing, n, a, 0};
}

std::string IndecLabel::to_string() const {
    switch (kind) {
        case IndecKind::RankOne: return "F" + std::to_string(type) + "[" + std::to_string(a) + "]";
        case IndecKind::RankTwo: return "F[" + std::to_string(size) + "," + std::to_string(a) + "]";
        case IndecKind::Wing: return "T[" + std::to_string(size) + "," + std::to_string(a) + "]";
    }
    return "?";
}

std::string to_string(const std::vector<IndecLabel>& labels) {
    if (labels.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? " + " : "") + labels[i].to_string();
    return out;
}

CObject synthesize(FieldSpec field, const IndecLabel& label) {
    const Scalar one = Scalar::one(field), zero = Scalar::zero(field);
    switch (label.kind) {
        case IndecKind::RankOne:
            return CObject::from_lattice(canonicalize(field, {{-label.a, {one}}}, label.type == 0 ? 1 : 0, label.type == 0 ? 0 : 1));
        case IndecKind::RankTwo:
            return CObject::from_lattice(canonicalize(field, {{-label.a, {one, one}}, {label.size - label.a, {one, zero}}}, 1, 1));
        case IndecKind::Wing: return CObject::from_torsion(field, {{label.size, label.a}});
    }
    throw RangeError("unknown label kind");
}

CObject synthesize(FieldSpec field, const std::vector<IndecLabel>& labels) {
    if (labels.empty()) return CObject::zero(field);
    if (labels.size() == 1) return synthesize(field, labels.front());
    std::vector<CObject> parts;
    for (const auto& l : labels) parts.push_back(synthesize(field, l));
    return direct_sum(parts).object;
}

IndecLabel serre_twist(const IndecLabel& label) {
    IndecLabel out = label;
    out.a -= 1;
    if (label.kind == IndecKind::RankOne) out.type = 1 - label.type;
    return out;
}

EndRing end_ring(const CObject& x) {
    EndRing ring{hom_space(x, x), {}};
    const auto& b = ring.space.basis();
    ring.table.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) ring.table[i].push_back(ring.space.coordinates(compose(b[i], b[j])));
    return ring;
}

namespace {

Subspace project_type0(const Subspace& s, int p) {
    std::vector<Vec> vs;
    for (Vec v : s.basis()) {
        for (std::size_t k = static_cast<std::size_t>(p); k < v.size(); ++k) v[k] = Scalar::zero(s.field());
        vs.push_back(std::move(v));
    }
    return Subspace::span(s.field(), s.ambient(), vs);
}

Subspace coordinate_span(FieldSpec field, std::size_t n, std::size_t from, std::size_t to) {
    std::vector<Vec> vs;
    for (std::size_t k = from; k < to; ++k) vs.push_back(unit_vec(field, n, k));
    return Subspace::span(field, n, vs);
}

std::vector<IndecLabel> lattice_labels(const GradedLattice& l) {
    const FieldSpec field = l.field();
    const auto r = static_cast<std::size_t>(l.rank());
    const auto& levels = l.levels();
    const std::size_t n = levels.size();
    std::vector<Subspace> s, s0;
    for (int e : levels) {
        s.push_back(l.filtration(e));
        s0.push_back(project_type0(s.back(), l.p()));
    }
    const Subspace v1 = coordinate_span(field, r, static_cast<std::size_t>(l.p()), r);

    // g[i+1][k+1] = dim(π0(S_{e_i}) ∩ S_{e_k}); row/column 0 is the zero level below everything.
    std::vector<std::vector<int>> g(n + 1, std::vector<int>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) g[i + 1][k + 1] = static_cast<int>(s0[i].intersect(s[k]).dim());
    auto delta = [&](std::size_t i, std::size_t k) { return g[i + 1][k + 1] - g[i][k + 1] - g[i + 1][k] + g[i][k]; };

    std::vector<IndecLabel> out;
    auto emit = [&](const IndecLabel& label, int count) {
        if (count < 0) throw DecompositionFailure("negative multiplicity for " + label.to_string());
        for (int c = 0; c < count; ++c) out.push_back(label);
    };
    int previous_d1 = 0;
    for (std::size_t k = 0; k < n; ++k) {
        int absorbed = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const int d = delta(i, k);
            if (i < k) {
                emit(IndecLabel::rank_two(levels[k] - levels[i], -levels[i]), d);
                absorbed += d;
            } else if (i == k) {
                emit(IndecLabel::rank_one(0, -levels[k]), d);
            } else if (d != 0) {
                throw DecompositionFailure("lattice invariants outside the classification");
            }
        }
        const int d1 = static_cast<int>(s[k].intersect(v1).dim());
        emit(IndecLabel::rank_one(1, -levels[k]), d1 - previous_d1 - absorbed);
        previous_d1 = d1;
    }
    return out;
}

}  // namespace

Decomposition decompose(const CObject& x, std::uint64_t seed) {
    std::vector<IndecLabel> labels;
    for (const auto& t : x.torsion.summands()) labels.push_back(IndecLabel::wing(t.n, t.a));
    if (!x.lattice.is_zero()) {
        const auto lat = lattice_labels(x.lattice);
        labels.insert(labels.end(), lat.begin(), lat.end());
    }
    std::sort(labels.begin(), labels.end());

    const CObject sum = synthesize(x.field, labels);
    if (!(sum.torsion == x.torsion) || sum.p() != x.p() || sum.q() != x.q())
        throw DecompositionFailure("invariants do not account for the whole object");

    Decomposition out{labels, identity_morphism(x)};
    out.iso = zero_morphism(sum, x);
    for (std::size_t i = 0; i < x.torsion_count(); ++i) out.iso.tors_to_tors[i] = unit_vec(x.field, x.torsion_count(), i);
    if (x.lattice.is_zero()) return out;

    const HomSpace hom = hom_space(CObject::from_lattice(sum.lattice), CObject::from_lattice(x.lattice));
    std::mt19937_64 rng(seed);
    constexpr int kBudget = 256;
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        Matrix a(x.field, static_cast<std::size_t>(x.rank()), static_cast<std::size_t>(x.rank()));
        for (const auto& b : hom.basis()) a = a + b.lat.scaled(Scalar::random(x.field, rng));
        const auto a_inv = inverse(a);
        if (!a_inv) continue;
        bool onto = true;
        for (const auto& gen : x.lattice.generators())
            if (!sum.lattice.filtration(gen.jump).contains(a_inv->apply(gen.dir))) {
                onto = false;
                break;
            }
        if (!onto) continue;
        out.iso.lat = a;
        return out;
    }
    throw DecompositionFailure("no isomorphism found within " + std::to_string(kBudget) + " random attempts");
}

CObject random_relabel(const CObject& x, std::mt19937_64& rng) {
    if (x.lattice.is_zero()) return x;
    const FieldSpec field = x.field;
    const auto r = static_cast<std::size_t>(x.rank());
    for (;;) {
        Matrix g(field, r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (x.lattice.type_of(static_cast<int>(i)) == x.lattice.type_of(static_cast<int>(j))) g(i, j) = Scalar::random(field, rng);
        if (rank(g) < r) continue;
        std::vector<LatticeGenerator> gens;
        for (const auto& gen : x.lattice.generators()) gens.push_back({gen.jump, g.apply(gen.dir)});
        return CObject(field, x.torsion, canonicalize(field, gens, x.p(), x.q()));
    }
}

IndecLabel identify(const CObject& x) {
    if (x.lattice.is_zero() && x.torsion_count() == 1) {
        const auto& t = x.torsion.summands().front();
        return IndecLabel::wing(t.n, t.a);
    }
    if (x.torsion_count() != 0) throw UnrecognizedShape("object mixes torsion and lattice parts");
    if (x.rank() == 1) return IndecLabel::rank_one(x.p() == 1 ? 0 : 1, -x.lattice.min_jump());
    if (x.rank() == 2 && x.p() == 1 && x.q() == 1) {
        const int c = x.lattice.min_jump();
        const Subspace bottom = x.lattice.filtration(c);
        if (bottom.dim() == 1 && !bottom.basis()[0][0].is_zero() && !bottom.basis()[0][1].is_zero()) {
            const int m = x.lattice.max_jump() - c;
            if (m >= 1) return IndecLabel::rank_two(m, -c);
        }
    }
    throw UnrecognizedShape("no indecomposable matches " + x.to_string());
}

std::vector<FiltrationStep> filtration(const CObject& f) {
    if (!f.is_torsion_free()) throw ShapeMismatch("filtration expects a lattice object");
    const FieldSpec field = f.field;
    const auto r = static_cast<std::size_t>(f.rank());
    const auto& levels = f.lattice.levels();
    std::vector<FiltrationStep> out;
    for (std::size_t k = 1; k <= r; ++k) {
        const Subspace window = coordinate_span(field, r, 0, k);
        std::vector<LatticeGenerator> gens;
        int conductor = 0;
        bool found = false;
        for (int e : levels) {
            for (const auto& v : f.lattice.filtration(e).intersect(window).basis()) {
                if (!found && !v[k - 1].is_zero()) {
                    conductor = e;
                    found = true;
                }
                gens.push_back({e, Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k))});
            }
        }
        const int p = std::min(f.p(), static_cast<int>(k));
        out.push_back({CObject::from_lattice(canonicalize(field, gens, p, static_cast<int>(k) - p)),
                       IndecLabel::rank_one(f.lattice.type_of(static_cast<int>(k) - 1), -conductor)});
    }
    return out;
}

}  // namespace zdinf
