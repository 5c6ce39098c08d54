#include "zdinf/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace zdinf {

GradedLattice canonicalize(FieldSpec field, const std::vector<LatticeGenerator>& gens, int p, int q) {
    if (p < 0 || q < 0) throw DimensionMismatch("negative ambient rank");
    const auto r = static_cast<std::size_t>(p + q);
    for (const auto& g : gens) {
        if (g.dir.size() != r)
            throw DimensionMismatch("generator dir has length " + std::to_string(g.dir.size()) + ", ambient rank is " + std::to_string(r));
        for (const auto& s : g.dir)
            if (!(s.field() == field)) throw FieldMismatch("generator over " + s.field().to_string() + " in a lattice over " + field.to_string());
    }

    std::set<int> jump_values;
    for (const auto& g : gens) jump_values.insert(g.jump);

    GradedLattice out;
    out.field_ = field;
    out.p_ = p;
    out.q_ = q;

    std::vector<Vec> accumulated;
    std::vector<std::size_t> previous_pivots;
    for (int e : jump_values) {
        for (const auto& g : gens)
            if (g.jump == e) accumulated.push_back(g.dir);
        Subspace s = Subspace::span(field, r, accumulated);
        if (s.pivots() == previous_pivots) continue;  // zero dirs or already contained
        for (std::size_t row = 0; row < s.dim(); ++row) {
            const auto pivot = s.pivots()[row];
            if (std::find(previous_pivots.begin(), previous_pivots.end(), pivot) == previous_pivots.end())
                out.gens_.push_back({e, s.basis()[row]});
        }
        previous_pivots = s.pivots();
        accumulated = s.basis();
        out.level_jumps_.push_back(e);
        out.level_spaces_.push_back(std::move(s));
    }
    if (out.gens_.size() != r) throw NotFullRank("generator dirs span a " + std::to_string(out.gens_.size()) + "-dimensional subspace of k^" + std::to_string(r));

    std::vector<Vec> dirs;
    for (const auto& g : out.gens_) dirs.push_back(g.dir);
    out.dirs_inverse_ = *inverse(Matrix::from_columns(field, r, dirs));
    return out;
}

std::vector<int> GradedLattice::jumps() const {
    std::vector<int> out;
    for (const auto& g : gens_) out.push_back(g.jump);
    return out;
}

int GradedLattice::min_jump() const {
    if (gens_.empty()) throw ShapeMismatch("rank-0 lattice has no jumps");
    return gens_.front().jump;
}

int GradedLattice::max_jump() const {
    if (gens_.empty()) throw ShapeMismatch("rank-0 lattice has no jumps");
    return gens_.back().jump;
}

Subspace GradedLattice::filtration(int e) const {
    const auto it = std::upper_bound(level_jumps_.begin(), level_jumps_.end(), e);
    if (it == level_jumps_.begin()) return Subspace::zero(field_, static_cast<std::size_t>(rank()));
    return level_spaces_[static_cast<std::size_t>(it - level_jumps_.begin() - 1)];
}

Vec GradedLattice::generator_coefficients(std::span<const Scalar> v) const { return dirs_inverse_.apply(v); }

std::string GradedLattice::to_string() const {
    std::ostringstream out;
    out << "lattice(p=" << p_ << ", q=" << q_ << ";";
    for (const auto& g : gens_) {
        out << " x^" << g.jump << "(";
        for (std::size_t i = 0; i < g.dir.size(); ++i) out << (i ? "," : "") << g.dir[i].to_string();
        out << ")";
    }
    out << ")";
    return out.str();
}

bool operator==(const GradedLattice& a, const GradedLattice& b) {
    return a.field_ == b.field_ && a.p_ == b.p_ && a.q_ == b.q_ && a.gens_ == b.gens_;
}

bool membership(const GradedLattice& lattice, const GradedVector& v) {
    if (v.coords.size() != static_cast<std::size_t>(lattice.rank()))
        throw DimensionMismatch("graded vector of length " + std::to_string(v.coords.size()) + " against a rank-" + std::to_string(lattice.rank()) + " lattice");
    return lattice.filtration(v.degree).contains(v.coords);
}

namespace {

void check_compatible(const GradedLattice& a, const GradedLattice& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("lattices over different fields");
    if (a.p() != b.p() || a.q() != b.q()) throw DimensionMismatch("lattices live in different ambient spaces");
}

template <typename Combine>
GradedLattice combine_levels(const GradedLattice& a, const GradedLattice& b, Combine combine) {
    std::set<int> jumps(a.levels().begin(), a.levels().end());
    jumps.insert(b.levels().begin(), b.levels().end());
    std::vector<LatticeGenerator> gens;
    for (int e : jumps)
        for (auto& v : combine(a.filtration(e), b.filtration(e)).basis()) gens.push_back({e, v});
    return canonicalize(a.field(), gens, a.p(), a.q());
}

}  // namespace

GradedLattice lattice_sum(const GradedLattice& a, const GradedLattice& b) {
    check_compatible(a, b);
    return combine_levels(a, b, [](const Subspace& x, const Subspace& y) { return x + y; });
}

GradedLattice lattice_intersect(const GradedLattice& a, const GradedLattice& b) {
    check_compatible(a, b);
    return combine_levels(a, b, [](const Subspace& x, const Subspace& y) { return x.intersect(y); });
}

GradedLattice shift_lattice(const GradedLattice& lattice, int s) {
    auto gens = lattice.generators();
    for (auto& g : gens) g.jump -= s;
    return canonicalize(lattice.field(), gens, lattice.p(), lattice.q());
}

Matrix swap_types_matrix(FieldSpec field, int p, int q) {
    const auto r = static_cast<std::size_t>(p + q);
    Matrix perm(field, r, r);
    for (int j = 0; j < p; ++j) perm(static_cast<std::size_t>(q + j), static_cast<std::size_t>(j)) = Scalar::one(field);
    for (int l = 0; l < q; ++l) perm(static_cast<std::size_t>(l), static_cast<std::size_t>(p + l)) = Scalar::one(field);
    return perm;
}

GradedLattice swap_types(const GradedLattice& lattice) {
    const Matrix perm = swap_types_matrix(lattice.field(), lattice.p(), lattice.q());
    std::vector<LatticeGenerator> gens;
    for (const auto& g : lattice.generators()) gens.push_back({g.jump, perm.apply(g.dir)});
    return canonicalize(lattice.field(), gens, lattice.q(), lattice.p());
}

}  // namespace zdinf
