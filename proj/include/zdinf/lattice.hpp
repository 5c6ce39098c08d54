/**
 * @file lattice.hpp
 * @brief Full-rank graded k[x]-lattices inside k^r ⊗ k[x, x^-1].
 *
 * A lattice is Σ_j x^{jump_j} k[x] dir_j. Its degree-e component is
 * x^e ⊗ S_e where S_e = span{dir_j : jump_j <= e}; the lattice is the same
 * thing as the increasing filtration (S_e) of k^r, which is what the
 * canonical form stores. The first p ambient coordinates carry type 0, the
 * remaining q carry type 1.
 */
#pragma once

#include <string>
#include <vector>

#include "zdinf/linalg.hpp"

namespace zdinf {

struct LatticeGenerator {
    int jump = 0;
    Vec dir;

    friend bool operator==(const LatticeGenerator&, const LatticeGenerator&) = default;
};

/// The homogeneous element x^degree · coords.
struct GradedVector {
    int degree = 0;
    Vec coords;
};

class GradedLattice;

/// Canonical form of the lattice generated by `gens`. Redundant generators are
/// allowed; throws NotFullRank if the dirs do not span k^{p+q} and
/// DimensionMismatch if some dir has the wrong length.
GradedLattice canonicalize(FieldSpec field, const std::vector<LatticeGenerator>& gens, int p, int q);

class GradedLattice {
public:
    GradedLattice() = default;
    static GradedLattice zero(FieldSpec field) { return canonicalize(field, {}, 0, 0); }

    FieldSpec field() const { return field_; }
    int p() const { return p_; }
    int q() const { return q_; }
    int rank() const { return p_ + q_; }
    bool is_zero() const { return rank() == 0; }

    /// Canonical generators: jump ascending, one per new pivot of S_e.
    const std::vector<LatticeGenerator>& generators() const { return gens_; }
    std::vector<int> jumps() const;
    /// Distinct jump values, ascending.
    const std::vector<int>& levels() const { return level_jumps_; }
    int min_jump() const;
    int max_jump() const;

    /// S_e; zero below the first jump, k^r from the last jump on.
    Subspace filtration(int e) const;

    /// Coefficients c with v = Σ c_j dir_j over the canonical generators.
    Vec generator_coefficients(std::span<const Scalar> v) const;

    /// 0 for coordinates below p, 1 otherwise.
    int type_of(int coordinate) const { return coordinate < p_ ? 0 : 1; }

    std::string to_string() const;

    friend bool operator==(const GradedLattice& a, const GradedLattice& b);

private:
    friend GradedLattice canonicalize(FieldSpec, const std::vector<LatticeGenerator>&, int, int);

    FieldSpec field_{};
    int p_ = 0;
    int q_ = 0;
    std::vector<int> level_jumps_;
    std::vector<Subspace> level_spaces_;
    std::vector<LatticeGenerator> gens_;
    Matrix dirs_inverse_;
};

/// v ∈ L, i.e. v.coords ∈ S_{v.degree}.
bool membership(const GradedLattice& lattice, const GradedVector& v);

GradedLattice lattice_sum(const GradedLattice& a, const GradedLattice& b);
/// Degreewise intersection; the result is again full rank.
GradedLattice lattice_intersect(const GradedLattice& a, const GradedLattice& b);

/// L(s): jumps e ↦ e - s.
GradedLattice shift_lattice(const GradedLattice& lattice, int s);
/// Reorders the ambient coordinates to (old type 1, old type 0) and swaps p, q.
GradedLattice swap_types(const GradedLattice& lattice);
/// Permutation matrix of swap_types: new coordinates = P · old coordinates.
Matrix swap_types_matrix(FieldSpec field, int p, int q);

}  // namespace zdinf
