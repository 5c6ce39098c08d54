/**
 * @file decomp.hpp
 * @brief Indecomposable labels, Krull-Schmidt decomposition and rank-one filtrations.
 */
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zdinf/hom_ext.hpp"

namespace zdinf {

enum class IndecKind { RankOne, RankTwo, Wing };

/// F^type_{0a} (RankOne), F_{ma} (RankTwo) or T(n,a) (Wing).
struct IndecLabel {
    IndecKind kind = IndecKind::RankOne;
    int size = 0;  // m for RankTwo, n for Wing, 0 for RankOne
    int a = 0;
    int type = 0;  // RankOne only

    static IndecLabel rank_one(int type, int a) { return {IndecKind::RankOne, 0, a, type}; }
    static IndecLabel rank_two(int m, int a);
    static IndecLabel wing(int n, int a);

    /// "F0[a]", "F1[a]", "F[m,a]" or "T[n,a]".
    std::string to_string() const;

    friend auto operator<=>(const IndecLabel&, const IndecLabel&) = default;
};

std::string to_string(const std::vector<IndecLabel>& labels);

CObject synthesize(FieldSpec field, const IndecLabel& label);
/// Direct sum in the given order (a single label gives the indecomposable itself).
CObject synthesize(FieldSpec field, const std::vector<IndecLabel>& labels);

/// Label of V X for an indecomposable X.
IndecLabel serre_twist(const IndecLabel& label);

struct EndRing {
    HomSpace space;
    /// table[i][j] = coordinates of basis[i] ∘ basis[j].
    std::vector<std::vector<Vec>> table;
    std::size_t dim() const { return space.dim(); }
};

EndRing end_ring(const CObject& x);

inline constexpr std::uint64_t kDefaultDecompositionSeed = 0x5eedULL;

struct Decomposition {
    std::vector<IndecLabel> factors;  // sorted
    Morphism iso;                     // synthesize(factors) → input
};

/// Torsion labels are read off; lattice multiplicities come from the
/// invariants dim(π0(S_e') ∩ S_e) and dim(S_e ∩ V1); the isomorphism is a
/// seeded random element of Hom(⊕ factors, X) checked to be invertible.
Decomposition decompose(const CObject& x, std::uint64_t seed = kDefaultDecompositionSeed);

/// The image of x under a random type-preserving automorphism of its ambient space.
/// Torsion is unchanged. Used to hide the summand structure of a direct sum.
CObject random_relabel(const CObject& x, std::mt19937_64& rng);

/// Throws UnrecognizedShape unless x is (canonically) one of the indecomposables.
IndecLabel identify(const CObject& x);

struct FiltrationStep {
    CObject sub;          // F_k: the part of F inside the first k ambient coordinates
    IndecLabel quotient;  // F_k / F_{k-1}
};

/// 0 = F_0 ⊂ F_1 ⊂ … ⊂ F_r = F, peeling off the last ambient coordinate first.
std::vector<FiltrationStep> filtration(const CObject& f);

}  // namespace zdinf
