/**
 * @file ar.hpp
 * @brief Extensions, almost split sequences and windows of the Auslander-Reiten quiver.
 */
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zdinf/decomp.hpp"

namespace zdinf {

/// 0 → left → middle → right → 0 with its class in Ext^1(right, left).
struct ShortExactSeq {
    CObject left;
    CObject middle;
    CObject right;
    Morphism inject;
    Morphism surject;
    ExtClass cls;
};

/// The extension of x = c.src by y = c.dst determined by c.
ShortExactSeq extension_object(const ExtClass& c);

/// The class in Ext^1(surject.dst, inject.src) of a short exact sequence.
/// Throws ShapeMismatch if the pair is not exact.
ExtClass sequence_class(const Morphism& inject, const Morphism& surject);

/// Mono, epi, zero composite and exact in the middle at every degree.
bool is_exact(const ShortExactSeq& s);

struct AlmostSplit {
    ShortExactSeq seq;
    IndecLabel left;
    IndecLabel right;
    std::vector<IndecLabel> middle;  // sorted
};

/// Throws NotIndecomposable unless dim End(x) = 1.
AlmostSplit almost_split(const CObject& x);
AlmostSplit almost_split(FieldSpec field, const IndecLabel& x);

/// "0 → L → M1 + M2 → R → 0".
std::string format_sequence(const AlmostSplit& a);

struct QuiverWindow {
    std::vector<IndecLabel> nodes;                        // sorted
    std::map<std::pair<IndecLabel, IndecLabel>, int> arrows;  // (from, to) → multiplicity
    std::map<IndecLabel, IndecLabel> translation;         // X ↦ τX, both in the window
    int dropped_arrows = 0;                               // mesh arrows leaving the window
};

/// Throws WindowTooSmall if the window cannot hold a mesh (m_max, n_max >= 1, a_max > a_min).
QuiverWindow quiver_window(FieldSpec field, int m_max, int a_min, int a_max, int n_max, bool parallel = true);

/// Restriction of a window to a set of nodes.
QuiverWindow induced_subquiver(const QuiverWindow& w, const std::vector<IndecLabel>& nodes);

/// DOT digraph; node ids F0_a, F1_a, F_m_a, T_n_a; τ drawn dashed from X to τX.
std::string dot_export(const QuiverWindow& w);
std::string dot_node_id(const IndecLabel& label);
/// JSON document with schema "zdinf.quiver/1".
std::string quiver_json(const QuiverWindow& w);

struct Witnesses {
    int n_epi = -1;   // least n with Ext^1(X, σX(-n)) ≠ 0
    int n_mono = -1;  // least n with Ext^1(σX(n), X) ≠ 0
};

/// Throws WitnessNotFound if either search exceeds `bound`.
Witnesses no_proj_no_inj_witness(const CObject& x, int bound = 8);

/// Dimensions and ranks of a six-term Hom/Ext sequence.
struct LesReport {
    std::vector<std::size_t> dims;   // the six terms, left to right
    std::vector<std::size_t> ranks;  // the five maps
    bool exact = false;
    long long alternating_sum = 0;
};

/// 0→Hom(C,G)→Hom(B,G)→Hom(A,G)→Ext(C,G)→Ext(B,G)→Ext(A,G)→0 for s = (A→B→C).
LesReport les_contravariant(const ShortExactSeq& s, const CObject& g);
/// 0→Hom(G,A)→Hom(G,B)→Hom(G,C)→Ext(G,A)→Ext(G,B)→Ext(G,C)→0.
LesReport les_covariant(const CObject& g, const ShortExactSeq& s);

}  // namespace zdinf
