/**
 * @file sweep.hpp
 * @brief Catalogs of indecomposables and pairwise sweeps over them.
 *
 * Every sweep has a serial reference path and an OpenMP path; both fill the
 * result in catalog order, so the output does not depend on the schedule.
 */
#pragma once

#include <string_view>
#include <vector>

#include "zdinf/decomp.hpp"

namespace zdinf {

/// Bounds 1 <= m <= m_max, 1 <= n <= n_max, a_min <= a <= a_max.
/// m_max = 0 (n_max = 0) leaves out the rank-two (torsion) objects.
struct CatalogSpec {
    int m_max = 4;
    int n_max = 4;
    int a_min = -3;
    int a_max = 3;
};

/// Parses comma-separated constraints "m<=M", "n<=N", "|a|<=A", "a>=X", "a<=Y".
/// Throws ParseError with the offending position.
CatalogSpec parse_catalog_spec(std::string_view text);

/// F0[a], F1[a], F[m,a], T[n,a] inside the bounds, sorted.
std::vector<IndecLabel> catalog(const CatalogSpec& spec);

enum class Schedule { Serial, Parallel };

/// dims[i][j] = dim Hom(X_i, X_j).
std::vector<std::vector<std::size_t>> hom_dim_table(FieldSpec field, const std::vector<IndecLabel>& labels, Schedule schedule);
/// dims[i][j] = dim Ext^1(X_i, X_j).
std::vector<std::vector<std::size_t>> ext_dim_table(FieldSpec field, const std::vector<IndecLabel>& labels, Schedule schedule);

struct SerrePairResult {
    IndecLabel x;
    IndecLabel y;
    SerreReport report;
};

struct SerreSweep {
    std::vector<SerrePairResult> pairs;  // row-major over the catalog
    std::size_t failures = 0;
    bool pass() const { return failures == 0; }
};

/// serre_check on every ordered pair of the catalog.
SerreSweep serre_sweep(FieldSpec field, const std::vector<IndecLabel>& labels, Schedule schedule);

}  // namespace zdinf
