#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "zdinf/objects.hpp"

using namespace zdinf;

namespace {

const FieldSpec Q;
Scalar s(long long v) { return Scalar(Q, v); }
CObject label(const IndecLabel& l) { return synthesize(Q, l); }
CObject f0(int a) { return label(IndecLabel::rank_one(0, a)); }
CObject f1(int a) { return label(IndecLabel::rank_one(1, a)); }
CObject fm(int m, int a) { return label(IndecLabel::rank_two(m, a)); }
CObject t(int n, int a) { return label(IndecLabel::wing(n, a)); }

}  // namespace

TEST_CASE("torsion parts are normalized and checked") {
    const TorsionPart part({{2, 1}, {1, 3}, {2, -1}});
    CHECK(part.summands().front() == TorsionSummand{1, 3});
    CHECK(part.dim_at(-3) == 1);
    CHECK(part.dim_at(-2) == 0);
    CHECK(part.dim_at(-1) == 1);
    CHECK(part.dim_at(0) == 1);
    CHECK(part.dim_at(2) == 1);
    CHECK(part.dim_at(3) == 0);
    CHECK_THROWS_AS(TorsionPart({{0, 1}}), RangeError);
}

TEST_CASE("shift, sigma and the Serre twist on indecomposables") {
    for (int a = -3; a <= 3; ++a) {
        CHECK(shift(f0(0), a) == f0(a));
        CHECK(shift(f1(0), a) == f1(a));
        CHECK(sigma(f0(a)) == f1(a));
        CHECK(serre_twist(f0(a)) == f1(a - 1));
        CHECK(serre_twist(f1(a)) == f0(a - 1));
        for (int m = 1; m <= 4; ++m) {
            CHECK(shift(fm(m, 0), a) == fm(m, a));
            CHECK(sigma(fm(m, a)) == fm(m, a));
            CHECK(serre_twist(fm(m, a)) == fm(m, a - 1));
            CHECK(inverse_serre_twist(serre_twist(fm(m, a))) == fm(m, a));
        }
        for (int n = 1; n <= 4; ++n) {
            CHECK(sigma(t(n, a)) == t(n, a));
            CHECK(serre_twist(t(n, a)) == t(n, a - 1));
            CHECK(shift(shift(t(n, a), 2), -2) == t(n, a));
        }
    }
    CHECK(serre_twist(fm(2, 1)) == fm(2, 0));
    CHECK(serre_twist(f0(0)) == f1(-1));
    CHECK(serre_twist(t(3, 2)) == t(3, 1));
    CHECK(shift(fm(2, 1), 0) == fm(2, 1));
}

TEST_CASE("direct sums put type-0 coordinates first") {
    const DirectSum sum = direct_sum({f1(0), fm(2, 1), f0(3), t(2, 0)});
    CHECK(sum.object.p() == 2);
    CHECK(sum.object.q() == 2);
    CHECK(sum.object.torsion_count() == 1);
    CHECK(sum.coordinate_map[0] == std::vector<std::size_t>{2});
    CHECK(sum.coordinate_map[1] == std::vector<std::size_t>{0, 3});
    CHECK(sum.coordinate_map[2] == std::vector<std::size_t>{1});
}

TEST_CASE("elements and degree spaces") {
    const CObject x = direct_sum({fm(2, 0), t(3, 1)}).object;
    CHECK(degree_space(x, -2).dim() == 0);
    CHECK(degree_space(x, -1).dim() == 1);
    CHECK(degree_space(x, 0).dim() == 2);
    CHECK(degree_space(x, 2).dim() == 2);
    Element e = zero_element(x, -1);
    e.tors[0] = s(1);
    check_element(x, e);
    CHECK(multiply_x(x, e, 2).tors[0] == s(1));
    CHECK(multiply_x(x, e, 3).is_zero());
    Element bad = zero_element(x, 0);
    bad.lat = {s(1), s(0)};
    CHECK_THROWS_AS(check_element(x, bad), ShapeMismatch);
}

TEST_CASE("presentations of the basic examples") {
    Presentation cyclic;
    cyclic.field = Q;
    cyclic.row_degrees = {0};
    cyclic.col_degrees = {3};
    cyclic.coefficients = Matrix::from_rows(Q, 1, {{s(1)}});
    cyclic.localization = Matrix(Q, 0, 1);
    CHECK(from_presentation(cyclic).object == t(3, 0));

    Presentation free;
    free.field = Q;
    free.row_degrees = {0};
    free.coefficients = Matrix(Q, 1, 0);
    free.type_marks = {0};
    free.localization = Matrix::from_rows(Q, 1, {{s(1)}});
    CHECK(from_presentation(free).object == f0(0));

    Presentation r2;
    r2.field = Q;
    r2.row_degrees = {0, 2};
    r2.coefficients = Matrix(Q, 2, 0);
    r2.type_marks = {0, 1};
    r2.localization = Matrix::from_columns(Q, 2, {{s(1), s(1)}, {s(1), s(0)}});
    const PresentationResult res = from_presentation(r2);
    CHECK(res.object == fm(2, 0));
    CHECK(res.object.torsion.empty());
}

TEST_CASE("presentation errors") {
    Presentation p;
    p.field = Q;
    p.row_degrees = {0, 0};
    p.col_degrees = {1};
    p.coefficients = Matrix::from_rows(Q, 1, {{s(1)}, {s(0)}});
    p.type_marks = {0};
    p.localization = Matrix::from_rows(Q, 2, {{s(1), s(0)}});
    CHECK_THROWS_AS(from_presentation(p), InconsistentTypes);  // the relation survives localization
    p.localization = Matrix::from_rows(Q, 2, {{s(0), s(1)}});
    CHECK_NOTHROW(from_presentation(p));
    p.type_marks = {2};
    CHECK_THROWS_AS(from_presentation(p), InconsistentTypes);
    p.type_marks = {0};
    p.coefficients = Matrix(Q, 1, 1);
    CHECK_THROWS_AS(from_presentation(p), ShapeMismatch);
    p.coefficients = Matrix::from_rows(Q, 1, {{s(0)}, {s(0)}});
    CHECK_THROWS_AS(from_presentation(p), NotFullRank);  // two free generators, one ambient coordinate
}

namespace {

// Replace generator i by g_i + c x^{deg_i - deg_k} g_k.
void row_op(Presentation& p, std::size_t i, std::size_t k, const Scalar& c) {
    for (std::size_t j = 0; j < p.col_degrees.size(); ++j) p.coefficients(k, j) = p.coefficients(k, j) - c * p.coefficients(i, j);
    for (std::size_t r = 0; r < p.localization.rows(); ++r) p.localization(r, i) = p.localization(r, i) + c * p.localization(r, k);
}

// Replace relation j by r_j + c x^{deg_j - deg_k} r_k.
void col_op(Presentation& p, std::size_t j, std::size_t k, const Scalar& c) {
    for (std::size_t i = 0; i < p.row_degrees.size(); ++i) p.coefficients(i, j) = p.coefficients(i, j) + c * p.coefficients(i, k);
}

}  // namespace

TEST_CASE("presentations agree with the cokernel oracle and are invariant under graded operations") {
    std::mt19937_64 rng(17);
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
        for (int trial = 0; trial < 60; ++trial) {
            Presentation p = oracle::random_presentation(f, 2 + trial % 4, 1 + trial % 3, rng);
            const PresentationResult res = from_presentation(p);
            for (int d = -4; d <= 10; ++d) CHECK(degree_space(res.object, d).dim() == oracle::coker_dim(p, d));
            // the generator images satisfy every relation
            for (std::size_t j = 0; j < p.col_degrees.size(); ++j) {
                Element sum = zero_element(res.object, p.col_degrees[j]);
                for (std::size_t i = 0; i < p.row_degrees.size(); ++i) {
                    if (p.coefficients(i, j).is_zero()) continue;
                    sum = add(sum, scale(p.coefficients(i, j), multiply_x(res.object, res.generator_images[i], p.col_degrees[j] - p.row_degrees[i])));
                }
                CHECK(sum.is_zero());
            }
            std::uniform_int_distribution<std::size_t> pick_row(0, p.row_degrees.size() - 1), pick_col(0, p.col_degrees.size() - 1);
            for (int op = 0; op < 6; ++op) {
                const std::size_t i = pick_row(rng), k = pick_row(rng);
                if (i != k && p.row_degrees[i] >= p.row_degrees[k]) row_op(p, i, k, Scalar::random(f, rng));
                const std::size_t j = pick_col(rng), l = pick_col(rng);
                if (j != l && p.col_degrees[j] >= p.col_degrees[l]) col_op(p, j, l, Scalar::random(f, rng));
            }
            CHECK(from_presentation(p).object == res.object);
        }
    }
}

TEST_CASE("injective resolutions") {
    const InjectiveResolution r = injective_resolution(fm(1, 0));
    CHECK(r.i0 == InjectiveProfile{1, 1, {}});
    CHECK(r.i1 == InjectiveProfile{0, 0, {0, 1}});
    const InjectiveResolution tr = injective_resolution(t(3, 2));
    CHECK(tr.i0 == InjectiveProfile{0, 0, {1}});
    CHECK(tr.i1 == InjectiveProfile{0, 0, {-2}});
    const InjectiveResolution z = injective_resolution(CObject::zero(Q));
    CHECK(z.i0.empty());
    CHECK(z.i1.empty());
    for (const auto& l : oracle::reference_window().nodes) {
        const InjectiveResolution res = injective_resolution(label(l));
        CHECK_FALSE(res.i0.empty());
        CHECK_FALSE(res.i1.empty());
    }
    // T(n,a) maps to k[x,x^-1]/x^c exactly when -a < c <= -a+n
    CHECK(hom_dim_into({2, 0}, InjectiveProfile{0, 0, {1}}) == 1);
    CHECK(hom_dim_into({2, 0}, InjectiveProfile{0, 0, {1, 2}}) == 2);
    CHECK(hom_dim_into({2, 0}, InjectiveProfile{0, 0, {0, 5}}) == 0);
    CHECK(hom_dim_into({2, 0}, InjectiveProfile{1, 1, {}}) == 0);
}
