#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "zdinf/singularity.hpp"

using namespace zdinf;

namespace {

const FieldSpec Q;

Poly xpow(int e) { return Poly::monomial(Scalar::one(Q), e); }

RmElement random_homogeneous(std::mt19937_64& rng, int m, int degree) {
    const Scalar c = Scalar(Q, std::uniform_int_distribution<int>(-3, 3)(rng));
    const Scalar d = Scalar(Q, std::uniform_int_distribution<int>(-3, 3)(rng));
    // below degree m both components must agree
    return degree < m ? RmElement(m, Poly::monomial(c, degree), Poly::monomial(c, degree))
                      : RmElement(m, Poly::monomial(c, degree), Poly::monomial(d, degree));
}

// v_m L ⊆ L checked generator by generator.
bool closed_under(const CObject& x, int m) {
    for (const auto& g : x.lattice.generators()) {
        Vec w = g.dir;
        for (int k = x.p(); k < x.rank(); ++k) w[static_cast<std::size_t>(k)] = Scalar::zero(Q);
        if (!membership(x.lattice, {g.jump + m, w})) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("ring relations") {
    for (int m = 0; m <= 5; ++m) {
        const RmElement u = RmElement::u(Q, m), v = RmElement::v(Q, m);
        CHECK(u * v == RmElement(m, xpow(m + 1), Poly(Q)));
        CHECK(v * v == u.pow(static_cast<unsigned>(m)) * v);
        CHECK(u.pow(3) == RmElement(m, xpow(3), xpow(3)));
        CHECK(u.is_homogeneous());
        CHECK(v.is_homogeneous());
        CHECK(RmElement::one(Q, m) * u == u);
    }
}

TEST_CASE("membership and index checks") {
    CHECK_THROWS_AS(RmElement(2, xpow(1), Poly(Q)), NotInRing);
    CHECK_NOTHROW(RmElement(2, xpow(2), Poly(Q)));
    CHECK_THROWS_AS(RmElement(-1, xpow(1), xpow(1)), RangeError);
    CHECK_THROWS_AS(RmElement::u(Q, 1) * RmElement::u(Q, 2), MixedIndex);
    CHECK_FALSE((RmElement::u(Q, 2) + RmElement::one(Q, 2)).is_homogeneous());
}

TEST_CASE("random homogeneous elements multiply like generators") {
    std::mt19937_64 rng(61);
    for (int m = 0; m <= 5; ++m)
        for (int trial = 0; trial < 10; ++trial) {
            const int d1 = std::uniform_int_distribution<int>(0, 6)(rng), d2 = std::uniform_int_distribution<int>(0, 6)(rng);
            const RmElement a = random_homogeneous(rng, m, d1), b = random_homogeneous(rng, m, d2);
            CHECK((a * b).is_homogeneous());
            CHECK(a * b == b * a);
            CHECK((a + b) * RmElement::v(Q, m) == a * RmElement::v(Q, m) + b * RmElement::v(Q, m));
        }
}

TEST_CASE("singularity indices") {
    CHECK(singularity_index(synthesize(Q, IndecLabel::rank_one(0, 2))) == 0);
    CHECK(singularity_index(synthesize(Q, IndecLabel::rank_one(1, -1))) == 0);
    for (int m = 1; m <= 5; ++m)
        for (int a = -2; a <= 2; ++a) CHECK(singularity_index(synthesize(Q, IndecLabel::rank_two(m, a))) == m);
    CHECK(singularity_index(synthesize(Q, std::vector<IndecLabel>{IndecLabel::rank_two(2, 0), IndecLabel::rank_one(0, 3)})) == 2);
    CHECK_THROWS_AS(singularity_index(synthesize(Q, IndecLabel::wing(1, 0))), ShapeMismatch);
}

TEST_CASE("the index is the least closing shift") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<IndecLabel> labels;
        while (labels.size() < 3) {
            const IndecLabel l = oracle::random_label(rng, 4, 3);
            if (l.kind != IndecKind::Wing) labels.push_back(l);
        }
        const CObject x = random_relabel(synthesize(Q, labels), rng);
        const int i = singularity_index(x);
        for (int m = i; m <= i + 2; ++m) CHECK(closed_under(x, m));
        if (i > 0) CHECK_FALSE(closed_under(x, i - 1));
    }
}

TEST_CASE("y-linearity bounds") {
    for (int m = 1; m <= 4; ++m) CHECK(y_linearity_bound(identity_morphism(synthesize(Q, IndecLabel::rank_two(m, 0)))) == m);
    const CObject a = synthesize(Q, IndecLabel::rank_one(0, 0)), b = synthesize(Q, IndecLabel::rank_one(0, 1));
    for (const auto& f : hom_space(a, b).basis()) CHECK(y_linearity_bound(f) == 0);
    const CObject f10 = synthesize(Q, IndecLabel::rank_two(1, 0)), f11 = synthesize(Q, IndecLabel::rank_two(1, 1));
    for (const auto& f : hom_space(f10, f11).basis()) CHECK(y_linearity_bound(f) <= 2);
    const CObject f20 = synthesize(Q, IndecLabel::rank_two(2, 0));
    for (const auto& f : hom_space(f10, f20).basis()) CHECK(y_linearity_bound(f) == 2);
    const CObject t = synthesize(Q, IndecLabel::wing(1, 0));
    CHECK_THROWS_AS(y_linearity_bound(identity_morphism(t)), NotLatticeMorphism);
}
