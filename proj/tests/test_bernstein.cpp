#include <random>
#include <stdexcept>

#include "doctest.h"
#include "hankel/bernstein.hpp"
#include "oracles.hpp"

using namespace hankel;

namespace {

BivariatePoly p_squared() {
    return pow(BivariatePoly::var_p(), 2);
}

Rectangle unit_square() { return {rat(0), rat(1), rat(0), rat(1)}; }

// Wide random evaluation check: every point value must sit inside the
// Bernstein enclosure.
void check_enclosure(const BivariatePoly& poly, const Rectangle& rect, std::uint64_t seed) {
    const BernsteinPatch patch = bernstein_on(poly, rect);
    const auto [lo, hi] = bernstein_range(patch);
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 60; ++k) {
        const Rational u = oracles::rnd_rat(rng, 0, 1, 64);
        const Rational v = oracles::rnd_rat(rng, 0, 1, 64);
        const Rational p = rect.a + (rect.b - rect.a) * u;
        const Rational x = rect.c + (rect.d - rect.c) * v;
        const Rational val = poly.eval(p, x);
        CHECK(lo <= val);
        CHECK(val <= hi);
        // the patch evaluated through the basis agrees with the polynomial
        CHECK(oracles::bernstein_value(patch, u, v) == val);
    }
}

}  // namespace

TEST_CASE("power-to-Bernstein conversion fixtures") {
    // p^2 at bidegree (3,0): diagonal of the degree-elevated coefficients.
    const BernsteinPatch patch = to_bernstein(p_squared(), 3, 0);
    REQUIRE(patch.m == 3);
    REQUIRE(patch.n == 0);
    CHECK(patch.b[0][0] == rat(0));
    CHECK(patch.b[1][0] == rat(0));
    CHECK(patch.b[2][0] == rat(1, 3));
    CHECK(patch.b[3][0] == rat(1));

    // Constants convert to constant matrices.
    const BernsteinPatch c = to_bernstein(BivariatePoly::constant(rat(7, 3)), 2, 2);
    for (const auto& row : c.b)
        for (const auto& v : row) CHECK(v == rat(7, 3));
}

TEST_CASE("Bernstein coefficients interpolate corner values") {
    BivariatePoly f = BivariatePoly::monomial(2, 1, rat(3)) +
                      BivariatePoly::monomial(1, 1, rat(-2)) +
                      BivariatePoly::monomial(0, 2, rat(5, 7));
    const BernsteinPatch patch = bernstein_on(f, unit_square());
    const int M = patch.m, N = patch.n;
    CHECK(patch.b[0][0] == f.eval(rat(0), rat(0)));
    CHECK(patch.b[M][0] == f.eval(rat(1), rat(0)));
    CHECK(patch.b[0][N] == f.eval(rat(0), rat(1)));
    CHECK(patch.b[M][N] == f.eval(rat(1), rat(1)));
}

TEST_CASE("enclosure property on random polynomials and rectangles") {
    std::mt19937_64 rng(404);
    for (int round = 0; round < 10; ++round) {
        BivariatePoly f(3, 2);
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 2; ++j)
                f.set_coeff(i, j, oracles::rnd_rat(rng, -6, 6, 8));
        check_enclosure(f, unit_square(), 1000 + round);
        check_enclosure(f, {rat(1, 4), rat(3, 4), rat(0), rat(1, 2)}, 2000 + round);
        check_enclosure(f, {rat(-1), rat(2), rat(-3, 2), rat(-1, 2)}, 3000 + round);
    }
}

TEST_CASE("degree elevation tightens or preserves the enclosure") {
    BivariatePoly f = BivariatePoly::monomial(2, 2, rat(4)) +
                      BivariatePoly::monomial(1, 0, rat(-3)) +
                      BivariatePoly::constant(rat(1));
    const auto r0 = bernstein_range(to_bernstein(f, 2, 2));
    const auto r1 = bernstein_range(to_bernstein(f, 4, 3));
    const auto r2 = bernstein_range(to_bernstein(f, 6, 6));
    // elevated enclosures are nested
    CHECK(r0.first <= r1.first);
    CHECK(r1.second <= r0.second);
    CHECK(r1.first <= r2.first);
    CHECK(r2.second <= r1.second);
    // and all contain the true range endpoints attained at corners/interior
    CHECK(r2.first <= f.eval(rat(1, 2), rat(0)));
    CHECK(f.eval(rat(1), rat(1)) <= r2.second);
}

TEST_CASE("affine restriction is exact composition") {
    BivariatePoly f = BivariatePoly::monomial(2, 0, rat(1)) +
                      BivariatePoly::monomial(0, 1, rat(-1, 3));
    const Rectangle rect{rat(1, 2), rat(1), rat(-1), rat(1)};
    const BivariatePoly g = affine_restrict(f, rect);
    std::mt19937_64 rng(17);
    for (int k = 0; k < 25; ++k) {
        const Rational u = oracles::rnd_rat(rng, 0, 1, 32);
        const Rational v = oracles::rnd_rat(rng, 0, 1, 32);
        const Rational p = rat(1, 2) + rat(1, 2) * u;
        const Rational x = rat(-1) + rat(2) * v;
        CHECK(g.eval(u, v) == f.eval(p, x));
    }
    // p restricted to [1/2,1] becomes 1/2 + u/2
    const BivariatePoly pu = affine_restrict(BivariatePoly::var_p(), rect);
    CHECK(pu.coeff(0, 0) == rat(1, 2));
    CHECK(pu.coeff(1, 0) == rat(1, 2));
}

TEST_CASE("certification: direct, subdivided, and failed") {
    // 4p(1-p) has Bernstein coefficients (0,2,0) at degree 2: max 2 > 1, so
    // depth 0 fails even though the true max is exactly 1.
    BivariatePoly hump = rat(4) * (BivariatePoly::var_p() -
                                   pow(BivariatePoly::var_p(), 2));
    const auto fail0 = certify_upper_bound(hump, unit_square(), rat(1), 0,
                                           SplitStrategy::BisectLongest);
    CHECK_FALSE(fail0.certified);
    CHECK(fail0.leaves_failed == 1);
    CHECK(fail0.root.status == CertStatus::Failed);
    CHECK(fail0.root.bernstein_max == rat(2));

    // One bisection certifies both halves (coefficients 0,1,1 and 1,1,0).
    const auto ok1 = certify_upper_bound(hump, unit_square(), rat(1), 1,
                                         SplitStrategy::BisectLongest);
    CHECK(ok1.certified);
    CHECK(ok1.leaves_certified == 2);
    CHECK(ok1.leaves_failed == 0);
    CHECK(ok1.root.status == CertStatus::Subdivided);
    REQUIRE(ok1.root.children.size() == 2);
    for (const auto& child : ok1.root.children) {
        CHECK(child.status == CertStatus::CertifiedBernstein);
        CHECK(child.bernstein_max == rat(1));
        CHECK(child.depth == 1);
    }

    // A bound above the Bernstein max certifies at the root.
    const auto direct = certify_upper_bound(hump, unit_square(), rat(2), 5);
    CHECK(direct.certified);
    CHECK(direct.root.status == CertStatus::CertifiedBernstein);
    CHECK(direct.root.children.empty());
}

TEST_CASE("paper-quadrants splits in the documented order") {
    BivariatePoly f = BivariatePoly::monomial(1, 1, rat(4));  // max 4 at (1,1)
    const auto rep = certify_upper_bound(f, unit_square(), rat(3), 1,
                                         SplitStrategy::PaperQuadrants);
    REQUIRE(rep.root.children.size() == 4);
    const auto& q = rep.root.children;
    CHECK(q[0].rect.a == rat(0));   // (low, low)
    CHECK(q[0].rect.b == rat(1, 2));
    CHECK(q[0].rect.c == rat(0));
    CHECK(q[0].rect.d == rat(1, 2));
    CHECK(q[1].rect.a == rat(0));   // (low, high)
    CHECK(q[1].rect.c == rat(1, 2));
    CHECK(q[2].rect.a == rat(1, 2));  // (high, low)
    CHECK(q[2].rect.c == rat(0));
    CHECK(q[3].rect.a == rat(1, 2));  // (high, high)
    CHECK(q[3].rect.c == rat(1, 2));
    // only the (high, high) quadrant can exceed 3: its max is 4
    CHECK(q[0].status == CertStatus::CertifiedBernstein);
    CHECK(q[1].status == CertStatus::CertifiedBernstein);
    CHECK(q[2].status == CertStatus::CertifiedBernstein);
    CHECK(q[3].status == CertStatus::Failed);
    CHECK_FALSE(rep.certified);
    CHECK(rep.leaves_certified == 3);
    CHECK(rep.leaves_failed == 1);
}

TEST_CASE("certified reports are sound on random samples") {
    BivariatePoly f = BivariatePoly::monomial(2, 1, rat(2)) +
                      BivariatePoly::monomial(1, 2, rat(-1)) +
                      BivariatePoly::monomial(1, 0, rat(1, 2));
    const Rational bound = rat(5, 2);
    const auto rep = certify_upper_bound(f, unit_square(), bound, 8);
    REQUIRE(rep.certified);
    std::mt19937_64 rng(55);
    for (int k = 0; k < 200; ++k) {
        const Rational p = oracles::rnd_rat(rng, 0, 1, 128);
        const Rational x = oracles::rnd_rat(rng, 0, 1, 128);
        CHECK(f.eval(p, x) <= bound);
    }
    // every leaf is certified and leaf rectangles tile without failures
    for (const CertNode* leaf : rep.leaves()) {
        CHECK(leaf->status == CertStatus::CertifiedBernstein);
    }
}

TEST_CASE("monomial tail bound") {
    // p^3 on [0, 1/4]^2: S_3 = 1, K = 1 * (1/4)^(3-2).
    const BivariatePoly cube = pow(BivariatePoly::var_p(), 3);
    CHECK(monomial_tail_bound(cube, rat(1, 4)) == rat(1, 4));

    // zero polynomial has an empty tail
    CHECK(monomial_tail_bound(BivariatePoly(0, 0), rat(1, 2)) == rat(0));

    // mixed tail: |2| p^2 x + |-3| p x^3 -> 2 s + 3 s^2 at s = 1/2
    BivariatePoly mixed = BivariatePoly::monomial(2, 1, rat(2)) +
                          BivariatePoly::monomial(1, 3, rat(-3));
    CHECK(monomial_tail_bound(mixed, rat(1, 2)) == rat(7, 4));

    // degree-2 terms are not a tail
    CHECK_THROWS_AS(monomial_tail_bound(p_squared(), rat(1, 4)), std::domain_error);

    // abs_degree_sums indexes by total degree
    const auto sums = abs_degree_sums(mixed);
    REQUIRE(sums.size() == 5);
    CHECK(sums[0] == rat(0));
    CHECK(sums[3] == rat(2));
    CHECK(sums[4] == rat(3));
}

TEST_CASE("corner certificate") {
    SUBCASE("clean quadratic: F = p^2 + x^2 certifies mu = 1") {
        BivariatePoly f = p_squared() + pow(BivariatePoly::var_x(), 2);
        CHECK(corner_certificate(f, rat(1)) == rat(1));
    }
    SUBCASE("cross term eats into the margin") {
        // F = p^2 - px + x^2: mu = 1 - 1/2 = 1/2, no tail.
        BivariatePoly f = p_squared() + pow(BivariatePoly::var_x(), 2) +
                          BivariatePoly::monomial(1, 1, rat(-1));
        CHECK(corner_certificate(f, rat(1, 2)) == rat(1, 2));
    }
    SUBCASE("tail subtracts its bound") {
        // F = p^2 + x^2 - p^3: mu = 1 - s at s = 1/4.
        BivariatePoly f = p_squared() + pow(BivariatePoly::var_x(), 2) -
                          pow(BivariatePoly::var_p(), 3);
        CHECK(corner_certificate(f, rat(1, 4)) == rat(3, 4));
        // soundness: F >= mu (p^2+x^2) on [0, 1/4]^2
        std::mt19937_64 rng(77);
        for (int k = 0; k < 100; ++k) {
            const Rational p = oracles::rnd_rat(rng, 0, 1, 64) / 4;
            const Rational x = oracles::rnd_rat(rng, 0, 1, 64) / 4;
            CHECK(f.eval(p, x) >= rat(3, 4) * (p * p + x * x));
        }
    }
    SUBCASE("dominant cross term is rejected") {
        BivariatePoly f = p_squared() + pow(BivariatePoly::var_x(), 2) +
                          BivariatePoly::monomial(1, 1, rat(-4));
        CHECK_THROWS_AS(corner_certificate(f, rat(1, 4)), std::domain_error);
    }
    SUBCASE("constant or linear part is rejected") {
        CHECK_THROWS_AS(corner_certificate(p_squared() + BivariatePoly::constant(rat(1)),
                                           rat(1, 4)),
                        std::domain_error);
        CHECK_THROWS_AS(corner_certificate(p_squared() + BivariatePoly::var_x(), rat(1, 4)),
                        std::domain_error);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(BivariatePoly(-1, 2), std::invalid_argument);
    // reads beyond the stored bidegree see padding zeros, negative ones throw
    CHECK(BivariatePoly(2, 2).coeff(3, 0) == rat(0));
    CHECK_THROWS_AS(BivariatePoly(2, 2).coeff(-1, 0), std::out_of_range);
    BivariatePoly f(1, 1);
    CHECK_THROWS_AS(f.set_coeff(0, 2, rat(1)), std::out_of_range);
    CHECK_THROWS_AS(pow(BivariatePoly::var_p(), -1), std::invalid_argument);
    CHECK_THROWS_AS(bernstein_on(f, Rectangle{rat(1), rat(0), rat(0), rat(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(to_bernstein(p_squared(), 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(certify_upper_bound(f, unit_square(), rat(1), -1),
                    std::invalid_argument);
}

TEST_CASE("trim keeps bidegrees honest and minimal") {
    BivariatePoly f(4, 3);
    f.set_coeff(2, 1, rat(5));
    const BivariatePoly t = f.trimmed();
    CHECK(t.deg_p() == 2);
    CHECK(t.deg_x() == 1);
    CHECK(t.coeff(2, 1) == rat(5));
    CHECK(t == f);  // equality ignores padding zeros
}
