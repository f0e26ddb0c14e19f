#include <cmath>
#include <complex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "doctest.h"
#include "hankel/coefficients.hpp"
#include "hankel/parametrization.hpp"
#include "oracles.hpp"

using namespace hankel;

namespace {
GaussianRational gr(long n, long d = 1) { return GaussianRational(rat(n, d)); }
}

TEST_CASE("Caratheodory tail expansion fixtures") {
    SUBCASE("p1 = 2 pins the whole tail at 2") {
        // The representation degenerates: 4 - p1^2 = 0 wipes every free term.
        const CaratheodoryCoeffs p = lz_expand({rat(2), gr(7, 13), gr(-1, 2), gr(1, 3)});
        CHECK(p.p1 == gr(2));
        CHECK(p.p2 == gr(2));
        CHECK(p.p3 == gr(2));
        CHECK(p.p4 == gr(2));
    }
    SUBCASE("p1 = 0, gamma = 1 gives the even Caratheodory function") {
        const CaratheodoryCoeffs p = lz_expand({rat(0), gr(1), gr(0), gr(0)});
        CHECK(p.p1 == gr(0));
        CHECK(p.p2 == gr(2));
        CHECK(p.p3 == gr(0));
        CHECK(p.p4 == gr(2));
    }
    SUBCASE("gamma = i keeps |p2| <= 2 with complex values") {
        const GaussianRational i(rat(0), rat(1));
        const CaratheodoryCoeffs p = lz_expand({rat(0), i, gr(0), gr(0)});
        CHECK(p.p2 == GaussianRational(rat(0), rat(2)));
        CHECK(norm(p.p2) == rat(4));
    }
}

TEST_CASE("Schwarz tail expansion fixtures") {
    SUBCASE("c1 = 0, gamma = 1 gives omega = z^2") {
        const SchwarzCoeffs c = ps_expand({rat(0), gr(1), gr(0), gr(0)});
        CHECK(c.c1 == gr(0));
        CHECK(c.c2 == gr(1));
        CHECK(c.c3 == gr(0));
        CHECK(c.c4 == gr(0));
        CHECK(hankel_h2(coeffs_from_schwarz(c)) == gr(-1, 36));
    }
    SUBCASE("c1 = 0, gamma = 0, eta = 1 gives omega = z^3") {
        const SchwarzCoeffs c = ps_expand({rat(0), gr(0), gr(1), gr(0)});
        CHECK(c.c1 == gr(0));
        CHECK(c.c2 == gr(0));
        CHECK(c.c3 == gr(1));
        CHECK(c.c4 == gr(0));
        CHECK(hankel_h3(coeffs_from_schwarz(c)) == gr(-1, 144));
    }
    SUBCASE("c1 = 1 pins the tail at zero") {
        const SchwarzCoeffs c = ps_expand({rat(1), gr(1, 2), gr(1, 3), gr(1, 4)});
        CHECK(c.c1 == gr(1));
        CHECK(c.c2 == gr(0));
        CHECK(c.c3 == gr(0));
        CHECK(c.c4 == gr(0));
    }
}

TEST_CASE("expansions validate their inputs") {
    CHECK_THROWS_WITH_AS(lz_expand({rat(-1, 2), gr(0), gr(0), gr(0)}),
                         "p1 must lie in [0,2]", std::invalid_argument);
    CHECK_THROWS_WITH_AS(lz_expand({rat(5, 2), gr(0), gr(0), gr(0)}),
                         "p1 must lie in [0,2]", std::invalid_argument);
    CHECK_THROWS_WITH_AS(ps_expand({rat(-1, 10), gr(0), gr(0), gr(0)}),
                         "c1 must lie in [0,1]", std::invalid_argument);
    CHECK_THROWS_WITH_AS(ps_expand({rat(2), gr(0), gr(0), gr(0)}),
                         "c1 must lie in [0,1]", std::invalid_argument);
    CHECK_THROWS_WITH_AS(lz_expand({rat(1), gr(3, 2), gr(0), gr(0)}),
                         "gamma must have modulus <= 1", std::invalid_argument);
    CHECK_THROWS_WITH_AS(lz_expand({rat(1), gr(0), gr(-9, 8), gr(0)}),
                         "eta must have modulus <= 1", std::invalid_argument);
    CHECK_THROWS_WITH_AS(ps_expand({rat(1, 2), gr(0), gr(0), gr(17, 16)}),
                         "rho must have modulus <= 1", std::invalid_argument);
    CHECK_THROWS_WITH_AS(sample_cuboid(1, 0, SampleMode::LZ), "sample count must be >= 1",
                         std::invalid_argument);
}

TEST_CASE("the unimodular table is exact and varied") {
    const auto& tab = unimodular_table();
    CHECK(tab.size() == 40);
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& u : tab) {
        CHECK(norm(u) == rat(1));
        seen.insert({to_string(u.re), to_string(u.im)});
    }
    CHECK(seen.size() == tab.size());  // no duplicates
    CHECK(seen.count({"0", "1"}) == 1);        // i
    CHECK(seen.count({"3/5", "4/5"}) == 1);    // smallest Pythagorean point
}

TEST_CASE("cuboid sampling enumerates all corners first") {
    const auto lz = sample_cuboid(99, 81, SampleMode::LZ);
    REQUIRE(lz.size() == 81);
    for (const auto& s : lz) {
        CHECK(s.exact);
        CHECK(s.gamma.im == rat(0));  // corner sweep uses real moduli
        CHECK(s.eta.im == rat(0));
        CHECK(s.rho.im == rat(0));
    }
    // Axis order is (t, gamma, eta, rho) with the last axis fastest.
    CHECK(lz[0].t == rat(0));
    CHECK(lz[0].rho == gr(0));
    CHECK(lz[1].rho == gr(1, 2));
    CHECK(lz[2].rho == gr(1));
    CHECK(lz[3].eta == gr(1, 2));
    CHECK(lz[9].gamma == gr(1, 2));
    CHECK(lz[27].t == rat(1));
    // Sample 80 is the all-max corner, whose expansion is the constant tail 2.
    CHECK(lz[80].t == rat(2));
    CHECK(lz[80].gamma == gr(1));
    CHECK(lz[80].eta == gr(1));
    CHECK(lz[80].rho == gr(1));

    const auto ps = sample_cuboid(99, 27, SampleMode::PS);
    REQUIRE(ps.size() == 27);
    // The t grid for the Schwarz cuboid is {0, 1/2, 1}: index 26 is the
    // c1 = 0 slice's last corner, gamma = eta = rho = 1.
    CHECK(ps[26].t == rat(0));
    CHECK(ps[26].gamma == gr(1));
    // 13 = 1*9 + 1*3 + 1: the all-midpoint corner of the c1 = 0 slice.
    CHECK(ps[13].t == rat(0));
    CHECK(ps[13].gamma == gr(1, 2));
    CHECK(ps[13].eta == gr(1, 2));
    CHECK(ps[13].rho == gr(1, 2));
}

TEST_CASE("sampling is deterministic for a fixed seed") {
    const auto a = sample_cuboid(1234, 200, SampleMode::LZ);
    const auto b = sample_cuboid(1234, 200, SampleMode::LZ);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].exact == b[k].exact);
        if (a[k].exact) {
            CHECK(a[k].t == b[k].t);
            CHECK(a[k].gamma == b[k].gamma);
            CHECK(a[k].eta == b[k].eta);
            CHECK(a[k].rho == b[k].rho);
        } else {
            CHECK(a[k].t_d == b[k].t_d);
            CHECK(a[k].gamma_d == b[k].gamma_d);
            CHECK(a[k].eta_d == b[k].eta_d);
            CHECK(a[k].rho_d == b[k].rho_d);
        }
    }
}

TEST_CASE("angle policies control the exact/float mix") {
    const int n = 81 + 40;
    const auto exact = sample_cuboid(5, n, SampleMode::PS, AnglePolicy::ExactUnimodular);
    for (const auto& s : exact) CHECK(s.exact);

    const auto dense = sample_cuboid(5, n, SampleMode::PS, AnglePolicy::FloatDense);
    for (int k = 0; k < 81; ++k) CHECK(dense[k].exact);  // corners stay exact
    for (int k = 81; k < n; ++k) CHECK_FALSE(dense[k].exact);

    const auto mixed = sample_cuboid(5, n, SampleMode::PS, AnglePolicy::Mixed);
    int exact_tail = 0, float_tail = 0;
    for (int k = 81; k < n; ++k) (mixed[k].exact ? exact_tail : float_tail)++;
    CHECK(exact_tail == 20);
    CHECK(float_tail == 20);
}

TEST_CASE("every exact sample satisfies the parameter invariants") {
    const auto lz = sample_cuboid(77, 300, SampleMode::LZ, AnglePolicy::ExactUnimodular);
    for (const auto& s : lz) {
        REQUIRE(s.exact);
        CHECK(s.t >= rat(0));
        CHECK(s.t <= rat(2));
        CHECK(norm(s.gamma) <= rat(1));
        CHECK(norm(s.eta) <= rat(1));
        CHECK(norm(s.rho) <= rat(1));
        // and is therefore accepted by the expansion
        CHECK_NOTHROW(lz_expand({s.t, s.gamma, s.eta, s.rho}));
        // float mirrors track the exact values
        CHECK(s.t_d == doctest::Approx(to_double(s.t)).epsilon(1e-15));
        CHECK(std::abs(s.gamma_d - to_complex(s.gamma)) <= 1e-15);
        CHECK(std::abs(s.eta_d - to_complex(s.eta)) <= 1e-15);
        CHECK(std::abs(s.rho_d - to_complex(s.rho)) <= 1e-15);
    }
    const auto ps = sample_cuboid(78, 300, SampleMode::PS, AnglePolicy::ExactUnimodular);
    for (const auto& s : ps) {
        REQUIRE(s.exact);
        CHECK(s.t >= rat(0));
        CHECK(s.t <= rat(1));
        CHECK_NOTHROW(ps_expand({s.t, s.gamma, s.eta, s.rho}));
    }
}

TEST_CASE("float samples stay inside the closed cuboid") {
    const auto ps = sample_cuboid(79, 400, SampleMode::PS, AnglePolicy::FloatDense);
    for (std::size_t k = 81; k < ps.size(); ++k) {
        const auto& s = ps[k];
        REQUIRE_FALSE(s.exact);
        CHECK(s.t_d >= 0.0);
        CHECK(s.t_d <= 1.0);
        CHECK(std::abs(s.gamma_d) <= 1.0 + 1e-12);
        CHECK(std::abs(s.eta_d) <= 1.0 + 1e-12);
        CHECK(std::abs(s.rho_d) <= 1.0 + 1e-12);
    }
}

TEST_CASE("template formulas agree between exact and double instantiations") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 20; ++round) {
        const GaussianRational g = oracles::rnd_gauss(rng, -4, 4, 8);
        const GaussianRational e = oracles::rnd_gauss(rng, -4, 4, 8);
        const GaussianRational r = oracles::rnd_gauss(rng, -4, 4, 8);
        const GaussianRational t = gr((long)(rng() % 9), 8);
        GaussianRational p2, p3, p4;
        lz_formulas(t, g, e, r, p2, p3, p4);
        std::complex<double> q2, q3, q4;
        lz_formulas(to_complex(t), to_complex(g), to_complex(e), to_complex(r), q2, q3, q4);
        CHECK(std::abs(q2 - to_complex(p2)) <= 1e-9);
        CHECK(std::abs(q3 - to_complex(p3)) <= 1e-9);
        CHECK(std::abs(q4 - to_complex(p4)) <= 1e-9);

        GaussianRational c2, c3, c4;
        ps_formulas(t, g, e, r, c2, c3, c4);
        std::complex<double> d2, d3, d4;
        ps_formulas(to_complex(t), to_complex(g), to_complex(e), to_complex(r), d2, d3, d4);
        CHECK(std::abs(d2 - to_complex(c2)) <= 1e-9);
        CHECK(std::abs(d3 - to_complex(c3)) <= 1e-9);
        CHECK(std::abs(d4 - to_complex(c4)) <= 1e-9);
    }
}
