#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "hankel/coefficients.hpp"
#include "hankel/pipelines.hpp"
#include "oracles.hpp"

using namespace hankel;

namespace {
GaussianRational gr(long n, long d = 1) { return GaussianRational(rat(n, d)); }
}

TEST_CASE("H2 proof object") {
    SUBCASE("coefficients and tilded values at p1 = 1") {
        const H2ProofObject obj = h2_proof_object(rat(1));
        CHECK(obj.A == rat(-1));
        CHECK(obj.B == rat(6));
        CHECK(obj.C == rat(-54));
        CHECK(obj.D0 == rat(36));
        REQUIRE(obj.A_tilde.has_value());
        CHECK(*obj.A_tilde == rat(-1, 36));
        CHECK(*obj.B_tilde == rat(1, 6));
        CHECK(*obj.C_tilde == rat(-3, 2));
    }
    SUBCASE("closed forms of the tilded values") {
        // B~ = p1/6 and C~ = -(8+p1^2)/(6 p1) on 0 < p1 < 2.
        for (long k = 1; k <= 9; ++k) {
            const Rational p1 = rat(2 * k, 10);
            const H2ProofObject obj = h2_proof_object(p1);
            REQUIRE(obj.B_tilde.has_value());
            const Rational b_expect = p1 / 6;
            const Rational c_expect = -(8 + p1 * p1) / (6 * p1);
            CHECK(*obj.B_tilde == b_expect);
            CHECK(*obj.C_tilde == c_expect);
            // |A| + |B| + |C| = 64 - 3 p1^4 on [0, 2]
            const Rational lhs = abs(obj.A) + abs(obj.B) + abs(obj.C);
            const Rational rhs = 64 - 3 * p1 * p1 * p1 * p1;
            CHECK(lhs == rhs);
        }
    }
    SUBCASE("endpoints have no tilded values") {
        CHECK_FALSE(h2_proof_object(rat(0)).A_tilde.has_value());
        CHECK_FALSE(h2_proof_object(rat(2)).A_tilde.has_value());
        CHECK(h2_proof_object(rat(0)).C == rat(-64));
        CHECK(h2_proof_object(rat(2)).A == rat(-16));
        CHECK(h2_proof_object(rat(2)).B == rat(0));
        CHECK(h2_proof_object(rat(2)).C == rat(0));
    }
    SUBCASE("domain validation") {
        CHECK_THROWS_WITH_AS(h2_proof_object(rat(-1, 2)), "p1 must lie in [0,2]",
                             std::invalid_argument);
        CHECK_THROWS_WITH_AS(h2_proof_object(rat(9, 4)), "p1 must lie in [0,2]",
                             std::invalid_argument);
    }
}

TEST_CASE("Phi reproduces the normalized H2 on exact samples") {
    const auto samples = sample_cuboid(321, 60, SampleMode::LZ, AnglePolicy::ExactUnimodular);
    for (const auto& s : samples) {
        REQUIRE(s.exact);
        const H2ProofObject obj = h2_proof_object(s.t);
        const GaussianRational phi = phi_h2(obj, s.gamma, s.eta);
        const CaratheodoryCoeffs p = lz_expand({s.t, s.gamma, s.eta, s.rho});
        CHECK(phi == h2_normalized(p));
    }
}

TEST_CASE("H3 decomposition reproduces the normalized H3 on exact samples") {
    const auto samples = sample_cuboid(654, 60, SampleMode::PS, AnglePolicy::ExactUnimodular);
    for (const auto& s : samples) {
        REQUIRE(s.exact);
        const H3Decomposition d =
            h3_decomposition(GaussianRational(s.t), s.gamma, s.eta);
        const GaussianRational sum =
            d.A1 + d.B1 * s.eta + d.C1 * s.eta * s.eta + d.D1 * s.rho;
        const SchwarzCoeffs c = ps_expand({s.t, s.gamma, s.eta, s.rho});
        CHECK(sum == h3_normalized(c));
    }
}

TEST_CASE("surface set structure and consistency") {
    const H3SurfaceSet s = h3_surfaces(11, 11, 5);

    SUBCASE("identities and degrees") {
        CHECK(s.G1.y0.deg_p() == 6);
        CHECK(s.G1.y0.deg_x() == 4);
        CHECK(s.G2.y0.deg_p() == 6);
        CHECK(s.G2.y0.deg_x() == 4);
        CHECK(s.G1.y0.coeff(0, 0) == rat(480));
        CHECK(s.G2.y0.coeff(0, 0) == rat(0));
        // G1/G2 are the y = 1 and y = 0 slices of H1
        CHECK(s.H1.at_y(rat(1)) == s.G1.y0);
        CHECK(s.H1.at_y(rat(0)) == s.G2.y0);
        // H1 freezes the linear y term of H at y = 1 and keeps the y^2 part
        CHECK(s.H1.y1 == BivariatePoly(0, 0));
        CHECK(s.H1.y0 == s.H.y0 + s.H.y1);
        CHECK(s.H1.y2 == s.H.y2);
    }

    SUBCASE("frozen power coefficients of F = 480 - G1") {
        const BivariatePoly F = BivariatePoly::constant(rat(480)) - s.G1.y0;
        const long cols[5][7] = {
            {0, 0, 960, -96, -480, 96, -7},     {0, -96, -144, -96, 102, 192, 42},
            {384, -192, -972, 480, 696, -288, -108}, {-112, 96, -64, 96, 112, -192, 64},
            {96, 192, -288, -384, 288, 192, -96}};
        for (int j = 0; j <= 4; ++j)
            for (int i = 0; i <= 6; ++i) CHECK(F.coeff(i, j) == rat(cols[j][i]));
    }

    SUBCASE("frozen power coefficients of G2") {
        const long cols[5][7] = {
            {0, 0, 144, 96, -144, -96, 7},      {576, 96, -1152, 96, 618, -192, -42},
            {0, 192, 60, -480, -168, 288, 108}, {-464, -96, 1360, -96, -832, 192, -64},
            {0, -192, 96, 384, -192, -192, 96}};
        for (int j = 0; j <= 4; ++j)
            for (int i = 0; i <= 6; ++i) CHECK(s.G2.y0.coeff(i, j) == rat(cols[j][i]));
    }

    SUBCASE("frozen Bernstein matrix of G2 on the unit square") {
        const BernsteinPatch patch = bernstein_on(s.G2.y0, {rat(0), rat(1), rat(0), rat(1)});
        REQUIRE(patch.m == 6);
        REQUIRE(patch.n == 4);
        const char* rows[7][5] = {
            {"0", "144", "288", "316", "112"},
            {"0", "148", "904/3", "340", "112"},
            {"48/5", "712/5", "4298/15", "1022/3", "2188/15"},
            {"168/5", "666/5", "1234/5", "1566/5", "1068/5"},
            {"336/5", "1271/10", "2917/15", "7639/30", "802/3"},
            {"80", "215/2", "127", "935/6", "634/3"},
            {"7", "7", "7", "7", "7"}};
        for (int i = 0; i <= 6; ++i)
            for (int j = 0; j <= 4; ++j)
                CHECK(patch.b[i][j] == parse_rational(rows[i][j]));
        const auto range = bernstein_range(patch);
        CHECK(range.first == rat(0));
        CHECK(range.second == rat(1022, 3));
    }

    SUBCASE("surface evaluation matches the y-split") {
        const Rational p(1, 3), x(2, 5), y(3, 7);
        const Rational direct = s.H.eval(p, x, y);
        const Rational split = s.H.y0.eval(p, x) + y * s.H.y1.eval(p, x) +
                               y * y * s.H.y2.eval(p, x);
        CHECK(direct == split);
        CHECK(s.H.at_y(y).eval(p, x) == direct);
    }

    SUBCASE("grid validation") {
        CHECK_THROWS_WITH_AS(h3_surfaces(1, 11, 5), "grid sizes must be >= 2",
                             std::invalid_argument);
        CHECK_THROWS_WITH_AS(h3_surfaces(11, 11, 1), "grid sizes must be >= 2",
                             std::invalid_argument);
    }
}

TEST_CASE("extremal function series") {
    SUBCASE("omega = z^2") {
        const TruncatedSeries f = extremal_function_series(2, 9);
        CHECK(f.coeff(1) == gr(1));
        CHECK(f.coeff(2) == gr(0));
        CHECK(f.coeff(3) == gr(1, 6));
        CHECK(f.coeff(4) == gr(0));
        CHECK(f.coeff(5) == gr(3, 80));
        CHECK(f.coeff(6) == gr(0));
        CHECK(f.coeff(7) == gr(5, 672));
        CHECK(f.coeff(8) == gr(0));
        CHECK(f.coeff(9) == gr(19, 13824));
        CHECK(hankel_h2(coeffs_from_series(f)) == gr(-1, 36));
    }
    SUBCASE("omega = z^3") {
        const TruncatedSeries f = extremal_function_series(3, 7);
        CHECK(f.coeff(1) == gr(1));
        CHECK(f.coeff(4) == gr(1, 12));
        CHECK(f.coeff(7) == gr(1, 72));
        CHECK(f.coeff(2) == gr(0));
        CHECK(f.coeff(3) == gr(0));
        CHECK(f.coeff(5) == gr(0));
        CHECK(f.coeff(6) == gr(0));
        CHECK(hankel_h3(coeffs_from_series(f)) == gr(-1, 144));
    }
    SUBCASE("validation") {
        CHECK_THROWS_WITH_AS(extremal_function_series(4, 9), "omega exponent must be 2 or 3",
                             std::invalid_argument);
        CHECK_THROWS_WITH_AS(extremal_function_series(1, 9), "omega exponent must be 2 or 3",
                             std::invalid_argument);
    }
}

TEST_CASE("randomized searches stay within the proven bounds") {
    const SearchOutcome h2 = search_h2_max(42, 500);
    CHECK(h2.samples == 500);
    CHECK(h2.within_bound);
    CHECK(h2.corner_attained);
    CHECK(h2.max_value <= 1.0 / 36 + 1e-9);
    CHECK(h2.max_value >= 1.0 / 36 - 1e-9);  // a corner sample attains it

    const SearchOutcome h3 = search_h3_max(42, 500);
    CHECK(h3.samples == 500);
    CHECK(h3.within_bound);
    CHECK(h3.corner_attained);
    CHECK(h3.max_value <= 1.0 / 144 + 1e-9);
    CHECK(h3.max_value >= 1.0 / 144 - 1e-9);
}

TEST_CASE("full verification pipelines certify with reduced effort") {
    VerifyOptions opt;
    opt.identity_samples = 30;
    opt.search_samples = 400;
    opt.p1_grid = 19;
    opt.grid_p = 21;
    opt.grid_x = 21;
    opt.grid_y = 5;

    SUBCASE("H2") {
        const TheoremReport rep = verify_h2(opt);
        CHECK(rep.theorem == "H2");
        CHECK(rep.bound == rat(1, 36));
        CHECK(rep.witness_value == rat(-1, 36));
        CHECK(rep.certified);
        CHECK(rep.seconds > 0.0);
        const std::vector<std::string> names = {"phi-identity",    "ykc-grid",
                                                "endpoints",       "bound-arithmetic",
                                                "sharpness",       "search"};
        REQUIRE(rep.checks.size() == names.size());
        for (std::size_t k = 0; k < names.size(); ++k) {
            CHECK(rep.checks[k].name == names[k]);
            CHECK(rep.checks[k].pass);
        }
    }

    SUBCASE("H3") {
        const TheoremReport rep = verify_h3(opt);
        CHECK(rep.theorem == "H3");
        CHECK(rep.bound == rat(1, 144));
        CHECK(rep.witness_value == rat(-1, 144));
        CHECK(rep.certified);
        const std::vector<std::string> names = {
            "decomposition-identity", "triangle-domination", "y-coefficient-positivity",
            "h-le-h1-grid",           "g1-certification",    "g2-bernstein",
            "bound-arithmetic",       "sharpness",           "search"};
        REQUIRE(rep.checks.size() == names.size());
        for (std::size_t k = 0; k < names.size(); ++k) {
            CHECK(rep.checks[k].name == names[k]);
            CHECK(rep.checks[k].pass);
        }
    }

    SUBCASE("options are validated") {
        VerifyOptions bad = opt;
        bad.identity_samples = 0;
        CHECK_THROWS_WITH_AS(verify_h2(bad), "sample counts must be >= 1",
                             std::invalid_argument);
        bad = opt;
        bad.p1_grid = 0;
        CHECK_THROWS_WITH_AS(verify_h2(bad), "p1 grid must have >= 1 points",
                             std::invalid_argument);
        bad = opt;
        bad.grid_y = 1;
        CHECK_THROWS_WITH_AS(verify_h3(bad), "cuboid grid sizes must be >= 2",
                             std::invalid_argument);
        bad = opt;
        bad.max_depth = -1;
        CHECK_THROWS_WITH_AS(verify_h3(bad), "max_depth must be >= 0",
                             std::invalid_argument);
    }
}

TEST_CASE("surface names are stable") {
    CHECK(std::string(to_string(SurfaceId::H)) == "H");
    CHECK(std::string(to_string(SurfaceId::H1)) == "H1");
    CHECK(std::string(to_string(SurfaceId::G1)) == "G1");
    CHECK(std::string(to_string(SurfaceId::G2)) == "G2");
}
