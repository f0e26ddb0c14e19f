#ifndef HANKEL_PIPELINES_HPP
#define HANKEL_PIPELINES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hankel/bernstein.hpp"
#include "hankel/maminda.hpp"
#include "hankel/parametrization.hpp"
#include "hankel/series.hpp"
#include "hankel/ykc.hpp"

namespace hankel {

/// Coefficient data of Phi(p1, gamma, eta) = A + B gamma + C gamma^2
/// + eta D0 (1 - |gamma|^2):
///   A = -p1^4, B = 2p1^2(4-p1^2), C = 2(-32+4p1^2+p1^4), D0 = 12p1(4-p1^2),
/// with the D0-normalized tilded values defined on 0 < p1 < 2.
struct H2ProofObject {
    Rational p1;
    Rational A, B, C, D0;
    std::optional<Rational> A_tilde, B_tilde, C_tilde;
};

H2ProofObject h2_proof_object(const Rational& p1);

/// Phi evaluated exactly from the proof object.
GaussianRational phi_h2(const H2ProofObject& obj, const GaussianRational& gamma,
                        const GaussianRational& eta);

/// The decomposition 69120 H3(1) = A1 + B1 eta + C1 eta^2 + D1 rho, with
/// the four coefficients as printed (all depend on c1 and gamma; D1 also
/// carries the (1-|eta|^2) factor).
struct H3Decomposition {
    GaussianRational A1, B1, C1, D1;
};

H3Decomposition h3_decomposition(const GaussianRational& c1, const GaussianRational& gamma,
                                 const GaussianRational& eta);

enum class SurfaceId { H, H1, G1, G2 };

const char* to_string(SurfaceId id);

/// A bound surface in (p1, x), at most quadratic in y:
/// value = y0 + y*y1 + y^2*y2.  G1 and G2 have y1 = y2 = 0.
struct H3Surface {
    SurfaceId which = SurfaceId::H;
    BivariatePoly y0, y1, y2;

    Rational eval(const Rational& p, const Rational& x, const Rational& y) const;
    double eval(double p, double x, double y) const;
    mpf_class eval(const mpf_class& p, const mpf_class& x, const mpf_class& y) const;
    BivariatePoly at_y(const Rational& y) const;
};

struct H3SurfaceSet {
    H3Surface H, H1, G1, G2;
};

/// Builds the four surfaces from their printed displays and verifies the
/// consistency identities H1(.,.,1) = G1 and H1(.,.,0) = G2 as exact
/// polynomial equalities, plus H <= H1 on a rational grid of the cuboid
/// (grid_p x grid_x x grid_y points).  Throws std::logic_error if any of
/// them fails (a transcription bug, not an input error).
H3SurfaceSet h3_surfaces(int grid_p = 101, int grid_x = 101, int grid_y = 11);

struct SubCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct TheoremReport {
    std::string theorem;  // "H2" or "H3"
    Rational bound;
    std::string witness;
    Rational witness_value;
    double search_max = 0.0;
    std::vector<SubCheck> checks;
    bool certified = false;
    double seconds = 0.0;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    int identity_samples = 500;
    int search_samples = 100000;
    int p1_grid = 199;  // p1 = 2k/(p1_grid+1), k = 1..p1_grid
    int grid_p = 101, grid_x = 101, grid_y = 11;
    int max_depth = 2;
    SplitStrategy strategy = SplitStrategy::PaperQuadrants;
};

TheoremReport verify_h2(const VerifyOptions& opt = {});
TheoremReport verify_h3(const VerifyOptions& opt = {});

/// f generated by omega(z) = z^k (k = 2 or 3), to the given series order.
TruncatedSeries extremal_function_series(int omega_power, int order);

/// Randomized lower-bound search.  Exact samples are evaluated in exact
/// arithmetic and compared against the proven bound exactly; a sample
/// beyond bound + 1e-12 flips within_bound and dumps its parameters.
struct SearchOutcome {
    double max_value = 0.0;
    int samples = 0;
    bool within_bound = true;
    bool corner_attained = false;  // some exact sample attains the bound exactly
    std::string note;
};

SearchOutcome search_h2_max(std::uint64_t seed, int samples);
SearchOutcome search_h3_max(std::uint64_t seed, int samples);

}  // namespace hankel

#endif
