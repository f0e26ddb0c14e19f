#ifndef HANKEL_PARAMETRIZATION_HPP
#define HANKEL_PARAMETRIZATION_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "hankel/coefficients.hpp"

namespace hankel {

/// Parameters of the Libera-Zlotkiewicz representation of a Caratheodory
/// tail (p2, p3, p4) given p1.
struct LZParams {
    Rational p1;  // in [0,2]
    GaussianRational gamma, eta, rho;  // moduli <= 1
};

/// Parameters of the Prokhorov-Szynal representation of a Schwarz tail
/// (c2, c3, c4) given c1.
struct PSParams {
    Rational c1;  // in [0,1]
    GaussianRational gamma, eta, rho;  // moduli <= 1
};

/// 2p2 = p1^2 + g(4-p1^2)
/// 4p3 = p1^3 + 2(4-p1^2)p1 g - (4-p1^2)p1 g^2 + 2(4-p1^2)(1-|g|^2)e
/// 8p4 = p1^4 + (4-p1^2)g(p1^2(g^2-3g+3) + 4g)
///       - 4(4-p1^2)(1-|g|^2)(p1(g-1)e + conj(g)e^2 - (1-|e|^2)r)
template <class C>
void lz_formulas(const C& p1, const C& g, const C& e, const C& r, C& p2, C& p3, C& p4) {
    C q = C(4) - p1 * p1;
    C gn = g * conj(g);
    C en = e * conj(e);
    p2 = (p1 * p1 + g * q) / C(2);
    p3 = (p1 * p1 * p1 + C(2) * q * p1 * g - q * p1 * g * g + C(2) * q * (C(1) - gn) * e) / C(4);
    p4 = (p1 * p1 * p1 * p1 + q * g * (p1 * p1 * (g * g - C(3) * g + C(3)) + C(4) * g) -
          C(4) * q * (C(1) - gn) * (p1 * (g - C(1)) * e + conj(g) * e * e - (C(1) - en) * r)) /
         C(8);
}

/// c2 = (1-c1^2)g
/// c3 = (1-c1^2)(e(1-|g|^2) - c1 g^2)
/// c4 = (1-c1^2)(c1^2 g^3 - (1-|g|^2)(2 c1 g e + conj(g)e^2) + (1-|g|^2)(1-|e|^2)r)
template <class C>
void ps_formulas(const C& c1, const C& g, const C& e, const C& r, C& c2, C& c3, C& c4) {
    C t = C(1) - c1 * c1;
    C gn = g * conj(g);
    C en = e * conj(e);
    c2 = t * g;
    c3 = t * (e * (C(1) - gn) - c1 * g * g);
    c4 = t * (c1 * c1 * g * g * g - (C(1) - gn) * (C(2) * c1 * g * e + conj(g) * e * e) +
              (C(1) - gn) * (C(1) - en) * r);
}

CaratheodoryCoeffs lz_expand(const LZParams& params);
SchwarzCoeffs ps_expand(const PSParams& params);

enum class SampleMode { LZ, PS };
enum class AnglePolicy { ExactUnimodular, FloatDense, Mixed };

/// One point of the search cuboid.  When exact is set, (t, gamma, eta, rho)
/// are Gaussian rationals satisfying the parameter invariants and the double
/// mirror fields are their approximations; otherwise only the mirrors are
/// meaningful.
struct CuboidSample {
    bool exact = false;
    Rational t;  // p1 or c1
    GaussianRational gamma, eta, rho;
    double t_d = 0.0;
    std::complex<double> gamma_d, eta_d, rho_d;
};

/// Deterministic sample stream over the parameter cuboid.  The first 3^4
/// samples enumerate {0, mid, max} x {0, 1/2, 1}^3 with real angles (all the
/// corner cases), the rest are seeded pseudo-random with rational moduli and
/// angles chosen per policy.
std::vector<CuboidSample> sample_cuboid(std::uint64_t seed, int count, SampleMode mode,
                                        AnglePolicy policy = AnglePolicy::Mixed);

/// Unimodular Gaussian rationals used for exact-angle sampling.
const std::vector<GaussianRational>& unimodular_table();

}  // namespace hankel

#endif
