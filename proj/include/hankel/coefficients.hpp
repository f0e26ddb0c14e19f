#ifndef HANKEL_COEFFICIENTS_HPP
#define HANKEL_COEFFICIENTS_HPP

#include <array>
#include <complex>
#include <vector>

#include "hankel/series.hpp"

namespace hankel {

struct CaratheodoryCoeffs {
    GaussianRational p1, p2, p3, p4;
};

struct SchwarzCoeffs {
    GaussianRational c1, c2, c3, c4;
};

/// Initial Taylor coefficients a_2..a_5 of a normalized f.
template <class C>
struct CoefficientVector {
    C a2, a3, a4, a5;
};

using CoeffVec = CoefficientVector<GaussianRational>;
using CoeffVecD = CoefficientVector<std::complex<double>>;

/// a_2..a_5 in terms of the Caratheodory coefficients of p = (1+w)/(1-w):
///   a_2 = p_1/4,
///   a_3 = (p_1^2 + 8 p_2)/96,
///   a_4 = (-p_1^3 + 32 p_3)/768,
///   a_5 = (11 p_1^4 - 48 p_1^2 p_2 - 64 p_1 p_3 - 96 p_2^2 + 768 p_4)/30720.
template <class C>
CoefficientVector<C> coeffs_from_caratheodory_t(const C& p1, const C& p2, const C& p3, const C& p4) {
    CoefficientVector<C> v;
    v.a2 = p1 / C(4);
    v.a3 = (p1 * p1 + C(8) * p2) / C(96);
    v.a4 = (-(p1 * p1 * p1) + C(32) * p3) / C(768);
    v.a5 = (C(11) * p1 * p1 * p1 * p1 - C(48) * p1 * p1 * p2 - C(64) * p1 * p3 -
            C(96) * p2 * p2 + C(768) * p4) /
           C(30720);
    return v;
}

/// a_2..a_5 in terms of the Schwarz coefficients of w:
///   a_2 = c_1/2,
///   a_3 = (5 c_1^2 + 4 c_2)/24,
///   a_4 = (-2 c_1^3 + c_1 c_2 + (3/4) c_1 (5 c_1^2 + 4 c_2) + 2 c_3)/24,
///   a_5 = (43 c_1^4 + 184 c_1^2 c_2 + 72 c_2^2 + 176 c_1 c_3 + 96 c_4)/1920.
template <class C>
CoefficientVector<C> coeffs_from_schwarz_t(const C& c1, const C& c2, const C& c3, const C& c4) {
    CoefficientVector<C> v;
    C five_sq = C(5) * c1 * c1 + C(4) * c2;
    v.a2 = c1 / C(2);
    v.a3 = five_sq / C(24);
    v.a4 = (C(-2) * c1 * c1 * c1 + c1 * c2 + C(3) * c1 * five_sq / C(4) + C(2) * c3) / C(24);
    v.a5 = (C(43) * c1 * c1 * c1 * c1 + C(184) * c1 * c1 * c2 + C(72) * c2 * c2 +
            C(176) * c1 * c3 + C(96) * c4) /
           C(1920);
    return v;
}

CoeffVec coeffs_from_caratheodory(const CaratheodoryCoeffs& p);
CoeffVec coeffs_from_schwarz(const SchwarzCoeffs& c);

/// Reads a_2..a_5 off a series of order >= 5.
CoeffVec coeffs_from_series(const TruncatedSeries& f);

/// Transforms p = (1+w)/(1-w) data into the Schwarz coefficients of
/// w = (p-1)/(p+1), computed through exact series division.
SchwarzCoeffs caratheodory_to_schwarz(const CaratheodoryCoeffs& p);

template <class C>
C hankel_h2_t(const CoefficientVector<C>& v) {
    return v.a2 * v.a4 - v.a3 * v.a3;
}

/// Cofactor expansion of the third Hankel determinant along its first row:
/// H3 = a_3(a_2 a_4 - a_3^2) - a_4(a_4 - a_2 a_3) + a_5(a_3 - a_2^2).
template <class C>
C hankel_h3_t(const CoefficientVector<C>& v) {
    return v.a3 * (v.a2 * v.a4 - v.a3 * v.a3) - v.a4 * (v.a4 - v.a2 * v.a3) +
           v.a5 * (v.a3 - v.a2 * v.a2);
}

inline GaussianRational hankel_h2(const CoeffVec& v) { return hankel_h2_t(v); }
inline GaussianRational hankel_h3(const CoeffVec& v) { return hankel_h3_t(v); }
inline std::complex<double> hankel_h2(const CoeffVecD& v) { return hankel_h2_t(v); }
inline std::complex<double> hankel_h3(const CoeffVecD& v) { return hankel_h3_t(v); }

/// H_q(n) for the coefficient list (a_1, a_2, ...): the q x q determinant
/// with (i,j) entry a_{n+i+j-2}.  Reduces to hankel_h2 at (2,2) and
/// hankel_h3 at (3,1) when a_1 = 1.
GaussianRational hankel_generic(const std::vector<GaussianRational>& a, int q, int n);

/// 2304 H2(2) as a polynomial in the Caratheodory coefficients:
/// -p_1^4 - 4 p_1^2 p_2 - 16 p_2^2 + 24 p_1 p_3.
template <class C>
C h2_normalized_from_p(const C& p1, const C& p2, const C& p3) {
    return -(p1 * p1 * p1 * p1) - C(4) * p1 * p1 * p2 - C(16) * p2 * p2 + C(24) * p1 * p3;
}

/// 69120 H3(1) as a polynomial in the Schwarz coefficients:
/// -7 c_1^6 + 42 c_1^4 c_2 + 96 c_1^3 c_3 + 96 c_1 c_2 c_3
/// - 12 c_1^2 (17 c_2^2 + 12 c_4) + 16 (7 c_2^3 - 30 c_3^2 + 36 c_2 c_4).
template <class C>
C h3_normalized_from_c(const C& c1, const C& c2, const C& c3, const C& c4) {
    C c1sq = c1 * c1;
    return -C(7) * c1sq * c1sq * c1sq + C(42) * c1sq * c1sq * c2 + C(96) * c1sq * c1 * c3 +
           C(96) * c1 * c2 * c3 - C(12) * c1sq * (C(17) * c2 * c2 + C(12) * c4) +
           C(16) * (C(7) * c2 * c2 * c2 - C(30) * c3 * c3 + C(36) * c2 * c4);
}

GaussianRational h2_normalized(const CaratheodoryCoeffs& p);
GaussianRational h3_normalized(const SchwarzCoeffs& c);

}  // namespace hankel

#endif
