#ifndef HANKEL_MAMINDA_HPP
#define HANKEL_MAMINDA_HPP

#include <complex>

#include "hankel/series.hpp"

namespace hankel {

/// The fixed target function phi(z) = (1 + z/2)^2 = 1 + z + z^2/4.
struct PhiFunction {
    static GaussianRational eval_exact(const GaussianRational& z);
    static std::complex<double> eval(std::complex<double> z);
    /// Taylor coefficients of phi, zero beyond degree 2.
    static TruncatedSeries series(int order);
};

/// Grid evidence for the analytic facts used about phi on the closed disk:
/// modulus range [1/4, 9/4], positive distance of Re phi from 1/4 off the
/// boundary, starlikeness of phi - 1 via Re(z phi'/(phi - 1)) > 0, and
/// injectivity of phi on the sample set.
struct PhiPropertyReport {
    int radial_steps = 0;
    int angular_steps = 0;
    double min_abs = 0.0;
    double max_abs = 0.0;
    double min_re_interior = 0.0;      // Re phi over the interior sample points
    double min_starlike_re = 0.0;      // Re(z phi'/(phi-1)) over interior points, z != 0
    int univalence_collisions = 0;     // distinct sample points with equal phi values
    bool modulus_pass = false;
    bool re_pass = false;
    bool starlike_pass = false;
    bool univalence_pass = false;
    bool pass() const { return modulus_pass && re_pass && starlike_pass && univalence_pass; }
};

PhiPropertyReport check_phi_properties(int radial_steps = 64, int angular_steps = 256);

/// Builds the normalized solution f of 1 + z f''/f' = phi(w(z)) for a given
/// Schwarz-type series w (w(0) = 0) through the integral representation
///   f(z) = int_0^z exp( int_0^t (phi(w(u)) - 1)/u du ) dt,
/// carried out exactly on truncated series.  w must have order at least
/// target_order - 1.
TruncatedSeries build_f_from_schwarz(const TruncatedSeries& w, int target_order);

}  // namespace hankel

#endif
