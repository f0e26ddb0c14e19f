#include "hankel/maminda.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hankel {

GaussianRational PhiFunction::eval_exact(const GaussianRational& z) {
    GaussianRational w = GaussianRational(1) + z / GaussianRational(2);
    return w * w;
}

std::complex<double> PhiFunction::eval(std::complex<double> z) {
    std::complex<double> w = 1.0 + 0.5 * z;
    return w * w;
}

TruncatedSeries PhiFunction::series(int order) {
    TruncatedSeries s(order);
    s.set_coeff(0, 1);
    if (order >= 1) s.set_coeff(1, 1);
    if (order >= 2) s.set_coeff(2, GaussianRational(rat(1, 4)));
    return s;
}

PhiPropertyReport check_phi_properties(int radial_steps, int angular_steps) {
    if (radial_steps < 2 || angular_steps < 4)
        throw std::invalid_argument("phi property grid too small");

    PhiPropertyReport rep;
    rep.radial_steps = radial_steps;
    rep.angular_steps = angular_steps;

    struct Pt {
        std::complex<double> z, phi;
        bool interior;
    };
    std::vector<Pt> pts;
    pts.reserve(static_cast<std::size_t>(radial_steps - 1) * angular_steps + 1);
    pts.push_back({{0.0, 0.0}, PhiFunction::eval({0.0, 0.0}), true});
    const double two_pi = 8.0 * std::atan(1.0);
    for (int i = 1; i < radial_steps; ++i) {
        double r = static_cast<double>(i) / (radial_steps - 1);
        for (int j = 0; j < angular_steps; ++j) {
            double th = two_pi * j / angular_steps;
            std::complex<double> z = std::polar(r, th);
            pts.push_back({z, PhiFunction::eval(z), i + 1 < radial_steps});
        }
    }

    rep.min_abs = 1e300;
    rep.max_abs = -1e300;
    rep.min_re_interior = 1e300;
    rep.min_starlike_re = 1e300;
    for (const Pt& p : pts) {
        double a = std::abs(p.phi);
        rep.min_abs = std::min(rep.min_abs, a);
        rep.max_abs = std::max(rep.max_abs, a);
        if (p.interior) {
            rep.min_re_interior = std::min(rep.min_re_interior, p.phi.real());
            if (std::abs(p.z) > 0) {
                // z phi'/(phi - 1) = (1 + z/2)/(1 + z/4) after cancelling z.
                std::complex<double> q = (1.0 + 0.5 * p.z) / (1.0 + 0.25 * p.z);
                rep.min_starlike_re = std::min(rep.min_starlike_re, q.real());
            }
        }
    }

    // Injectivity on the sample set: sort by real part and scan neighbors
    // for numerically equal values at distinct points.
    std::vector<const Pt*> sorted;
    sorted.reserve(pts.size());
    for (const Pt& p : pts) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(),
              [](const Pt* a, const Pt* b) { return a->phi.real() < b->phi.real(); });
    const double eq_tol = 1e-12;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (sorted[j]->phi.real() - sorted[i]->phi.real() > eq_tol) break;
            if (std::abs(sorted[j]->phi.imag() - sorted[i]->phi.imag()) <= eq_tol &&
                std::abs(sorted[i]->z - sorted[j]->z) > 1e-9)
                ++rep.univalence_collisions;
        }
    }

    rep.modulus_pass = std::abs(rep.min_abs - 0.25) <= 1e-9 && std::abs(rep.max_abs - 2.25) <= 1e-9;
    rep.re_pass = rep.min_re_interior > 0.25;
    rep.starlike_pass = rep.min_starlike_re > 0.0;
    rep.univalence_pass = rep.univalence_collisions == 0;
    return rep;
}

TruncatedSeries build_f_from_schwarz(const TruncatedSeries& w, int target_order) {
    if (target_order < 2) throw std::invalid_argument("build_f_from_schwarz needs target order >= 2");
    if (!w.coeff(0).is_zero())
        throw std::invalid_argument("schwarz series must vanish at the origin");
    if (w.order() < target_order - 1)
        throw std::invalid_argument("schwarz series order too small for requested f order");

    TruncatedSeries wt = w.order() > target_order - 1 ? truncate(w, target_order - 1) : w;
    TruncatedSeries phi_w = compose(PhiFunction::series(2), wt);
    phi_w.set_coeff(0, phi_w.coeff(0) - GaussianRational(1));  // phi(w) - 1, vanishes at 0
    TruncatedSeries integrand = divide_by_z(phi_w);
    TruncatedSeries log_fp = integrate_from_zero(integrand);
    TruncatedSeries fp = series_exp(log_fp);  // f'
    return integrate_from_zero(fp);
}

}  // namespace hankel
