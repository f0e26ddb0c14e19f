#include "hankel/ykc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hankel {

const char* to_string(YkcBranch b) {
    switch (b) {
        case YkcBranch::ILargeB: return "i-large-B";
        case YkcBranch::ISmallB: return "i-small-B";
        case YkcBranch::IiFirst: return "ii-first";
        case YkcBranch::IiSecond: return "ii-second";
        case YkcBranch::R1: return "R-1";
        case YkcBranch::R2: return "R-2";
        case YkcBranch::R3: return "R-3";
    }
    return "?";
}

YkcResult ykc_closed_form(const YkcInput& inp) {
    const Rational &A = inp.a, &B = inp.b, &C = inp.c;
    const Rational aa = abs(A), ab = abs(B), ac = abs(C);
    YkcResult res;
    auto set_exact = [&res](Rational v, YkcBranch br) {
        res.value = v.get_d();
        res.exact = std::move(v);
        res.branch = br;
    };

    if (A * C >= 0) {
        if (ab >= 2 * (1 - ac)) set_exact(aa + ab + ac, YkcBranch::ILargeB);
        else set_exact(1 + aa + B * B / (4 * (1 - ac)), YkcBranch::ISmallB);
        return res;
    }

    // AC < 0 guarantees C != 0, so 1/C^2 is well defined.
    const Rational disc = -4 * A * C * (1 / (C * C) - 1);
    const Rational b2 = B * B;
    if (disc <= b2 && ab < 2 * (1 - ac)) {
        set_exact(1 - aa + b2 / (4 * (1 - ac)), YkcBranch::IiFirst);
        return res;
    }
    const Rational four_1pc = 4 * (1 + ac) * (1 + ac);
    if (b2 < four_1pc && b2 < disc) {
        set_exact(1 + aa + b2 / (4 * (1 + ac)), YkcBranch::IiSecond);
        return res;
    }
    // Endpoint maximum on |z| = 1 with AC < 0: |A + C| + |B| = |A| + |B| - |C|
    // in this sub-branch's regime (|C|(|B|+4|A|) <= |AB| forces |A| >= |C|);
    // mirrored by the next sub-branch under A <-> C.
    if (ac * (ab + 4 * aa) <= aa * ab) {
        set_exact(aa + ab - ac, YkcBranch::R1);
        return res;
    }
    if (aa * ab <= ac * (ab - 4 * aa)) {
        set_exact(-aa + ab + ac, YkcBranch::R2);
        return res;
    }
    // (|A|+|C|) sqrt(1 - B^2/(4AC)); AC < 0 makes the radicand >= 1.
    mpf_class radicand(Rational(1 - b2 / (4 * A * C)), 256);
    mpf_class root = sqrt(radicand);
    mpf_class value = mpf_class(Rational(aa + ac), 256) * root;
    res.value = value.get_d();
    res.branch = YkcBranch::R3;
    return res;
}

namespace {

// |A + B r e^{it} + C r^2 e^{2it}|^2 depends on the angle only through
// u = cos t:
//   q(r,u) = A^2 + B^2 r^2 + C^2 r^4 - 2ACr^2 + 2Br(A + Cr^2) u + 4ACr^2 u^2,
// a quadratic in u.  Its maximum over any finite subset of [-1,1] is
// attained at the subset's extremes or next to the vertex, so the full
// angular sweep reduces to a handful of candidate angles per radius.
struct AngularSlice {
    double alpha, beta, gamma0;  // q(r,u) = alpha u^2 + beta u + gamma0
    double q(double u) const { return (alpha * u + beta) * u + gamma0; }
    // Max of q over the continuous interval [-1,1].
    double max_continuous(double* arg = nullptr) const {
        double best = q(1.0), at = 1.0;
        double qm = q(-1.0);
        if (qm > best) best = qm, at = -1.0;
        if (alpha < 0) {
            double v = -beta / (2 * alpha);
            if (v > -1.0 && v < 1.0) {
                double qv = q(v);
                if (qv > best) best = qv, at = v;
            }
        }
        if (arg) *arg = at;
        return best;
    }
};

AngularSlice make_slice(double A, double B, double C, double r) {
    double r2 = r * r;
    AngularSlice s;
    s.alpha = 4 * A * C * r2;
    s.beta = 2 * B * r * (A + C * r2);
    s.gamma0 = A * A + B * B * r2 + C * C * r2 * r2 - 2 * A * C * r2;
    return s;
}

template <class F>
double golden_max(F&& f, double lo, double hi, double* arg) {
    const double gr = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 90; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        }
    }
    double mid = 0.5 * (a + b);
    if (arg) *arg = mid;
    return f(mid);
}

}  // namespace

YkcResult ykc_brute_force(const YkcInput& inp, int radial, int angular) {
    if (radial < 8 || angular < 8)
        throw std::invalid_argument("oracle grid needs at least 8 steps per direction");
    const double A = to_double(inp.a), B = to_double(inp.b), C = to_double(inp.c);
    const double two_pi = 8.0 * std::atan(1.0);
    const double dth = two_pi / angular;

    // Cosine values of the grid angles, by index.
    auto grid_u = [&](int j) { return std::cos(dth * j); };

    std::vector<double> value(radial);
    std::vector<double> best_u(radial);
    int jmid = angular / 2;
    for (int i = 0; i < radial; ++i) {
        double r = static_cast<double>(i) / (radial - 1);
        AngularSlice s = make_slice(A, B, C, r);
        int candidates[9] = {0, 1, jmid - 1, jmid, jmid + 1, angular - 1, -1, -1, -1};
        int ncand = 6;
        if (s.alpha < 0) {
            double v = -s.beta / (2 * s.alpha);
            if (v >= -1.0 && v <= 1.0) {
                int jv = static_cast<int>(std::lround(std::acos(v) / dth));
                candidates[ncand++] = jv - 1;
                candidates[ncand++] = jv;
                candidates[ncand++] = jv + 1;
            }
        }
        double best = -1e300, bu = 1.0;
        for (int k = 0; k < ncand; ++k) {
            int j = std::clamp(candidates[k], 0, angular - 1);
            double u = grid_u(j);
            double q = s.q(u);
            if (q > best) best = q, bu = u;
        }
        value[i] = std::sqrt(std::max(best, 0.0)) + 1.0 - r * r;
        best_u[i] = bu;
    }

    // Rank radii by grid value, keep a separated top set, golden-refine the
    // radial profile (with the angle re-optimized continuously) around each.
    std::vector<int> order(radial);
    for (int i = 0; i < radial; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) { return value[i] > value[j]; });
    std::vector<int> picks;
    for (int idx : order) {
        bool close = false;
        for (int p : picks)
            if (std::abs(p - idx) <= 2) {
                close = true;
                break;
            }
        if (!close) picks.push_back(idx);
        if (picks.size() >= 12) break;
    }

    auto profile = [&](double r) {
        AngularSlice s = make_slice(A, B, C, r);
        return std::sqrt(std::max(s.max_continuous(), 0.0)) + 1.0 - r * r;
    };

    int i0 = order[0];
    double best_val = value[i0];
    double best_r = static_cast<double>(i0) / (radial - 1);
    double best_arg_u = best_u[i0];
    const double cell = 1.0 / (radial - 1);
    for (int idx : picks) {
        double rc = static_cast<double>(idx) / (radial - 1);
        double lo = std::max(0.0, rc - 2 * cell), hi = std::min(1.0, rc + 2 * cell);
        double arg_r = rc;
        double v = golden_max(profile, lo, hi, &arg_r);
        if (v > best_val) {
            best_val = v;
            best_r = arg_r;
            AngularSlice s = make_slice(A, B, C, arg_r);
            s.max_continuous(&best_arg_u);
        }
    }

    YkcResult res;
    res.value = best_val;
    res.argmax_hint = std::polar(best_r, std::acos(std::clamp(best_arg_u, -1.0, 1.0)));
    return res;
}

}  // namespace hankel
