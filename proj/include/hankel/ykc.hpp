#ifndef HANKEL_YKC_HPP
#define HANKEL_YKC_HPP

#include <complex>
#include <optional>

#include "hankel/rational.hpp"

namespace hankel {

struct YkcInput {
    Rational a, b, c;
};

/// Branch provenance for the piecewise closed form, in printed order.
enum class YkcBranch { ILargeB, ISmallB, IiFirst, IiSecond, R1, R2, R3 };

const char* to_string(YkcBranch b);

struct YkcResult {
    double value = 0.0;
    std::optional<Rational> exact;          // set when the fired branch is rational
    std::optional<YkcBranch> branch;        // closed form only
    std::complex<double> argmax_hint{0, 0}; // oracle only
};

/// Y(A,B,C) = max_{|z|<=1} (|A+Bz+Cz^2| + 1 - |z|^2) by the piecewise
/// closed form.  Conditions are tested in printed top-down order; equality
/// ties go to the first matching branch.  All branches except R3 are exact
/// rationals; R3 takes a 256-bit square root.
YkcResult ykc_closed_form(const YkcInput& inp);

/// Direct maximization over a polar grid (radial x angular points of the
/// closed disk), refined by a local golden-section pass in r around the
/// best grid candidates.  Independent of the closed form.
YkcResult ykc_brute_force(const YkcInput& inp, int radial = 512, int angular = 1024);

}  // namespace hankel

#endif
