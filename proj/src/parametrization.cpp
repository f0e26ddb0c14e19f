#include "hankel/parametrization.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hankel {

namespace {

void check_modulus(const GaussianRational& g, const char* name) {
    if (norm(g) > 1) throw std::invalid_argument(std::string(name) + " must have modulus <= 1");
}

}  // namespace

CaratheodoryCoeffs lz_expand(const LZParams& params) {
    if (params.p1 < 0 || params.p1 > 2)
        throw std::invalid_argument("p1 must lie in [0,2]");
    check_modulus(params.gamma, "gamma");
    check_modulus(params.eta, "eta");
    check_modulus(params.rho, "rho");
    CaratheodoryCoeffs out;
    out.p1 = GaussianRational(params.p1);
    lz_formulas(out.p1, params.gamma, params.eta, params.rho, out.p2, out.p3, out.p4);
    return out;
}

SchwarzCoeffs ps_expand(const PSParams& params) {
    if (params.c1 < 0 || params.c1 > 1)
        throw std::invalid_argument("c1 must lie in [0,1]");
    check_modulus(params.gamma, "gamma");
    check_modulus(params.eta, "eta");
    check_modulus(params.rho, "rho");
    SchwarzCoeffs out;
    out.c1 = GaussianRational(params.c1);
    ps_formulas(out.c1, params.gamma, params.eta, params.rho, out.c2, out.c3, out.c4);
    return out;
}

const std::vector<GaussianRational>& unimodular_table() {
    static const std::vector<GaussianRational> table = [] {
        std::vector<GaussianRational> t;
        auto push = [&t](long a, long b, long h) {
            t.emplace_back(rat(a, h), rat(b, h));
        };
        push(1, 0, 1);
        push(0, 1, 1);
        push(-1, 0, 1);
        push(0, -1, 1);
        // Pythagorean triples give exact points of the unit circle.
        const long triples[][3] = {{3, 4, 5},   {5, 12, 13}, {8, 15, 17},
                                   {7, 24, 25}, {20, 21, 29}, {9, 40, 41}};
        for (auto& tr : triples) {
            push(tr[0], tr[1], tr[2]);
            push(-tr[0], tr[1], tr[2]);
            push(tr[0], -tr[1], tr[2]);
            push(-tr[0], -tr[1], tr[2]);
            push(tr[1], tr[0], tr[2]);
            push(-tr[1], -tr[0], tr[2]);
        }
        return t;
    }();
    return table;
}

namespace {

double approx(const Rational& q) { return q.get_d(); }

void fill_mirrors(CuboidSample& s) {
    s.t_d = approx(s.t);
    s.gamma_d = to_complex(s.gamma);
    s.eta_d = to_complex(s.eta);
    s.rho_d = to_complex(s.rho);
}

// Uniform in [0, n] without std::uniform_int_distribution (whose output is
// implementation-defined); modulo bias is irrelevant for search sampling.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % (n + 1); }

double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<CuboidSample> sample_cuboid(std::uint64_t seed, int count, SampleMode mode,
                                        AnglePolicy policy) {
    if (count < 1) throw std::invalid_argument("sample count must be >= 1");
    std::vector<CuboidSample> out;
    out.reserve(static_cast<std::size_t>(count));

    const Rational t_max = mode == SampleMode::LZ ? rat(2) : rat(1);
    const Rational t_values[3] = {rat(0), t_max / 2, t_max};
    const Rational m_values[3] = {rat(0), rat(1, 2), rat(1)};

    // Corner enumeration first: {0, mid, max} in every axis, real angles.
    for (int it = 0; it < 3 && static_cast<int>(out.size()) < count; ++it)
        for (int ig = 0; ig < 3 && static_cast<int>(out.size()) < count; ++ig)
            for (int ie = 0; ie < 3 && static_cast<int>(out.size()) < count; ++ie)
                for (int ir = 0; ir < 3 && static_cast<int>(out.size()) < count; ++ir) {
                    CuboidSample s;
                    s.exact = true;
                    s.t = t_values[it];
                    s.gamma = GaussianRational(m_values[ig]);
                    s.eta = GaussianRational(m_values[ie]);
                    s.rho = GaussianRational(m_values[ir]);
                    fill_mirrors(s);
                    out.push_back(std::move(s));
                }

    std::mt19937_64 rng(seed);
    const auto& angles = unimodular_table();
    const double two_pi = 8.0 * std::atan(1.0);
    const long t_denom = 128;
    const long t_top = mode == SampleMode::LZ ? 256 : 128;

    while (static_cast<int>(out.size()) < count) {
        bool exact;
        switch (policy) {
            case AnglePolicy::ExactUnimodular: exact = true; break;
            case AnglePolicy::FloatDense: exact = false; break;
            default: exact = (out.size() % 2) == 0; break;
        }
        CuboidSample s;
        if (exact) {
            s.exact = true;
            s.t = rat(static_cast<long>(draw(rng, t_top)), t_denom);
            GaussianRational* parts[3] = {&s.gamma, &s.eta, &s.rho};
            for (auto* part : parts) {
                Rational mod = rat(static_cast<long>(draw(rng, 64)), 64);
                const GaussianRational& ang = angles[draw(rng, angles.size() - 1)];
                *part = GaussianRational(mod) * ang;
            }
            fill_mirrors(s);
        } else {
            s.exact = false;
            s.t_d = to_double(t_max) * draw_unit(rng);
            std::complex<double>* parts[3] = {&s.gamma_d, &s.eta_d, &s.rho_d};
            for (auto* part : parts) {
                double mod = draw_unit(rng);
                double th = two_pi * draw_unit(rng);
                *part = std::polar(mod, th);
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace hankel
