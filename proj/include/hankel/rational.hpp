#ifndef HANKEL_RATIONAL_HPP
#define HANKEL_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hankel {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator) as long as they are built through the helpers
// below or through arithmetic.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "3", "-5/7" or a plain decimal like "0.25".
Rational parse_rational(const std::string& text);

inline double to_double(const Rational& q) { return q.get_d(); }

// "num/den", or just "num" for integers.
inline std::string to_string(const Rational& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(int v) : re(v) {}                 // NOLINT(google-explicit-constructor)
    GaussianRational(long v) : re(v) {}                // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im == 0; }
    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n = o.re * o.re + o.im * o.im;
        if (n == 0) throw std::domain_error("division by zero Gaussian rational");
        Rational r = (re * o.re + im * o.im) / n;
        Rational i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational conj(const GaussianRational& g) { return {g.re, -g.im}; }

// |g|^2, exact.
inline Rational norm(const GaussianRational& g) { return g.re * g.re + g.im * g.im; }

inline std::complex<double> to_complex(const GaussianRational& g) {
    return {g.re.get_d(), g.im.get_d()};
}

std::string to_string(const GaussianRational& g);

}  // namespace hankel

#endif
