#ifndef HANKEL_SERIES_HPP
#define HANKEL_SERIES_HPP

#include <vector>

#include "hankel/rational.hpp"

namespace hankel {

/// Formal power series truncated at a stated order, with exact Gaussian
/// rational coefficients.  A series of order N represents knowledge of the
/// coefficients of z^0 .. z^N and nothing beyond; every operation reports
/// the largest order that is fully determined by its inputs.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(check_order(order) + 1) {}
    TruncatedSeries(int order, std::vector<GaussianRational> coeffs);

    static TruncatedSeries constant(GaussianRational c, int order);
    static TruncatedSeries monomial(int power, int order);  // z^power
    static TruncatedSeries z(int order) { return monomial(1, order); }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const GaussianRational& coeff(int k) const;
    void set_coeff(int k, GaussianRational v);

    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
    static int check_order(int order);
    std::vector<GaussianRational> coeffs_;  // coeffs_[k] is the z^k coefficient
};

/// a*s + b*t, truncated at min(order(s), order(t)).
TruncatedSeries linear_combine(const GaussianRational& a, const TruncatedSeries& s,
                               const GaussianRational& b, const TruncatedSeries& t);

inline TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t) {
    return linear_combine(1, s, 1, t);
}
inline TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t) {
    return linear_combine(1, s, -1, t);
}

/// Cauchy product, truncated at min(order(s), order(t)).
TruncatedSeries multiply(const TruncatedSeries& s, const TruncatedSeries& t);

/// outer(inner(z)).  The outer series is treated as the exact polynomial
/// formed by its stored coefficients; inner must have vanishing constant
/// term, and the result carries inner's order.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// exp(s) for s with s(0) = 0, via the derivative recurrence
/// n e_n = sum_{k=1}^{n} k s_k e_{n-k}.  Result has s's order.
TruncatedSeries series_exp(const TruncatedSeries& s);

/// Term-wise antiderivative with value 0 at the origin; the z^(N+1)
/// coefficient of the result is determined by the z^N coefficient of the
/// input, so the order increases by one.
TruncatedSeries integrate_from_zero(const TruncatedSeries& s);

/// d/dz, losing one order.
TruncatedSeries derivative(const TruncatedSeries& s);

/// s/t for t with nonvanishing constant term, truncated at min of the orders.
TruncatedSeries divide(const TruncatedSeries& s, const TruncatedSeries& t);

/// s(z)/z for s with s(0) = 0; the order drops by one.
TruncatedSeries divide_by_z(const TruncatedSeries& s);

/// z*s(z); every known coefficient shifts up, so the order grows by one.
TruncatedSeries multiply_by_z(const TruncatedSeries& s);

/// Forgets coefficients above new_order (new_order <= order(s)).
TruncatedSeries truncate(const TruncatedSeries& s, int new_order);

std::string to_string(const TruncatedSeries& s);

}  // namespace hankel

#endif
