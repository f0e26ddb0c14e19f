#include "hankel/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hankel {

int TruncatedSeries::check_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    return order;
}

TruncatedSeries::TruncatedSeries(int order, std::vector<GaussianRational> coeffs)
    : coeffs_(std::move(coeffs)) {
    check_order(order);
    if (coeffs_.size() != static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("coefficient count does not match series order");
}

TruncatedSeries TruncatedSeries::constant(GaussianRational c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int power, int order) {
    if (power < 0) throw std::invalid_argument("monomial power must be nonnegative");
    TruncatedSeries s(order);
    if (power <= order) s.coeffs_[power] = 1;
    return s;
}

const GaussianRational& TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order()) throw std::out_of_range("series coefficient index out of range");
    return coeffs_[k];
}

void TruncatedSeries::set_coeff(int k, GaussianRational v) {
    if (k < 0 || k > order()) throw std::out_of_range("series coefficient index out of range");
    coeffs_[k] = std::move(v);
}

TruncatedSeries linear_combine(const GaussianRational& a, const TruncatedSeries& s,
                               const GaussianRational& b, const TruncatedSeries& t) {
    int n = std::min(s.order(), t.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) r.set_coeff(k, a * s.coeff(k) + b * t.coeff(k));
    return r;
}

TruncatedSeries multiply(const TruncatedSeries& s, const TruncatedSeries& t) {
    int n = std::min(s.order(), t.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) {
        GaussianRational acc;
        for (int i = 0; i <= k; ++i) acc += s.coeff(i) * t.coeff(k - i);
        r.set_coeff(k, std::move(acc));
    }
    return r;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (!inner.coeff(0).is_zero())
        throw std::invalid_argument("composition requires inner series with vanishing constant term");
    int n = inner.order();
    // Horner evaluation of the outer polynomial at the inner series.  Each
    // multiply keeps order n because inner has no constant term, so the
    // truncation is exact.
    TruncatedSeries r = TruncatedSeries::constant(outer.coeff(outer.order()), n);
    for (int k = outer.order() - 1; k >= 0; --k) {
        r = multiply(r, inner);
        r.set_coeff(0, r.coeff(0) + outer.coeff(k));
    }
    return r;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (!s.coeff(0).is_zero())
        throw std::invalid_argument("series_exp requires vanishing constant term");
    int n = s.order();
    TruncatedSeries e(n);
    e.set_coeff(0, 1);
    for (int m = 1; m <= n; ++m) {
        GaussianRational acc;
        for (int k = 1; k <= m; ++k) acc += GaussianRational(k) * s.coeff(k) * e.coeff(m - k);
        e.set_coeff(m, acc / GaussianRational(m));
    }
    return e;
}

TruncatedSeries integrate_from_zero(const TruncatedSeries& s) {
    int n = s.order();
    TruncatedSeries r(n + 1);
    for (int k = 0; k <= n; ++k) r.set_coeff(k + 1, s.coeff(k) / GaussianRational(k + 1));
    return r;
}

TruncatedSeries derivative(const TruncatedSeries& s) {
    int n = s.order();
    if (n < 1) throw std::invalid_argument("derivative needs a series of order at least 1");
    TruncatedSeries r(n - 1);
    for (int k = 1; k <= n; ++k) r.set_coeff(k - 1, GaussianRational(k) * s.coeff(k));
    return r;
}

TruncatedSeries divide(const TruncatedSeries& s, const TruncatedSeries& t) {
    if (t.coeff(0).is_zero())
        throw std::invalid_argument("division requires divisor with nonvanishing constant term");
    int n = std::min(s.order(), t.order());
    TruncatedSeries q(n);
    for (int k = 0; k <= n; ++k) {
        GaussianRational acc = s.coeff(k);
        for (int i = 1; i <= k; ++i) acc -= t.coeff(i) * q.coeff(k - i);
        q.set_coeff(k, acc / t.coeff(0));
    }
    return q;
}

TruncatedSeries divide_by_z(const TruncatedSeries& s) {
    if (!s.coeff(0).is_zero())
        throw std::invalid_argument("divide_by_z requires vanishing constant term");
    int n = s.order();
    if (n < 1) throw std::invalid_argument("divide_by_z needs a series of order at least 1");
    TruncatedSeries r(n - 1);
    for (int k = 1; k <= n; ++k) r.set_coeff(k - 1, s.coeff(k));
    return r;
}

TruncatedSeries multiply_by_z(const TruncatedSeries& s) {
    int n = s.order();
    TruncatedSeries r(n + 1);
    for (int k = 0; k <= n; ++k) r.set_coeff(k + 1, s.coeff(k));
    return r;
}

TruncatedSeries truncate(const TruncatedSeries& s, int new_order) {
    if (new_order > s.order()) throw std::invalid_argument("cannot truncate to a higher order");
    TruncatedSeries r(new_order);
    for (int k = 0; k <= new_order; ++k) r.set_coeff(k, s.coeff(k));
    return r;
}

std::string to_string(const TruncatedSeries& s) {
    std::string out;
    bool first = true;
    for (int k = 0; k <= s.order(); ++k) {
        if (s.coeff(k).is_zero()) continue;
        if (!first) out += " + ";
        out += "(" + to_string(s.coeff(k)) + ")";
        if (k == 1) out += " z";
        else if (k > 1) out += " z^" + std::to_string(k);
        first = false;
    }
    if (first) out = "0";
    out += " + O(z^" + std::to_string(s.order() + 1) + ")";
    return out;
}

}  // namespace hankel
