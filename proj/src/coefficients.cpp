#include "hankel/coefficients.hpp"

#include <stdexcept>

namespace hankel {

CoeffVec coeffs_from_caratheodory(const CaratheodoryCoeffs& p) {
    return coeffs_from_caratheodory_t(p.p1, p.p2, p.p3, p.p4);
}

CoeffVec coeffs_from_schwarz(const SchwarzCoeffs& c) {
    return coeffs_from_schwarz_t(c.c1, c.c2, c.c3, c.c4);
}

CoeffVec coeffs_from_series(const TruncatedSeries& f) {
    if (f.order() < 5)
        throw std::invalid_argument("series order must be at least 5 to read a_2..a_5");
    return {f.coeff(2), f.coeff(3), f.coeff(4), f.coeff(5)};
}

SchwarzCoeffs caratheodory_to_schwarz(const CaratheodoryCoeffs& p) {
    TruncatedSeries ps(4);
    ps.set_coeff(0, 1);
    ps.set_coeff(1, p.p1);
    ps.set_coeff(2, p.p2);
    ps.set_coeff(3, p.p3);
    ps.set_coeff(4, p.p4);
    TruncatedSeries one = TruncatedSeries::constant(1, 4);
    TruncatedSeries w = divide(ps - one, ps + one);
    return {w.coeff(1), w.coeff(2), w.coeff(3), w.coeff(4)};
}

GaussianRational hankel_generic(const std::vector<GaussianRational>& a, int q, int n) {
    if (q < 1 || n < 1) throw std::invalid_argument("hankel_generic needs q >= 1 and n >= 1");
    int top = n + 2 * (q - 1);
    if (static_cast<int>(a.size()) < top)
        throw std::invalid_argument("coefficient list too short for requested Hankel determinant");
    // Entry (i,j) is a_{n+i+j}, i,j = 0..q-1; Laplace expansion over
    // permutations is fine at the sizes used here.
    std::vector<std::vector<GaussianRational>> m(q, std::vector<GaussianRational>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) m[i][j] = a[static_cast<std::size_t>(n + i + j - 1)];

    // Fraction-free is unnecessary; Gaussian elimination over exact
    // rationals with column pivoting on nonzero entries.
    GaussianRational det(1);
    for (int col = 0; col < q; ++col) {
        int pivot = -1;
        for (int row = col; row < q; ++row)
            if (!m[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) return GaussianRational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        for (int row = col + 1; row < q; ++row) {
            if (m[row][col].is_zero()) continue;
            GaussianRational factor = m[row][col] / m[col][col];
            for (int j = col; j < q; ++j) m[row][j] = m[row][j] - factor * m[col][j];
        }
    }
    return det;
}

GaussianRational h2_normalized(const CaratheodoryCoeffs& p) {
    return h2_normalized_from_p(p.p1, p.p2, p.p3);
}

GaussianRational h3_normalized(const SchwarzCoeffs& c) {
    return h3_normalized_from_c(c.c1, c.c2, c.c3, c.c4);
}

}  // namespace hankel
