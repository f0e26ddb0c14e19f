#ifndef HANKEL_BERNSTEIN_HPP
#define HANKEL_BERNSTEIN_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hankel/rational.hpp"

namespace hankel {

/// Bivariate polynomial over exact rationals in the power basis.
/// coeff(i,j) multiplies p^i x^j; the stored bidegree never understates the
/// true degree (top row/column may be zero).
class BivariatePoly {
public:
    BivariatePoly() : BivariatePoly(0, 0) {}
    BivariatePoly(int m, int n);

    static BivariatePoly constant(Rational c);
    static BivariatePoly var_p();  // the polynomial p
    static BivariatePoly var_x();  // the polynomial x
    static BivariatePoly monomial(int i, int j, Rational c);

    int deg_p() const { return m_; }
    int deg_x() const { return n_; }

    const Rational& coeff(int i, int j) const;
    void set_coeff(int i, int j, Rational v);

    Rational eval(const Rational& p, const Rational& x) const;
    double eval(double p, double x) const;
    mpf_class eval(const mpf_class& p, const mpf_class& x) const;

    /// Drops zero top rows/columns (bidegree stays honest but minimal).
    BivariatePoly trimmed() const;

    friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator*(const Rational& c, const BivariatePoly& a);
    friend BivariatePoly operator-(const BivariatePoly& a);
    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b);

private:
    int m_, n_;
    std::vector<Rational> a_;  // (m+1)*(n+1), row-major in i
};

BivariatePoly pow(const BivariatePoly& base, int e);

struct Rectangle {
    Rational a, b, c, d;  // [a,b] x [c,d], a<b, c<d
};

/// Bernstein coefficients of a polynomial over a rectangle at a stated
/// bidegree; min/max of the matrix enclose the polynomial's range there.
struct BernsteinPatch {
    Rectangle rect;
    int m = 0, n = 0;
    std::vector<std::vector<Rational>> b;
};

/// q(u,v) = poly(a+(b-a)u, c+(d-c)v), exact, bidegree preserved.
BivariatePoly affine_restrict(const BivariatePoly& poly, const Rectangle& rect);

/// Exact power-to-Bernstein conversion on the unit square at bidegree
/// (M,N) >= actual bidegree:
///   b_{ij} = sum_{k<=i, l<=j} C(i,k)C(j,l)/(C(M,k)C(N,l)) a_{kl}.
BernsteinPatch to_bernstein(const BivariatePoly& poly, int M, int N);

/// Convenience: restrict to rect, then convert at the polynomial's bidegree.
BernsteinPatch bernstein_on(const BivariatePoly& poly, const Rectangle& rect);

std::pair<Rational, Rational> bernstein_range(const BernsteinPatch& patch);

enum class SplitStrategy { PaperQuadrants, BisectLongest, Auto };

enum class CertStatus { CertifiedBernstein, CertifiedCorner, Subdivided, Failed };

struct CertNode {
    Rectangle rect;
    CertStatus status = CertStatus::Failed;
    Rational bernstein_max;              // max Bernstein coefficient on rect
    std::optional<Rational> corner_margin;  // set when status is CertifiedCorner
    int depth = 0;
    std::vector<CertNode> children;
};

struct CertificationReport {
    Rational bound;
    SplitStrategy strategy = SplitStrategy::Auto;
    int max_depth = 0;
    bool certified = false;
    int leaves_certified = 0;
    int leaves_failed = 0;
    CertNode root;

    /// Leaves in depth-first order.
    std::vector<const CertNode*> leaves() const;
};

/// Depth-first subdivision certification of poly <= bound on rect.  A
/// rectangle whose Bernstein max is <= bound is a certified leaf; otherwise
/// it is split per strategy until max_depth, after which it is a failed
/// leaf.  paper-quadrants always splits into the four half-rectangles in the
/// order (low,low), (low,high), (high,low), (high,high); bisect-longest and
/// auto bisect the longest side (ties split the first variable).
CertificationReport certify_upper_bound(const BivariatePoly& poly, const Rectangle& rect,
                                        const Rational& bound, int max_depth = 12,
                                        SplitStrategy strategy = SplitStrategy::Auto);

/// K with |R(p,x)| <= K (p^2+x^2) on [0,s]^2, where K = sum_d S_d s^(d-2)
/// and S_d is the sum of |coefficients| of total degree d.  Every monomial
/// of R must have total degree >= 3.
Rational monomial_tail_bound(const BivariatePoly& R, const Rational& s);

/// Per-total-degree sums of |coefficients| (index = total degree).
std::vector<Rational> abs_degree_sums(const BivariatePoly& poly);

/// For F with no constant/linear part and quadratic part alpha p^2 + beta px
/// + delta x^2 dominating its cross term, returns
///   mu = min(alpha-|beta|/2, delta-|beta|/2) - monomial_tail_bound(F - quad, s);
/// mu > 0 certifies F >= mu (p^2+x^2) on [0,s]^2 with equality only at the
/// origin.  Throws "corner certificate inapplicable" when preconditions fail.
Rational corner_certificate(const BivariatePoly& F, const Rational& s);

/// The pipeline policy wrapping certify_upper_bound: failed leaves of the
/// form [0,s]^2 are discharged by applying corner_certificate to
/// bound - poly, turning them into certified-by-corner leaves.
CertificationReport certify_with_origin_corner(const BivariatePoly& poly, const Rectangle& rect,
                                               const Rational& bound, int max_depth = 12,
                                               SplitStrategy strategy = SplitStrategy::Auto);

const char* to_string(CertStatus s);
const char* to_string(SplitStrategy s);

}  // namespace hankel

#endif
