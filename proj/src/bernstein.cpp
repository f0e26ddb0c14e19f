#include "hankel/bernstein.hpp"

#include <algorithm>
#include <stdexcept>

namespace hankel {

namespace {

const mpz_class& binom(int n, int k) {
    static std::vector<std::vector<mpz_class>> pascal = {{1}};
    if (k < 0 || k > n) {
        static const mpz_class zero = 0;
        return zero;
    }
    while (static_cast<int>(pascal.size()) <= n) {
        std::size_t r = pascal.size();
        std::vector<mpz_class> row(r + 1, 1);
        for (std::size_t c = 1; c < r; ++c) row[c] = pascal[r - 1][c - 1] + pascal[r - 1][c];
        pascal.push_back(std::move(row));
    }
    return pascal[n][k];
}

void check_rect(const Rectangle& r) {
    if (!(r.a < r.b) || !(r.c < r.d))
        throw std::invalid_argument("rectangle must have nonempty interior");
}

}  // namespace

BivariatePoly::BivariatePoly(int m, int n) : m_(m), n_(n) {
    if (m < 0 || n < 0) throw std::invalid_argument("bidegree must be nonnegative");
    a_.assign(static_cast<std::size_t>(m + 1) * (n + 1), Rational(0));
}

BivariatePoly BivariatePoly::constant(Rational c) {
    BivariatePoly f(0, 0);
    f.a_[0] = std::move(c);
    return f;
}

BivariatePoly BivariatePoly::var_p() { return monomial(1, 0, 1); }
BivariatePoly BivariatePoly::var_x() { return monomial(0, 1, 1); }

BivariatePoly BivariatePoly::monomial(int i, int j, Rational c) {
    BivariatePoly f(i, j);
    f.set_coeff(i, j, std::move(c));
    return f;
}

const Rational& BivariatePoly::coeff(int i, int j) const {
    if (i < 0 || j < 0) throw std::out_of_range("negative monomial exponent");
    static const Rational zero(0);
    if (i > m_ || j > n_) return zero;
    return a_[static_cast<std::size_t>(i) * (n_ + 1) + j];
}

void BivariatePoly::set_coeff(int i, int j, Rational v) {
    if (i < 0 || j < 0 || i > m_ || j > n_)
        throw std::out_of_range("monomial exponent outside stored bidegree");
    a_[static_cast<std::size_t>(i) * (n_ + 1) + j] = std::move(v);
}

Rational BivariatePoly::eval(const Rational& p, const Rational& x) const {
    Rational acc(0);
    for (int i = m_; i >= 0; --i) {
        Rational row(0);
        for (int j = n_; j >= 0; --j) row = row * x + coeff(i, j);
        acc = acc * p + row;
    }
    return acc;
}

double BivariatePoly::eval(double p, double x) const {
    double acc = 0;
    for (int i = m_; i >= 0; --i) {
        double row = 0;
        for (int j = n_; j >= 0; --j) row = row * x + coeff(i, j).get_d();
        acc = acc * p + row;
    }
    return acc;
}

mpf_class BivariatePoly::eval(const mpf_class& p, const mpf_class& x) const {
    mp_bitcnt_t prec = std::max(p.get_prec(), x.get_prec());
    mpf_class acc(0, prec);
    for (int i = m_; i >= 0; --i) {
        mpf_class row(0, prec);
        for (int j = n_; j >= 0; --j) row = row * x + mpf_class(coeff(i, j), prec);
        acc = acc * p + row;
    }
    return acc;
}

BivariatePoly BivariatePoly::trimmed() const {
    int m = 0, n = 0;
    for (int i = 0; i <= m_; ++i)
        for (int j = 0; j <= n_; ++j)
            if (coeff(i, j) != 0) {
                m = std::max(m, i);
                n = std::max(n, j);
            }
    BivariatePoly f(m, n);
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) f.set_coeff(i, j, coeff(i, j));
    return f;
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly f(std::max(a.m_, b.m_), std::max(a.n_, b.n_));
    for (int i = 0; i <= f.m_; ++i)
        for (int j = 0; j <= f.n_; ++j) f.set_coeff(i, j, a.coeff(i, j) + b.coeff(i, j));
    return f;
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly f(std::max(a.m_, b.m_), std::max(a.n_, b.n_));
    for (int i = 0; i <= f.m_; ++i)
        for (int j = 0; j <= f.n_; ++j) f.set_coeff(i, j, a.coeff(i, j) - b.coeff(i, j));
    return f;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly f(a.m_ + b.m_, a.n_ + b.n_);
    for (int i = 0; i <= a.m_; ++i)
        for (int j = 0; j <= a.n_; ++j) {
            if (a.coeff(i, j) == 0) continue;
            for (int k = 0; k <= b.m_; ++k)
                for (int l = 0; l <= b.n_; ++l) {
                    if (b.coeff(k, l) == 0) continue;
                    f.set_coeff(i + k, j + l,
                                f.coeff(i + k, j + l) + a.coeff(i, j) * b.coeff(k, l));
                }
        }
    return f;
}

BivariatePoly operator*(const Rational& c, const BivariatePoly& a) {
    BivariatePoly f(a.m_, a.n_);
    for (int i = 0; i <= a.m_; ++i)
        for (int j = 0; j <= a.n_; ++j) f.set_coeff(i, j, c * a.coeff(i, j));
    return f;
}

BivariatePoly operator-(const BivariatePoly& a) { return Rational(-1) * a; }

bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
    int m = std::max(a.m_, b.m_), n = std::max(a.n_, b.n_);
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j)
            if (a.coeff(i, j) != b.coeff(i, j)) return false;
    return true;
}

BivariatePoly pow(const BivariatePoly& base, int e) {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    BivariatePoly acc = BivariatePoly::constant(1);
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

BivariatePoly affine_restrict(const BivariatePoly& poly, const Rectangle& rect) {
    check_rect(rect);
    int m = poly.deg_p(), n = poly.deg_x();
    const Rational wa = rect.b - rect.a, wc = rect.d - rect.c;

    std::vector<Rational> pow_a(m + 1), pow_wa(m + 1), pow_c(n + 1), pow_wc(n + 1);
    pow_a[0] = pow_wa[0] = pow_c[0] = pow_wc[0] = 1;
    for (int i = 1; i <= m; ++i) pow_a[i] = pow_a[i - 1] * rect.a, pow_wa[i] = pow_wa[i - 1] * wa;
    for (int j = 1; j <= n; ++j) pow_c[j] = pow_c[j - 1] * rect.c, pow_wc[j] = pow_wc[j - 1] * wc;

    // Substitute p = a + (b-a)u, then x = c + (d-c)v.
    BivariatePoly t(m, n);
    for (int k = 0; k <= m; ++k)
        for (int j = 0; j <= n; ++j) {
            Rational acc(0);
            for (int i = k; i <= m; ++i)
                acc += Rational(binom(i, k)) * pow_a[i - k] * poly.coeff(i, j);
            t.set_coeff(k, j, acc * pow_wa[k]);
        }
    BivariatePoly q(m, n);
    for (int k = 0; k <= m; ++k)
        for (int l = 0; l <= n; ++l) {
            Rational acc(0);
            for (int j = l; j <= n; ++j)
                acc += Rational(binom(j, l)) * pow_c[j - l] * t.coeff(k, j);
            q.set_coeff(k, l, acc * pow_wc[l]);
        }
    return q;
}

BernsteinPatch to_bernstein(const BivariatePoly& poly, int M, int N) {
    int m = poly.deg_p(), n = poly.deg_x();
    {
        BivariatePoly tr = poly.trimmed();
        if (M < tr.deg_p() || N < tr.deg_x())
            throw std::invalid_argument("target bidegree below actual degree");
        m = tr.deg_p();
        n = tr.deg_x();
    }
    BernsteinPatch patch;
    patch.rect = {0, 1, 0, 1};
    patch.m = M;
    patch.n = N;
    patch.b.assign(M + 1, std::vector<Rational>(N + 1, Rational(0)));
    for (int i = 0; i <= M; ++i)
        for (int j = 0; j <= N; ++j) {
            Rational acc(0);
            for (int k = 0; k <= std::min(i, m); ++k)
                for (int l = 0; l <= std::min(j, n); ++l) {
                    if (poly.coeff(k, l) == 0) continue;
                    acc += rat(binom(i, k) * binom(j, l), binom(M, k) * binom(N, l)) *
                           poly.coeff(k, l);
                }
            patch.b[i][j] = acc;
        }
    return patch;
}

BernsteinPatch bernstein_on(const BivariatePoly& poly, const Rectangle& rect) {
    BivariatePoly q = affine_restrict(poly, rect);
    BernsteinPatch patch = to_bernstein(q, poly.deg_p(), poly.deg_x());
    patch.rect = rect;
    return patch;
}

std::pair<Rational, Rational> bernstein_range(const BernsteinPatch& patch) {
    Rational lo = patch.b.at(0).at(0), hi = lo;
    for (const auto& row : patch.b)
        for (const auto& v : row) {
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
    return {lo, hi};
}

namespace {

std::vector<Rectangle> split_rect(const Rectangle& r, SplitStrategy strategy) {
    const Rational mp = (r.a + r.b) / 2, mx = (r.c + r.d) / 2;
    if (strategy == SplitStrategy::PaperQuadrants)
        return {{r.a, mp, r.c, mx}, {r.a, mp, mx, r.d}, {mp, r.b, r.c, mx}, {mp, r.b, mx, r.d}};
    // bisect-longest (ties split the first variable)
    if (r.b - r.a >= r.d - r.c) return {{r.a, mp, r.c, r.d}, {mp, r.b, r.c, r.d}};
    return {{r.a, r.b, r.c, mx}, {r.a, r.b, mx, r.d}};
}

struct CertCounters {
    int certified = 0;
    int failed = 0;
};

CertNode certify_node(const BivariatePoly& poly, const Rectangle& rect, const Rational& bound,
                      int depth, int max_depth, SplitStrategy strategy, CertCounters& counters) {
    CertNode node;
    node.rect = rect;
    node.depth = depth;
    node.bernstein_max = bernstein_range(bernstein_on(poly, rect)).second;
    if (node.bernstein_max <= bound) {
        node.status = CertStatus::CertifiedBernstein;
        ++counters.certified;
        return node;
    }
    if (depth >= max_depth) {
        node.status = CertStatus::Failed;
        ++counters.failed;
        return node;
    }
    node.status = CertStatus::Subdivided;
    for (const Rectangle& child : split_rect(rect, strategy))
        node.children.push_back(
            certify_node(poly, child, bound, depth + 1, max_depth, strategy, counters));
    return node;
}

void collect_leaves(const CertNode& node, std::vector<const CertNode*>& out) {
    if (node.children.empty()) {
        out.push_back(&node);
        return;
    }
    for (const CertNode& c : node.children) collect_leaves(c, out);
}

}  // namespace

std::vector<const CertNode*> CertificationReport::leaves() const {
    std::vector<const CertNode*> out;
    collect_leaves(root, out);
    return out;
}

CertificationReport certify_upper_bound(const BivariatePoly& poly, const Rectangle& rect,
                                        const Rational& bound, int max_depth,
                                        SplitStrategy strategy) {
    check_rect(rect);
    if (max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");
    CertificationReport report;
    report.bound = bound;
    report.strategy = strategy;
    report.max_depth = max_depth;
    CertCounters counters;
    report.root = certify_node(poly, rect, bound, 0, max_depth, strategy, counters);
    report.leaves_certified = counters.certified;
    report.leaves_failed = counters.failed;
    report.certified = counters.failed == 0;
    return report;
}

std::vector<Rational> abs_degree_sums(const BivariatePoly& poly) {
    std::vector<Rational> sums(poly.deg_p() + poly.deg_x() + 1, Rational(0));
    for (int i = 0; i <= poly.deg_p(); ++i)
        for (int j = 0; j <= poly.deg_x(); ++j) sums[i + j] += abs(poly.coeff(i, j));
    while (sums.size() > 1 && sums.back() == 0) sums.pop_back();
    return sums;
}

Rational monomial_tail_bound(const BivariatePoly& R, const Rational& s) {
    if (s <= 0) throw std::invalid_argument("corner size must be positive");
    for (int i = 0; i <= R.deg_p(); ++i)
        for (int j = 0; j <= R.deg_x(); ++j)
            if (i + j <= 2 && R.coeff(i, j) != 0)
                throw std::domain_error("monomial of total degree <= 2 present");
    std::vector<Rational> sums = abs_degree_sums(R);
    Rational k(0);
    Rational spow(1);  // s^(d-2), starting at d=3 -> s^1
    for (std::size_t d = 3; d < sums.size(); ++d) {
        spow = spow * s;
        k += sums[d] * spow;
    }
    return k;
}

Rational corner_certificate(const BivariatePoly& F, const Rational& s) {
    if (s <= 0) throw std::invalid_argument("corner size must be positive");
    if (F.coeff(0, 0) != 0 || F.coeff(1, 0) != 0 || F.coeff(0, 1) != 0)
        throw std::domain_error("corner certificate inapplicable: constant or linear part present");
    const Rational alpha = F.coeff(2, 0), beta = F.coeff(1, 1), delta = F.coeff(0, 2);
    const Rational half_beta = abs(beta) / 2;
    const Rational fl1 = alpha - half_beta, fl2 = delta - half_beta;
    if (fl1 <= 0 || fl2 <= 0)
        throw std::domain_error("corner certificate inapplicable: quadratic part does not dominate");

    BivariatePoly tail = F;
    tail.set_coeff(2, 0, 0);
    if (F.deg_p() >= 1 && F.deg_x() >= 1) tail.set_coeff(1, 1, 0);
    tail.set_coeff(0, 2, 0);
    const Rational k = monomial_tail_bound(tail, s);
    return std::min(fl1, fl2) - k;
}

namespace {

bool discharge_corners(CertNode& node, const BivariatePoly& margin_poly, CertCounters& counters) {
    if (node.children.empty()) {
        if (node.status != CertStatus::Failed) return true;
        if (node.rect.a == 0 && node.rect.c == 0) {
            const Rational s = std::max(node.rect.b, node.rect.d);
            try {
                Rational mu = corner_certificate(margin_poly, s);
                if (mu > 0) {
                    node.status = CertStatus::CertifiedCorner;
                    node.corner_margin = mu;
                    --counters.failed;
                    ++counters.certified;
                    return true;
                }
            } catch (const std::domain_error&) {
                // fall through to failure
            }
        }
        return false;
    }
    bool ok = true;
    for (CertNode& c : node.children) ok = discharge_corners(c, margin_poly, counters) && ok;
    return ok;
}

}  // namespace

CertificationReport certify_with_origin_corner(const BivariatePoly& poly, const Rectangle& rect,
                                               const Rational& bound, int max_depth,
                                               SplitStrategy strategy) {
    CertificationReport report = certify_upper_bound(poly, rect, bound, max_depth, strategy);
    if (!report.certified) {
        BivariatePoly margin = BivariatePoly::constant(bound) - poly;
        CertCounters counters{report.leaves_certified, report.leaves_failed};
        bool all = discharge_corners(report.root, margin, counters);
        report.leaves_certified = counters.certified;
        report.leaves_failed = counters.failed;
        report.certified = all && counters.failed == 0;
    }
    return report;
}

const char* to_string(CertStatus s) {
    switch (s) {
        case CertStatus::CertifiedBernstein: return "certified-by-bernstein";
        case CertStatus::CertifiedCorner: return "certified-by-corner";
        case CertStatus::Subdivided: return "subdivided";
        case CertStatus::Failed: return "failed";
    }
    return "?";
}

const char* to_string(SplitStrategy s) {
    switch (s) {
        case SplitStrategy::PaperQuadrants: return "paper-quadrants";
        case SplitStrategy::BisectLongest: return "bisect-longest";
        case SplitStrategy::Auto: return "auto";
    }
    return "?";
}

}  // namespace hankel
