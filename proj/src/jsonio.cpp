#include "hankel/jsonio.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace hankel {

namespace {

json int_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

mpz_class int_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("integer field must be a JSON integer or a decimal string");
}

json rect_to_json(const Rectangle& r) {
    json j = json::array();
    j.push_back(rational_to_json(r.a));
    j.push_back(rational_to_json(r.b));
    j.push_back(rational_to_json(r.c));
    j.push_back(rational_to_json(r.d));
    return j;
}

json cert_node_to_json(const CertNode& n) {
    json j;
    j["rect"] = rect_to_json(n.rect);
    j["status"] = to_string(n.status);
    j["bernstein_max"] = rational_to_json(n.bernstein_max);
    if (n.corner_margin) j["corner_margin"] = rational_to_json(*n.corner_margin);
    j["depth"] = n.depth;
    if (!n.children.empty()) {
        json kids = json::array();
        for (const CertNode& c : n.children) kids.push_back(cert_node_to_json(c));
        j["children"] = std::move(kids);
    }
    return j;
}

}  // namespace

json rational_to_json(const Rational& q) {
    json j;
    j["num"] = int_to_json(q.get_num());
    j["den"] = int_to_json(q.get_den());
    j["approx"] = to_double(q);
    return j;
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_object()) {
        if (!j.contains("num")) throw std::invalid_argument("rational object is missing num");
        mpz_class num = int_from_json(j.at("num"));
        mpz_class den = j.contains("den") ? int_from_json(j.at("den")) : mpz_class(1);
        return rat(num, den);
    }
    throw std::invalid_argument("rational literal must be an integer, a string, or {num, den}");
}

json gaussian_to_json(const GaussianRational& g) {
    if (g.is_real()) return rational_to_json(g.re);
    json j;
    j["re"] = rational_to_json(g.re);
    j["im"] = rational_to_json(g.im);
    return j;
}

GaussianRational gaussian_from_json(const json& j) {
    if (j.is_object() && j.contains("re")) {
        Rational re = rational_from_json(j.at("re"));
        Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
        return {std::move(re), std::move(im)};
    }
    return GaussianRational(rational_from_json(j));
}

json series_to_json(const TruncatedSeries& f) {
    json coeffs = json::array();
    for (int k = 0; k <= f.order(); ++k) coeffs.push_back(gaussian_to_json(f.coeff(k)));
    json j;
    j["order"] = f.order();
    j["coeffs"] = std::move(coeffs);
    return j;
}

TruncatedSeries series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw std::invalid_argument("series literal must be {order, coeffs}");
    const int order = j.at("order").get<int>();
    TruncatedSeries f(order);
    const json& cs = j.at("coeffs");
    if (!cs.is_array()) throw std::invalid_argument("series coeffs must be an array");
    if (static_cast<int>(cs.size()) > order + 1)
        throw std::invalid_argument("series literal lists more coefficients than its order admits");
    for (int k = 0; k < static_cast<int>(cs.size()); ++k)
        f.set_coeff(k, gaussian_from_json(cs[k]));
    return f;
}

json poly_to_json(const BivariatePoly& f) {
    json terms = json::array();
    for (int i = 0; i <= f.deg_p(); ++i)
        for (int jj = 0; jj <= f.deg_x(); ++jj) {
            const Rational& c = f.coeff(i, jj);
            if (c == 0) continue;
            json t;
            t["i"] = i;
            t["j"] = jj;
            t["num"] = int_to_json(c.get_num());
            t["den"] = int_to_json(c.get_den());
            terms.push_back(std::move(t));
        }
    json j;
    j["bidegree"] = json::array({f.deg_p(), f.deg_x()});
    j["terms"] = std::move(terms);
    return j;
}

BivariatePoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("bidegree") || !j.contains("terms"))
        throw std::invalid_argument("polynomial file must be {bidegree, terms}");
    const json& bd = j.at("bidegree");
    if (!bd.is_array() || bd.size() != 2)
        throw std::invalid_argument("bidegree must be a pair [m, n]");
    BivariatePoly f(bd[0].get<int>(), bd[1].get<int>());
    for (const json& t : j.at("terms")) {
        if (!t.is_object() || !t.contains("i") || !t.contains("j") || !t.contains("num"))
            throw std::invalid_argument("polynomial term must be {i, j, num, den}");
        mpz_class num = int_from_json(t.at("num"));
        mpz_class den = t.contains("den") ? int_from_json(t.at("den")) : mpz_class(1);
        f.set_coeff(t.at("i").get<int>(), t.at("j").get<int>(), rat(num, den));
    }
    return f;
}

json report_envelope(const std::string& kind) {
    json j;
    j["schema_version"] = 1;
    j["kind"] = kind;
    j["timestamp"] = iso_timestamp_utc();
    return j;
}

json phi_report_to_json(const PhiPropertyReport& rep) {
    json j = report_envelope("phi-check");
    j["radial_steps"] = rep.radial_steps;
    j["angular_steps"] = rep.angular_steps;
    j["min_abs"] = rep.min_abs;
    j["max_abs"] = rep.max_abs;
    j["min_re_interior"] = rep.min_re_interior;
    j["min_starlike_re"] = rep.min_starlike_re;
    j["univalence_collisions"] = rep.univalence_collisions;
    j["modulus_pass"] = rep.modulus_pass;
    j["re_pass"] = rep.re_pass;
    j["starlike_pass"] = rep.starlike_pass;
    j["univalence_pass"] = rep.univalence_pass;
    j["pass"] = rep.pass();
    return j;
}

json ykc_to_json(const YkcInput& inp, const YkcResult& closed, const YkcResult* oracle) {
    json j = report_envelope("ykc");
    j["a"] = rational_to_json(inp.a);
    j["b"] = rational_to_json(inp.b);
    j["c"] = rational_to_json(inp.c);
    json cf;
    cf["value"] = closed.value;
    if (closed.exact) cf["exact"] = rational_to_json(*closed.exact);
    if (closed.branch) cf["branch"] = to_string(*closed.branch);
    j["closed_form"] = std::move(cf);
    if (oracle) {
        json o;
        o["value"] = oracle->value;
        o["argmax"] = json{{"re", oracle->argmax_hint.real()}, {"im", oracle->argmax_hint.imag()}};
        j["oracle"] = std::move(o);
        j["deviation"] = std::abs(closed.value - oracle->value);
    }
    return j;
}

json coeffs_to_json(const CoeffVec& v) {
    json j;
    j["a2"] = gaussian_to_json(v.a2);
    j["a3"] = gaussian_to_json(v.a3);
    j["a4"] = gaussian_to_json(v.a4);
    j["a5"] = gaussian_to_json(v.a5);
    return j;
}

json sample_to_json(const CuboidSample& s) {
    json j;
    j["exact"] = s.exact;
    if (s.exact) {
        j["t"] = rational_to_json(s.t);
        j["gamma"] = gaussian_to_json(s.gamma);
        j["eta"] = gaussian_to_json(s.eta);
        j["rho"] = gaussian_to_json(s.rho);
    } else {
        j["t"] = s.t_d;
        j["gamma"] = json{{"re", s.gamma_d.real()}, {"im", s.gamma_d.imag()}};
        j["eta"] = json{{"re", s.eta_d.real()}, {"im", s.eta_d.imag()}};
        j["rho"] = json{{"re", s.rho_d.real()}, {"im", s.rho_d.imag()}};
    }
    return j;
}

json cert_report_to_json(const CertificationReport& rep) {
    json j = report_envelope("bernstein-certification");
    j["bound"] = rational_to_json(rep.bound);
    j["strategy"] = to_string(rep.strategy);
    j["max_depth"] = rep.max_depth;
    j["certified"] = rep.certified;
    j["leaves_certified"] = rep.leaves_certified;
    j["leaves_failed"] = rep.leaves_failed;
    j["tree"] = cert_node_to_json(rep.root);
    return j;
}

json theorem_report_to_json(const TheoremReport& rep) {
    json j = report_envelope("theorem");
    j["theorem"] = rep.theorem;
    j["bound"] = rational_to_json(rep.bound);
    j["witness"] = rep.witness;
    j["witness_value"] = rational_to_json(rep.witness_value);
    j["search_max"] = rep.search_max;
    json checks = json::array();
    for (const SubCheck& c : rep.checks) {
        json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["certified"] = rep.certified;
    return j;
}

std::string iso_timestamp_utc() {
    const std::time_t tt = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

}  // namespace hankel
