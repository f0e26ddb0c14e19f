#include "hankel/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hankel/jsonio.hpp"

namespace hankel {

namespace {

int emit_text(const std::string& text, const RunConfig& cfg) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(cfg.out_path);
    if (!out) {
        std::cerr << "error: cannot write " << cfg.out_path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

int emit_json(const json& j, const RunConfig& cfg) { return emit_text(j.dump(2) + "\n", cfg); }

const char* pass_word(bool b) { return b ? "pass" : "FAIL"; }

Rectangle parse_rect(const std::string& text) {
    std::vector<Rational> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) parts.push_back(parse_rational(item));
    if (parts.size() != 4)
        throw std::invalid_argument("--rect wants four comma-separated rationals a,b,c,d");
    return Rectangle{parts[0], parts[1], parts[2], parts[3]};
}

SplitStrategy parse_strategy(const std::string& s) {
    if (s == "paper-quadrants") return SplitStrategy::PaperQuadrants;
    if (s == "bisect-longest") return SplitStrategy::BisectLongest;
    return SplitStrategy::Auto;
}

VerifyOptions make_verify_options(const RunConfig& cfg, bool cuboid_grid) {
    VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.search_samples = cfg.search_samples;
    opt.identity_samples = cfg.identity_samples;
    if (cfg.grid > 0) {
        if (cuboid_grid) {
            opt.grid_p = cfg.grid;
            opt.grid_x = cfg.grid;
        } else {
            opt.p1_grid = cfg.grid;
        }
    }
    return opt;
}

std::string phi_text(const PhiPropertyReport& rep) {
    std::ostringstream os;
    os << "phi(z) = (1 + z/2)^2 on a " << rep.radial_steps << "x" << rep.angular_steps
       << " polar grid\n";
    os << "  [" << pass_word(rep.modulus_pass) << "] modulus range [" << rep.min_abs << ", "
       << rep.max_abs << "] inside [1/4, 9/4]\n";
    os << "  [" << pass_word(rep.re_pass) << "] min Re phi over interior points "
       << rep.min_re_interior << " > 1/4\n";
    os << "  [" << pass_word(rep.starlike_pass) << "] min Re(z phi'/(phi-1)) "
       << rep.min_starlike_re << " > 0\n";
    os << "  [" << pass_word(rep.univalence_pass) << "] equal-value collisions: "
       << rep.univalence_collisions << "\n";
    os << "phi-check: " << (rep.pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string theorem_text(const TheoremReport& rep) {
    std::ostringstream os;
    os << "theorem " << rep.theorem << ": bound " << to_string(rep.bound) << " (sharp)\n";
    os << "witness: " << rep.witness << ", value " << to_string(rep.witness_value) << "\n";
    for (const SubCheck& c : rep.checks)
        os << "  [" << pass_word(c.pass) << "] " << c.name << ": " << c.detail << "\n";
    os << "certified: " << (rep.certified ? "yes" : "NO") << " (" << rep.seconds << " s)\n";
    return os.str();
}

int emit_report(const TheoremReport& rep, const RunConfig& cfg) {
    const int code = rep.certified ? 0 : 1;
    const int e = cfg.json_output ? emit_json(theorem_report_to_json(rep), cfg)
                                  : emit_text(theorem_text(rep), cfg);
    return e != 0 ? e : code;
}

}  // namespace

int cli_run(int argc, const char* const* argv) {
    RunConfig cfg;
    CLI::App app{"exact certification toolkit for the sharp Hankel determinant bounds\n"
                 "|H2(2)| <= 1/36 and |H3(1)| <= 1/144 on the convex class of (1 + z/2)^2"};
    app.require_subcommand(1);
    app.add_option("--seed", cfg.seed, "seed for every randomized stage")->capture_default_str();
    app.add_flag("--json", cfg.json_output, "emit a JSON document instead of text");
    app.add_option("--out", cfg.out_path, "write output to this path instead of stdout");
    app.add_option("--threads", cfg.threads,
                   "worker hint; results are deterministic regardless of its value")
        ->capture_default_str();

    int radial = 64, angular = 256;
    CLI::App* phi = app.add_subcommand(
        "phi-check", "grid evidence for the disk properties of phi(z) = (1 + z/2)^2");
    phi->fallthrough();
    phi->add_option("--radial", radial, "radial steps")->capture_default_str();
    phi->add_option("--angular", angular, "angular steps")->capture_default_str();

    std::string from_kind, values_text;
    CLI::App* coeffs = app.add_subcommand(
        "coeffs", "map Caratheodory or Schwarz data to a_2..a_5 and both Hankel determinants");
    coeffs->fallthrough();
    coeffs->add_option("--from", from_kind, "input kind")
        ->required()
        ->check(CLI::IsMember({"caratheodory", "schwarz"}));
    coeffs->add_option("--values", values_text,
                       "JSON list of the four inputs, e.g. [2,2,2,2] or [{\"re\":0,\"im\":1},...]")
        ->required();

    std::string mode_text = "ps", policy_text = "mixed";
    CLI::App* sample =
        app.add_subcommand("sample", "stream parameter-cuboid samples as JSON lines");
    sample->fallthrough();
    sample->add_option("--mode", mode_text, "lz (Caratheodory) or ps (Schwarz)")
        ->check(CLI::IsMember({"lz", "ps"}))
        ->capture_default_str();
    sample->add_option("--count", cfg.count, "number of samples")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sample->add_option("--policy", policy_text, "angle policy")
        ->check(CLI::IsMember({"exact", "float", "mixed"}))
        ->capture_default_str();

    std::string a_text, b_text, c_text;
    bool oracle = false;
    int yk_radial = 512, yk_angular = 1024;
    CLI::App* ykc = app.add_subcommand(
        "ykc", "Y(A,B,C) = max over the closed unit disk of |A+Bz+Cz^2| + 1 - |z|^2");
    ykc->fallthrough();
    ykc->add_option("--a", a_text, "A as a rational, e.g. -1/36")->required();
    ykc->add_option("--b", b_text, "B")->required();
    ykc->add_option("--c", c_text, "C")->required();
    ykc->add_flag("--oracle", oracle, "also run the grid maximizer and report the deviation");
    ykc->add_option("--radial", yk_radial, "oracle radial points")->capture_default_str();
    ykc->add_option("--angular", yk_angular, "oracle angular points")->capture_default_str();

    std::string poly_path, rect_text = "0,1,0,1", bound_text, strategy_text = "auto";
    bool corner = false;
    CLI::App* bern = app.add_subcommand(
        "bernstein", "certify poly <= bound on a rectangle by Bernstein subdivision");
    bern->fallthrough();
    bern->add_option("--poly", poly_path, "polynomial file (JSON)")->required();
    bern->add_option("--rect", rect_text, "rectangle a,b,c,d")->capture_default_str();
    bern->add_option("--bound", bound_text, "upper bound, e.g. 480 or 75535/256")->required();
    bern->add_option("--depth", cfg.depth, "maximum subdivision depth")->capture_default_str();
    bern->add_option("--strategy", strategy_text, "subdivision strategy")
        ->check(CLI::IsMember({"paper-quadrants", "bisect-longest", "auto"}))
        ->capture_default_str();
    bern->add_flag("--corner", corner,
                   "discharge failed origin leaves with the corner certificate");

    CLI::App* h2 = app.add_subcommand("h2", "second Hankel determinant |H2(2)| <= 1/36");
    h2->fallthrough();
    h2->require_subcommand(1);
    CLI::App* h2v = h2->add_subcommand("verify", "run the full certification pipeline");
    h2v->fallthrough();
    h2v->add_option("--samples", cfg.search_samples, "randomized search samples")
        ->capture_default_str();
    h2v->add_option("--grid", cfg.grid, "p1 grid points (default 199)");
    h2v->add_option("--identity-samples", cfg.identity_samples, "exact identity samples")
        ->capture_default_str();

    CLI::App* h3 = app.add_subcommand("h3", "third Hankel determinant |H3(1)| <= 1/144");
    h3->fallthrough();
    h3->require_subcommand(1);
    CLI::App* h3v = h3->add_subcommand("verify", "run the full certification pipeline");
    h3v->fallthrough();
    h3v->add_option("--samples", cfg.search_samples, "randomized search samples")
        ->capture_default_str();
    h3v->add_option("--grid", cfg.grid, "cuboid grid side (default 101)");
    h3v->add_option("--identity-samples", cfg.identity_samples, "exact identity samples")
        ->capture_default_str();

    std::string omega_text;
    int order = 9;
    CLI::App* ext = app.add_subcommand(
        "extremal", "exact series of the extremal function driven by omega = z^2 or z^3");
    ext->fallthrough();
    ext->add_option("--omega", omega_text, "z2 or z3")
        ->required()
        ->check(CLI::IsMember({"z2", "z3"}));
    ext->add_option("--order", order, "truncation order")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string series_path, op_text = "none";
    int trunc_order = -1;
    CLI::App* ser = app.add_subcommand("series", "apply one exact operation to a series literal");
    ser->fallthrough();
    ser->add_option("--in", series_path, "series literal file (JSON)")->required();
    ser->add_option("--op", op_text, "operation")
        ->check(CLI::IsMember(
            {"none", "exp", "integrate", "derivative", "divide-z", "multiply-z", "truncate"}))
        ->capture_default_str();
    ser->add_option("--order", trunc_order, "new order for --op truncate");

    CLI::App* all =
        app.add_subcommand("verify-all", "phi-check, h2 verify and h3 verify in sequence");
    all->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(phi)) {
            const PhiPropertyReport rep = check_phi_properties(radial, angular);
            const int code = rep.pass() ? 0 : 1;
            const int e = cfg.json_output ? emit_json(phi_report_to_json(rep), cfg)
                                          : emit_text(phi_text(rep), cfg);
            return e != 0 ? e : code;
        }

        if (app.got_subcommand(coeffs)) {
            const json vals = json::parse(values_text);
            if (!vals.is_array() || vals.size() != 4)
                throw std::invalid_argument("--values wants a JSON list of exactly four entries");
            const GaussianRational v1 = gaussian_from_json(vals[0]);
            const GaussianRational v2 = gaussian_from_json(vals[1]);
            const GaussianRational v3 = gaussian_from_json(vals[2]);
            const GaussianRational v4 = gaussian_from_json(vals[3]);
            const CoeffVec v = from_kind == "caratheodory"
                                   ? coeffs_from_caratheodory({v1, v2, v3, v4})
                                   : coeffs_from_schwarz({v1, v2, v3, v4});
            const GaussianRational h2val = hankel_h2(v);
            const GaussianRational h3val = hankel_h3(v);
            if (cfg.json_output) {
                json j = report_envelope("coeffs");
                j["from"] = from_kind;
                j["input"] = vals;
                j["coeffs"] = coeffs_to_json(v);
                j["h2"] = gaussian_to_json(h2val);
                j["h3"] = gaussian_to_json(h3val);
                return emit_json(j, cfg);
            }
            std::ostringstream os;
            os << "a2 = " << to_string(v.a2) << "\n";
            os << "a3 = " << to_string(v.a3) << "\n";
            os << "a4 = " << to_string(v.a4) << "\n";
            os << "a5 = " << to_string(v.a5) << "\n";
            os << "H2(2) = " << to_string(h2val) << "\n";
            os << "H3(1) = " << to_string(h3val) << "\n";
            return emit_text(os.str(), cfg);
        }

        if (app.got_subcommand(sample)) {
            const SampleMode mode = mode_text == "lz" ? SampleMode::LZ : SampleMode::PS;
            const AnglePolicy policy = policy_text == "exact"   ? AnglePolicy::ExactUnimodular
                                       : policy_text == "float" ? AnglePolicy::FloatDense
                                                                : AnglePolicy::Mixed;
            std::ostringstream os;
            for (const CuboidSample& s : sample_cuboid(cfg.seed, cfg.count, mode, policy))
                os << sample_to_json(s).dump() << "\n";
            return emit_text(os.str(), cfg);
        }

        if (app.got_subcommand(ykc)) {
            const YkcInput inp{parse_rational(a_text), parse_rational(b_text),
                               parse_rational(c_text)};
            const YkcResult closed = ykc_closed_form(inp);
            std::optional<YkcResult> brute;
            if (oracle) brute = ykc_brute_force(inp, yk_radial, yk_angular);
            if (cfg.json_output)
                return emit_json(ykc_to_json(inp, closed, brute ? &*brute : nullptr), cfg);
            std::ostringstream os;
            os << "Y(" << to_string(inp.a) << ", " << to_string(inp.b) << ", " << to_string(inp.c)
               << ") = " << closed.value << "\n";
            if (closed.branch) os << "  branch: " << to_string(*closed.branch) << "\n";
            if (closed.exact) os << "  exact: " << to_string(*closed.exact) << "\n";
            if (brute) {
                os << "oracle (" << yk_radial << "x" << yk_angular << " grid): " << brute->value
                   << "\n";
                os << "  |closed - oracle| = " << std::abs(closed.value - brute->value) << "\n";
            }
            return emit_text(os.str(), cfg);
        }

        if (app.got_subcommand(bern)) {
            const BivariatePoly poly = poly_from_json(load_json_file(poly_path));
            const Rectangle rect = parse_rect(rect_text);
            const Rational bound = parse_rational(bound_text);
            const SplitStrategy strat = parse_strategy(strategy_text);
            const CertificationReport rep =
                corner ? certify_with_origin_corner(poly, rect, bound, cfg.depth, strat)
                       : certify_upper_bound(poly, rect, bound, cfg.depth, strat);
            const int code = rep.certified ? 0 : 1;
            if (cfg.json_output) {
                const int e = emit_json(cert_report_to_json(rep), cfg);
                return e != 0 ? e : code;
            }
            std::ostringstream os;
            os << "bound " << to_string(rep.bound) << " on [" << to_string(rect.a) << ", "
               << to_string(rect.b) << "] x [" << to_string(rect.c) << ", " << to_string(rect.d)
               << "], strategy " << to_string(rep.strategy) << ", max depth " << rep.max_depth
               << "\n";
            os << "root Bernstein max: " << to_string(rep.root.bernstein_max) << "\n";
            os << "leaves certified: " << rep.leaves_certified
               << ", failed: " << rep.leaves_failed << "\n";
            os << "certified: " << (rep.certified ? "yes" : "NO") << "\n";
            const int e = emit_text(os.str(), cfg);
            return e != 0 ? e : code;
        }

        if (app.got_subcommand(h2)) return emit_report(verify_h2(make_verify_options(cfg, false)), cfg);
        if (app.got_subcommand(h3)) return emit_report(verify_h3(make_verify_options(cfg, true)), cfg);

        if (app.got_subcommand(ext)) {
            const TruncatedSeries f = extremal_function_series(omega_text == "z2" ? 2 : 3, order);
            if (cfg.json_output) {
                json j = report_envelope("extremal");
                j["omega"] = omega_text;
                j["order"] = order;
                j["series"] = series_to_json(f);
                return emit_json(j, cfg);
            }
            return emit_text("f(z) = " + to_string(f) + "\n", cfg);
        }

        if (app.got_subcommand(ser)) {
            TruncatedSeries f = series_from_json(load_json_file(series_path));
            if (op_text == "exp")
                f = series_exp(f);
            else if (op_text == "integrate")
                f = integrate_from_zero(f);
            else if (op_text == "derivative")
                f = derivative(f);
            else if (op_text == "divide-z")
                f = divide_by_z(f);
            else if (op_text == "multiply-z")
                f = multiply_by_z(f);
            else if (op_text == "truncate") {
                if (trunc_order < 0)
                    throw std::invalid_argument("--op truncate wants a nonnegative --order");
                f = truncate(f, trunc_order);
            }
            if (cfg.json_output) {
                json j = report_envelope("series");
                j["op"] = op_text;
                j["series"] = series_to_json(f);
                return emit_json(j, cfg);
            }
            return emit_text(to_string(f) + "\n", cfg);
        }

        if (app.got_subcommand(all)) {
            const PhiPropertyReport phi_rep = check_phi_properties();
            const TheoremReport h2_rep = verify_h2(make_verify_options(cfg, false));
            const TheoremReport h3_rep = verify_h3(make_verify_options(cfg, true));
            const bool ok = phi_rep.pass() && h2_rep.certified && h3_rep.certified;
            if (cfg.json_output) {
                json j = report_envelope("verify-all");
                json p = phi_report_to_json(phi_rep);
                json a = theorem_report_to_json(h2_rep);
                json b = theorem_report_to_json(h3_rep);
                for (json* part : {&p, &a, &b}) {
                    part->erase("timestamp");
                    part->erase("schema_version");
                }
                j["phi"] = std::move(p);
                j["h2"] = std::move(a);
                j["h3"] = std::move(b);
                j["certified"] = ok;
                const int e = emit_json(j, cfg);
                return e != 0 ? e : (ok ? 0 : 1);
            }
            std::ostringstream os;
            os << phi_text(phi_rep) << "\n" << theorem_text(h2_rep) << "\n"
               << theorem_text(h3_rep) << "\nverify-all: " << (ok ? "PASS" : "FAIL") << "\n";
            const int e = emit_text(os.str(), cfg);
            return e != 0 ? e : (ok ? 0 : 1);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }

    std::cerr << "error: no subcommand dispatched\n";
    return 2;
}

}  // namespace hankel
