// Command-line front end: fixed points, bubble values, Epstein evaluations,
// flow trajectories and the built-in validation suite, with machine-readable
// JSON/CSV output.
#include <CLI11.hpp>
#include <json.hpp>

#include "glrg/bubble.hpp"
#include "glrg/epstein.hpp"
#include "glrg/flow.hpp"
#include "glrg/magnetic.hpp"
#include "glrg/specialfn.hpp"
#include "glrg/validate.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
    double rel_tol = 1e-12;
    long max_terms = 1000000;
    int quadrature_level = 10;
    std::string format = "json";
    std::string out;
};

struct ValueEntry {
    std::string name;
    double value = 0.0;
    std::string unit;
};

struct Record {
    std::string command;
    std::map<std::string, std::string> inputs;
    std::vector<ValueEntry> values;
    std::vector<std::array<double, 4>> trajectory;  // t, scale, g, beta
    double error_estimate = 0.0;
    std::string representation;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void load_config(RunConfig& cfg) {
    const char* path = std::getenv("GLRG_CONFIG");
    if (!path) return;
    std::ifstream in(path);
    if (!in) throw std::runtime_error(std::string("cannot open GLRG_CONFIG file ") + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        for (auto& ch : line)
            if (ch == '=') ch = ' ';
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "rel_tol") ls >> cfg.rel_tol;
        else if (key == "max_terms") ls >> cfg.max_terms;
        else if (key == "quadrature_level") ls >> cfg.quadrature_level;
        else if (key == "format") ls >> cfg.format;
        else if (key == "out") ls >> cfg.out;
        else throw std::runtime_error("unknown config key: " + key);
    }
}

glrg::TruncationPolicy policy_of(const RunConfig& cfg) {
    glrg::TruncationPolicy p;
    p.rel_tol = cfg.rel_tol;
    p.max_terms_per_axis = cfg.max_terms;
    p.quad_levels = cfg.quadrature_level;
    return p;
}

void write_json(const Record& r, std::ostream& os) {
    nlohmann::json j;
    j["command"] = r.command;
    nlohmann::json inputs(nlohmann::json::value_t::object);
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : r.values)
        values.push_back({{"name", v.name}, {"value", v.value}, {"unit", v.unit}});
    j["values"] = values;
    if (!r.trajectory.empty()) {
        nlohmann::json traj = nlohmann::json::array();
        for (const auto& s : r.trajectory)
            traj.push_back({{"t", s[0]}, {"scale", s[1]}, {"g", s[2]}, {"beta", s[3]}});
        j["trajectory"] = traj;
    }
    j["error_estimate"] = r.error_estimate;
    j["representation"] = r.representation;
    j["tool_version"] = kToolVersion;
    os << j.dump(2) << "\n";
}

void write_csv(const Record& r, std::ostream& os) {
    if (r.trajectory.empty()) {
        os << "command,name,value,unit,error_estimate,representation,tool_version\n";
        for (const auto& v : r.values)
            os << r.command << ',' << v.name << ',' << num(v.value) << ',' << v.unit
               << ',' << num(r.error_estimate) << ',' << r.representation << ','
               << kToolVersion << "\n";
    } else {
        os << "t,scale,g,beta\n";
        for (const auto& s : r.trajectory)
            os << num(s[0]) << ',' << num(s[1]) << ',' << num(s[2]) << ',' << num(s[3])
               << "\n";
    }
}

void emit(const Record& r, const RunConfig& cfg) {
    std::ostringstream buf;
    if (cfg.format == "csv")
        write_csv(r, buf);
    else
        write_json(r, buf);
    if (cfg.out.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
        f << buf.str();
    }
}

glrg::Geometry geometry_from(const std::vector<double>& lengths, bool film, bool wire,
                             bool grain, int d) {
    int want = d;
    if (film) want = 1;
    if (wire) want = 2;
    if (grain) want = 3;
    if (want == 0) want = int(lengths.size());
    if (want < 1 || want > 3)
        throw std::invalid_argument("geometry: need 1, 2 or 3 confined directions");
    if (int(lengths.size()) != want)
        throw std::invalid_argument("geometry: expected " + std::to_string(want) +
                                    " --L values, got " + std::to_string(lengths.size()));
    return glrg::Geometry{lengths};
}

int run(int argc, char** argv) {
    RunConfig cfg;
    load_config(cfg);

    CLI::App app{"compactified large-N Ginzburg-Landau toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--rel-tol", cfg.rel_tol, "truncation tolerance");
    app.add_option("--max-terms", cfg.max_terms, "lattice-sum budget per axis");
    app.add_option("--quadrature-level", cfg.quadrature_level, "tanh-sinh depth")
        ->check(CLI::Range(3, 12));
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", cfg.out, "output path (default stdout)");

    double D = 3.0, p = 0.0, g0 = 0.1, t0 = 0.0, t1 = -20.0, nu = 2.0, c2 = 0.0;
    int steps = 200, dflag = 0;
    bool magnetic = false, film = false, wire = false, grain = false,
         decompose = false, fast = false, full = false;
    std::vector<double> lengths, sigmas, as;
    std::string method = "recurrence";

    auto* fp = app.add_subcommand("fixed-point", "infrared-stable fixed point g*");
    fp->add_option("--D", D, "space dimension")->required();
    fp->add_flag("--magnetic", magnetic, "external-field regime (4 < D < 6)");

    auto* bu = app.add_subcommand("bubble", "one-loop bubble value or decomposition");
    bu->add_option("--D", D, "space dimension")->required();
    bu->add_option("--L", lengths, "confined edge length (repeatable)");
    bu->add_flag("--film", film, "one confined direction");
    bu->add_flag("--wire", wire, "two confined directions");
    bu->add_flag("--grain", grain, "three confined directions");
    bu->add_option("--d", dflag, "number of confined directions");
    bu->add_option("--p", p, "external momentum magnitude");
    bu->add_flag("--decompose", decompose, "report A and B instead of the full value");
    bu->add_flag("--magnetic", magnetic, "lowest-Landau-level bubble (D -> D-2 shift)");

    auto* ep = app.add_subcommand("epstein", "Epstein / Epstein-Hurwitz evaluations");
    ep->add_option("--nu", nu, "exponent")->required();
    ep->add_option("--sigma", sigmas, "E_p parameters (repeatable)");
    ep->add_option("--a", as, "Z_d quadratic coefficients (repeatable)");
    ep->add_option("--c2", c2, "Z_d mass-like offset");
    ep->add_option("--method", method, "direct | bessel | recurrence")
        ->check(CLI::IsMember({"direct", "bessel", "recurrence"}));

    auto* fl = app.add_subcommand("flow", "integrate dg/dt = beta(g)");
    fl->add_option("--g0", g0, "initial coupling")->required();
    fl->add_option("--D", D, "space dimension")->required();
    fl->add_option("--t0", t0, "initial ln|p|");
    fl->add_option("--t1", t1, "final ln|p|");
    fl->add_option("--steps", steps, "sample count");
    fl->add_flag("--magnetic", magnetic, "external-field regime");

    double threshold_scale = 1.0;
    auto* va = app.add_subcommand("validate", "run the verification suite");
    va->add_flag("--fast", fast, "sub-second subset");
    va->add_flag("--full", full, "all criteria (default)");
    va->add_option("--threshold-scale", threshold_scale,
                   "scale every tolerance (testing aid)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);  // prints usage; --help exits 0
        return rc == 0 ? 0 : 2;
    }
    const glrg::TruncationPolicy pol = policy_of(cfg);

    if (fp->parsed()) {
        const glrg::FixedPointReport r = magnetic ? glrg::fixed_point_magnetic(D)
                                                  : glrg::fixed_point_zero_field(D);
        Record rec;
        rec.command = "fixed-point";
        rec.inputs = {{"D", num(D)}, {"magnetic", magnetic ? "true" : "false"}};
        rec.values = {{"g_star", r.g_star, "dimensionless"},
                      {"stability_slope", r.stability_slope, "dimensionless"},
                      {"window_lo", r.window_lo, "dimensionless"},
                      {"window_hi", r.window_hi, "dimensionless"}};
        rec.error_estimate = 1e-14 * std::fabs(r.g_star);
        rec.representation = "closed-form";
        emit(rec, cfg);
        return 0;
    }

    if (bu->parsed()) {
        const glrg::Geometry geom = geometry_from(lengths, film, wire, grain, dflag);
        Record rec;
        rec.command = "bubble";
        rec.inputs = {{"D", num(D)}, {"d", std::to_string(geom.d())},
                      {"magnetic", magnetic ? "true" : "false"}};
        for (int i = 0; i < geom.d(); ++i)
            rec.inputs["L" + std::to_string(i + 1)] = num(geom.lengths[i]);
        const char* bunit = magnetic ? "length^(6-D)" : "length^(4-D)";
        if (decompose) {
            if (magnetic) {
                rec.values = {{"A1", glrg::a1_coeff(D), "dimensionless"},
                              {"C", glrg::c_coeff(D, geom, pol), bunit}};
            } else {
                const glrg::BubbleResult r = glrg::small_p_decomposition(D, geom, pol);
                rec.values = {{"A", r.a_coeff, "dimensionless"},
                              {"B", r.b_coeff, bunit}};
            }
            rec.error_estimate = cfg.rel_tol * std::fabs(rec.values[1].value);
            rec.representation = "small-p-decomposition";
        } else {
            if (!(p > 0.0))
                throw std::invalid_argument("bubble: need --p > 0 (or --decompose)");
            rec.inputs["p"] = num(p);
            double value;
            if (magnetic) {
                value = glrg::pi_magnetic(glrg::Momentum{p}, D, geom, pol).value;
            } else {
                value = glrg::pi_compactified(glrg::Momentum{p}, D, geom, pol).value;
            }
            rec.values = {{"Pi", value, bunit}};
            rec.error_estimate = 10.0 * cfg.rel_tol * std::fabs(value);
            rec.representation = "full-sum";
        }
        emit(rec, cfg);
        return 0;
    }

    if (ep->parsed()) {
        Record rec;
        rec.command = "epstein";
        rec.inputs["nu"] = num(nu);
        double value;
        if (!sigmas.empty()) {
            const glrg::EpsteinSpec spec{nu, sigmas};
            for (std::size_t i = 0; i < sigmas.size(); ++i)
                rec.inputs["sigma" + std::to_string(i + 1)] = num(sigmas[i]);
            if (method == "bessel")
                throw std::invalid_argument(
                    "epstein: --method bessel applies to Z_d (--a/--c2)");
            value = (method == "direct") ? glrg::epstein_direct(spec, pol)
                                         : glrg::epstein_recurrence(spec, pol);
            rec.values = {{"E_p", value, "sigma^(-2 nu)"}};
        } else if (!as.empty()) {
            const glrg::HurwitzSpec spec{nu, as, c2};
            for (std::size_t i = 0; i < as.size(); ++i)
                rec.inputs["a" + std::to_string(i + 1)] = num(as[i]);
            rec.inputs["c2"] = num(c2);
            if (method == "recurrence")
                throw std::invalid_argument(
                    "epstein: --method recurrence applies to E_p (--sigma)");
            value = (method == "direct") ? glrg::hurwitz_direct(spec, pol)
                                         : glrg::hurwitz_bessel(spec, pol);
            rec.values = {{"Z_d", value, "a^(-nu)"}};
        } else {
            throw std::invalid_argument(
                "epstein: need --sigma... (E_p) or --a.../--c2 (Z_d)");
        }
        rec.inputs["method"] = method;
        rec.error_estimate = 10.0 * cfg.rel_tol * std::fabs(value);
        rec.representation = method;
        emit(rec, cfg);
        return 0;
    }

    if (fl->parsed()) {
        const auto regime = magnetic ? glrg::FlowRegime::kMagnetic
                                     : glrg::FlowRegime::kZeroField;
        const auto traj = glrg::integrate_flow(g0, D, regime, {t0, t1}, steps);
        Record rec;
        rec.command = "flow";
        rec.inputs = {{"D", num(D)},   {"g0", num(g0)},
                      {"t0", num(t0)}, {"t1", num(t1)},
                      {"steps", std::to_string(steps)},
                      {"magnetic", magnetic ? "true" : "false"}};
        rec.trajectory.reserve(traj.size());
        for (std::size_t i = 0; i < traj.size(); ++i) {
            const double t = t0 + (t1 - t0) * double(i) / steps;
            rec.trajectory.push_back({t, traj[i].scale, traj[i].g, traj[i].beta});
        }
        rec.values = {{"g_final", traj.back().g, "dimensionless"}};
        rec.error_estimate = 1e-10 * std::fabs(traj.back().g);
        rec.representation = "rk45";
        emit(rec, cfg);
        return 0;
    }

    // validate
    const auto level = (fast && !full) ? glrg::ValidationLevel::kFast
                                       : glrg::ValidationLevel::kFull;
    const auto results = glrg::run_validation(level, threshold_scale);
    bool ok = true;
    for (const auto& r : results) {
        std::printf("[%s] criterion %s: %s (worst/threshold = %.3g, %.2f s)\n",
                    r.pass ? "PASS" : "FAIL", r.id.c_str(), r.name.c_str(), r.observed,
                    r.seconds);
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const glrg::PoleError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
