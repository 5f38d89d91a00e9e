#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

constexpr double kPi = 3.14159265358979323846;

struct RunOut {
    int code = -1;
    std::string out;
    std::string err;
};

RunOut run_cli(const std::string& args, const std::string& env = "") {
    const std::string errfile = "/tmp/glrg_cli_test_stderr";
    std::string cmd = env.empty() ? std::string() : env + " ";
    cmd += GLRG_CLI_PATH;
    cmd += " " + args + " 2>" + errfile;
    RunOut r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int rc = pclose(p);
    r.code = WEXITSTATUS(rc);
    std::ifstream ef(errfile);
    std::stringstream ss;
    ss << ef.rdbuf();
    r.err = ss.str();
    return r;
}

double value_of(const nlohmann::json& rec, const std::string& name) {
    for (const auto& v : rec.at("values"))
        if (v.at("name") == name) return v.at("value").get<double>();
    FAIL("value not found: ", name);
    return 0.0;
}

void check_against_schema(const nlohmann::json& rec) {
    static const nlohmann::json schema = [] {
        std::ifstream f(GLRG_SCHEMA_PATH);
        REQUIRE(f.good());
        return nlohmann::json::parse(f);
    }();
    for (const auto& req : schema.at("required"))
        CHECK(rec.contains(req.get<std::string>()));
    CHECK(rec.at("inputs").is_object());
    CHECK(rec.at("values").is_array());
    for (const auto& v : rec.at("values")) {
        CHECK(v.at("name").is_string());
        CHECK(v.at("value").is_number());
        CHECK(v.at("unit").is_string());
    }
    CHECK(rec.at("error_estimate").get<double>() >= 0.0);
}

} // namespace

TEST_CASE("fixed-point: zero field and magnetic values, schema-valid") {
    const RunOut r = run_cli("fixed-point --D 3");
    CHECK(r.code == 0);
    const auto rec = nlohmann::json::parse(r.out);
    check_against_schema(rec);
    CHECK(std::fabs(value_of(rec, "g_star") - 4.0 / kPi) < 1e-12);
    CHECK(value_of(rec, "window_hi") == 4.0);

    const RunOut m = run_cli("fixed-point --D 5 --magnetic");
    CHECK(m.code == 0);
    const auto mrec = nlohmann::json::parse(m.out);
    check_against_schema(mrec);
    CHECK(std::fabs(value_of(mrec, "g_star") - 32.0 * kPi * kPi) < 1e-9);
}

TEST_CASE("fixed-point: domain error exits 2 and names the window") {
    const RunOut r = run_cli("fixed-point --D 4.5");
    CHECK(r.code == 2);
    CHECK(r.err.find("2 < D < 4") != std::string::npos);
}

TEST_CASE("bubble: decomposition and full value") {
    const RunOut dec = run_cli("bubble --D 3 --film --L 1 --decompose");
    CHECK(dec.code == 0);
    const auto drec = nlohmann::json::parse(dec.out);
    check_against_schema(drec);
    CHECK(std::fabs(value_of(drec, "A") - kPi / 4.0) < 1e-13);
    CHECK(std::fabs(value_of(drec, "B") - 1.0 / (48.0 * kPi)) < 1e-14);

    const RunOut full = run_cli("bubble --D 3 --film --L 1 --p 1e-4");
    CHECK(full.code == 0);
    const auto frec = nlohmann::json::parse(full.out);
    const double want = (kPi / 4.0) * 1e4 + 1.0 / (48.0 * kPi);
    CHECK(std::fabs(value_of(frec, "Pi") - want) / want < 1e-4);

    const RunOut grain = run_cli("bubble --D 3 --grain --L 1 --L 1 --L 1 --decompose");
    CHECK(grain.code == 0);
    const auto grec = nlohmann::json::parse(grain.out);
    CHECK(std::isfinite(value_of(grec, "B")));

    const RunOut bad = run_cli("bubble --D 1.5 --film --L 1 --decompose");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("2 < D < 4") != std::string::npos);
}

TEST_CASE("bubble: magnetic decomposition matches the shifted constants") {
    const RunOut r = run_cli("bubble --D 5 --film --L 1 --decompose --magnetic");
    CHECK(r.code == 0);
    const auto rec = nlohmann::json::parse(r.out);
    CHECK(std::fabs(value_of(rec, "A1") - 1.0 / (32.0 * kPi * kPi)) < 1e-15);
    CHECK(std::fabs(value_of(rec, "C") - 1.0 / (48.0 * kPi)) < 1e-14);
}

TEST_CASE("flow: CSV trajectory ends at the fixed point") {
    const RunOut r = run_cli("flow --g0 0.1 --D 3 --t0 0 --t1 -20 --steps 200 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("t,scale,g,beta\n", 0) == 0);
    const auto last_nl = r.out.find_last_of('\n', r.out.size() - 2);
    std::istringstream last(r.out.substr(last_nl + 1));
    std::string tok;
    std::getline(last, tok, ',');  // t
    std::getline(last, tok, ',');  // scale
    std::getline(last, tok, ',');  // g
    CHECK(std::fabs(std::stod(tok) - 4.0 / kPi) < 1e-6);

    const RunOut m = run_cli("flow --g0 0.5 --D 5 --magnetic --t0 0 --t1 -30 --steps 100");
    CHECK(m.code == 0);
    const auto mrec = nlohmann::json::parse(m.out);
    CHECK(std::fabs(value_of(mrec, "g_final") - 32.0 * kPi * kPi) / (32.0 * kPi * kPi) <
          1e-6);
    CHECK(mrec.at("trajectory").size() == 101);
}

TEST_CASE("epstein: direct and recurrence routes agree through the CLI") {
    const RunOut d = run_cli("epstein --nu 2 --sigma 1 --sigma 1 --method direct --rel-tol 1e-8");
    const RunOut q = run_cli("epstein --nu 2 --sigma 1 --sigma 1 --method recurrence");
    CHECK(d.code == 0);
    CHECK(q.code == 0);
    const double dv = value_of(nlohmann::json::parse(d.out), "E_p");
    const double qv = value_of(nlohmann::json::parse(q.out), "E_p");
    CHECK(std::fabs(dv - qv) / qv < 1e-8);

    const RunOut z = run_cli("epstein --nu 2 --a 1 --c2 1 --method bessel");
    CHECK(z.code == 0);
    CHECK(std::isfinite(value_of(nlohmann::json::parse(z.out), "Z_d")));

    const RunOut bad = run_cli("epstein --nu 2");
    CHECK(bad.code == 2);
}

TEST_CASE("identical invocations produce byte-identical output") {
    const std::string args = "bubble --D 3.3 --wire --L 1 --L 2 --p 0.37";
    const RunOut a = run_cli(args);
    const RunOut b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    // JSON round trip is stable
    const auto rec = nlohmann::json::parse(a.out);
    CHECK(nlohmann::json::parse(rec.dump()) == rec);
}

TEST_CASE("config file via GLRG_CONFIG, flags still win") {
    const std::string cfg = "/tmp/glrg_cli_test_cfg";
    {
        std::ofstream f(cfg);
        f << "# test config\nformat csv\nrel_tol = 1e-10\n";
    }
    const RunOut r = run_cli("fixed-point --D 3", "GLRG_CONFIG=" + cfg);
    CHECK(r.code == 0);
    CHECK(r.out.rfind("command,", 0) == 0);  // csv from config
    const RunOut j = run_cli("fixed-point --D 3 --format json", "GLRG_CONFIG=" + cfg);
    CHECK(j.code == 0);
    CHECK(j.out.rfind("{", 0) == 0);  // flag overrides config
}

TEST_CASE("--out writes the record to a file") {
    const std::string path = "/tmp/glrg_cli_test_out.json";
    std::remove(path.c_str());
    const RunOut r = run_cli("fixed-point --D 3 --out " + path);
    CHECK(r.code == 0);
    std::ifstream f(path);
    CHECK(f.good());
    const auto rec = nlohmann::json::parse(f);
    CHECK(std::fabs(value_of(rec, "g_star") - 4.0 / kPi) < 1e-12);
}

TEST_CASE("validate --fast exits 0 quickly") {
    const RunOut r = run_cli("validate --fast");
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS]") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("usage error exits 2") {
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("bubble --film --L 1 --decompose").code == 2);  // missing --D
}

TEST_CASE("validate: induced failure exits 1 and names the failing criterion") {
    const RunOut r = run_cli("validate --fast --threshold-scale 1e-30");
    CHECK(r.code == 1);
    CHECK(r.out.find("[FAIL]") != std::string::npos);
    CHECK(r.out.find("criterion") != std::string::npos);
}
