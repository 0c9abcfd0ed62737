#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "tentops/harness.hpp"

using namespace tentops;

namespace {

Config fast_config() {
    Config c;
    c.kernel_spec = QuadratureSpec{.radial_levels = 8, .angular_base = 16,
                                   .max_angular = 256, .gauss_points = 4};
    c.region_spec = c.kernel_spec;
    c.profile_levels = 8;
    c.sup_levels = 6;
    return c;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("config JSON round trip") {
    Config c;
    c.t = 4.5;
    c.kernel_spec.radial_levels = 7;
    c.out_dir = "elsewhere";
    Config d;
    d.apply_json(c.to_json());
    CHECK(d.to_json() == c.to_json());
    // partial override keeps unmentioned fields
    Config e;
    e.apply_json("{\"t\": 9.0}");
    CHECK(e.t == 9.0);
    CHECK(e.degree == Config{}.degree);
    CHECK_THROWS(Config::from_json_file("/nonexistent/config.json"));
}

TEST_CASE("refined config doubles the quadrature knobs only") {
    const Config c;
    const Config f = c.refined();
    CHECK(f.kernel_spec.radial_levels > c.kernel_spec.radial_levels);
    CHECK(f.t == c.t);
    CHECK(f.degree == c.degree);
}

TEST_CASE("config lattice matches the configured parameters") {
    Config c;
    c.lattice_cap = 0.9;
    const Lattice lat = config_lattice(c);
    CHECK(lat.r == c.lattice_r);
    CHECK(lat.kappa == c.lattice_kappa);
    CHECK(lat.radial_cap == 0.9);
}

TEST_CASE("unknown suite id is rejected") {
    CHECK_THROWS_AS((void)run_verify("th99", fast_config()), std::invalid_argument);
}

TEST_CASE("known ids are listed") {
    const auto ids = known_verify_ids();
    CHECK(std::find(ids.begin(), ids.end(), "th1") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "mult") != ids.end());
    CHECK(ids.size() == 19);
}

TEST_CASE("fr suite runs and reports") {
    const Report rep = run_verify("fr", fast_config());
    CHECK(rep.pass());
    CHECK(rep.id == "fr");
    const std::string js = rep.to_json();
    CHECK(js.find("\"cases\"") != std::string::npos);
    const std::string csv = rep.to_csv();
    CHECK(csv.rfind("case,metric,value\n", 0) == 0);
}

TEST_CASE("report files and plot data are written and re-emission is byte identical") {
    const auto dir = std::filesystem::temp_directory_path() / "tentops_report_test";
    std::filesystem::remove_all(dir);
    const Report rep = run_verify("trunc", fast_config());
    write_report(rep, dir.string());
    const auto files = emit_plotdata(rep, dir.string());
    REQUIRE(!files.empty());
    CHECK(std::filesystem::exists(dir / "trunc.json"));
    CHECK(std::filesystem::exists(dir / "trunc.csv"));
    const std::string first = slurp(dir / files[0]);
    write_report(rep, dir.string());
    emit_plotdata(rep, dir.string());
    CHECK(slurp(dir / files[0]) == first);
    std::filesystem::remove_all(dir);
}

TEST_CASE("run_classify produces a verdict with JSON") {
    std::string js;
    SpaceParams params;
    const Verdict v = run_classify(AnalyticFn::monomial(1), params, fast_config(), js);
    CHECK(v.boundedness == Classification::bounded);
    CHECK(js.find("classification") != std::string::npos);
}

TEST_CASE("verify runs are deterministic") {
    const Config c = fast_config();
    const Report a = run_verify("z", c);
    const Report b = run_verify("z", c);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.to_csv() == b.to_csv());
}
