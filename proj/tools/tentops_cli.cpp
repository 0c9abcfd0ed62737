// Command-line front end: classify symbols, run verification suites, evaluate
// norms, dump lattices, and produce full reports.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tentops/harness.hpp"

namespace {

using namespace tentops;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GlobalOpts {
    std::string config_path;
    double t = -1.0;
    double aperture = -1.0;
    int radial_levels = -1;
    int degree = -1;
    double cap = -1.0;
    std::string out_dir;

    Config make_config() const {
        Config c;
        if (!config_path.empty()) c = Config::from_json_file(config_path);
        if (t > 0) c.t = t;
        if (aperture > 0) c.aperture = aperture;
        if (radial_levels > 0) {
            c.kernel_spec.radial_levels = radial_levels;
            c.region_spec.radial_levels = radial_levels;
        }
        if (degree > 0) c.degree = degree;
        if (cap > 0) c.lattice_cap = cap;
        if (!out_dir.empty()) c.out_dir = out_dir;
        return c;
    }
};

int run_verify_cmd(const std::string& id, const Config& config, bool quiet) {
    std::vector<std::string> ids =
        id == "all" ? known_verify_ids() : std::vector<std::string>{id};
    bool all_pass = true;
    for (const auto& one : ids) {
        const Report rep = run_verify(one, config);
        write_report(rep, config.out_dir);
        emit_plotdata(rep, config.out_dir);
        if (!quiet)
            for (const auto& c : rep.cases)
                std::printf("%s/%s: %s\n", one.c_str(), c.name.c_str(),
                            c.pass ? "pass" : "FAIL");
        std::printf("%s: %s\n", one.c_str(), rep.pass() ? "PASS" : "FAIL");
        all_pass = all_pass && rep.pass();
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical toolkit for analytic tent spaces and the generalized "
                 "integration operators T_g and S_g"};
    app.require_subcommand(1);

    GlobalOpts gopts;
    app.add_option("--config", gopts.config_path, "JSON configuration file");
    app.add_option("--t", gopts.t, "kernel parameter t");
    app.add_option("--aperture", gopts.aperture, "approach-region aperture (> 1/2)");
    app.add_option("--radial-levels", gopts.radial_levels, "quadrature radial levels");
    app.add_option("--degree", gopts.degree, "series truncation degree");
    app.add_option("--cap", gopts.cap, "lattice radial cap");
    app.add_option("--out-dir", gopts.out_dir, "report output directory");

    // classify
    auto* classify_cmd =
        app.add_subcommand("classify", "classify a symbol g for T_g^{n,k} or S_g^{n,k}");
    std::string g_path;
    SpaceParams params;
    std::string op_kind = "T";
    classify_cmd->add_option("--g", g_path, "symbol g as a JSON function file")
        ->required();
    classify_cmd->add_option("-p,--p", params.p, "source exponent p");
    classify_cmd->add_option("-q,--q", params.q, "target exponent q");
    classify_cmd->add_option("--alpha", params.alpha, "source weight alpha");
    classify_cmd->add_option("--beta", params.beta, "target weight beta");
    classify_cmd->add_option("-n,--n", params.n, "integration order n");
    classify_cmd->add_option("-k,--k", params.k, "derivative split k");
    classify_cmd->add_option("--op", op_kind, "operator kind, T or S")
        ->check(CLI::IsMember({"T", "S"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run one verification suite");
    std::string theorem_id;
    bool quiet = false;
    verify_cmd->add_option("theorem_id", theorem_id, "suite id, or 'all'")->required();
    verify_cmd->add_flag("--quiet", quiet, "only print the suite verdict");

    // norm
    auto* norm_cmd = app.add_subcommand("norm", "evaluate a norm of a function");
    std::string f_path, norm_kind = "lp";
    double np = 2.0, nq = 2.0, nalpha = 0.0;
    int nn = 1;
    norm_cmd->add_option("--f", f_path, "function as a JSON file")->required();
    norm_cmd->add_option("--kind", norm_kind, "lp | tpq | tpinf | tinfq")
        ->check(CLI::IsMember({"lp", "tpq", "tpinf", "tinfq"}));
    norm_cmd->add_option("-p,--p", np, "exponent p");
    norm_cmd->add_option("-q,--q", nq, "exponent q");
    norm_cmd->add_option("--alpha", nalpha, "weight alpha");
    norm_cmd->add_option("-n,--n", nn, "derivative order n");

    // lattice
    auto* lattice_cmd = app.add_subcommand("lattice", "emit the configured lattice");
    std::string lattice_out;
    lattice_cmd->add_option("--out", lattice_out, "write JSON here instead of stdout");

    // report
    auto* report_cmd =
        app.add_subcommand("report", "run every suite and write reports and plot data");

    CLI11_PARSE(app, argc, argv);

    try {
        const Config config = gopts.make_config();

        if (*classify_cmd) {
            params.op_kind = op_kind == "S" ? OpKind::S : OpKind::T;
            const AnalyticFn g = analytic_fn_from_json(read_file(g_path));
            std::string json_out;
            const Verdict v = run_classify(g, params, config, json_out);
            std::cout << json_out << "\n";
            return v.boundedness != Classification::inconclusive ? 0 : 2;
        }
        if (*verify_cmd) return run_verify_cmd(theorem_id, config, quiet);
        if (*norm_cmd) {
            const AnalyticFn f = analytic_fn_from_json(read_file(f_path));
            const auto grid = default_sup_grid(config.sup_levels, config.sup_angles);
            double value = 0.0;
            if (norm_kind == "lp")
                value = lp_norm(f, np, nalpha, nn, config.t, grid, config.kernel_spec);
            else if (norm_kind == "tpq")
                value = tpq_norm(f, np, nq, nalpha, config.aperture, config.eta_samples,
                                 config.region_spec);
            else if (norm_kind == "tpinf")
                value = tpinf_norm(f, np, nalpha, grid, config.region_spec);
            else
                value = tinfq_norm(f, nq, config.aperture, config.eta_samples,
                                   config.kernel_spec);
            std::printf("%.12g\n", value);
            return 0;
        }
        if (*lattice_cmd) {
            const std::string json_text = lattice_to_json(config_lattice(config));
            if (lattice_out.empty()) {
                std::cout << json_text << "\n";
            } else {
                std::ofstream out(lattice_out, std::ios::binary);
                out << json_text << "\n";
            }
            return 0;
        }
        if (*report_cmd) return run_verify_cmd("all", config, true);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
