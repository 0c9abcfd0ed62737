#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tentops/atomic.hpp"
#include "tentops/corpus.hpp"
#include "tentops/criteria.hpp"
#include "tentops/operators.hpp"

namespace tentops {

/// Full experiment configuration; every report embeds it for reproducibility.
struct Config {
    double aperture = 1.0;
    double t = 3.0;  // kernel parameter, defaults to alpha+3 at alpha = 0
    int degree = 256;
    int eta_samples = 256;
    double lattice_r = 0.5;
    double lattice_kappa = 0.2;
    double lattice_cap = 0.99;
    QuadratureSpec kernel_spec{.radial_levels = 10, .angular_base = 32,
                               .max_angular = 1024, .gauss_points = 5};
    QuadratureSpec region_spec{.radial_levels = 10, .angular_base = 16,
                               .max_angular = 256, .gauss_points = 5};
    int sup_levels = 8;
    int sup_angles = 8;
    int profile_levels = 10;
    std::string out_dir = "reports";

    /// Doubled quadrature resolution for refinement-stability studies.
    Config refined() const;

    std::string to_json() const;
    void apply_json(const std::string& text);  // partial override
    static Config from_json_file(const std::string& path);
};

struct CaseResult {
    std::string name;
    bool pass = true;
    std::vector<std::pair<std::string, double>> metrics;
    std::vector<std::pair<std::string, DecayProfile>> profiles;
    std::string note;
};

struct Report {
    std::string id;
    std::string config_json;
    std::vector<CaseResult> cases;

    bool pass() const;
    std::string to_json() const;
    std::string to_csv() const;
};

std::vector<std::string> known_verify_ids();

/// Runs the verification suite for one theorem/lemma id ("th1", "th2", ..., "sn1",
/// ..., "lp", "z", "fr", "trunc", "disc", "atom", "mult"). Throws on unknown ids.
Report run_verify(const std::string& theorem_id, const Config& config);

/// classify + JSON persistence glue.
Verdict run_classify(const AnalyticFn& g, const SpaceParams& params, const Config& config,
                     std::string& json_out);

/// Writes <out_dir>/<id>.json and <out_dir>/<id>.csv; creates out_dir if needed.
void write_report(const Report& report, const std::string& out_dir);

/// One CSV per embedded profile (radius,value rows) plus a manifest; returns the
/// written filenames. Byte-identical on re-emission.
std::vector<std::string> emit_plotdata(const Report& report, const std::string& out_dir);

/// The lattice the configuration describes.
Lattice config_lattice(const Config& config);

}  // namespace tentops
