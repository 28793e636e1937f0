#pragma once

#include "flagbethe/rat.hpp"
#include "flagbethe/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fb {

struct CheckConfig {
    std::string check = "all";
    unsigned N = 0;  // 0 = default grid
    unsigned n = 0;  // 0 = default grid
    std::optional<Weight> lam;
    int jmax = 4;
    std::string k_mode = "symbolic";  // symbolic | values | zone
    std::vector<Rat> k_values;
    std::vector<Rat> zone_scales;  // zone mode sweep, defaults to 100,1000,10000
    std::string z_mode = "symbolic";  // symbolic | seed
    unsigned seed = 1;
    int degree_bound = 4;
};

struct CheckReport {
    std::string check;
    std::string anchor;
    std::string params;
    std::string status;    // pass | fail | skipped
    std::string evidence;  // exact | probabilistic-exact (Schwartz-Zippel) | -
    std::string witness;   // "-" unless failing/skipped
    double seconds = 0;
};

struct CheckInfo {
    std::string name;
    std::string anchor;
    std::string summary;
};

const std::vector<CheckInfo>& check_catalog();

// Runs one named check (or "all") over the configured grid.
// Throws std::invalid_argument for unknown names.
std::vector<CheckReport> run_checks(const CheckConfig& cfg);

// Deterministic rendering: records sorted by key, stable field order,
// the timing field last (and omitted when include_timing is false).
std::string render_reports(const std::vector<CheckReport>& reports,
                           bool include_timing = true);

}  // namespace fb
