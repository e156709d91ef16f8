#pragma once

#include "gdlab/asymptotics.hpp"
#include "gdlab/geometry.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdlab::cli {

enum ExitCode { ok = 0, config_error = 1, numeric_failure = 2, selftest_failure = 3 };

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// LO:HI:COUNT, COUNT >= 2, LO < HI.
struct Range {
    double lo = 0.0, hi = 0.0;
    int count = 0;
    [[nodiscard]] double at(int i) const { return lo + (hi - lo) * i / (count - 1); }
};
[[nodiscard]] Range parse_range(const std::string& text);

struct RunConfig {
    int mode_index = 20;
    double fock_m = 4000.0;
    Range sigma{0.5, 12.0, 24};
    Range nu{0.0, 45.0, 46};
    Range phi{0.0, 3.0, 61};      // dcoef grid in units of gamma
    double dcoef_sigma = 6.0;     // observation distance for the (att1), (phi4) flags
    double tol = 1e-10;
    double criteria_scale = 1.0;  // selftest tolerance multiplier
    std::string out;
};

// key = value lines, '#' starts a comment; keys are the long flag names
// without "--".  Unknown keys and malformed values throw ConfigError.
[[nodiscard]] std::map<std::string, std::string> read_config_text(const std::string& text);
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);
[[nodiscard]] RunConfig load_config_file(const std::string& path);

// Throws ConfigError unless the grid lies in the modeled domain
// (0 < sigma < 0.5 m^{2/5}, 0 <= nu < 0.5 m), counts >= 2 and the tolerance
// is accepted by the oracle.
void validate(const RunConfig& cfg);

// Shortest round-trip decimal form, independent of the C locale.
[[nodiscard]] std::string num(double x);

struct ComparisonRow {
    double sigma = 0.0, nu = 0.0;
    Zone zone = Zone::OutOfDomain;
    cplx exact{};
    std::optional<cplx> asym;  // absent in NearLB_Unmodeled
    double rel_err = 0.0;      // NaN when asym is absent
    std::string dominant;
    double corr_est = 0.0;
    bool converged = true;
};

struct ZoneSummary {
    std::size_t count = 0;     // grid points in the zone
    std::size_t compared = 0;  // of which carry an asymptotic value
    double max_rel_err = 0.0, median_rel_err = 0.0;
};

struct FieldMap {
    std::vector<ComparisonRow> rows;  // nu-major: nu outer, sigma inner
    std::map<std::string, ZoneSummary> zones;
    std::size_t nonconverged = 0;
};

[[nodiscard]] FieldMap compute_fieldmap(const RunConfig& cfg);
void write_fieldmap_csv(const FieldMap& fm, std::ostream& os);
void write_fieldmap_summary(const FieldMap& fm, const RunConfig& cfg, std::ostream& os);

struct RegionRow {
    double sigma = 0.0, nu = 0.0;
    RegionTag tag;
};
[[nodiscard]] std::vector<RegionRow> compute_regions(const RunConfig& cfg);
void write_regions_csv(const std::vector<RegionRow>& rows, std::ostream& os);

struct DcoefRow {
    double phi = 0.0;
    DiffractionCoefficient dc;
};
// Throws ConfigError when a grid node coincides with phi = gamma.
[[nodiscard]] std::vector<DcoefRow> compute_dcoef(const RunConfig& cfg);
void write_dcoef_csv(const std::vector<DcoefRow>& rows, std::ostream& os);

// gnuplot script plotting `csv` (fieldmap, regions or dcoef layout).
[[nodiscard]] std::string gnuplot_script(const std::string& kind, const std::string& csv);

}  // namespace gdlab::cli
