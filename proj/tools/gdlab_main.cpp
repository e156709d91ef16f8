#include "gdlab/acceptance.hpp"
#include "gdlab/cli.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace gdlab;
using namespace gdlab::cli;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
    if (!out) throw IoError("write failed for '" + path + "'");
}

std::string stem_of(const std::string& path) {
    const auto dot = path.rfind('.');
    const auto slash = path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
    return path.substr(0, dot);
}

// CSV to --out (or stdout), plus a gnuplot script next to it.
void emit_table(const RunConfig& cfg, const std::string& kind, const std::string& csv) {
    if (cfg.out.empty()) {
        std::cout << csv;
        return;
    }
    write_file(cfg.out, csv);
    write_file(stem_of(cfg.out) + ".gp", gnuplot_script(kind, cfg.out));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gdlab: whispering gallery mode diffraction at a curvature jump"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::map<std::string, std::string> flags;
    app.add_option("--config", config_path, "key = value settings file; flags override it");
    const std::pair<const char*, const char*> settings[] = {
        {"out", "output file (CSV; .json and .gp beside it); stdout when absent"},
        {"mode-index", "N of the incident mode, t = t_N (default 20)"},
        {"fock-m", "Fock parameter m = (ka/2)^{1/3} (default 4000)"},
        {"sigma-range", "LO:HI:COUNT of sigma (default 0.5:12:24)"},
        {"nu-range", "LO:HI:COUNT of nu (default 0:45:46)"},
        {"phi-range", "LO:HI:COUNT of phi / gamma for dcoef (default 0:3:61)"},
        {"dcoef-sigma", "observation distance in sigma units for the dcoef flags (default 6)"},
        {"tol", "absolute quadrature tolerance of the exact solution (default 1e-10)"},
        {"criteria-scale", "selftest tolerance multiplier (default 1)"},
    };
    for (const auto& [key, help] : settings) app.add_option(std::string("--") + key, flags[key], help);
    auto* fieldmap = app.add_subcommand("fieldmap", "exact vs asymptotic attenuation factor on a (sigma, nu) grid");
    auto* regions = app.add_subcommand("regions", "zone tag and region flags on a (sigma, nu) grid");
    auto* dcoef = app.add_subcommand("dcoef", "diffraction coefficients on a phi grid (units of gamma)");
    auto* selftest = app.add_subcommand("selftest", "run acceptance criteria 1-9");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : config_error;
    }

    RunConfig cfg;
    try {
        if (!config_path.empty()) cfg = load_config_file(config_path);
        for (const auto& [key, value] : flags)
            if (app.get_option("--" + key)->count() > 0) apply_setting(cfg, key, value);
        validate(cfg);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "gdlab: %s\n", e.what());
        return config_error;
    }

    try {
        if (*fieldmap) {
            const auto fm = compute_fieldmap(cfg);
            std::ostringstream csv, summary;
            write_fieldmap_csv(fm, csv);
            write_fieldmap_summary(fm, cfg, summary);
            emit_table(cfg, "fieldmap", csv.str());
            if (cfg.out.empty()) std::cerr << summary.str();
            else write_file(stem_of(cfg.out) + ".json", summary.str());
            if (fm.nonconverged > 0) {
                std::fprintf(stderr, "gdlab: %zu oracle evaluations did not converge\n", fm.nonconverged);
                return numeric_failure;
            }
        } else if (*regions) {
            std::ostringstream csv;
            write_regions_csv(compute_regions(cfg), csv);
            emit_table(cfg, "regions", csv.str());
        } else if (*dcoef) {
            std::ostringstream csv;
            write_dcoef_csv(compute_dcoef(cfg), csv);
            emit_table(cfg, "dcoef", csv.str());
        } else if (*selftest) {
            AcceptanceOptions opt;
            opt.m = cfg.fock_m;
            opt.tolerance_scale = cfg.criteria_scale;
            opt.quad.abs_tol = cfg.tol;
            bool all = true;
            std::ostringstream log;
            run_acceptance(opt, [&](const CriterionResult& r) {
                const auto line = format_result(r);
                std::printf("%s\n", line.c_str());
                std::fflush(stdout);
                log << line << '\n';
                all = all && r.passed;
            });
            if (!cfg.out.empty()) write_file(cfg.out, log.str());
            return all ? ok : selftest_failure;
        }
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "gdlab: %s\n", e.what());
        return config_error;
    } catch (const IoError& e) {
        std::fprintf(stderr, "gdlab: %s\n", e.what());
        return config_error;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "gdlab: numeric failure: %s\n", e.what());
        return numeric_failure;
    }
    return ok;
}
