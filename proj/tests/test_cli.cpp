#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gdlab/cli.hpp"

#include <clocale>
#include <cmath>
#include <sstream>

using namespace gdlab;
using namespace gdlab::cli;

TEST_CASE("ranges") {
    const auto r = parse_range("0.5:12:24");
    CHECK(r.lo == 0.5);
    CHECK(r.hi == 12.0);
    CHECK(r.count == 24);
    CHECK(r.at(0) == 0.5);
    CHECK(r.at(23) == 12.0);
    CHECK_THROWS_AS((void)parse_range("1:2:1"), ConfigError);
    CHECK_THROWS_AS((void)parse_range("2:1:5"), ConfigError);
    CHECK_THROWS_AS((void)parse_range("1:2"), ConfigError);
    CHECK_THROWS_AS((void)parse_range("a:2:5"), ConfigError);
}

TEST_CASE("config text") {
    const auto kv = read_config_text("# comment\nmode-index = 10\n\nsigma-range = 1:4:4  # trailing\n");
    CHECK(kv.size() == 2);
    CHECK(kv.at("mode-index") == "10");
    CHECK(kv.at("sigma-range") == "1:4:4");
    CHECK_THROWS_AS((void)read_config_text("no equals sign"), ConfigError);
    CHECK_THROWS_AS((void)read_config_text("key ="), ConfigError);

    RunConfig cfg;
    for (const auto& [k, v] : kv) apply_setting(cfg, k, v);
    CHECK(cfg.mode_index == 10);
    CHECK(cfg.sigma.count == 4);
    CHECK_THROWS_AS(apply_setting(cfg, "bogus", "1"), ConfigError);
    CHECK_THROWS_AS(apply_setting(cfg, "tol", "1e-10x"), ConfigError);
    CHECK_THROWS_AS((void)load_config_file("/nonexistent/gdlab.cfg"), ConfigError);
}

TEST_CASE("validation rejects grids outside the modeled domain") {
    RunConfig cfg;
    CHECK_NOTHROW(validate(cfg));
    auto bad = cfg;
    bad.sigma = {0.5, 20.0, 5};  // 0.5 m^{2/5} = 13.8 at m = 4000
    CHECK_THROWS_AS(validate(bad), ConfigError);
    bad = cfg;
    bad.sigma = {0.0, 2.0, 5};
    CHECK_THROWS_AS(validate(bad), ConfigError);
    bad = cfg;
    bad.nu = {0.0, 3000.0, 5};
    CHECK_THROWS_AS(validate(bad), ConfigError);
    bad = cfg;
    bad.tol = 1e-2;
    CHECK_THROWS_AS(validate(bad), ConfigError);
    bad = cfg;
    bad.mode_index = 0;
    CHECK_THROWS_AS(validate(bad), ConfigError);
}

TEST_CASE("numbers are locale independent and round-trip") {
    const char* prev = std::setlocale(LC_NUMERIC, "de_DE.UTF-8");
    CHECK(num(0.5) == "0.5");
    CHECK(num(-1.25e-7) == "-1.25e-07");
    if (prev) std::setlocale(LC_NUMERIC, "C");
    CHECK(std::stod(num(0.1 + 0.2)) == 0.1 + 0.2);
    CHECK(num(std::nan("")) == "nan");
}

TEST_CASE("fieldmap layout and determinism") {
    RunConfig cfg;
    cfg.mode_index = 5;
    cfg.sigma = {2.0, 6.0, 3};
    cfg.nu = {0.0, 10.0, 2};
    const auto fm = compute_fieldmap(cfg);
    REQUIRE(fm.rows.size() == 6);
    // nu-major: sigma varies fastest
    CHECK(fm.rows[0].sigma == 2.0);
    CHECK(fm.rows[1].sigma == 4.0);
    CHECK(fm.rows[3].nu == 10.0);
    std::ostringstream a, b;
    write_fieldmap_csv(fm, a);
    write_fieldmap_csv(compute_fieldmap(cfg), b);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("sigma,nu,zone,re_exact,im_exact,re_asym,im_asym,rel_err,dominant,corr_est\n", 0) == 0);
    std::ostringstream js;
    write_fieldmap_summary(fm, cfg, js);
    CHECK(js.str().find("\"zones\"") != std::string::npos);
    CHECK(fm.nonconverged == 0);
}

TEST_CASE("regions and dcoef tables") {
    RunConfig cfg;
    cfg.sigma = {1.0, 10.0, 4};
    cfg.nu = {0.0, 40.0, 5};
    const auto rows = compute_regions(cfg);
    CHECK(rows.size() == 20);
    std::ostringstream os;
    write_regions_csv(rows, os);
    CHECK(os.str().rfind("sigma,nu,zone,strict,", 0) == 0);

    cfg.phi = {0.0, 3.0, 4};  // 0, 1, 2, 3: hits phi = gamma
    CHECK_THROWS_AS((void)compute_dcoef(cfg), ConfigError);
    cfg.phi = {0.1, 3.1, 4};
    const auto dc = compute_dcoef(cfg);
    CHECK(dc.size() == 4);
    std::ostringstream ds;
    write_dcoef_csv(dc, ds);
    CHECK(ds.str().rfind("phi,regime,re_Ar,im_Ar,re_As,im_As,att1,phi4\n", 0) == 0);
    CHECK(gnuplot_script("fieldmap", "x.csv").find("'x.csv'") != std::string::npos);
}
