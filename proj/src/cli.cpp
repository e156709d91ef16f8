#include "gdlab/cli.hpp"

#include "gdlab/exact_field.hpp"
#include "gdlab/parallel.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace gdlab::cli {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& key, const std::string& v) {
    double x = 0.0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, x);
    if (ec != std::errc{} || ptr != end || !std::isfinite(x))
        throw ConfigError(key + ": not a number: '" + v + "'");
    return x;
}

int parse_int(const std::string& key, const std::string& v) {
    int x = 0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, x);
    if (ec != std::errc{} || ptr != end) throw ConfigError(key + ": not an integer: '" + v + "'");
    return x;
}

ProblemParams params_of(const RunConfig& cfg) { return make_params_m(cfg.fock_m, 1.0, cfg.mode_index); }

QuadConfig quad_of(const RunConfig& cfg) {
    QuadConfig q;
    q.abs_tol = cfg.tol;
    return q;
}

std::string cnum(cplx z, bool imag) { return num(imag ? z.imag() : z.real()); }

}  // namespace

std::string num(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ec == std::errc{} ? ptr : buf);
}

Range parse_range(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(trim(item));
    if (parts.size() != 3) throw ConfigError("range must be LO:HI:COUNT, got '" + text + "'");
    Range r{parse_double("range", parts[0]), parse_double("range", parts[1]), parse_int("range", parts[2])};
    if (r.count < 2) throw ConfigError("range '" + text + "': COUNT must be >= 2");
    if (!(r.hi > r.lo)) throw ConfigError("range '" + text + "': HI must exceed LO");
    return r;
}

std::map<std::string, std::string> read_config_text(const std::string& text) {
    std::map<std::string, std::string> out;
    std::stringstream ss(text);
    int line_no = 0;
    for (std::string line; std::getline(ss, line);) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        const auto key = trim(std::string_view(body).substr(0, eq));
        const auto value = trim(std::string_view(body).substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key or value");
        out[key] = value;
    }
    return out;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "mode-index") cfg.mode_index = parse_int(key, value);
    else if (key == "fock-m") cfg.fock_m = parse_double(key, value);
    else if (key == "sigma-range") cfg.sigma = parse_range(value);
    else if (key == "nu-range") cfg.nu = parse_range(value);
    else if (key == "phi-range") cfg.phi = parse_range(value);
    else if (key == "dcoef-sigma") cfg.dcoef_sigma = parse_double(key, value);
    else if (key == "tol") cfg.tol = parse_double(key, value);
    else if (key == "criteria-scale") cfg.criteria_scale = parse_double(key, value);
    else if (key == "out") cfg.out = value;
    else throw ConfigError("unknown setting '" + key + "'");
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    RunConfig cfg;
    for (const auto& [k, v] : read_config_text(ss.str())) apply_setting(cfg, k, v);
    return cfg;
}

void validate(const RunConfig& cfg) {
    if (cfg.mode_index < 1) throw ConfigError("mode-index must be >= 1");
    if (!(cfg.fock_m >= 10.0)) throw ConfigError("fock-m must be >= 10");
    if (!(cfg.tol >= 1e-12 && cfg.tol <= 1e-4)) throw ConfigError("tol must lie in [1e-12, 1e-4]");
    if (!(cfg.criteria_scale > 0.0)) throw ConfigError("criteria-scale must be positive");
    for (const auto* r : {&cfg.sigma, &cfg.nu, &cfg.phi})
        if (r->count < 2 || !(r->hi > r->lo)) throw ConfigError("grid ranges need COUNT >= 2 and HI > LO");
    const double sig_max = 0.5 * std::pow(cfg.fock_m, 0.4);
    const double nu_max = 0.5 * cfg.fock_m;
    if (!(cfg.sigma.lo > 0.0) || !(cfg.sigma.hi < sig_max))
        throw ConfigError("sigma-range must lie in (0, " + num(sig_max) + ") for fock-m " + num(cfg.fock_m));
    if (!(cfg.nu.lo >= 0.0) || !(cfg.nu.hi < nu_max))
        throw ConfigError("nu-range must lie in [0, " + num(nu_max) + ") for fock-m " + num(cfg.fock_m));
    if (!(cfg.phi.lo >= 0.0)) throw ConfigError("phi-range must be non-negative");
    if (!(cfg.dcoef_sigma > 0.0)) throw ConfigError("dcoef-sigma must be positive");
    const double t = vprime_zero(cfg.mode_index);
    if (t >= nu_max) throw ConfigError("mode-index too large for fock-m");
}

FieldMap compute_fieldmap(const RunConfig& cfg) {
    const auto p = params_of(cfg);
    const auto q = quad_of(cfg);
    const std::size_t ns = cfg.sigma.count, nn = cfg.nu.count;
    FieldMap fm;
    fm.rows.resize(ns * nn);
    parallel_for(fm.rows.size(), [&](std::size_t k) {
        auto& row = fm.rows[k];
        row.nu = cfg.nu.at(static_cast<int>(k / ns));
        row.sigma = cfg.sigma.at(static_cast<int>(k % ns));
        const auto pt = field_point_stretched(p, row.sigma, row.nu);
        const auto ex = exact_attenuation(row.sigma, row.nu, p.t, q);
        row.exact = ex.value;
        row.converged = ex.converged;
        const auto tag = classify_region(pt, p);
        row.zone = tag.zone;
        if (tag.zone != Zone::NearLB_Unmodeled && tag.zone != Zone::OutOfDomain) {
            const auto as = assemble_zone(tag.zone, row.sigma, row.nu, p.t);
            row.asym = as.value;
            row.corr_est = as.correction_estimate;
            row.dominant = as.dominant ? std::string(to_string(*as.dominant)) : "none";
        } else {
            row.dominant = "unmodeled";
            row.corr_est = std::numeric_limits<double>::quiet_NaN();
        }
    });
    double scale = 0.0;
    for (const auto& r : fm.rows) scale = std::max(scale, std::abs(r.exact));
    const double floor = 1e-3 * scale;
    std::map<std::string, std::vector<double>> per_zone;
    std::map<std::string, std::size_t> counts;
    for (auto& r : fm.rows) {
        ++counts[std::string(to_string(r.zone))];
        if (!r.converged) ++fm.nonconverged;
        if (r.asym) {
            r.rel_err = std::abs(*r.asym - r.exact) / std::max(std::abs(r.exact), floor);
            per_zone[std::string(to_string(r.zone))].push_back(r.rel_err);
        } else {
            r.rel_err = std::numeric_limits<double>::quiet_NaN();
            per_zone[std::string(to_string(r.zone))];
        }
    }
    for (auto& [zone, errs] : per_zone) {
        ZoneSummary s;
        s.count = counts[zone];
        s.compared = errs.size();
        if (!errs.empty()) {
            std::sort(errs.begin(), errs.end());
            s.max_rel_err = errs.back();
            const auto n = errs.size();
            s.median_rel_err = n % 2 ? errs[n / 2] : 0.5 * (errs[n / 2 - 1] + errs[n / 2]);
        }
        fm.zones[zone] = s;
    }
    return fm;
}

void write_fieldmap_csv(const FieldMap& fm, std::ostream& os) {
    os << "sigma,nu,zone,re_exact,im_exact,re_asym,im_asym,rel_err,dominant,corr_est\n";
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const auto& r : fm.rows) {
        const cplx a = r.asym.value_or(cplx(nan, nan));
        os << num(r.sigma) << ',' << num(r.nu) << ',' << to_string(r.zone) << ',' << cnum(r.exact, false) << ','
           << cnum(r.exact, true) << ',' << cnum(a, false) << ',' << cnum(a, true) << ',' << num(r.rel_err) << ','
           << r.dominant << ',' << num(r.corr_est) << '\n';
    }
}

void write_fieldmap_summary(const FieldMap& fm, const RunConfig& cfg, std::ostream& os) {
    nlohmann::json j;
    j["command"] = "fieldmap";
    j["mode_index"] = cfg.mode_index;
    j["t"] = vprime_zero(cfg.mode_index);
    j["fock_m"] = cfg.fock_m;
    j["tol"] = cfg.tol;
    j["sigma_range"] = {cfg.sigma.lo, cfg.sigma.hi, cfg.sigma.count};
    j["nu_range"] = {cfg.nu.lo, cfg.nu.hi, cfg.nu.count};
    j["points"] = fm.rows.size();
    j["nonconverged"] = fm.nonconverged;
    j["zones"] = nlohmann::json::object();
    for (const auto& [zone, s] : fm.zones) {
        auto& z = j["zones"][zone];
        z["count"] = s.count;
        z["compared"] = s.compared;
        if (s.compared > 0) {
            z["max_rel_err"] = s.max_rel_err;
            z["median_rel_err"] = s.median_rel_err;
        } else {
            z["max_rel_err"] = nullptr;
            z["median_rel_err"] = nullptr;
        }
    }
    os << j.dump(2) << '\n';
}

std::vector<RegionRow> compute_regions(const RunConfig& cfg) {
    const auto p = params_of(cfg);
    const std::size_t ns = cfg.sigma.count, nn = cfg.nu.count;
    std::vector<RegionRow> rows(ns * nn);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        auto& row = rows[k];
        row.nu = cfg.nu.at(static_cast<int>(k / ns));
        row.sigma = cfg.sigma.at(static_cast<int>(k % ns));
        row.tag = classify_region(field_point_stretched(p, row.sigma, row.nu), p);
    }
    return rows;
}

void write_regions_csv(const std::vector<RegionRow>& rows, std::ostream& os) {
    os << "sigma,nu,zone,strict,att1,att2,att3g,att4,e_lt_ft,e_eq_ft,e_gt_ft,obl,sgg1,phi4,near_lb\n";
    for (const auto& r : rows) {
        const auto& f = r.tag.flags;
        os << num(r.sigma) << ',' << num(r.nu) << ',' << to_string(r.tag.zone);
        for (bool b : {r.tag.strict, f.att1, f.att2, f.att3g, f.att4, f.e_lt_ft, f.e_eq_ft, f.e_gt_ft, f.obl, f.sgg1,
                       f.phi4, f.near_lb})
            os << ',' << (b ? 1 : 0);
        os << '\n';
    }
}

std::vector<DcoefRow> compute_dcoef(const RunConfig& cfg) {
    const auto p = params_of(cfg);
    // observation distance of the flags: x = sigma a / m along the axis
    const double r = cfg.dcoef_sigma * p.a / p.m;
    std::vector<DcoefRow> rows;
    for (int i = 0; i < cfg.phi.count; ++i) {
        const double ratio = cfg.phi.at(i);
        if (std::abs(ratio - 1.0) < 1e-9)
            throw ConfigError("phi-range contains phi = gamma, where the coefficient is singular");
        const double phi = ratio * p.gamma;
        const auto dc = diffraction_coefficient(phi, p, r);
        if (!dc) throw ConfigError("phi-range node " + num(ratio) + " has no diffraction coefficient");
        rows.push_back({phi, *dc});
    }
    return rows;
}

void write_dcoef_csv(const std::vector<DcoefRow>& rows, std::ostream& os) {
    os << "phi,regime,re_Ar,im_Ar,re_As,im_As,att1,phi4\n";
    auto flag = [](const std::optional<bool>& b) { return b ? (*b ? "1" : "0") : ""; };
    for (const auto& r : rows) {
        os << num(r.phi) << ',' << to_string(r.dc.regime) << ',' << cnum(r.dc.regular, false) << ','
           << cnum(r.dc.regular, true) << ',' << cnum(r.dc.singular, false) << ',' << cnum(r.dc.singular, true) << ','
           << flag(r.dc.att1) << ',' << flag(r.dc.phi4) << '\n';
    }
}

std::string gnuplot_script(const std::string& kind, const std::string& csv) {
    std::ostringstream g;
    g << "set datafile separator ','\n";
    if (kind == "fieldmap") {
        g << "set xlabel 'sigma'\nset ylabel 'nu'\nset cblabel 'log10 rel_err'\nset view map\n"
          << "splot '" << csv << "' every ::1 using 1:2:(log10($8 > 0 ? $8 : 1e-16)) "
          << "with points palette pointtype 5 pointsize 1 notitle\n";
    } else if (kind == "regions") {
        g << "set xlabel 'sigma'\nset ylabel 'nu'\n"
          << "zone(s) = s eq 'RayZone' ? 0 : s eq 'CausticZone' ? 1 : s eq 'TransitionLeftOfQ' ? 2 :"
          << " s eq 'TransitionRightOfQ' ? 3 : s eq 'QZone' ? 4 : s eq 'PenetrationZone' ? 5 :"
          << " s eq 'NearLB_Unmodeled' ? 6 : 7\n"
          << "set cbrange [0:7]\nset view map\n"
          << "splot '" << csv << "' every ::1 using 1:2:(zone(strcol(3))) "
          << "with points palette pointtype 5 pointsize 1 notitle\n";
    } else {
        g << "set xlabel 'phi'\nset ylabel '|A|'\nset logscale y\n"
          << "plot '" << csv << "' every ::1 using 1:(sqrt($3**2 + $4**2)) with lines title '|A_r|', \\\n"
          << "     '' every ::1 using 1:(sqrt($5**2 + $6**2)) with lines title '|A_s|'\n";
    }
    return g.str();
}

}  // namespace gdlab::cli
