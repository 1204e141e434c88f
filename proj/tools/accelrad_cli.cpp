// accelrad command-line surface: configuration-driven scans, exponent
// fits and crossover reports on top of the header library. All physics
// is evaluated in natural units (hbar = c = 1); SI appears only here,
// at the boundary, via UnitSystem.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical
// convergence failure in at least one scan cell.

#include <clocale>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "accelrad/boundary.hpp"
#include "accelrad/constants.hpp"
#include "accelrad/dispersion.hpp"
#include "accelrad/errors.hpp"
#include "accelrad/kinematics.hpp"
#include "accelrad/polarizability.hpp"
#include "accelrad/power_fit.hpp"
#include "accelrad/resonance.hpp"
#include "accelrad/units.hpp"

namespace {

using nlohmann::json;
using namespace accelrad;

constexpr const char* kVersion = "0.1.0";

// ---------------------------------------------------------------- config

struct Grid {
    double min = 1.0;
    double max = 1.0;
    int points = 1;
    bool log_spacing = true;

    void validate(const std::string& name) const {
        if (points < 1)
            throw configuration_error(name + ": points must be >= 1");
        if (points >= 2 && !(min < max))
            throw configuration_error(name + ": need min < max for points >= 2");
        if (points >= 2 && log_spacing && min <= 0.0)
            throw configuration_error(name + ": log spacing needs min > 0");
    }

    std::vector<double> expand() const {
        std::vector<double> v;
        if (points == 1) {
            v.push_back(min);
            return v;
        }
        for (int i = 0; i < points; ++i) {
            const double f = double(i) / (points - 1);
            v.push_back(log_spacing ? min * std::pow(max / min, f)
                                    : min + (max - min) * f);
        }
        return v;
    }
};

struct AtomConfig {
    std::string model = "single_resonance"; // or "static"
    double omega0 = 1.0;
    double alpha0 = 1.0;
};

struct ScanConfig {
    std::string units = "natural";
    AtomConfig atom_A, atom_B;
    std::string parity = "symmetric";
    Vec3 mu_A{0.0, 0.0, 1.0};
    Vec3 mu_B{0.0, 0.0, 1.0};
    Grid r_grid;                 // separation R (dispersion) or z (resonance)
    Grid mirror_L_grid;          // mirror block
    Grid mirror_z_grid;
    Grid a_grid;
    Grid t_grid;
    double tolerance = 1e-10;    // dispersion quadrature relative tolerance
    DdcKernelParams ddc;
    std::string fit_target = "dispersion_rest";
    double fit_window_min = 0.0; // 0 = whole grid
    double fit_window_max = 0.0;
    std::string out_path;        // empty = stdout
    std::string format;          // empty = subcommand default
};

Grid grid_from_json(const json& j, const std::string& name) {
    Grid g;
    g.min = j.at("min").get<double>();
    g.max = j.value("max", g.min);
    g.points = j.value("points", 1);
    const std::string sp = j.value("spacing", "log");
    if (sp != "log" && sp != "linear")
        throw configuration_error(name + ": spacing must be log or linear");
    g.log_spacing = (sp == "log");
    g.validate(name);
    return g;
}

json grid_to_json(const Grid& g) {
    return json{{"min", g.min},
                {"max", g.max},
                {"points", g.points},
                {"spacing", g.log_spacing ? "log" : "linear"}};
}

AtomConfig atom_from_json(const json& j, const std::string& name) {
    AtomConfig a;
    a.model = j.value("model", "single_resonance");
    if (a.model != "single_resonance" && a.model != "static")
        throw configuration_error(name + ": model must be single_resonance or static");
    a.omega0 = j.at("omega0").get<double>();
    a.alpha0 = j.value("alpha0", 1.0);
    if (a.omega0 <= 0.0) throw configuration_error(name + ": omega0 must be > 0");
    if (a.alpha0 < 0.0) throw configuration_error(name + ": alpha0 must be >= 0");
    return a;
}

json atom_to_json(const AtomConfig& a) {
    return json{{"model", a.model}, {"omega0", a.omega0}, {"alpha0", a.alpha0}};
}

Vec3 vec3_from_json(const json& j, const std::string& name) {
    if (!j.is_array() || j.size() != 3)
        throw configuration_error(name + ": expected an array of 3 numbers");
    return Vec3{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

ScanConfig config_from_json(const json& j) {
    ScanConfig c;
    c.units = j.value("units", "natural");
    parse_unit_mode(c.units); // throws on nonsense
    if (j.contains("atoms")) {
        c.atom_A = atom_from_json(j["atoms"].at("A"), "atoms.A");
        c.atom_B = atom_from_json(j["atoms"].at("B"), "atoms.B");
    }
    if (j.contains("state")) {
        c.parity = j["state"].value("parity", "symmetric");
        if (c.parity != "symmetric" && c.parity != "antisymmetric")
            throw configuration_error("state.parity must be symmetric or antisymmetric");
    }
    if (j.contains("dipoles")) {
        c.mu_A = vec3_from_json(j["dipoles"].at("mu_A"), "dipoles.mu_A");
        c.mu_B = vec3_from_json(j["dipoles"].at("mu_B"), "dipoles.mu_B");
    }
    if (j.contains("geometry")) {
        const json& g = j["geometry"];
        if (g.contains("grid")) c.r_grid = grid_from_json(g["grid"], "geometry.grid");
        if (g.contains("mirror")) {
            c.mirror_L_grid = grid_from_json(g["mirror"].at("L"), "geometry.mirror.L");
            c.mirror_z_grid = grid_from_json(g["mirror"].at("z"), "geometry.mirror.z");
        }
    }
    if (j.contains("kinematics")) {
        const json& k = j["kinematics"];
        if (k.contains("a")) c.a_grid = grid_from_json(k["a"], "kinematics.a");
        if (k.contains("t")) c.t_grid = grid_from_json(k["t"], "kinematics.t");
    }
    if (j.contains("numerics")) {
        const json& n = j["numerics"];
        c.tolerance = n.value("tolerance", 1e-10);
        if (c.tolerance <= 0.0)
            throw configuration_error("numerics.tolerance must be > 0");
        if (n.contains("ddc")) {
            const json& d = n["ddc"];
            c.ddc.epsilon = d.value("epsilon", 0.0);
            c.ddc.window = d.value("window", 0.0);
            c.ddc.taper_fraction = d.value("taper_fraction", 0.5);
            c.ddc.quad_rel_tol = d.value("quad_rel_tol", 1e-7);
            if (d.contains("extrapolation_epsilons"))
                c.ddc.extrapolation_epsilons =
                    d["extrapolation_epsilons"].get<std::vector<double>>();
        }
    }
    if (j.contains("fit")) {
        const json& f = j["fit"];
        c.fit_target = f.value("target", "dispersion_rest");
        c.fit_window_min = f.value("window_min", 0.0);
        c.fit_window_max = f.value("window_max", 0.0);
    }
    if (j.contains("output")) {
        c.out_path = j["output"].value("path", "");
        c.format = j["output"].value("format", "");
    }
    return c;
}

json config_to_json(const ScanConfig& c) {
    json j;
    j["units"] = c.units;
    j["atoms"] = {{"A", atom_to_json(c.atom_A)}, {"B", atom_to_json(c.atom_B)}};
    j["state"] = {{"parity", c.parity}};
    j["dipoles"] = {{"mu_A", c.mu_A}, {"mu_B", c.mu_B}};
    j["geometry"] = {{"grid", grid_to_json(c.r_grid)},
                     {"mirror",
                      {{"L", grid_to_json(c.mirror_L_grid)},
                       {"z", grid_to_json(c.mirror_z_grid)}}}};
    j["kinematics"] = {{"a", grid_to_json(c.a_grid)}, {"t", grid_to_json(c.t_grid)}};
    json ddc = {{"epsilon", c.ddc.epsilon},
                {"window", c.ddc.window},
                {"taper_fraction", c.ddc.taper_fraction},
                {"quad_rel_tol", c.ddc.quad_rel_tol}};
    if (!c.ddc.extrapolation_epsilons.empty())
        ddc["extrapolation_epsilons"] = c.ddc.extrapolation_epsilons;
    j["numerics"] = {{"tolerance", c.tolerance}, {"ddc", ddc}};
    j["fit"] = {{"target", c.fit_target},
                {"window_min", c.fit_window_min},
                {"window_max", c.fit_window_max}};
    j["output"] = {{"path", c.out_path}, {"format", c.format}};
    return j;
}

// ------------------------------------------------------------- utilities

std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string config_hash(const ScanConfig& c) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  (unsigned long long)fnv1a(config_to_json(c).dump()));
    return buf;
}

AtomDescriptor build_atom(const AtomConfig& a, const UnitSystem& u) {
    AtomDescriptor d;
    d.omega0 = u.mode() == UnitMode::SI ? u.frequency_to_natural(a.omega0)
                                        : a.omega0;
    const double alpha0 = u.mode() == UnitMode::SI
                              ? u.polarizability_to_natural(a.alpha0)
                              : a.alpha0;
    d.polarizability = a.model == "static"
                           ? PolarizabilityModel::make_static(alpha0)
                           : PolarizabilityModel::make_single_resonance(alpha0, d.omega0);
    return d;
}

/// SI length scale: the reduced transition wavelength of atom A, so the
/// natural-unit numbers the kernels see stay O(1) near resonance. In
/// natural mode the scale is irrelevant (identity conversions are not
/// taken through it).
UnitSystem build_units(const ScanConfig& c) {
    const UnitMode m = parse_unit_mode(c.units);
    if (m == UnitMode::SI)
        return UnitSystem(m, constants::c / c.atom_A.omega0);
    return UnitSystem(m, 1.0);
}

double in_len(const UnitSystem& u, double v) {
    return u.mode() == UnitMode::SI ? u.length_to_natural(v) : v;
}
double in_time(const UnitSystem& u, double v) {
    return u.mode() == UnitMode::SI ? u.time_to_natural(v) : v;
}
double in_acc(const UnitSystem& u, double v) {
    return u.mode() == UnitMode::SI ? u.acceleration_to_natural(v) : v;
}
double out_len(const UnitSystem& u, double v) {
    return u.mode() == UnitMode::SI ? u.length_to_si(v) : v;
}
double out_en(const UnitSystem& u, double v) {
    return u.mode() == UnitMode::SI ? u.energy_to_si(v) : v;
}

// ------------------------------------------------------------- output

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

void write_table(const Table& t, const ScanConfig& c, std::ostream& os,
                 const std::string& format) {
    if (format == "json") {
        json j;
        j["meta"] = {{"version", kVersion},
                     {"config_hash", config_hash(c)},
                     {"units", c.units}};
        j["columns"] = t.columns;
        j["rows"] = t.rows;
        os << j.dump(2) << "\n";
        return;
    }
    os << "# accelrad " << kVersion << "\n";
    os << "# config_hash " << config_hash(c) << "\n";
    os << "# units " << c.units << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << row[i];
        os << "\n";
    }
}

void write_report(const json& body, const ScanConfig& c, std::ostream& os) {
    json j = body;
    j["meta"] = {{"version", kVersion},
                 {"config_hash", config_hash(c)},
                 {"units", c.units}};
    os << j.dump(2) << "\n";
}

int emit(const ScanConfig& c, const std::string& cli_out,
         const std::function<void(std::ostream&)>& writer) {
    const std::string path = !cli_out.empty() ? cli_out : c.out_path;
    if (path.empty()) {
        writer(std::cout);
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return 2;
    }
    writer(f);
    return 0;
}

// ------------------------------------------------------------ subcommands

int run_constants(const ScanConfig& c, const std::string& cli_out) {
    // derived quantities take a in SI m/s^2; the constant table is SI
    const double a_si = c.a_grid.min;
    json body;
    body["constants"] = {{"hbar_J_s", constants::hbar},
                         {"c_m_per_s", constants::c},
                         {"k_B_J_per_K", constants::k_B},
                         {"e_C", constants::e}};
    body["acceleration_m_per_s2"] = a_si;
    body["unruh_temperature_K"] = unruh_temperature(a_si);
    if (a_si > 0.0) body["rindler_length_m"] = rindler_length(a_si);
    return emit(c, cli_out,
                [&](std::ostream& os) { write_report(body, c, os); });
}

struct ScanOutcome {
    Table table;
    bool any_flagged = false;
};

ScanOutcome scan_dispersion(const ScanConfig& c, const UnitSystem& u) {
    const AtomDescriptor A = build_atom(c.atom_A, u);
    const AtomDescriptor B = build_atom(c.atom_B, u);
    ScanOutcome out;
    out.table.columns = {"R",     "rest",  "corr1",
                         "corr2", "total", "quadrature_error", "flagged"};
    for (double a : c.a_grid.expand()) {
        for (double t : c.t_grid.expand()) {
            for (double R : c.r_grid.expand()) {
                const double Rn = in_len(u, R), an = in_acc(u, a),
                             tn = in_time(u, t);
                std::vector<std::string> row;
                row.push_back(g17(R));
                try {
                    const DispersionResult d =
                        total_dispersion(A, B, Rn, an, tn, c.tolerance);
                    row.push_back(g17(out_en(u, d.rest_term)));
                    row.push_back(g17(out_en(u, d.correction_a2t)));
                    row.push_back(g17(out_en(u, d.correction_a2t2)));
                    row.push_back(g17(out_en(u, d.total)));
                    row.push_back(g17(out_en(u, d.quadrature_error)));
                    row.push_back("0");
                } catch (const convergence_error&) {
                    for (int i = 0; i < 5; ++i) row.push_back("nan");
                    row.push_back("1");
                    out.any_flagged = true;
                }
                out.table.rows.push_back(std::move(row));
            }
        }
    }
    return out;
}

std::string config_class(const DipolePair& p) {
    if (p.parallel_same_axis()) return "parallel_same_axis";
    if (p.orthogonal_z_xy()) return "orthogonal_z_xy";
    return "general";
}

ScanOutcome scan_resonance(const ScanConfig& c, const UnitSystem& u) {
    DipolePair pair;
    pair.mu_A = c.mu_A;
    pair.mu_B = c.mu_B;
    const CorrelatedState state{c.parity == "symmetric" ? Parity::Symmetric
                                                        : Parity::Antisymmetric};
    const double w0 = u.mode() == UnitMode::SI
                          ? u.frequency_to_natural(c.atom_A.omega0)
                          : c.atom_A.omega0;
    ScanOutcome out;
    out.table.columns = {"z",      "a",      "az_c2",  "parity", "config_class",
                         "energy", "V_part", "W_part", "vf_part", "error",
                         "flagged"};
    for (double a : c.a_grid.expand()) {
        for (double z : c.r_grid.expand()) {
            const double zn = in_len(u, z), an = in_acc(u, a);
            std::vector<std::string> row;
            row.push_back(g17(z));
            row.push_back(g17(a));
            row.push_back(g17(an * zn));
            row.push_back(c.parity == "symmetric" ? "1" : "-1");
            row.push_back(config_class(pair));
            try {
                const ResonanceResult r =
                    ddc_resonance_energy(pair, state, zn, w0, an, c.ddc);
                row.push_back(g17(out_en(u, r.energy)));
                row.push_back(g17(out_en(u, r.v_part)));
                row.push_back(g17(out_en(u, r.w_part)));
                row.push_back(g17(out_en(u, r.vacuum_fluctuation_part)));
                row.push_back(g17(out_en(u, r.numerical_error)));
                row.push_back("0");
            } catch (const convergence_error&) {
                for (int i = 0; i < 5; ++i) row.push_back("nan");
                row.push_back("1");
                out.any_flagged = true;
            }
            out.table.rows.push_back(std::move(row));
        }
    }
    return out;
}

ScanOutcome scan_mirror(const ScanConfig& c, const UnitSystem& u) {
    const CorrelatedState state{c.parity == "symmetric" ? Parity::Symmetric
                                                        : Parity::Antisymmetric};
    const double w0 = u.mode() == UnitMode::SI
                          ? u.frequency_to_natural(c.atom_A.omega0)
                          : c.atom_A.omega0;
    const auto grid = default_orientation_grid();
    ScanOutcome out;
    out.table.columns = {"L",     "z",         "R_bar",      "a",
                         "orientation_id", "total", "free_part", "plate_part",
                         "error", "flagged"};
    for (double L : c.mirror_L_grid.expand()) {
        for (double z : c.mirror_z_grid.expand()) {
            for (double a : c.a_grid.expand()) {
                const MirrorGeometry geom{in_len(u, z), in_len(u, L)};
                const double an = in_acc(u, a);
                for (std::size_t id = 0; id < grid.size(); ++id) {
                    DipolePair pair;
                    pair.mu_A = grid[id].first;
                    pair.mu_B = grid[id].second;
                    std::vector<std::string> row;
                    row.push_back(g17(L));
                    row.push_back(g17(z));
                    row.push_back(g17(out_len(u, geom.r_bar())));
                    row.push_back(g17(a));
                    row.push_back(std::to_string(id));
                    try {
                        const MirrorResonanceResult r = mirror_resonance_energy(
                            pair, state, geom, w0, an, c.ddc);
                        row.push_back(g17(out_en(u, r.total)));
                        row.push_back(g17(out_en(u, r.free_part)));
                        row.push_back(g17(out_en(u, r.plate_part)));
                        row.push_back(g17(out_en(u, r.numerical_error)));
                        row.push_back("0");
                    } catch (const convergence_error&) {
                        for (int i = 0; i < 4; ++i) row.push_back("nan");
                        row.push_back("1");
                        out.any_flagged = true;
                    }
                    out.table.rows.push_back(std::move(row));
                }
            }
        }
    }
    return out;
}

/// (abscissa, energy) samples for the fit and crossover subcommands,
/// in natural units
std::vector<std::pair<double, double>> fit_samples(const ScanConfig& c,
                                                   const UnitSystem& u) {
    std::vector<std::pair<double, double>> s;
    if (c.fit_target == "dispersion_rest" || c.fit_target == "dispersion_corr1") {
        const AtomDescriptor A = build_atom(c.atom_A, u);
        const AtomDescriptor B = build_atom(c.atom_B, u);
        const double a = in_acc(u, c.a_grid.min);
        const double t = in_time(u, c.t_grid.min);
        for (double R : c.r_grid.expand()) {
            const double Rn = in_len(u, R);
            if (c.fit_target == "dispersion_rest")
                s.emplace_back(Rn, rest_cp_energy(A, B, Rn, c.tolerance));
            else
                s.emplace_back(Rn,
                               accel_corrections(A, B, Rn, a, t, c.tolerance).first);
        }
        return s;
    }
    if (c.fit_target == "resonance") {
        DipolePair pair;
        pair.mu_A = c.mu_A;
        pair.mu_B = c.mu_B;
        const CorrelatedState state{c.parity == "symmetric"
                                        ? Parity::Symmetric
                                        : Parity::Antisymmetric};
        const double w0 = u.mode() == UnitMode::SI
                              ? u.frequency_to_natural(c.atom_A.omega0)
                              : c.atom_A.omega0;
        const double a = in_acc(u, c.a_grid.min);
        for (double z : c.r_grid.expand()) {
            const double zn = in_len(u, z);
            s.emplace_back(zn,
                           ddc_resonance_energy(pair, state, zn, w0, a, c.ddc).energy);
        }
        return s;
    }
    throw configuration_error("fit.target must be dispersion_rest, "
                              "dispersion_corr1 or resonance");
}

int run_fit(const ScanConfig& c, const UnitSystem& u, const std::string& cli_out) {
    const auto s = fit_samples(c, u);
    double lo = c.fit_window_min > 0.0 ? in_len(u, c.fit_window_min)
                                       : s.front().first;
    double hi = c.fit_window_max > 0.0 ? in_len(u, c.fit_window_max)
                                       : s.back().first;
    const PowerFit f = fit_scaling_exponent(s, lo, hi);
    json body;
    body["target"] = c.fit_target;
    body["window_min"] = lo;
    body["window_max"] = hi;
    body["exponent"] = f.exponent;
    body["stderr_exponent"] = f.stderr_exponent;
    body["log_prefactor"] = f.log_prefactor;
    body["n_used"] = f.n_used;
    return emit(c, cli_out,
                [&](std::ostream& os) { write_report(body, c, os); });
}

int run_crossover(const ScanConfig& c, const UnitSystem& u,
                  const std::string& cli_out) {
    const double a = in_acc(u, c.a_grid.min);
    if (a <= 0.0) throw configuration_error("crossover: need a > 0");
    const std::vector<double> zs_in = c.r_grid.expand();
    std::vector<double> zn;
    for (double z : zs_in) zn.push_back(in_len(u, z));
    const double az_min = a * zn.front(), az_max = a * zn.back();
    if (az_max < 10.0 || az_min > 0.1)
        throw configuration_error("crossover: grid does not span crossover "
                                  "(need az/c^2 from <= 0.1 to >= 10)");

    DipolePair pair;
    pair.mu_A = c.mu_A;
    pair.mu_B = c.mu_B;
    const CorrelatedState state{c.parity == "symmetric" ? Parity::Symmetric
                                                        : Parity::Antisymmetric};
    const double w0 = u.mode() == UnitMode::SI
                          ? u.frequency_to_natural(c.atom_A.omega0)
                          : c.atom_A.omega0;

    std::vector<std::pair<double, double>> s;
    for (double z : zn)
        s.emplace_back(z, ddc_resonance_energy(pair, state, z, w0, a, c.ddc).energy);

    // local exponent from a sliding window of 8 log-spaced points (the
    // fit refuses smaller windows)
    const int w = 8;
    json locals = json::array();
    std::vector<std::pair<double, double>> exps; // (z_mid, exponent)
    for (std::size_t i = 0; i + w <= s.size(); ++i) {
        std::vector<std::pair<double, double>> win(s.begin() + i,
                                                   s.begin() + i + w);
        bool usable = true;
        for (const auto& [z, e] : win)
            if (e == 0.0 || (win.front().second < 0.0) != (e < 0.0))
                usable = false;
        if (!usable) continue; // window straddles a zero crossing
        const PowerFit f =
            fit_scaling_exponent(win, win.front().first, win.back().first);
        const double z_mid = std::sqrt(win.front().first * win.back().first);
        exps.emplace_back(z_mid, f.exponent);
        locals.push_back({{"z", out_len(u, z_mid)},
                          {"az_c2", a * z_mid},
                          {"exponent", f.exponent}});
    }
    json body;
    body["rindler_length"] = out_len(u, 1.0 / a);
    body["local_exponents"] = locals;
    if (exps.size() >= 2) {
        // transition band: where the local exponent has moved more than
        // 10% of the way from the inertial-end value toward the far-end
        // value
        const double e_in = exps.front().second, e_out = exps.back().second;
        const double gap = e_out - e_in;
        double z_lo = 0.0, z_hi = 0.0;
        for (const auto& [z, e] : exps) {
            const double f = gap != 0.0 ? (e - e_in) / gap : 0.0;
            if (f > 0.1 && z_lo == 0.0) z_lo = z;
            if (f < 0.9) z_hi = z;
        }
        body["inertial_end_exponent"] = e_in;
        body["accelerated_end_exponent"] = e_out;
        body["transition_z_min"] = z_lo > 0.0 ? json(out_len(u, z_lo)) : json();
        body["transition_z_max"] = z_hi > 0.0 ? json(out_len(u, z_hi)) : json();
    }

    // far-end envelope for boost-axis dipoles: sample |E| at the
    // antinodes of cos Phi, Phi = (2 w0/a) ln(az), where the modulation
    // is +-1 and the envelope scales as (8/az)/z^3 ~ z^-4
    if (DipolePair::single_axis(pair.mu_A) == 0 &&
        DipolePair::single_axis(pair.mu_B) == 0) {
        std::vector<std::pair<double, double>> env;
        const double z_far_lo = std::max(10.0 / a, zn.front());
        for (int n = 0; env.size() < 12 && n < 4000; ++n) {
            const double z = std::exp(n * constants::pi * a / (2.0 * w0)) / a;
            if (z < z_far_lo) continue;
            if (z > zn.back()) break;
            const double e =
                ddc_resonance_energy(pair, state, z, w0, a, c.ddc).energy;
            env.emplace_back(z, std::abs(e));
        }
        if (env.size() >= 8) {
            const PowerFit f = fit_scaling_exponent(env, env.front().first,
                                                    env.back().first);
            body["envelope_exponent"] = f.exponent;
            body["envelope_points"] = env.size();
        }
    }
    if (exps.size() < 2 && !body.contains("envelope_exponent"))
        throw configuration_error("crossover: too few usable windows "
                                  "(zero crossings dominate the grid)");
    return emit(c, cli_out,
                [&](std::ostream& os) { write_report(body, c, os); });
}

} // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");

    CLI::App app{"accelerated-atom dispersion and resonance interactions"};
    app.set_version_flag("--version", std::string("accelrad ") + kVersion);
    app.require_subcommand(1);

    std::string config_path, units_flag, out_flag, format_flag;
    double tolerance_flag = 0.0;
    bool dump_config = false;
    app.add_option("--config", config_path, "configuration file (JSON)");
    app.add_flag("--dump-config", dump_config,
                 "print the parsed config in canonical form and exit");
    app.add_option("--units", units_flag, "unit mode: si or natural");
    app.add_option("--out", out_flag, "output path (default stdout)");
    app.add_option("--format", format_flag, "output format: csv or json");
    app.add_option("--tolerance", tolerance_flag, "quadrature relative tolerance");

    auto* sc_constants = app.add_subcommand("constants", "physical constant table");
    auto* sc_dispersion = app.add_subcommand("dispersion", "dispersion energy scan");
    auto* sc_resonance = app.add_subcommand("resonance", "resonance energy scan");
    auto* sc_mirror = app.add_subcommand("mirror", "resonance scan near a plate");
    auto* sc_fit = app.add_subcommand("fit", "scaling exponent fit");
    auto* sc_crossover = app.add_subcommand("crossover", "regime crossover report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        json j = json::object();
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f)
                throw configuration_error("cannot open config file: " + config_path);
            try {
                f >> j;
            } catch (const json::parse_error& e) {
                throw configuration_error(std::string("config parse error: ") +
                                          e.what());
            }
        }
        ScanConfig c = config_from_json(j);
        // flags win over the config file
        if (!units_flag.empty()) {
            parse_unit_mode(units_flag);
            c.units = units_flag;
        }
        if (!out_flag.empty()) c.out_path.clear(); // emit() prefers the flag
        if (!format_flag.empty()) {
            if (format_flag != "csv" && format_flag != "json")
                throw configuration_error("--format must be csv or json");
            c.format = format_flag;
        }
        if (tolerance_flag > 0.0) {
            c.tolerance = tolerance_flag;
            c.ddc.quad_rel_tol = tolerance_flag;
        }
        const UnitSystem u = build_units(c);

        if (dump_config) {
            return emit(c, out_flag, [&](std::ostream& os) {
                os << config_to_json(c).dump(2) << "\n";
            });
        }
        if (*sc_constants) return run_constants(c, out_flag);
        if (*sc_fit) return run_fit(c, u, out_flag);
        if (*sc_crossover) return run_crossover(c, u, out_flag);

        ScanOutcome out;
        if (*sc_dispersion) out = scan_dispersion(c, u);
        else if (*sc_resonance) out = scan_resonance(c, u);
        else if (*sc_mirror) out = scan_mirror(c, u);
        const std::string fmt = !c.format.empty() ? c.format : "csv";
        const int ec = emit(c, out_flag, [&](std::ostream& os) {
            write_table(out.table, c, os, fmt);
        });
        if (ec != 0) return ec;
        return out.any_flagged ? 3 : 0;
    } catch (const configuration_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const convergence_error& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
