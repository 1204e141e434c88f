#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "accelrad/constants.hpp"

namespace {

using nlohmann::json;

std::string cli_path() { return ACCELRAD_CLI_PATH; }

int run_cli(const std::string& args, const std::string& out_file = "") {
    std::string cmd = cli_path() + " " + args;
    if (!out_file.empty()) cmd += " > " + out_file;
    cmd += " 2> cli_stderr.txt";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    f << body;
}

struct Csv {
    std::vector<std::string> preamble;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream ss(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            csv.preamble.push_back(line);
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!header_seen) {
            csv.columns = cells;
            header_seen = true;
        } else {
            csv.rows.push_back(cells);
        }
    }
    return csv;
}

int col_index(const Csv& csv, const std::string& name) {
    for (std::size_t i = 0; i < csv.columns.size(); ++i)
        if (csv.columns[i] == name) return int(i);
    return -1;
}

const char* kDispersionConfig = R"({
  "units": "natural",
  "atoms": {"A": {"model": "single_resonance", "omega0": 1.0, "alpha0": 1.0},
            "B": {"model": "single_resonance", "omega0": 1.0, "alpha0": 1.0}},
  "geometry": {"grid": {"min": 0.5, "max": 5.0, "points": 4, "spacing": "log"}},
  "kinematics": {"a": {"min": 0.02, "points": 1}, "t": {"min": 1.0, "points": 1}}
})";

} // namespace

TEST_CASE("config round-trip is the identity on the canonical form") {
    spit("cli_cfg.json", kDispersionConfig);
    REQUIRE(run_cli("--config cli_cfg.json --dump-config constants",
                    "cli_dump1.json") == 0);
    REQUIRE(run_cli("--config cli_dump1.json --dump-config constants",
                    "cli_dump2.json") == 0);
    CHECK(slurp("cli_dump1.json") == slurp("cli_dump2.json"));
    CHECK(json::parse(slurp("cli_dump1.json")) ==
          json::parse(slurp("cli_dump2.json")));
}

TEST_CASE("repeated identical-config scans are byte-identical") {
    spit("cli_cfg.json", kDispersionConfig);
    REQUIRE(run_cli("--config cli_cfg.json dispersion", "cli_run1.csv") == 0);
    REQUIRE(run_cli("--config cli_cfg.json dispersion", "cli_run2.csv") == 0);
    const std::string a = slurp("cli_run1.csv");
    CHECK(a == slurp("cli_run2.csv"));
    CHECK(a.find("# accelrad ") == 0);
    CHECK(a.find("# config_hash ") != std::string::npos);
}

TEST_CASE("dispersion scan at a = 0 has zero correction columns") {
    std::string cfg = kDispersionConfig;
    const auto pos = cfg.find("0.02");
    cfg.replace(pos, 4, "0.0");
    spit("cli_cfg0.json", cfg);
    REQUIRE(run_cli("--config cli_cfg0.json dispersion", "cli_a0.csv") == 0);
    const Csv csv = parse_csv(slurp("cli_a0.csv"));
    REQUIRE(csv.rows.size() == 4);
    const int c1 = col_index(csv, "corr1"), c2 = col_index(csv, "corr2");
    REQUIRE(c1 >= 0);
    REQUIRE(c2 >= 0);
    for (const auto& row : csv.rows) {
        CHECK(std::stod(row[c1]) == 0.0);
        CHECK(std::stod(row[c2]) == 0.0);
    }
}

TEST_CASE("one-point grids produce exactly one data row") {
    std::string cfg = kDispersionConfig;
    const auto pos = cfg.find("\"points\": 4");
    cfg.replace(pos, 11, "\"points\": 1");
    spit("cli_cfg1.json", cfg);
    REQUIRE(run_cli("--config cli_cfg1.json dispersion", "cli_one.csv") == 0);
    CHECK(parse_csv(slurp("cli_one.csv")).rows.size() == 1);
}

TEST_CASE("resonance scan emits the documented columns") {
    spit("cli_res.json", R"({
      "atoms": {"A": {"omega0": 1.0}, "B": {"omega0": 1.0}},
      "dipoles": {"mu_A": [0,0,1], "mu_B": [0,0,1]},
      "geometry": {"grid": {"min": 0.5, "max": 2.0, "points": 3, "spacing": "log"}},
      "kinematics": {"a": {"min": 0.5, "points": 1}}
    })");
    REQUIRE(run_cli("--config cli_res.json resonance", "cli_res.csv") == 0);
    const Csv csv = parse_csv(slurp("cli_res.csv"));
    CHECK(csv.columns ==
          std::vector<std::string>{"z", "a", "az_c2", "parity", "config_class",
                                   "energy", "V_part", "W_part", "vf_part",
                                   "error", "flagged"});
    REQUIRE(csv.rows.size() == 3);
    CHECK(csv.rows[0][4] == "parallel_same_axis");
    for (const auto& row : csv.rows) CHECK(std::stod(row[5]) < 0.0);
}

TEST_CASE("exit code 2 on configuration errors") {
    CHECK(run_cli("--config cli_missing_file.json constants") == 2);
    spit("cli_bad.json", "{ not json");
    CHECK(run_cli("--config cli_bad.json constants") == 2);
    spit("cli_badunits.json", R"({"units": "cubits"})");
    CHECK(run_cli("--config cli_badunits.json constants") == 2);
    spit("cli_badgrid.json", R"({
      "geometry": {"grid": {"min": 5.0, "max": 1.0, "points": 4}}
    })");
    CHECK(run_cli("--config cli_badgrid.json dispersion") == 2);
    CHECK(run_cli("--badflag constants") == 2);
}

TEST_CASE("crossover rejects a grid that does not span the crossover") {
    spit("cli_cross_bad.json", R"({
      "atoms": {"A": {"omega0": 1.0}, "B": {"omega0": 1.0}},
      "dipoles": {"mu_A": [0,0,1], "mu_B": [0,0,1]},
      "geometry": {"grid": {"min": 0.001, "max": 0.05, "points": 12, "spacing": "log"}},
      "kinematics": {"a": {"min": 1.0, "points": 1}}
    })");
    CHECK(run_cli("--config cli_cross_bad.json crossover") == 2);
    const std::string err = slurp("cli_stderr.txt");
    CHECK(err.find("does not span crossover") != std::string::npos);
}

TEST_CASE("crossover report recovers the inertial near-zone exponent") {
    spit("cli_cross.json", R"({
      "atoms": {"A": {"omega0": 1.0}, "B": {"omega0": 1.0}},
      "dipoles": {"mu_A": [0,0,1], "mu_B": [0,0,1]},
      "geometry": {"grid": {"min": 0.05, "max": 15.0, "points": 20, "spacing": "log"}},
      "kinematics": {"a": {"min": 1.0, "points": 1}}
    })");
    REQUIRE(run_cli("--config cli_cross.json crossover", "cli_cross_out.json") == 0);
    const json rep = json::parse(slurp("cli_cross_out.json"));
    CHECK(rep.at("rindler_length").get<double>() == 1.0);
    CHECK(rep.at("inertial_end_exponent").get<double>() ==
          Catch::Approx(-3.0).margin(0.1));
    CHECK(rep.at("transition_z_min").get<double>() > 0.1);
    CHECK(rep.at("transition_z_max").get<double>() < 10.0);
}

TEST_CASE("crossover envelope for boost-axis dipoles scales as z^-4") {
    spit("cli_cross_x.json", R"({
      "atoms": {"A": {"omega0": 4.0}, "B": {"omega0": 4.0}},
      "dipoles": {"mu_A": [1,0,0], "mu_B": [1,0,0]},
      "geometry": {"grid": {"min": 0.05, "max": 250.0, "points": 16, "spacing": "log"}},
      "kinematics": {"a": {"min": 1.0, "points": 1}}
    })");
    REQUIRE(run_cli("--config cli_cross_x.json crossover", "cli_cross_x.json.out") ==
            0);
    const json rep = json::parse(slurp("cli_cross_x.json.out"));
    REQUIRE(rep.contains("envelope_exponent"));
    CHECK(rep.at("envelope_exponent").get<double>() ==
          Catch::Approx(-4.0).margin(0.2));
}

TEST_CASE("fit subcommand reproduces the far-zone dispersion exponent") {
    spit("cli_fit.json", R"({
      "atoms": {"A": {"omega0": 1.0, "alpha0": 1.0}, "B": {"omega0": 1.0, "alpha0": 1.0}},
      "geometry": {"grid": {"min": 100.0, "max": 1000.0, "points": 12, "spacing": "log"}},
      "fit": {"target": "dispersion_rest"}
    })");
    REQUIRE(run_cli("--config cli_fit.json fit", "cli_fit_out.json") == 0);
    const json rep = json::parse(slurp("cli_fit_out.json"));
    CHECK(rep.at("exponent").get<double>() == Catch::Approx(-7.0).margin(0.05));
    CHECK(rep.at("n_used").get<int>() == 12);
}

TEST_CASE("si and natural unit modes produce the same physics") {
    using accelrad::constants::c;
    using accelrad::constants::hbar;
    spit("cli_nat.json", kDispersionConfig);
    // the same scan stated in SI with length scale c/omega0 = 1 m
    std::ostringstream si;
    si.setf(std::ios::scientific);
    si.precision(17);
    si << R"({
      "units": "si",
      "atoms": {"A": {"model": "single_resonance", "omega0": )" << c
       << R"(, "alpha0": 1.0},
                "B": {"model": "single_resonance", "omega0": )" << c
       << R"(, "alpha0": 1.0}},
      "geometry": {"grid": {"min": 0.5, "max": 5.0, "points": 4, "spacing": "log"}},
      "kinematics": {"a": {"min": )" << 0.02 * c * c
       << R"(, "points": 1}, "t": {"min": )" << 1.0 / c << R"(, "points": 1}}
    })";
    spit("cli_si.json", si.str());
    REQUIRE(run_cli("--config cli_nat.json dispersion", "cli_nat.csv") == 0);
    REQUIRE(run_cli("--config cli_si.json dispersion", "cli_si.csv") == 0);
    const Csv nat = parse_csv(slurp("cli_nat.csv"));
    const Csv siv = parse_csv(slurp("cli_si.csv"));
    REQUIRE(nat.rows.size() == siv.rows.size());
    const double e_scale = hbar * c; // J per natural energy unit at 1 m scale
    for (std::size_t i = 0; i < nat.rows.size(); ++i) {
        for (const char* col : {"rest", "corr1", "corr2", "total"}) {
            const int k = col_index(nat, col);
            const double en = std::stod(nat.rows[i][k]);
            const double ej = std::stod(siv.rows[i][k]);
            CHECK(ej / e_scale == Catch::Approx(en).epsilon(1e-10));
        }
    }
}

TEST_CASE("mirror scan emits one row per orientation") {
    spit("cli_mir.json", R"({
      "atoms": {"A": {"omega0": 1.0}, "B": {"omega0": 1.0}},
      "geometry": {"mirror": {"L": {"min": 1.0, "points": 1},
                               "z": {"min": 0.5, "points": 1}}},
      "kinematics": {"a": {"min": 0.3, "points": 1}}
    })");
    REQUIRE(run_cli("--config cli_mir.json mirror", "cli_mir.csv") == 0);
    const Csv csv = parse_csv(slurp("cli_mir.csv"));
    REQUIRE(csv.rows.size() == 12);
    const int tot = col_index(csv, "total"), fp = col_index(csv, "free_part"),
              pp = col_index(csv, "plate_part");
    for (const auto& row : csv.rows) {
        const double t = std::stod(row[tot]);
        CHECK(t == Catch::Approx(std::stod(row[fp]) + std::stod(row[pp]))
                       .margin(1e-12 * (1.0 + std::abs(t))));
    }
}

TEST_CASE("constants subcommand reports the Unruh temperature") {
    spit("cli_const.json", R"({"kinematics": {"a": {"min": 9.8, "points": 1}}})");
    REQUIRE(run_cli("--config cli_const.json constants", "cli_const.json.out") == 0);
    const json rep = json::parse(slurp("cli_const.json.out"));
    const double tu = rep.at("unruh_temperature_K").get<double>();
    CHECK(tu > 3.9e-20);
    CHECK(tu < 4.1e-20);
    CHECK(rep.at("constants").at("c_m_per_s").get<double>() == 299792458.0);
}
