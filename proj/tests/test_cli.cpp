#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chad/csv.hpp"
#include "chad/params.hpp"
#include "chad/settings.hpp"
#include "chad/snapshot.hpp"

using namespace chad;
namespace fs = std::filesystem;

namespace {

const std::string kCli = CHAD_CLI_PATH;

struct CmdResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

CmdResult run_cli(const std::string& args) {
    const fs::path log = fs::temp_directory_path() / "chad_cli_out.txt";
    const std::string cmd = kCli + " " + args + " > " + log.string() + " 2>&1";
    const int rc = std::system(cmd.c_str());
    CmdResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(log);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

struct TempDir {
    fs::path path;
    explicit TempDir(const char* name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& p) const { return (path / p).string(); }
};

} // namespace

TEST_CASE("cli: no subcommand and unknown flags are config errors") {
    CHECK(run_cli("").exit_code == kExitConfig);
    CHECK(run_cli("run-cstr --bogus-flag 1").exit_code == kExitConfig);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli: dump-config prints the case presets and writes loadable files") {
    const CmdResult r = run_cli("dump-config --preset case1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("v_liq_m3 = 3400") != std::string::npos);
    CHECK(r.output.find("v_gas_m3 = 300") != std::string::npos);
    CHECK(r.output.find("q_in_m3_d = 178.44999999999999") != std::string::npos);
    CHECK(r.output.find("temperature_k = 308.5") != std::string::npos);
    CHECK(r.output.find("pressure_bar = 1.0129999999999999") != std::string::npos);
    CHECK(r.output.find("k_dis = 0.5") != std::string::npos);

    const CmdResult r2 = run_cli("dump-config --preset case2");
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("v_liq_m3 = 0.008") != std::string::npos);
    CHECK(r2.output.find("duration_seconds = 200") != std::string::npos);
    CHECK(r2.output.find("outer_dt_s = 0.5") != std::string::npos);
    CHECK(r2.output.find("inner_substeps = 10") != std::string::npos);

    TempDir dir("chad_cli_dump");
    CHECK(run_cli("dump-config --preset case1 --out-dir " + (dir / "")).exit_code == 0);
    CHECK(fs::exists(dir / "run.conf"));
    CHECK(ParamSet::load(dir / "params.conf").dump_string() ==
          ParamSet::defaults().dump_string());
    CHECK(load_state_file(dir / "influent.conf") == default_influent());
    CHECK(load_state_file(dir / "initial.conf") == default_initial_state());

    CHECK(run_cli("dump-config --preset case9").exit_code == kExitConfig);
}

TEST_CASE("cli: run-cstr zero duration emits just the initial row") {
    TempDir dir("chad_cli_zero");
    const CmdResult r = run_cli("run-cstr --duration 0 --out " + (dir / ""));
    CHECK(r.exit_code == 0);
    const CsvTable t = read_csv(dir / "trajectory.csv");
    CHECK(t.rows() == 1);
    CHECK(t.column("time_d")[0] == 0.0);
}

TEST_CASE("cli: exit codes distinguish io, parse, and solver failures") {
    TempDir dir("chad_cli_errs");
    // io: parameter file does not exist
    CHECK(run_cli("run-cstr --duration 0 --params /nonexistent.conf --out " + (dir / "a"))
              .exit_code == kExitIo);
    // parse: malformed parameter file
    {
        std::ofstream f(dir / "bad_params.conf");
        f << "k_dis 0.5\n";
    }
    CHECK(run_cli("run-cstr --duration 0 --params " + (dir / "bad_params.conf") + " --out " +
                  (dir / "b"))
              .exit_code == kExitParse);
    // config: semantic nonsense
    CHECK(run_cli("run-cstr --duration 0 --scheme rk9 --out " + (dir / "c")).exit_code ==
          kExitConfig);
    // solver: starve the root solver of iterations
    {
        std::ofstream f(dir / "starved.conf");
        f << "[solver]\nmax_iterations = 1\n";
    }
    CHECK(run_cli("run-cstr --duration 0.0001 --config " + (dir / "starved.conf") + " --out " +
                  (dir / "d"))
              .exit_code == kExitSolver);
}

TEST_CASE("cli: compare of a file against itself is all zeros") {
    TempDir dir("chad_cli_cmp");
    REQUIRE(run_cli("run-cstr --duration 0.002 --out " + (dir / "run")).exit_code == 0);
    const std::string traj = dir / "run/trajectory.csv";

    auto read_rmse_column = [](const std::string& path) {
        std::ifstream in(path);
        std::string line;
        std::getline(in, line); // header
        std::vector<double> out;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            out.push_back(std::stod(line.substr(line.find(',') + 1)));
        }
        return out;
    };

    const CmdResult r =
        run_cli("compare --candidate " + traj + " --reference " + traj + " --out " +
                (dir / "rmse.csv"));
    CHECK(r.exit_code == 0);
    const auto rmse = read_rmse_column(dir / "rmse.csv");
    REQUIRE(rmse.size() == 8); // benchmark component list incl. G_ch4 alias and pH
    for (double v : rmse) CHECK(v == 0.0);
    CHECK(r.output.find("G_ch4") != std::string::npos);
    CHECK(r.output.find("pH") != std::string::npos);

    // a uniformly 1.01-scaled candidate reads 1% everywhere
    {
        const CsvTable t = read_csv(traj);
        std::ofstream out(dir / "scaled.csv");
        for (std::size_t c = 0; c < t.columns.size(); ++c)
            out << (c ? "," : "") << t.columns[c];
        out << "\n";
        for (std::size_t r2 = 0; r2 < t.rows(); ++r2) {
            for (std::size_t c = 0; c < t.columns.size(); ++c) {
                const bool scale = t.columns[c] != "time_d";
                out << (c ? "," : "")
                    << format_g17(scale ? 1.01 * t.data[c][r2] : t.data[c][r2]);
            }
            out << "\n";
        }
    }
    const CmdResult rs = run_cli("compare --candidate " + (dir / "scaled.csv") +
                                 " --reference " + traj + " --out " + (dir / "rmse2.csv"));
    CHECK(rs.exit_code == 0);
    for (double v : read_rmse_column(dir / "rmse2.csv"))
        CHECK(v == doctest::Approx(1.0).epsilon(1e-9));

    // unknown component and mismatched grids are config errors
    CHECK(run_cli("compare --candidate " + traj + " --reference " + traj +
                  " --components S_banana")
              .exit_code == kExitConfig);
    REQUIRE(run_cli("run-cstr --duration 0.003 --out " + (dir / "run3")).exit_code == 0);
    CHECK(run_cli("compare --candidate " + (dir / "run3/trajectory.csv") + " --reference " +
                  traj)
              .exit_code == kExitConfig);
}

TEST_CASE("cli: gen-snapshots, run-field, and the single-reactor equivalence") {
    TempDir dir("chad_cli_field");
    REQUIRE(run_cli("gen-snapshots --out " + (dir / "snaps") +
                    " --n 8 --steps 4 --outer-dt 0.5 --seed 7 --format binary")
                .exit_code == 0);
    {
        int files = 0;
        for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir / "snaps")) ++files;
        CHECK(files == 5);
    }

    const CmdResult rf = run_cli("run-field --preset case2 --snapshots " + (dir / "snaps") +
                                 " --export-every 2.0 --out " + (dir / "field") + " --workers 2");
    CHECK(rf.exit_code == 0);
    CHECK(rf.output.find("8 particles") != std::string::npos);
    CHECK(fs::exists(dir / "field/field_000000.csv"));
    CHECK(fs::exists(dir / "field/field_000004.csv"));

    // all particles uniform
    const CsvTable fx = read_csv(dir / "field/field_000004.csv");
    REQUIRE(fx.rows() == 8);
    const auto& vals = fx.column("S_ch4");
    for (double v : vals) CHECK(v == vals[0]);

    // a 1-particle field equals the plain closed reactor run, bit for bit
    REQUIRE(run_cli("gen-snapshots --out " + (dir / "snap1") +
                    " --n 1 --steps 4 --outer-dt 0.5 --format ascii")
                .exit_code == 0);
    REQUIRE(run_cli("run-field --preset case2 --snapshots " + (dir / "snap1") + " --out " +
                    (dir / "field1"))
                .exit_code == 0);
    const double duration_days = 2.0 / 86400.0; // 4 outer steps of 0.5 s
    REQUIRE(run_cli("run-cstr --preset case2 --duration " + format_g17(duration_days) +
                    " --dt 0.05 --out " + (dir / "cstr"))
                .exit_code == 0);
    const CsvTable traj = read_csv(dir / "cstr/trajectory.csv");
    const CsvTable f1 = read_csv(dir / "field1/field_000004.csv");
    CHECK(f1.column("S_ch4")[0] == traj.column("S_ch4").back());
}

TEST_CASE("cli: convert round trip and parse failure diagnostics") {
    TempDir dir("chad_cli_conv");
    REQUIRE(run_cli("gen-snapshots --out " + (dir / "ascii") +
                    " --n 50 --steps 0 --format ascii")
                .exit_code == 0);
    const std::string a = dir / "ascii/snap_000000.csv";
    CHECK(run_cli("convert --in " + a + " --out " + (dir / "s.bin")).exit_code == 0);
    CHECK(run_cli("convert --to-ascii --in " + (dir / "s.bin") + " --out " + (dir / "s2.csv"))
              .exit_code == 0);
    std::ifstream f1(a), f2(dir / "s2.csv");
    const std::string c1((std::istreambuf_iterator<char>(f1)), {});
    const std::string c2((std::istreambuf_iterator<char>(f2)), {});
    CHECK(c1 == c2);

    {
        std::ofstream f(dir / "broken.csv");
        f << "# chad-snapshot v1 t=0 n=2\n1,0,0,0,0,0,0,1000\n2,zero,0,0,0,0,0,1000\n";
    }
    const CmdResult r = run_cli("convert --in " + (dir / "broken.csv"));
    CHECK(r.exit_code == kExitParse);
    CHECK(r.output.find(":3") != std::string::npos); // offending line is named
}

TEST_CASE("cli: CHAD_WORKERS env var must be a positive integer") {
    TempDir dir("chad_cli_env");
    const std::string log = dir / "log.txt";
    const int rc = std::system(("CHAD_WORKERS=banana " + kCli + " run-cstr --duration 0 --out " +
                                (dir / "o") + " > " + log + " 2>&1")
                                   .c_str());
    CHECK(WEXITSTATUS(rc) == kExitConfig);
    const int rc2 = std::system(("CHAD_WORKERS=3 " + kCli + " run-cstr --duration 0 --out " +
                                 (dir / "o2") + " > " + log + " 2>&1")
                                    .c_str());
    CHECK(WEXITSTATUS(rc2) == 0);
}
