#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "chad/snapshot.hpp"

using namespace chad;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "chad_snapshot_tests") {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream f(p);
    f << text;
}

ParticleSnapshot random_snapshot(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1e3, 1e3);
    std::uniform_real_distribution<double> mag(-300.0, 300.0);
    ParticleSnapshot s;
    s.time_s = uni(rng);
    s.particles.resize(n);
    std::uint64_t id = 0;
    for (auto& p : s.particles) {
        p.id = id++;
        // include extreme magnitudes among ordinary values
        p.x = std::ldexp(uni(rng), static_cast<int>(mag(rng) / 30.0));
        p.y = uni(rng);
        p.z = uni(rng);
        p.vx = uni(rng) * 1e-8;
        p.vy = uni(rng) * 1e12;
        p.vz = uni(rng);
        p.rho = std::abs(uni(rng)) + 1.0;
    }
    return s;
}

} // namespace

TEST_CASE("ascii golden file: three rows parse exactly") {
    TempDir d;
    const fs::path p = d.path / "snap.csv";
    write_text(p,
               "# chad-snapshot v1 t=1.5 n=3\n"
               "7,0.25,-1,2,0.5,0,0,1000\n"
               "9,1,2,3,4,5,6,998.25\n"
               "11,-0.125,0,0,0,0,0,1001\n");
    const ParticleSnapshot s = load_snapshot_ascii(p);
    CHECK(s.time_s == 1.5);
    REQUIRE(s.particles.size() == 3);
    CHECK(s.particles[0].id == 7);
    CHECK(s.particles[0].x == 0.25);
    CHECK(s.particles[0].rho == 1000.0);
    CHECK(s.particles[1].vz == 6.0);
    CHECK(s.particles[2].x == -0.125);
      // row order is preserved as written
    CHECK(s.particles[2].id == 11);
}

TEST_CASE("ascii parse failures carry the offending line") {
    TempDir d;
    const fs::path p = d.path / "bad.csv";

    write_text(p, "");
    CHECK_THROWS_AS(load_snapshot_ascii(p), ParseError);

    write_text(p, "# chad-snapshot v1 t=0 n=0\n");
    CHECK_THROWS_AS(load_snapshot_ascii(p), ParseError); // zero particles

    write_text(p, "# chad-snapshot v1 t=0 n=2\n1,0,0,0,0,0,0,1000\n");
    CHECK_THROWS_AS(load_snapshot_ascii(p), ParseError); // count mismatch

    write_text(p, "# chad-snapshot v1 t=0 n=2\n1,0,0,0,0,0,0,1000\n1,1,1,1,0,0,0,1000\n");
    CHECK_THROWS_AS(load_snapshot_ascii(p), ParseError); // duplicate id

    write_text(p, "# chad-snapshot v1 t=0 n=1\n1,0,nan,0,0,0,0,1000\n");
    CHECK_THROWS_AS(load_snapshot_ascii(p), ParseError); // non-finite value

    write_text(p, "# chad-snapshot v1 t=0 n=2\n1,0,0,0,0,0,0,1000\n2,0,zero,0\n");
    try {
        load_snapshot_ascii(p);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3); // malformed row named by line number
    }
}

TEST_CASE("binary round trip is bit-identical; corruption is rejected") {
    TempDir d;
    const fs::path p = d.path / "snap.bin";
    const ParticleSnapshot s = random_snapshot(500, 99);
    write_snapshot_binary(s, p);
    CHECK(load_snapshot_binary(p) == s);

    // truncation: drop the last 5 bytes
    const auto size = fs::file_size(p);
    fs::resize_file(p, size - 5);
    CHECK_THROWS_AS(load_snapshot_binary(p), ParseError);

    // bad magic
    write_snapshot_binary(s, p);
    {
        std::fstream f(p, std::ios::in | std::ios::out | std::ios::binary);
        f.put('X');
    }
    CHECK_THROWS_AS(load_snapshot_binary(p), ParseError);

    // bad version
    write_snapshot_binary(s, p);
    {
        std::fstream f(p, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(8);
        const std::uint32_t v = 2;
        f.write(reinterpret_cast<const char*>(&v), 4);
    }
    CHECK_THROWS_AS(load_snapshot_binary(p), ParseError);

    // trailing garbage
    write_snapshot_binary(s, p);
    {
        std::ofstream f(p, std::ios::app | std::ios::binary);
        f.put('\0');
    }
    CHECK_THROWS_AS(load_snapshot_binary(p), ParseError);
}

TEST_CASE("ascii -> binary -> ascii preserves every value") {
    TempDir d;
    const ParticleSnapshot s = random_snapshot(200, 7);
    const fs::path a1 = d.path / "a1.csv", b = d.path / "b.bin", a2 = d.path / "a2.csv";

    write_snapshot_ascii(s, a1);
    const ParticleSnapshot s1 = load_snapshot_ascii(a1);
    CHECK(s1 == s); // 17 significant digits round-trip doubles exactly

    write_snapshot_binary(s1, b);
    const ParticleSnapshot s2 = load_snapshot_binary(b);
    CHECK(s2 == s);

    write_snapshot_ascii(s2, a2);
    CHECK(load_snapshot_ascii(a2) == s);

    // identical emission byte-for-byte
    std::ifstream f1(a1), f2(a2);
    const std::string c1((std::istreambuf_iterator<char>(f1)), {});
    const std::string c2((std::istreambuf_iterator<char>(f2)), {});
    CHECK(c1 == c2);
}

TEST_CASE("snapshot generator: deterministic rigid rotation in a cylinder") {
    SnapshotGenConfig cfg;
    cfg.n = 400;
    cfg.radius_m = 0.1;
    cfg.height_m = 0.25;
    cfg.rpm = 12.0;
    cfg.outer_dt_s = 0.5;
    cfg.seed = 2024;

    const ParticleSnapshot s0 = generate_snapshot(cfg, 0);
    CHECK(generate_snapshot(cfg, 0) == s0);
    CHECK(s0.time_s == 0.0);
    REQUIRE(s0.particles.size() == cfg.n);

    const double omega = cfg.rpm * 2.0 * 3.14159265358979323846 / 60.0;
    for (const Particle& p : s0.particles) {
        const double r = std::hypot(p.x, p.y);
        CHECK(r <= cfg.radius_m + 1e-12);
        CHECK(p.z >= 0.0);
        CHECK(p.z <= cfg.height_m);
        CHECK(p.vx == doctest::Approx(-omega * p.y).epsilon(1e-12));
        CHECK(p.vy == doctest::Approx(omega * p.x).epsilon(1e-12));
        CHECK(p.vz == 0.0);
        CHECK(p.rho == doctest::Approx(cfg.density_kg_m3).epsilon(0.01));
    }

    // step k rotates the t=0 configuration by omega * k * dt
    const ParticleSnapshot s3 = generate_snapshot(cfg, 3);
    CHECK(s3.time_s == doctest::Approx(1.5));
    const double a = omega * 1.5;
    for (std::size_t i = 0; i < cfg.n; ++i) {
        const Particle& p0 = s0.particles[i];
        const Particle& p3 = s3.particles[i];
        CHECK(p3.x == doctest::Approx(p0.x * std::cos(a) - p0.y * std::sin(a)).epsilon(1e-9));
        CHECK(p3.y == doctest::Approx(p0.x * std::sin(a) + p0.y * std::cos(a)).epsilon(1e-9));
        CHECK(p3.z == p0.z);
        CHECK(p3.rho == p0.rho);
    }
}
