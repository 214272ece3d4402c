#include "chad/snapshot.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <random>
#include <algorithm>

namespace chad {

static_assert(std::endian::native == std::endian::little,
              "snapshot codec assumes a little-endian host");

namespace {

constexpr char kMagic[8] = {'C', 'H', 'A', 'D', 'P', 'R', 'T', '1'};
constexpr std::uint32_t kVersion = 1;

// Uniqueness check sized for million-particle snapshots: row-index ids are
// recognized in one compare pass, a compact id space uses a bitmap, anything
// else falls back to sorting.
void check_unique_ids(const ParticleSnapshot& s, const std::string& origin) {
    const std::size_t n = s.particles.size();
    if (n < 2) return;
    bool sequential = true;
    for (std::size_t i = 0; i < n; ++i)
        if (s.particles[i].id != i) {
            sequential = false;
            break;
        }
    if (sequential) return;
    std::uint64_t max_id = 0;
    for (const Particle& p : s.particles) max_id = std::max(max_id, p.id);

    if (max_id / 64 < 8 * n) {
        std::vector<std::uint64_t> bitmap(max_id / 64 + 1, 0);
        for (const Particle& p : s.particles) {
            std::uint64_t& word = bitmap[p.id >> 6];
            const std::uint64_t bit = 1ull << (p.id & 63);
            if (word & bit)
                throw ParseError(origin, 0, "duplicate particle id " + std::to_string(p.id));
            word |= bit;
        }
        return;
    }
    std::vector<std::uint64_t> ids;
    ids.reserve(n);
    for (const Particle& p : s.particles) ids.push_back(p.id);
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 1; i < n; ++i)
        if (ids[i] == ids[i - 1])
            throw ParseError(origin, 0, "duplicate particle id " + std::to_string(ids[i]));
}

double parse_field(const char*& cur, const char* end, const std::string& origin, long line,
                   const char* what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(cur, end, v);
    if (ec != std::errc{})
        throw ParseError(origin, line, std::string("bad ") + what);
    cur = ptr;
    return v;
}

void expect_comma(const char*& cur, const char* end, const std::string& origin, long line) {
    if (cur >= end || *cur != ',')
        throw ParseError(origin, line, "expected ',' separator");
    ++cur;
}

} // namespace

ParticleSnapshot load_snapshot_ascii(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path.string());
    const std::string origin = path.string();

    std::string line;
    long line_no = 0;
    if (!std::getline(in, line)) throw ParseError(origin, 1, "empty file");
    ++line_no;

    ParticleSnapshot snap;
    std::uint64_t declared = 0;
    {
        double t = 0;
        unsigned long long n = 0;
        if (std::sscanf(line.c_str(), "# chad-snapshot v1 t=%lf n=%llu", &t, &n) != 2)
            throw ParseError(origin, 1,
                             "bad header, expected '# chad-snapshot v1 t=<s> n=<count>'");
        snap.time_s = t;
        declared = n;
    }
    if (declared == 0) throw ParseError(origin, 1, "zero particles declared");
    snap.particles.reserve(declared);

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const char* cur = line.data();
        const char* end = line.data() + line.size();

        Particle p;
        {
            std::uint64_t id = 0;
            auto [ptr, ec] = std::from_chars(cur, end, id);
            if (ec != std::errc{}) throw ParseError(origin, line_no, "bad particle id");
            p.id = id;
            cur = ptr;
        }
        double* fields[7] = {&p.x, &p.y, &p.z, &p.vx, &p.vy, &p.vz, &p.rho};
        const char* names[7] = {"x", "y", "z", "vx", "vy", "vz", "rho"};
        for (int i = 0; i < 7; ++i) {
            expect_comma(cur, end, origin, line_no);
            *fields[i] = parse_field(cur, end, origin, line_no, names[i]);
        }
        if (cur != end) throw ParseError(origin, line_no, "trailing characters after rho");
        for (int i = 0; i < 7; ++i)
            if (!std::isfinite(*fields[i]))
                throw ParseError(origin, line_no,
                                 std::string("non-finite value in field ") + names[i]);
        snap.particles.push_back(p);
    }
    if (snap.particles.empty()) throw ParseError(origin, line_no, "zero particle rows");
    if (snap.particles.size() != declared)
        throw ParseError(origin, line_no,
                         "header declares " + std::to_string(declared) + " particles but " +
                             std::to_string(snap.particles.size()) + " rows were read");
    check_unique_ids(snap, origin);
    return snap;
}

void write_snapshot_ascii(const ParticleSnapshot& snap, const std::filesystem::path& path) {
    std::FILE* f = std::fopen(path.string().c_str(), "wb");
    if (!f) throw IoError("cannot open for writing: " + path.string());
    std::fprintf(f, "# chad-snapshot v1 t=%.17g n=%zu\n", snap.time_s, snap.particles.size());
    for (const Particle& p : snap.particles)
        std::fprintf(f, "%llu,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                     static_cast<unsigned long long>(p.id), p.x, p.y, p.z, p.vx, p.vy, p.vz,
                     p.rho);
    if (std::fclose(f) != 0) throw IoError("write failed: " + path.string());
}

ParticleSnapshot load_snapshot_binary(const std::filesystem::path& path) {
    std::FILE* f = std::fopen(path.string().c_str(), "rb");
    if (!f) throw IoError("cannot open: " + path.string());
    struct Closer {
        std::FILE* f;
        ~Closer() { std::fclose(f); }
    } closer{f};
    const std::string origin = path.string();

    auto read_exact = [&](void* dst, std::size_t bytes, const char* what) {
        if (std::fread(dst, 1, bytes, f) != bytes)
            throw ParseError(origin, 0, std::string("truncated file while reading ") + what);
    };

    char magic[8];
    read_exact(magic, 8, "magic");
    if (std::memcmp(magic, kMagic, 8) != 0) throw ParseError(origin, 0, "bad magic bytes");
    std::uint32_t version = 0;
    read_exact(&version, 4, "version");
    if (version != kVersion)
        throw ParseError(origin, 0,
                         "unsupported format version " + std::to_string(version) +
                             " (expected " + std::to_string(kVersion) + ")");
    ParticleSnapshot snap;
    std::uint64_t count = 0;
    read_exact(&snap.time_s, 8, "time");
    read_exact(&count, 8, "count");

    snap.particles.resize(count);
    static_assert(sizeof(Particle) == 64, "particle record layout");
    if (count > 0)
        read_exact(snap.particles.data(), count * sizeof(Particle), "particle records");
    char extra;
    if (std::fread(&extra, 1, 1, f) != 0)
        throw ParseError(origin, 0, "trailing bytes after particle records");
    check_unique_ids(snap, origin);
    return snap;
}

void write_snapshot_binary(const ParticleSnapshot& snap, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out.write(kMagic, 8);
    const std::uint32_t version = kVersion;
    out.write(reinterpret_cast<const char*>(&version), 4);
    out.write(reinterpret_cast<const char*>(&snap.time_s), 8);
    const std::uint64_t count = snap.particles.size();
    out.write(reinterpret_cast<const char*>(&count), 8);
    out.write(reinterpret_cast<const char*>(snap.particles.data()),
              static_cast<std::streamsize>(count * sizeof(Particle)));
    if (!out) throw IoError("write failed: " + path.string());
}

ParticleSnapshot generate_snapshot(const SnapshotGenConfig& cfg, long step_index) {
    if (cfg.n == 0) throw ConfigError("generate_snapshot: n must be > 0");
    const double t = cfg.outer_dt_s * static_cast<double>(step_index);
    const double omega = cfg.rpm * 2.0 * 3.14159265358979323846 / 60.0; // rad/s

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    ParticleSnapshot snap;
    snap.time_s = t;
    snap.particles.resize(cfg.n);
    for (std::size_t i = 0; i < cfg.n; ++i) {
        const double r = cfg.radius_m * std::sqrt(uni(rng));
        const double theta0 = 2.0 * 3.14159265358979323846 * uni(rng);
        const double z = cfg.height_m * uni(rng);
        const double rho = cfg.density_kg_m3 * (1.0 + 0.01 * (uni(rng) - 0.5));

        const double theta = theta0 + omega * t;
        Particle& p = snap.particles[i];
        p.id = i;
        p.x = r * std::cos(theta);
        p.y = r * std::sin(theta);
        p.z = z;
        p.vx = -omega * r * std::sin(theta);
        p.vy = omega * r * std::cos(theta);
        p.vz = 0.0;
        p.rho = rho;
    }
    return snap;
}

} // namespace chad
