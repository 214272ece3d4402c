#include "chad/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace chad {

void SyncPolicy::validate() const {
    if (!(outer_dt_s > 0.0)) throw ConfigError("sync policy: outer_dt must be > 0");
    if (inner_substeps < 1) throw ConfigError("sync policy: inner_substeps must be >= 1");
}

FieldState init_field(const ParticleSnapshot& snap, double v_tank, const AdmState& initial,
                      std::shared_ptr<const AdmParams> params, const IntegratorConfig& icfg) {
    if (snap.particles.empty()) throw ConfigError("init_field: snapshot has no particles");
    if (!(v_tank > 0.0)) throw ConfigError("init_field: tank volume must be > 0");
    if (!params) throw ConfigError("init_field: params must be set");

    FieldState f;
    f.v_tank = v_tank;
    f.particle_volume = v_tank / static_cast<double>(snap.particles.size());
    f.time_s = snap.time_s;
    f.params = std::move(params);

    AdmState seed = initial;
    ReactorContext ctx;
    ctx.params = f.params.get();
    ctx.inflow = &seed;
    ctx.q_in = 0.0;
    ctx.q_out = 0.0;
    ctx.mode = icfg.mode;
    ctx.newton = icfg.newton;
    make_consistent(seed, ctx);

    const std::size_t n = snap.particles.size();
    f.ids.reserve(n);
    f.positions.reserve(n);
    f.states.assign(n, seed);
    f.index_of.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) {
        const Particle& p = snap.particles[i];
        f.ids.push_back(p.id);
        f.positions.push_back({p.x, p.y, p.z});
        if (!f.index_of.emplace(p.id, i).second)
            throw ConfigError("init_field: duplicate particle id " + std::to_string(p.id));
    }
    return f;
}

void advance_states_kernel(std::vector<AdmState>& states, std::size_t begin, std::size_t end,
                           const AdmParams& params, const SyncPolicy& policy,
                           const IntegratorConfig& icfg, StepStats* stats) {
    const double dt_d = policy.inner_dt_days();
    for (std::size_t i = begin; i < end; ++i) {
        AdmState& s = states[i];
        ReactorContext ctx;
        ctx.params = &params;
        ctx.inflow = &s; // closed reactor: inflow terms carry weight zero
        ctx.q_in = 0.0;
        ctx.q_out = 0.0;
        ctx.mode = icfg.mode;
        ctx.newton = icfg.newton;
        ctx.stats = stats;
        for (int k = 0; k < policy.inner_substeps; ++k)
            step_fixed(s, ctx, dt_d, icfg.scheme);
    }
}

void advance(FieldState& field, const ParticleSnapshot& snap, const SyncPolicy& policy,
             WorkerPool& pool, const IntegratorConfig& icfg, StepStats* stats) {
    policy.validate();
    const double expected = field.time_s + policy.outer_dt_s;
    const double tol = 1.0e-6 * std::max(1.0, policy.outer_dt_s);
    if (std::abs(snap.time_s - expected) > tol)
        throw ConfigError("advance: snapshot at t = " + std::to_string(snap.time_s) +
                          " s does not continue the field at t = " +
                          std::to_string(field.time_s) + " s with outer_dt = " +
                          std::to_string(policy.outer_dt_s) + " s");
    if (snap.particles.size() != field.size())
        throw ConfigError("advance: snapshot particle count " +
                          std::to_string(snap.particles.size()) + " != field size " +
                          std::to_string(field.size()));
    for (const Particle& p : snap.particles)
        if (!field.index_of.count(p.id))
            throw ConfigError("advance: snapshot particle id " + std::to_string(p.id) +
                              " unknown to the field");

    const Partition part = partition(field.size(), pool.size());
    std::vector<StepStats> chunk_stats(part.chunks.size());
    pool.run_chunks(part, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        advance_states_kernel(field.states, begin, end, *field.params, policy, icfg,
                              stats ? &chunk_stats[chunk] : nullptr);
    });
    if (stats) {
        for (const StepStats& c : chunk_stats) {
            stats->steps += c.steps;
            stats->rhs_evals += c.rhs_evals;
            stats->proton_iterations += c.proton_iterations;
            stats->sh2_iterations += c.sh2_iterations;
            stats->clamped += c.clamped;
            stats->max_proton_residual = std::max(stats->max_proton_residual, c.max_proton_residual);
        }
    }

    // Advection is carried by the particle movement itself.
    for (const Particle& p : snap.particles) {
        const std::size_t i = field.index_of.at(p.id);
        field.positions[i] = {p.x, p.y, p.z};
    }
    field.time_s = snap.time_s;
}

namespace {

std::vector<std::size_t> order_by_id(const FieldState& f) {
    std::vector<std::size_t> idx(f.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return f.ids[a] < f.ids[b]; });
    return idx;
}

constexpr char kFieldMagic[8] = {'C', 'H', 'A', 'D', 'F', 'L', 'D', '1'};

} // namespace

void export_field_csv(const FieldState& field, Component c, const std::filesystem::path& path) {
    std::FILE* f = std::fopen(path.string().c_str(), "wb");
    if (!f) throw IoError("cannot open for writing: " + path.string());
    std::fprintf(f, "id,x,y,z,%s\n", std::string(component_name(c)).c_str());
    for (std::size_t i : order_by_id(field)) {
        std::fprintf(f, "%llu,%.17g,%.17g,%.17g,%.17g\n",
                     static_cast<unsigned long long>(field.ids[i]), field.positions[i][0],
                     field.positions[i][1], field.positions[i][2], field.states[i][c]);
    }
    if (std::fclose(f) != 0) throw IoError("write failed: " + path.string());
}

void export_field_binary(const FieldState& field, Component c,
                         const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out.write(kFieldMagic, 8);
    const std::uint32_t version = 1;
    out.write(reinterpret_cast<const char*>(&version), 4);
    out.write(reinterpret_cast<const char*>(&field.time_s), 8);
    const std::uint64_t count = field.size();
    out.write(reinterpret_cast<const char*>(&count), 8);
    const std::string name(component_name(c));
    const std::uint16_t len = static_cast<std::uint16_t>(name.size());
    out.write(reinterpret_cast<const char*>(&len), 2);
    out.write(name.data(), len);
    for (std::size_t i : order_by_id(field)) {
        const std::uint64_t id = field.ids[i];
        const double vals[4] = {field.positions[i][0], field.positions[i][1],
                                field.positions[i][2], field.states[i][c]};
        out.write(reinterpret_cast<const char*>(&id), 8);
        out.write(reinterpret_cast<const char*>(vals), 32);
    }
    if (!out) throw IoError("write failed: " + path.string());
}

FieldExport read_field_export_binary(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    const std::string origin = path.string();
    auto read_exact = [&](void* dst, std::size_t bytes, const char* what) {
        in.read(static_cast<char*>(dst), static_cast<std::streamsize>(bytes));
        if (static_cast<std::size_t>(in.gcount()) != bytes)
            throw ParseError(origin, 0, std::string("truncated file while reading ") + what);
    };
    char magic[8];
    read_exact(magic, 8, "magic");
    if (std::memcmp(magic, kFieldMagic, 8) != 0) throw ParseError(origin, 0, "bad magic bytes");
    std::uint32_t version = 0;
    read_exact(&version, 4, "version");
    if (version != 1) throw ParseError(origin, 0, "unsupported field export version");

    FieldExport ex;
    std::uint64_t count = 0;
    read_exact(&ex.time_s, 8, "time");
    read_exact(&count, 8, "count");
    std::uint16_t len = 0;
    read_exact(&len, 2, "name length");
    ex.component.resize(len);
    read_exact(ex.component.data(), len, "component name");
    ex.rows.resize(count);
    for (auto& r : ex.rows) {
        read_exact(&r.id, 8, "row id");
        double vals[4];
        read_exact(vals, 32, "row values");
        r.x = vals[0];
        r.y = vals[1];
        r.z = vals[2];
        r.value = vals[3];
    }
    return ex;
}

} // namespace chad
