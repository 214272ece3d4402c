#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <unordered_map>
#include <vector>

#include "chad/integrator.hpp"
#include "chad/parallel.hpp"
#include "chad/params.hpp"
#include "chad/snapshot.hpp"
#include "chad/state.hpp"

namespace chad {

/// Outer (flow-snapshot) cadence and the biokinetic substepping inside it.
struct SyncPolicy {
    double outer_dt_s = 0.5;
    int inner_substeps = 10;

    double inner_dt_days() const { return seconds_to_days(outer_dt_s / inner_substeps); }
    void validate() const;
};

/// The particle ensemble: one closed micro-reactor per flow particle, all
/// sharing one immutable parameter block. particle_volume = V_tank / N is
/// bookkeeping for extensive quantities; the closed-reactor concentration
/// dynamics themselves are volume-independent (every headspace term enters
/// through the V_liq/V_gas and k_p/V_gas ratios, which are those of the
/// tank), so each particle integrates bit-identically to a single tank-sized
/// reactor.
struct FieldState {
    double v_tank = 0;          // m3
    double particle_volume = 0; // m3, V_tank / N
    double time_s = 0;
    std::vector<std::uint64_t> ids; // snapshot load order
    std::vector<std::array<double, 3>> positions;
    std::vector<AdmState> states;
    std::unordered_map<std::uint64_t, std::size_t> index_of;
    std::shared_ptr<const AdmParams> params;

    std::size_t size() const { return ids.size(); }
};

/// One AD micro-reactor per snapshot particle, all cloned from `initial`
/// (made algebraically consistent once here).
FieldState init_field(const ParticleSnapshot& snap, double v_tank, const AdmState& initial,
                      std::shared_ptr<const AdmParams> params, const IntegratorConfig& icfg);

/// Advance every particle by inner_substeps closed-reactor steps covering
/// outer_dt, then take the positions of the new snapshot. No inter-particle
/// exchange of any kind: particle k's trajectory depends only on particle
/// k's own state. Results are independent of the pool's worker count.
void advance(FieldState& field, const ParticleSnapshot& snap, const SyncPolicy& policy,
             WorkerPool& pool, const IntegratorConfig& icfg, StepStats* stats = nullptr);

/// The kernel inside advance(), exposed for the scaling benchmark: steps
/// states[begin:end) by one outer interval without any snapshot handling.
void advance_states_kernel(std::vector<AdmState>& states, std::size_t begin, std::size_t end,
                           const AdmParams& params, const SyncPolicy& policy,
                           const IntegratorConfig& icfg, StepStats* stats);

/// Per-particle (id, x, y, z, value) table, rows ordered by id.
/// CSV: header `id,x,y,z,<component>`. Binary: magic "CHADFLD1", u32
/// version, f64 time_s, u64 count, u16 name length + name, then rows of
/// (u64 id, f64 x, y, z, value).
void export_field_csv(const FieldState& field, Component c, const std::filesystem::path& path);
void export_field_binary(const FieldState& field, Component c, const std::filesystem::path& path);

struct FieldExport {
    double time_s = 0;
    std::string component;
    struct Row {
        std::uint64_t id;
        double x, y, z, value;
        bool operator==(const Row&) const = default;
    };
    std::vector<Row> rows;
    bool operator==(const FieldExport&) const = default;
};
FieldExport read_field_export_binary(const std::filesystem::path& path);

} // namespace chad
