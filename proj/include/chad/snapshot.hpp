#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <vector>

#include "chad/errors.hpp"

namespace chad {

// No member initializers: million-particle buffers are bulk-filled by the
// codecs, and default-init must stay free of a zeroing pass. Use Particle{}
// when a zeroed record is wanted.
struct Particle {
    std::uint64_t id;
    double x, y, z;    // m
    double vx, vy, vz; // m/s
    double rho;        // kg/m3

    bool operator==(const Particle&) const = default;
};

/// Allocator adaptor that default-initializes instead of value-initializing,
/// so resize() of a big particle buffer does not memset what a bulk read is
/// about to overwrite.
template <class T, class A = std::allocator<T>>
struct DefaultInitAllocator : A {
    template <class U>
    struct rebind {
        using other =
            DefaultInitAllocator<U, typename std::allocator_traits<A>::template rebind_alloc<U>>;
    };
    using A::A;
    template <class U>
    void construct(U* ptr) noexcept(std::is_nothrow_default_constructible_v<U>) {
        ::new (static_cast<void*>(ptr)) U;
    }
    template <class U, class... Args>
    void construct(U* ptr, Args&&... args) {
        std::allocator_traits<A>::construct(static_cast<A&>(*this), ptr,
                                            std::forward<Args>(args)...);
    }
};

using ParticleVec = std::vector<Particle, DefaultInitAllocator<Particle>>;

/// One timestep of externally computed flow-field particle data.
struct ParticleSnapshot {
    double time_s = 0;
    ParticleVec particles; // file row order preserved

    bool operator==(const ParticleSnapshot&) const = default;
};

// ASCII format: header `# chad-snapshot v1 t=<seconds> n=<count>`, then one
// `id,x,y,z,vx,vy,vz,rho` row per particle. Emission uses 17 significant
// digits so an ascii -> binary -> ascii round trip preserves values exactly.
ParticleSnapshot load_snapshot_ascii(const std::filesystem::path& path);
void write_snapshot_ascii(const ParticleSnapshot& snap, const std::filesystem::path& path);

// Binary format (bit-exact, little-endian): magic "CHADPRT1" (8 bytes),
// u32 version = 1, f64 time_seconds, u64 count, then count records of
// (u64 id, f64 x,y,z,vx,vy,vz,rho), no padding.
ParticleSnapshot load_snapshot_binary(const std::filesystem::path& path);
void write_snapshot_binary(const ParticleSnapshot& snap, const std::filesystem::path& path);

/// Synthetic snapshot sequences: particles uniformly placed in a cylinder,
/// rigid-rotation velocity field, id = row index. A given (config, step)
/// pair is fully deterministic.
struct SnapshotGenConfig {
    std::size_t n = 1000;
    double radius_m = 0.1;
    double height_m = 0.25;
    double rpm = 12.0;
    double density_kg_m3 = 1000.0;
    double outer_dt_s = 0.5;
    std::uint64_t seed = 42;
};
ParticleSnapshot generate_snapshot(const SnapshotGenConfig& cfg, long step_index);

} // namespace chad
