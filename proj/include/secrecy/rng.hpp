#pragma once

#include <cstddef>
#include <cstdint>

namespace secrecy {

__extension__ typedef unsigned __int128 uint128;

inline std::uint64_t splitmix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for sub-task (a, b) of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) noexcept {
    return splitmix64(splitmix64(seed ^ splitmix64(a)) ^ splitmix64(b + 0x632be59bd9b4e019ULL));
}

/// Counter-based stream: draw k of stream (seed, id) depends only on
/// (seed, id, k), so blocks can be generated in any order on any thread.
class Stream {
public:
    Stream(std::uint64_t seed, std::uint64_t stream_id) noexcept
        : key_(splitmix64(seed ^ splitmix64(stream_id ^ 0xd1b54a32d192ed03ULL))) {}

    std::uint64_t next() noexcept { return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    /// Uniform on the open interval (0, 1).
    double uniform() noexcept { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::size_t index(std::size_t n) noexcept {
        return static_cast<std::size_t>(
            (static_cast<uint128>(next()) * static_cast<uint128>(n)) >> 64);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace secrecy
