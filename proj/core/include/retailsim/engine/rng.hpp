#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string_view>

namespace retailsim {

// One stream per concern so that changing one experiment factor does not
// shift the draws seen by the others.
enum class StreamId : std::uint8_t {
    Arrivals,
    Decisions,
    Delays,
    PoolSelection,
    RefundAmounts,
};

inline constexpr std::array<std::string_view, 5> kStreamNames{
    "arrivals", "decisions", "delays", "pool-selection", "refund-amounts"};

std::string_view stream_name(StreamId id) noexcept;

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

// Pure mixing of a parent seed with a child index.
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t child) noexcept;

/// Seeded random source. The draw algorithms below are written out rather
/// than taken from <random> distributions so that sequences are identical
/// across standard library implementations.
class RngStream {
public:
    RngStream(std::uint64_t run_seed, StreamId id);

    StreamId id() const noexcept { return id_; }
    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t draws() const noexcept { return draws_; }

    std::uint64_t next_u64();
    // Uniform on [0, 1) with 53 bits of resolution.
    double uniform01();
    // Uniform on {0, ..., n-1}; n must be positive.
    std::uint64_t uniform_index(std::uint64_t n);
    double exponential(double mean);
    bool bernoulli(double p) { return uniform01() < p; }

private:
    StreamId id_;
    std::uint64_t seed_;
    std::uint64_t draws_ = 0;
    std::mt19937_64 engine_;
};

/// The full set of named streams for one run.
class RngStreams {
public:
    explicit RngStreams(std::uint64_t run_seed);

    RngStream& operator[](StreamId id) { return streams_[static_cast<std::size_t>(id)]; }

private:
    std::array<RngStream, kStreamNames.size()> streams_;
};

} // namespace retailsim
