#include "retailsim/engine/rng.hpp"

#include <cmath>

#include "retailsim/error.hpp"

namespace retailsim {

std::string_view stream_name(StreamId id) noexcept
{
    return kStreamNames[static_cast<std::size_t>(id)];
}

std::uint64_t splitmix64(std::uint64_t& state) noexcept
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t child) noexcept
{
    std::uint64_t state = parent;
    const std::uint64_t a = splitmix64(state);
    state = a ^ (child * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL);
    return splitmix64(state);
}

RngStream::RngStream(std::uint64_t run_seed, StreamId id)
    : id_(id), seed_(derive_seed(run_seed, static_cast<std::uint64_t>(id) + 1)), engine_(seed_)
{
}

std::uint64_t RngStream::next_u64()
{
    ++draws_;
    return engine_();
}

double RngStream::uniform01()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::uniform_index(std::uint64_t n)
{
    if (n == 0) {
        throw ModelError("uniform_index over an empty range");
    }
    // Rejection sampling removes the modulo bias.
    const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % n + 1) % n;
    std::uint64_t x = next_u64();
    while (x > limit) {
        x = next_u64();
    }
    return x % n;
}

double RngStream::exponential(double mean)
{
    return -mean * std::log1p(-uniform01());
}

RngStreams::RngStreams(std::uint64_t run_seed)
    : streams_{RngStream(run_seed, StreamId::Arrivals), RngStream(run_seed, StreamId::Decisions),
               RngStream(run_seed, StreamId::Delays), RngStream(run_seed, StreamId::PoolSelection),
               RngStream(run_seed, StreamId::RefundAmounts)}
{
}

} // namespace retailsim
