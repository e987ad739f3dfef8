#pragma once

#include <cstdint>
#include <random>

namespace gridsym {

using Rng = std::mt19937_64;

namespace detail {
// splitmix64 finalizer; decorrelates consecutive seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}
}  // namespace detail

/// Engine for a numbered stream derived from a master seed. Stream i of a
/// given seed is always the same sequence, independent of how many other
/// streams were drawn, so per-trial streams stay reproducible under any
/// execution order.
inline Rng make_stream(std::uint64_t master_seed, std::uint64_t stream_index = 0) {
    return Rng(detail::mix64(detail::mix64(master_seed) ^ stream_index));
}

}  // namespace gridsym
