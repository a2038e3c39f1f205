#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace sparsepde {

using Rng = std::mt19937_64;

// splitmix64 finalizer, used to whiten derived seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent stream from (master seed, purpose tag, index).
// Consumers get their own streams so adding one (e.g. evaluation noise)
// never perturbs another (e.g. training exploration).
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index = 0);
Rng derive_rng(std::uint64_t master, std::string_view tag, std::uint64_t index = 0);

std::string rng_state_to_string(const Rng& rng);
Rng rng_state_from_string(const std::string& state);

}  // namespace sparsepde
