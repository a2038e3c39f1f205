#include "sparsepde/rng.hpp"

#include <sstream>

#include "sparsepde/errors.hpp"

namespace sparsepde {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index) {
  std::uint64_t h = mix64(master ^ fnv1a(tag));
  return mix64(h ^ index);
}

Rng derive_rng(std::uint64_t master, std::string_view tag, std::uint64_t index) {
  return Rng(derive_seed(master, tag, index));
}

std::string rng_state_to_string(const Rng& rng) {
  std::ostringstream out;
  out << rng;
  return out.str();
}

Rng rng_state_from_string(const std::string& state) {
  Rng rng;
  std::istringstream in(state);
  in >> rng;
  if (in.fail()) {
    throw CheckpointCorruptError("unreadable RNG state");
  }
  return rng;
}

}  // namespace sparsepde
