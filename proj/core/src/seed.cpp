#include "netfuzz/seed.hpp"

#include <array>
#include <cstdio>

namespace netfuzz {

std::uint64_t seed_hash(const SeedVectors& vectors) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint8_t byte) {
    h ^= byte;
    h *= 0x00000100000001b3ull;
  };
  const std::uint64_t width = vectors.empty() ? 0 : vectors.front().size();
  for (int i = 0; i < 8; ++i) mix(static_cast<std::uint8_t>(width >> (8 * i)));
  for (const InputVector& row : vectors) {
    mix(0xfe);  // row separator keeps [01],[0] distinct from [0],[01]
    for (std::uint8_t bit : row) mix(bit ? 1 : 0);
  }
  return h;
}

std::string seed_id_string(std::uint64_t id) {
  std::array<char, 17> buf{};
  std::snprintf(buf.data(), buf.size(), "%016llx", static_cast<unsigned long long>(id));
  return std::string(buf.data());
}

Seed Seed::from_vectors(SeedVectors v, std::optional<std::uint64_t> parent_id) {
  Seed s;
  s.vectors = std::move(v);
  s.id = seed_hash(s.vectors);
  s.parent = parent_id;
  return s;
}

}  // namespace netfuzz
