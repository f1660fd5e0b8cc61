#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "netfuzz/seed.hpp"

namespace netfuzz {

/// Seed file format, bit-exact across platforms:
///   PIW=<n> CYC=<m> SEEDFMT=1
/// followed by m lines of n characters over {0,1}, PI declaration order.
std::string write_seed_text(const SeedVectors& vectors);

/// Throws ParseError on a malformed header, bad characters, or row-count /
/// width inconsistencies.
SeedVectors parse_seed_text(std::string_view text);

void save_seed_file(const SeedVectors& vectors, const std::filesystem::path& path);
SeedVectors load_seed_file(const std::filesystem::path& path);

/// Corpus directory layout: queue/<id>.seed and archive/<id>.seed.
struct CorpusPaths {
  std::filesystem::path root;
  std::filesystem::path queue() const { return root / "queue"; }
  std::filesystem::path archive() const { return root / "archive"; }
};

void save_corpus(const CorpusPaths& paths, const std::vector<Seed>& queue,
                 const std::vector<Seed>& archive);

struct CorpusLoad {
  std::vector<Seed> queue;
  std::vector<Seed> archive;
  std::size_t skipped = 0;  // malformed or width-mismatched files
};

/// Loads both directories; seeds whose width differs from `expected_width`
/// (when nonzero) or whose files are malformed are skipped with a warning and
/// counted. Unknown files are ignored. Load order is by filename.
CorpusLoad load_corpus(const CorpusPaths& paths, std::size_t expected_width);

}  // namespace netfuzz
