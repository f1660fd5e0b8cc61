#include "netfuzz/seed_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "netfuzz/log.hpp"
#include "netfuzz/types.hpp"

namespace netfuzz {

std::string write_seed_text(const SeedVectors& vectors) {
  const std::size_t width = vectors.empty() ? 0 : vectors.front().size();
  std::string out = "PIW=" + std::to_string(width) + " CYC=" + std::to_string(vectors.size()) +
                    " SEEDFMT=1\n";
  for (const InputVector& row : vectors) {
    for (std::uint8_t bit : row) out += bit ? '1' : '0';
    out += '\n';
  }
  return out;
}

SeedVectors parse_seed_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) throw ParseError("seed file is empty");

  std::size_t width = 0, cyc = 0;
  int fmt = -1;
  std::istringstream hs(header);
  std::string field;
  while (hs >> field) {
    if (field.rfind("PIW=", 0) == 0)
      width = std::stoul(field.substr(4));
    else if (field.rfind("CYC=", 0) == 0)
      cyc = std::stoul(field.substr(4));
    else if (field.rfind("SEEDFMT=", 0) == 0)
      fmt = std::stoi(field.substr(8));
    else
      throw ParseError("seed header has unknown field '" + field + "'");
  }
  if (fmt != 1) throw ParseError("unsupported seed format version");
  if (width == 0 || cyc == 0) throw ParseError("seed header missing PIW/CYC");

  SeedVectors vectors;
  vectors.reserve(cyc);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.size() != width)
      throw ParseError("seed row has " + std::to_string(line.size()) + " bits, expected " +
                       std::to_string(width));
    InputVector row(width);
    for (std::size_t i = 0; i < width; ++i) {
      if (line[i] != '0' && line[i] != '1') throw ParseError("seed row has non-binary digit");
      row[i] = line[i] == '1' ? 1 : 0;
    }
    vectors.push_back(std::move(row));
  }
  if (vectors.size() != cyc)
    throw ParseError("seed has " + std::to_string(vectors.size()) + " rows, header says " +
                     std::to_string(cyc));
  return vectors;
}

void save_seed_file(const SeedVectors& vectors, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write seed file '" + path.string() + "'");
  out << write_seed_text(vectors);
}

SeedVectors load_seed_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open seed file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_seed_text(buf.str());
}

void save_corpus(const CorpusPaths& paths, const std::vector<Seed>& queue,
                 const std::vector<Seed>& archive) {
  std::filesystem::create_directories(paths.queue());
  std::filesystem::create_directories(paths.archive());
  for (const Seed& s : queue)
    save_seed_file(s.vectors, paths.queue() / (seed_id_string(s.id) + ".seed"));
  for (const Seed& s : archive)
    save_seed_file(s.vectors, paths.archive() / (seed_id_string(s.id) + ".seed"));
}

namespace {

std::vector<Seed> load_dir(const std::filesystem::path& dir, std::size_t expected_width,
                           std::size_t& skipped) {
  std::vector<Seed> seeds;
  if (!std::filesystem::is_directory(dir)) return seeds;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() != ".seed") {
      log::info("corpus: ignoring " + entry.path().filename().string());
      continue;
    }
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    try {
      SeedVectors v = load_seed_file(file);
      if (expected_width != 0 && v.front().size() != expected_width)
        throw ParseError("width " + std::to_string(v.front().size()) + " does not match " +
                         std::to_string(expected_width) + " primary inputs");
      seeds.push_back(Seed::from_vectors(std::move(v)));
    } catch (const ParseError& e) {
      log::warn("corpus: skipping " + file.filename().string() + ": " + e.what());
      ++skipped;
    }
  }
  return seeds;
}

}  // namespace

CorpusLoad load_corpus(const CorpusPaths& paths, std::size_t expected_width) {
  CorpusLoad out;
  out.queue = load_dir(paths.queue(), expected_width, out.skipped);
  out.archive = load_dir(paths.archive(), expected_width, out.skipped);
  return out;
}

}  // namespace netfuzz
