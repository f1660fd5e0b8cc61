#include "netfuzz/mutate.hpp"

#include <algorithm>
#include <array>

#include "netfuzz/rng.hpp"
#include "netfuzz/types.hpp"

namespace netfuzz {

const char* to_string(MutStage stage) {
  switch (stage) {
    case MutStage::BitFlip1: return "bitflip1";
    case MutStage::BitFlip2: return "bitflip2";
    case MutStage::BitFlip4: return "bitflip4";
    case MutStage::ByteFlip1: return "byteflip1";
    case MutStage::ByteFlip2: return "byteflip2";
    case MutStage::ByteFlip4: return "byteflip4";
    case MutStage::Arith8: return "arith8";
    case MutStage::Arith16: return "arith16";
    case MutStage::Arith32: return "arith32";
    case MutStage::Interesting8: return "interesting8";
    case MutStage::Interesting16: return "interesting16";
    case MutStage::Interesting32: return "interesting32";
    case MutStage::Havoc: return "havoc";
    case MutStage::CycleDup: return "cycle_dup";
    case MutStage::CycleDrop: return "cycle_drop";
    case MutStage::CycleSplice: return "cycle_splice";
  }
  return "?";
}

namespace {

constexpr std::array<MutStage, 13> kBaseSchedule = {
    MutStage::BitFlip1,      MutStage::BitFlip2,      MutStage::BitFlip4,
    MutStage::ByteFlip1,     MutStage::ByteFlip2,     MutStage::ByteFlip4,
    MutStage::Arith8,        MutStage::Arith16,       MutStage::Arith32,
    MutStage::Interesting8,  MutStage::Interesting16, MutStage::Interesting32,
    MutStage::Havoc,
};

constexpr std::array<MutStage, 16> kCycleSchedule = {
    MutStage::BitFlip1,      MutStage::BitFlip2,      MutStage::BitFlip4,
    MutStage::ByteFlip1,     MutStage::ByteFlip2,     MutStage::ByteFlip4,
    MutStage::Arith8,        MutStage::Arith16,       MutStage::Arith32,
    MutStage::Interesting8,  MutStage::Interesting16, MutStage::Interesting32,
    MutStage::Havoc,         MutStage::CycleDup,      MutStage::CycleDrop,
    MutStage::CycleSplice,
};

constexpr std::array<std::int64_t, 9> kInteresting8 = {-128, -1, 0, 1, 16, 32, 64, 100, 127};
constexpr std::array<std::int64_t, 19> kInteresting16 = {
    -128, -1,  0,   1,   16,   32,   64,   100,  127,  -32768,
    -129, 128, 255, 256, 512, 1000, 1024, 4096, 32767};
constexpr std::array<std::int64_t, 27> kInteresting32 = {
    -128,   -1,     0,      1,             16,         32,     64,    100,
    127,    -32768, -129,   128,           255,        256,    512,   1000,
    1024,   4096,   32767,  -2147483648LL, -100663046, -32769, 32768, 65535,
    65536,  100663045, 2147483647LL};

struct Bits {
  std::vector<std::uint8_t> flat;  // one byte per bit
  std::size_t width = 0;

  static Bits from(const SeedVectors& vectors) {
    Bits b;
    b.width = vectors.empty() ? 0 : vectors.front().size();
    b.flat.reserve(vectors.size() * b.width);
    for (const InputVector& row : vectors)
      b.flat.insert(b.flat.end(), row.begin(), row.end());
    return b;
  }

  SeedVectors to_vectors() const {
    SeedVectors out;
    if (width == 0) return out;
    out.resize(flat.size() / width);
    for (std::size_t r = 0; r < out.size(); ++r)
      out[r].assign(flat.begin() + r * width, flat.begin() + (r + 1) * width);
    return out;
  }

  // Little-endian read/modify/write of `bytes` 8-bit groups starting at a
  // byte-aligned bit offset; short tails wrap to the available bits.
  std::uint64_t read_word(std::size_t bit0, unsigned bits) const {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < bits; ++i) {
      const std::size_t at = (bit0 + i) % flat.size();
      v |= static_cast<std::uint64_t>(flat[at] & 1) << i;
    }
    return v;
  }

  void write_word(std::size_t bit0, unsigned bits, std::uint64_t v) {
    for (unsigned i = 0; i < bits; ++i) {
      const std::size_t at = (bit0 + i) % flat.size();
      flat[at] = static_cast<std::uint8_t>((v >> i) & 1);
    }
  }
};

void flip_run(Bits& bits, std::mt19937_64& rng, unsigned count) {
  const std::size_t n = bits.flat.size();
  const std::size_t start = rng_below(rng, n);
  for (unsigned i = 0; i < count; ++i) bits.flat[(start + i) % n] ^= 1;
}

void arith_word(Bits& bits, std::mt19937_64& rng, unsigned word_bits) {
  const std::size_t bit0 = rng_below(rng, bits.flat.size());
  const std::uint64_t delta = 1 + rng_below(rng, 35);
  const bool add = rng_bit(rng);
  std::uint64_t v = bits.read_word(bit0, word_bits);
  v = add ? v + delta : v - delta;
  bits.write_word(bit0, word_bits, v);
}

void interesting_word(Bits& bits, std::mt19937_64& rng, unsigned word_bits) {
  const std::size_t bit0 = rng_below(rng, bits.flat.size());
  std::int64_t value = 0;
  switch (word_bits) {
    case 8: value = kInteresting8[rng_below(rng, kInteresting8.size())]; break;
    case 16: value = kInteresting16[rng_below(rng, kInteresting16.size())]; break;
    default: value = kInteresting32[rng_below(rng, kInteresting32.size())]; break;
  }
  bits.write_word(bit0, word_bits, static_cast<std::uint64_t>(value));
}

void havoc(Bits& bits, std::mt19937_64& rng, const MutationConfig& config) {
  const std::uint64_t span = config.havoc_max - config.havoc_min + 1;
  const std::uint64_t ops = config.havoc_min + rng_below(rng, span);
  for (std::uint64_t i = 0; i < ops; ++i) {
    switch (rng_below(rng, 5)) {
      case 0: flip_run(bits, rng, 1); break;
      case 1: flip_run(bits, rng, 8); break;
      case 2: arith_word(bits, rng, 8); break;
      case 3: interesting_word(bits, rng, 8); break;
      default: {  // swap two bytes
        const std::size_t a = rng_below(rng, bits.flat.size());
        const std::size_t b = rng_below(rng, bits.flat.size());
        const std::uint64_t va = bits.read_word(a, 8), vb = bits.read_word(b, 8);
        bits.write_word(a, 8, vb);
        bits.write_word(b, 8, va);
        break;
      }
    }
  }
}

}  // namespace

std::span<const MutStage> mutation_schedule(const MutationConfig& config) {
  if (config.cycle_stages) return kCycleSchedule;
  return kBaseSchedule;
}

SeedVectors mutate(const SeedVectors& vectors, MutStage stage, std::mt19937_64& rng,
                   const MutationConfig& config) {
  if (vectors.empty() || vectors.front().empty()) throw ConfigError("mutation of an empty seed");

  switch (stage) {
    case MutStage::CycleDup: {
      SeedVectors out = vectors;
      if (out.size() < config.max_cycles) {
        const std::size_t at = rng_below(rng, out.size());
        out.insert(out.begin() + at + 1, out[at]);
      }
      return out;
    }
    case MutStage::CycleDrop: {
      SeedVectors out = vectors;
      if (out.size() > 1) out.erase(out.begin() + rng_below(rng, out.size()));
      return out;
    }
    case MutStage::CycleSplice: {
      SeedVectors out = vectors;
      if (out.size() > 1) {
        const std::size_t cut = 1 + rng_below(rng, out.size() - 1);
        std::rotate(out.begin(), out.begin() + cut, out.end());
      }
      return out;
    }
    default: break;
  }

  Bits bits = Bits::from(vectors);
  switch (stage) {
    case MutStage::BitFlip1: flip_run(bits, rng, 1); break;
    case MutStage::BitFlip2: flip_run(bits, rng, 2); break;
    case MutStage::BitFlip4: flip_run(bits, rng, 4); break;
    case MutStage::ByteFlip1: flip_run(bits, rng, 8); break;
    case MutStage::ByteFlip2: flip_run(bits, rng, 16); break;
    case MutStage::ByteFlip4: flip_run(bits, rng, 32); break;
    case MutStage::Arith8: arith_word(bits, rng, 8); break;
    case MutStage::Arith16: arith_word(bits, rng, 16); break;
    case MutStage::Arith32: arith_word(bits, rng, 32); break;
    case MutStage::Interesting8: interesting_word(bits, rng, 8); break;
    case MutStage::Interesting16: interesting_word(bits, rng, 16); break;
    case MutStage::Interesting32: interesting_word(bits, rng, 32); break;
    case MutStage::Havoc: havoc(bits, rng, config); break;
    default: break;
  }
  return bits.to_vectors();
}

}  // namespace netfuzz
