#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace qproc::wbp {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer; the fixed avalanche used everywhere a 64-bit word
// has to be scrambled deterministically.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Maps a mixed word into (0,1). The mathematical target is
// (z+1)/(2^64+1); in double arithmetic the quotient can round onto the
// endpoints, so the value is clamped one ulp inside.
constexpr double unit_from_word(std::uint64_t z) {
  double u = (static_cast<double>(z) + 1.0) * 0x1.0p-64;
  if (u >= 1.0) u = 0x1.fffffffffffffp-1;
  if (u <= 0.0) u = 0x1.0p-64;
  return u;
}

// Address of a vertex in the binary tree {1,2}*; empty = root.
class VertexAddress {
 public:
  static constexpr std::size_t kMaxDepth = 64;

  VertexAddress() = default;
  VertexAddress(std::initializer_list<int> symbols);

  std::size_t depth() const { return symbols_.size(); }
  int symbol(std::size_t position) const { return symbols_[position]; }

  VertexAddress child(int symbol) const;
  void append(int symbol);

  friend bool operator==(const VertexAddress& a, const VertexAddress& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<std::uint8_t> symbols_;
};

// Deterministic map from (seed, vertex) to a uniform in (0,1): absorb each
// address symbol into a running state and finalize. Same (seed, v) gives
// the same value on every platform.
double uniform_at(std::uint64_t seed, const VertexAddress& v);

struct UniformTreeSource {
  std::uint64_t seed = 0;
};

// Compact address key for memoization: path bits (symbol-1 per level) plus
// the depth. Only valid down to kMaxDepth.
struct AddrKey {
  std::uint64_t bits = 0;
  std::uint32_t len = 0;
  friend bool operator==(const AddrKey&, const AddrKey&) = default;
};

struct AddrKeyHash {
  std::size_t operator()(const AddrKey& k) const {
    return static_cast<std::size_t>(mix64(k.bits ^ (kGolden * (k.len + 1))));
  }
};

// Incremental cursor over the seeded tree: descending to a child costs one
// mix, and value() reproduces uniform_at(seed, address) bit-exactly.
class TreeCursor {
 public:
  explicit TreeCursor(std::uint64_t seed) : state_(seed) {}

  double value() const { return unit_from_word(mix64(state_)); }

  TreeCursor child(int symbol) const {
    TreeCursor c = *this;
    c.state_ = mix64(state_ ^ (static_cast<std::uint64_t>(symbol) +
                               kGolden * static_cast<std::uint64_t>(pos_)));
    ++c.pos_;
    if (key_valid_ && pos_ < VertexAddress::kMaxDepth) {
      c.key_.bits = key_.bits | (static_cast<std::uint64_t>(symbol - 1) << pos_);
      c.key_.len = static_cast<std::uint32_t>(pos_ + 1);
    } else {
      c.key_valid_ = false;
    }
    return c;
  }

  std::uint64_t depth() const { return pos_; }
  bool key_valid() const { return key_valid_; }
  const AddrKey& key() const { return key_; }

 private:
  std::uint64_t state_;
  std::uint64_t pos_ = 0;
  AddrKey key_{};
  bool key_valid_ = true;
};

// Optional per-read log used by the coupling tests: every uniform the
// evaluators consume is recorded as (address key, depth).
struct AddressLog {
  std::vector<AddrKey> reads;
  void record(const TreeCursor& c) {
    if (c.key_valid()) reads.push_back(c.key());
  }
};

}  // namespace qproc::wbp
