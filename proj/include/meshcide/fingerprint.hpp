#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "meshcide/mesh.hpp"

namespace meshcide {

/// Containment indicator of a pattern over S_1, ..., S_{n_max}, each S_n in
/// lexicographic order. Bit j of level n is set iff the j-th permutation of
/// S_n contains the pattern.
class Fingerprint {
 public:
  explicit Fingerprint(int n_max);

  int depth() const { return n_max_; }
  std::uint64_t level_size(int n) const { return factorial(n); }

  bool test(int n, std::uint64_t j) const {
    const std::uint64_t bit = offset_bits(n) + j;
    return (words_[bit / 64] >> (bit % 64)) & 1U;
  }
  void set(int n, std::uint64_t j) {
    const std::uint64_t bit = offset_bits(n) + j;
    words_[bit / 64] |= std::uint64_t{1} << (bit % 64);
  }

  /// Number of containing permutations of length n.
  std::uint64_t count(int n) const;

  /// Smallest (n, j) where the two disagree, comparing up to the shorter
  /// depth. Empty when they agree there.
  std::optional<std::pair<int, std::uint64_t>> first_difference(const Fingerprint& other) const;

  /// Restriction to levels 1..n.
  Fingerprint truncated(int n) const;

  /// Lowercase hex of the packed bits, least significant word first.
  std::string hex() const;
  static Fingerprint from_hex(int n_max, const std::string& hex);

  std::size_t hash() const;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;

 private:
  static std::uint64_t offset_bits(int n);

  int n_max_;
  std::vector<std::uint64_t> words_;
};

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& f) const { return f.hash(); }
};

/// Depth k+3 capped at 8.
inline int default_fingerprint_depth(int k) { return std::min(k + 3, 8); }

Fingerprint fingerprint(const MeshPattern& pi, int n_max, int threads = 0);

/// Per-host containment data for one classical pattern p: for every w in
/// S_1..S_{n_max}, the subset-minimal occupied-square masks over all
/// classical occurrences of p in w. A mesh R is contained in w iff some
/// stored mask is disjoint from R, so every mesh over p can be
/// fingerprinted without re-enumerating occurrences.
class HostTable {
 public:
  HostTable(const Permutation& p, int n_max, int threads = 0);

  const Permutation& pattern() const { return p_; }
  int depth() const { return n_max_; }

  bool contains(const Mesh& mesh, int n, std::uint64_t j) const;
  Fingerprint fingerprint(const Mesh& mesh) const;

 private:
  Permutation p_;
  int n_max_;
  // Host h (global index over all levels) owns masks_[start_[h] .. start_[h+1]).
  std::vector<std::uint64_t> level_base_;
  std::vector<std::uint32_t> start_;
  std::vector<std::uint64_t> masks_;
};

}  // namespace meshcide
