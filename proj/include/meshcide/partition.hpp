#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "meshcide/fingerprint.hpp"
#include "meshcide/trace.hpp"

namespace meshcide {

struct PartitionOptions {
  int n_max = 0;  ///< 0: 7 for k <= 2, 6 for k = 3
  bool use_gamma = true;
  int threads = 0;
  int max_k = 3;
};

int default_partition_depth(int k);

/// A link of the proof relation that merged two proven blocks.
struct ProofEdge {
  Mesh from;
  Mesh to;
  Rule rule;
};

/// One fingerprint group: all meshes over p with a given fingerprint.
struct MeshClass {
  Fingerprint fingerprint;
  std::vector<Mesh> meshes;  ///< sorted by mask
  std::vector<std::vector<Mesh>> blocks;  ///< proven-coincident blocks, ordered by first member
  std::vector<ProofEdge> proof;  ///< spanning forest of the blocks
  std::vector<std::uint64_t> enc;

  bool proven() const { return blocks.size() == 1; }
  const Mesh& representative() const { return meshes.front(); }
  /// Pairs of members lying in different blocks.
  std::uint64_t undecided_pairs() const;
};

struct Partition {
  Permutation p;
  int n_max;
  bool use_gamma;
  std::vector<MeshClass> classes;  ///< ordered by representative
  std::size_t soundness_violations = 0;  ///< proof links across fingerprint groups

  std::size_t proven_count() const;
  std::size_t conjectured_count() const;
  std::uint64_t undecided_pairs() const;
};

/// Groups all 2^((k+1)^2) meshes over p by fingerprint, then merges members
/// of each group with the proof relation: simultaneous-shading moves,
/// classical/vincular/isolating/gamma rules, transfer along the symmetries
/// fixing p, and the Closure Lemma, repeated to a fixpoint. Throws
/// std::length_error when |p| exceeds options.max_k.
Partition partition_meshes(const Permutation& p, const PartitionOptions& options = {});

/// One JSON object per class followed by a summary line.
void write_partition(std::ostream& out, const Partition& partition);

/// Reads a report written by write_partition. Every class is re-verified by
/// recomputing the fingerprint of its representative; throws
/// std::runtime_error on a mismatch or malformed input.
Partition read_partition(std::istream& in, int threads = 0);

}  // namespace meshcide
