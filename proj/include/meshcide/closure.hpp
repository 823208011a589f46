#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "meshcide/trace.hpp"

namespace meshcide {

/// Meshes reachable from the seeds by simultaneous-shading moves, merged by
/// the Closure Lemma, and grouped into proven-coincident classes.
struct ClosureResult {
  Permutation p;
  std::vector<Mesh> meshes;  ///< discovery order
  std::vector<int> class_of;  ///< class index of meshes[i]
  std::vector<std::vector<Mesh>> classes;  ///< each sorted by mask; ordered by first member
  ProofTrace derivation;  ///< every step, in the order it was found
  bool complete = true;  ///< false when the mesh budget ran out

  std::optional<std::size_t> class_index(const Mesh& m) const;
  bool same_class(const Mesh& a, const Mesh& b) const;
  /// The derivation steps of the class containing both meshes.
  std::optional<ProofTrace> proof(const Mesh& a, const Mesh& b) const;

  std::unordered_map<std::uint64_t, std::size_t> index;  ///< mask -> position in meshes
};

inline constexpr std::size_t kDefaultClosureBudget = std::size_t{1} << 17;

/// Explores R -> R ∪ S for every simultaneous-shading move, then adds every
/// mesh sandwiched between two members of a class, repeating until nothing
/// changes or more than `budget` meshes have been discovered.
ClosureResult ssl_closure(const Permutation& p, const std::vector<Mesh>& seeds,
                          std::size_t budget = kDefaultClosureBudget);

}  // namespace meshcide
