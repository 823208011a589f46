#pragma once

#include <optional>

#include "meshcide/mesh.hpp"

namespace meshcide {

struct FamilyTags {
  bool vincular = false;    ///< mesh is a union of complete columns
  bool bivincular = false;  ///< union of complete rows and complete columns
  bool isolating = false;   ///< no non-pointless square has a shaded neighbour row/column
  bool sparse = false;      ///< at most one shaded square per row and per column

  friend bool operator==(const FamilyTags&, const FamilyTags&) = default;
};

FamilyTags classify_family(const MeshPattern& pi);

/// (12, {(0,1),(0,2),(1,1),(1,2),(2,0)})
MeshPattern gamma1();
/// (12, {(0,2),(1,0),(1,1),(2,0),(2,1)})
MeshPattern gamma2();

/// Symmetry s with {pi, pi2} = {s(gamma1), s(gamma2)}, if any.
std::optional<Symmetry> gamma_symmetry(const MeshPattern& pi, const MeshPattern& pi2);

/// Containment of gamma1 (equivalently gamma2): w is a nontrivial direct sum.
bool contains_gamma_oracle(const Permutation& w);

}  // namespace meshcide
