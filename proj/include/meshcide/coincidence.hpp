#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "meshcide/closure.hpp"
#include "meshcide/diagonals.hpp"
#include "meshcide/families.hpp"
#include "meshcide/fingerprint.hpp"
#include "meshcide/trace.hpp"

namespace meshcide {

/// Both vincular with equal enc: a single VINCULAR step. For k > 3 the
/// meshes must then be identical, which is checked (std::logic_error).
std::optional<ProofTrace> vincular_rule(const MeshPattern& pi, const MeshPattern& pi2);

/// Both isolating with equal enc: derives each mesh from the shared enc
/// squares by single-square shading steps. Empty if a derivation is not
/// found.
std::optional<ProofTrace> isolating_rule(const MeshPattern& pi, const MeshPattern& pi2);

/// The pair is a symmetric image of (gamma1, gamma2).
std::optional<ProofTrace> gamma_rule(const MeshPattern& pi, const MeshPattern& pi2);

/// Both meshes have no enclosed diagonals, so both are coincident with p.
std::optional<ProofTrace> classical_rule(const MeshPattern& pi, const MeshPattern& pi2);

/// Simultaneous shading and closure starting from both meshes.
std::optional<ProofTrace> shading_rule(const MeshPattern& pi, const MeshPattern& pi2,
                                       std::size_t budget = kDefaultClosureBudget);

enum class Status { ProvenEqual, ProvenCoincident, Refuted, Undecided };

std::string to_string(Status s);

struct CoincidenceVerdict {
  Status status;
  std::optional<ProofTrace> trace;  ///< ProvenEqual (empty) and ProvenCoincident
  std::optional<Witness> witness;   ///< Refuted
  int depth;                        ///< fingerprint depth used
};

struct DecideOptions {
  bool use_gamma = true;
  std::size_t closure_budget = kDefaultClosureBudget;
  int threads = 0;
};

/// Identical patterns, then refutation (different p, different enc, first
/// fingerprint mismatch up to n_max), then proof search over every rule and
/// every symmetric image. Falls back to Undecided; equal fingerprints are
/// never reported as a proof.
CoincidenceVerdict decide_coincidence(const MeshPattern& pi, const MeshPattern& pi2, int n_max,
                                      const DecideOptions& options = {});

}  // namespace meshcide
