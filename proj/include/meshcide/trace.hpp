#pragma once

#include <optional>
#include <string>
#include <vector>

#include "meshcide/mesh.hpp"
#include "meshcide/shading.hpp"

namespace meshcide {

enum class Rule { SL, DSL, SSL, Closure, Gamma, Symmetry, Vincular, Isolating, Classical };

std::string to_string(Rule r);
Rule parse_rule(std::string_view text);

/// One justified link (p, from) ≍ (p, to) in a coincidence proof.
///
///  - SL / DSL / SSL: `move` is valid for (p, from) and to = from ∪ move.added.
///    SL and DSL carry a single square or pair respectively.
///  - Closure: `from` and `upper` are already proven coincident earlier in
///    the trace and from ⊆ to ⊆ upper.
///  - Classical: enc is empty for both meshes.
///  - Vincular: both meshes are vincular with equal enc.
///  - Isolating: annotation only (both isolating, equal enc); the link is
///    carried by the SL steps that follow it.
///  - Gamma: the pair is a symmetric image of (gamma1, gamma2).
///  - Symmetry: `nested` proves the images under `symmetry` coincident.
struct ProofStep {
  Rule rule;
  Mesh from;
  Mesh to;
  std::optional<ShadeMove> move;
  std::optional<Mesh> upper;
  std::optional<Symmetry> symmetry;
  std::vector<ProofStep> nested;
};

/// A sequence of steps over a fixed classical pattern p.
struct ProofTrace {
  Permutation p;
  std::vector<ProofStep> steps;

  /// Meshes linked by the steps, in order of first appearance.
  std::vector<Mesh> meshes() const;
};

/// Replays the trace, re-checking every step, and confirms that it links
/// `a` to `b`. On failure `why` (if given) receives the first problem.
bool verify_trace(const ProofTrace& trace, const Mesh& a, const Mesh& b,
                  std::string* why = nullptr);

}  // namespace meshcide
