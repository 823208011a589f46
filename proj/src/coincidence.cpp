#include "meshcide/coincidence.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace meshcide {

std::string to_string(Status s) {
  switch (s) {
    case Status::ProvenEqual: return "PROVEN_EQUAL";
    case Status::ProvenCoincident: return "PROVEN_COINCIDENT";
    case Status::Refuted: return "REFUTED";
    case Status::Undecided: return "UNDECIDED";
  }
  return "?";
}

std::optional<ProofTrace> vincular_rule(const MeshPattern& pi, const MeshPattern& pi2) {
  if (pi.p != pi2.p) return std::nullopt;
  if (!classify_family(pi).vincular || !classify_family(pi2).vincular) return std::nullopt;
  if (!same_enc(pi, pi2)) return std::nullopt;
  // Every column then holds at least k-3 pointless squares, so the shaded
  // columns are determined by enc.
  if (pi.k() > 3 && pi.mesh != pi2.mesh)
    throw std::logic_error("vincular_rule: equal enc but different meshes for k > 3: " +
                           to_string(pi) + " and " + to_string(pi2));
  return ProofTrace{pi.p, {ProofStep{Rule::Vincular, pi.mesh, pi2.mesh, std::nullopt,
                                     std::nullopt, std::nullopt, {}}}};
}

namespace {

// Single-square shading steps from `start` up to `goal`, adding only squares
// of `goal`. Depth-first with a visited set, so an unlucky order cannot
// block a derivation that exists.
std::optional<std::vector<ProofStep>> shade_up(const Permutation& p, const Mesh& start,
                                               const Mesh& goal) {
  std::set<std::uint64_t> visited;
  std::vector<ProofStep> path;
  std::function<bool(const Mesh&)> search = [&](const Mesh& current) {
    if (current == goal) return true;
    if (!visited.insert(current.bits()).second) return false;
    const MeshPattern here(p, current);
    for (const Shade& s : shadeable_singles(here)) {
      if (!s.squares.subset_of(goal)) continue;
      const Mesh next = current | s.squares;
      path.push_back(ProofStep{Rule::SL, current, next, ShadeMove::make(here, {s}),
                               std::nullopt, std::nullopt, {}});
      if (search(next)) return true;
      path.pop_back();
    }
    return false;
  };
  if (!start.subset_of(goal) || !search(start)) return std::nullopt;
  return path;
}

}  // namespace

std::optional<ProofTrace> isolating_rule(const MeshPattern& pi, const MeshPattern& pi2) {
  if (pi.p != pi2.p) return std::nullopt;
  if (!classify_family(pi).isolating || !classify_family(pi2).isolating) return std::nullopt;
  if (!same_enc(pi, pi2)) return std::nullopt;
  const Mesh core = enc_core(pi);
  auto up1 = shade_up(pi.p, core, pi.mesh);
  auto up2 = shade_up(pi.p, core, pi2.mesh);
  if (!up1 || !up2) return std::nullopt;
  ProofTrace trace{pi.p, {ProofStep{Rule::Isolating, pi.mesh, pi2.mesh, std::nullopt,
                                    std::nullopt, std::nullopt, {}}}};
  trace.steps.insert(trace.steps.end(), up1->begin(), up1->end());
  trace.steps.insert(trace.steps.end(), up2->begin(), up2->end());
  return trace;
}

std::optional<ProofTrace> gamma_rule(const MeshPattern& pi, const MeshPattern& pi2) {
  if (!gamma_symmetry(pi, pi2)) return std::nullopt;
  return ProofTrace{pi.p, {ProofStep{Rule::Gamma, pi.mesh, pi2.mesh, std::nullopt,
                                     std::nullopt, std::nullopt, {}}}};
}

std::optional<ProofTrace> classical_rule(const MeshPattern& pi, const MeshPattern& pi2) {
  if (pi.p != pi2.p) return std::nullopt;
  if (!enclosed_diagonals(pi).empty() || !enclosed_diagonals(pi2).empty()) return std::nullopt;
  return ProofTrace{pi.p, {ProofStep{Rule::Classical, pi.mesh, pi2.mesh, std::nullopt,
                                     std::nullopt, std::nullopt, {}}}};
}

std::optional<ProofTrace> shading_rule(const MeshPattern& pi, const MeshPattern& pi2,
                                       std::size_t budget) {
  if (pi.p != pi2.p) return std::nullopt;
  const ClosureResult closure = ssl_closure(pi.p, {pi.mesh, pi2.mesh}, budget);
  return closure.proof(pi.mesh, pi2.mesh);
}

namespace {

Witness verified(const MeshPattern& pi, const MeshPattern& pi2, Permutation w) {
  const bool first = contains(pi, w);
  if (first == contains(pi2, w))
    throw std::logic_error("decide_coincidence: " + w.to_string() + " does not separate " +
                           to_string(pi) + " and " + to_string(pi2));
  return Witness{std::move(w), first};
}

}  // namespace

CoincidenceVerdict decide_coincidence(const MeshPattern& pi, const MeshPattern& pi2, int n_max,
                                      const DecideOptions& options) {
  if (pi == pi2) return {Status::ProvenEqual, ProofTrace{pi.p, {}}, std::nullopt, n_max};

  if (pi.p != pi2.p) {
    // p is the unique shortest member of Cont((p,R)); the shorter of the
    // two (or the first, at equal length) separates the patterns.
    const Permutation& w = pi2.k() < pi.k() ? pi2.p : pi.p;
    return {Status::Refuted, std::nullopt, verified(pi, pi2, w), n_max};
  }

  if (!same_enc(pi, pi2))
    return {Status::Refuted, std::nullopt, enc_witness(pi, pi2), n_max};

  const HostTable table(pi.p, n_max, options.threads);
  const Fingerprint f1 = table.fingerprint(pi.mesh);
  const Fingerprint f2 = table.fingerprint(pi2.mesh);
  if (const auto diff = f1.first_difference(f2))
    return {Status::Refuted, std::nullopt,
            verified(pi, pi2, nth_permutation(diff->first, diff->second)), n_max};

  using RuleFn = std::function<std::optional<ProofTrace>(const MeshPattern&, const MeshPattern&)>;
  std::vector<RuleFn> rules{classical_rule, vincular_rule, isolating_rule};
  if (options.use_gamma) rules.emplace_back(gamma_rule);
  rules.emplace_back([&](const MeshPattern& a, const MeshPattern& b) {
    return shading_rule(a, b, options.closure_budget);
  });

  for (const RuleFn& rule : rules) {
    for (const Symmetry& s : Symmetry::all()) {
      const MeshPattern a = apply_symmetry(s, pi), b = apply_symmetry(s, pi2);
      std::optional<ProofTrace> found = rule(a, b);
      if (!found) continue;
      ProofTrace trace = s == Symmetry::identity()
                             ? std::move(*found)
                             : ProofTrace{pi.p, {ProofStep{Rule::Symmetry, pi.mesh, pi2.mesh,
                                                           std::nullopt, std::nullopt, s,
                                                           std::move(found->steps)}}};
      std::string why;
      if (!verify_trace(trace, pi.mesh, pi2.mesh, &why))
        throw std::logic_error("decide_coincidence: produced an invalid proof: " + why);
      return {Status::ProvenCoincident, std::move(trace), std::nullopt, n_max};
    }
  }
  return {Status::Undecided, std::nullopt, std::nullopt, n_max};
}

}  // namespace meshcide
