#include "meshcide/trace.hpp"

#include <array>
#include <map>
#include <numeric>

#include "meshcide/diagonals.hpp"
#include "meshcide/families.hpp"

namespace meshcide {

std::string to_string(Rule r) {
  static constexpr std::array<const char*, 9> names{
      "SL", "DSL", "SSL", "CLOSURE", "GAMMA", "SYMMETRY", "VINCULAR", "ISOLATING", "CLASSICAL"};
  return names[static_cast<std::size_t>(r)];
}

Rule parse_rule(std::string_view text) {
  for (int r = 0; r < 9; ++r)
    if (to_string(static_cast<Rule>(r)) == text) return static_cast<Rule>(r);
  throw ParseError("unknown proof rule '" + std::string(text) + "'");
}

std::vector<Mesh> ProofTrace::meshes() const {
  std::vector<Mesh> out;
  const auto add = [&](const Mesh& m) {
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  };
  for (const ProofStep& s : steps) {
    add(s.from);
    add(s.to);
    if (s.upper) add(*s.upper);
  }
  return out;
}

namespace {

class Links {
 public:
  int id(const Mesh& m) {
    auto [it, inserted] = ids_.try_emplace(m.bits(), static_cast<int>(parent_.size()));
    if (inserted) parent_.push_back(it->second);
    return it->second;
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x)
      x = parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
    return x;
  }
  bool linked(const Mesh& a, const Mesh& b) { return a == b || find(id(a)) == find(id(b)); }
  void link(const Mesh& a, const Mesh& b) {
    parent_[static_cast<std::size_t>(find(id(a)))] = find(id(b));
  }

 private:
  std::map<std::uint64_t, int> ids_;
  std::vector<int> parent_;
};

bool fail(std::string* why, const std::string& message) {
  if (why) *why = message;
  return false;
}

bool check_step(const Permutation& p, const ProofStep& step, Links& links, std::string* why) {
  const std::string where = to_string(step.rule) + " step " + to_string(MeshPattern(p, step.from)) +
                            " -> " + to_string(MeshPattern(p, step.to));
  if (step.from.grid() != p.size() || step.to.grid() != p.size())
    return fail(why, where + ": mesh grid does not match the pattern");
  const MeshPattern from(p, step.from), to(p, step.to);
  switch (step.rule) {
    case Rule::SL:
    case Rule::DSL:
    case Rule::SSL: {
      if (!step.move) return fail(why, where + ": missing shading move");
      if (!is_valid_move(from, *step.move)) return fail(why, where + ": move is not shadeable");
      if ((step.from | step.move->added) != step.to)
        return fail(why, where + ": target is not the source plus the added squares");
      if (step.rule != Rule::SSL) {
        if (step.move->assignments.size() != 1)
          return fail(why, where + ": expected exactly one shaded point");
        if (is_pair(step.move->assignments.front().direction) != (step.rule == Rule::DSL))
          return fail(why, where + ": shade shape does not match the rule");
      }
      links.link(step.from, step.to);
      return true;
    }
    case Rule::Closure: {
      if (!step.upper) return fail(why, where + ": missing upper mesh");
      if (!links.linked(step.from, *step.upper))
        return fail(why, where + ": sandwiching meshes are not yet proven coincident");
      if (!step.from.subset_of(step.to) || !step.to.subset_of(*step.upper))
        return fail(why, where + ": mesh is not sandwiched");
      links.link(step.from, step.to);
      return true;
    }
    case Rule::Classical:
      if (!enclosed_diagonals(from).empty() || !enclosed_diagonals(to).empty())
        return fail(why, where + ": enclosed diagonals are not empty");
      links.link(step.from, step.to);
      return true;
    case Rule::Vincular:
      if (!classify_family(from).vincular || !classify_family(to).vincular)
        return fail(why, where + ": patterns are not vincular");
      if (!same_enc(from, to)) return fail(why, where + ": enclosed diagonals differ");
      links.link(step.from, step.to);
      return true;
    case Rule::Isolating:
      if (!classify_family(from).isolating || !classify_family(to).isolating)
        return fail(why, where + ": patterns are not isolating");
      if (!same_enc(from, to)) return fail(why, where + ": enclosed diagonals differ");
      return true;
    case Rule::Gamma:
      if (!gamma_symmetry(from, to)) return fail(why, where + ": not a gamma pair");
      links.link(step.from, step.to);
      return true;
    case Rule::Symmetry: {
      if (!step.symmetry) return fail(why, where + ": missing symmetry");
      const ProofTrace inner{apply_symmetry(*step.symmetry, p), step.nested};
      std::string inner_why;
      if (!verify_trace(inner, apply_symmetry(*step.symmetry, step.from),
                        apply_symmetry(*step.symmetry, step.to), &inner_why))
        return fail(why, where + ": nested proof failed: " + inner_why);
      links.link(step.from, step.to);
      return true;
    }
  }
  return fail(why, where + ": unknown rule");
}

}  // namespace

bool verify_trace(const ProofTrace& trace, const Mesh& a, const Mesh& b, std::string* why) {
  Links links;
  for (const ProofStep& step : trace.steps)
    if (!check_step(trace.p, step, links, why)) return false;
  if (!links.linked(a, b))
    return fail(why, "trace does not link " + to_string(MeshPattern(trace.p, a)) + " and " +
                         to_string(MeshPattern(trace.p, b)));
  return true;
}

}  // namespace meshcide
