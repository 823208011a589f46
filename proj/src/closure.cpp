#include "meshcide/closure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace meshcide {

namespace {

Rule rule_for(const ShadeMove& move) {
  if (move.assignments.size() > 1) return Rule::SSL;
  return is_pair(move.assignments.front().direction) ? Rule::DSL : Rule::SL;
}

class Explorer {
 public:
  Explorer(const Permutation& p, std::size_t budget)
      : budget_(budget), result_{p, {}, {}, {}, ProofTrace{p, {}}, true, {}} {}

  // Returns the mesh's node, creating it (and queueing it) when new.
  // Returns -1 once the budget is exhausted.
  int node(const Mesh& m) {
    if (auto it = result_.index.find(m.bits()); it != result_.index.end())
      return static_cast<int>(it->second);
    if (result_.meshes.size() >= budget_) {
      result_.complete = false;
      return -1;
    }
    const int id = static_cast<int>(result_.meshes.size());
    result_.index.emplace(m.bits(), result_.meshes.size());
    result_.meshes.push_back(m);
    parent_.push_back(id);
    queue_.push_back(id);
    return id;
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }

  // Shading edges out of every queued mesh.
  void expand() {
    const Permutation& p = result_.p;
    while (!queue_.empty() && result_.complete) {
      const int x = queue_.front();
      queue_.pop_front();
      const Mesh from = result_.meshes[static_cast<std::size_t>(x)];
      for (ShadeMove& move : ssl_moves(MeshPattern(p, from))) {
        const Mesh to = from | move.added;
        const int y = node(to);
        if (y < 0) return;
        if (unite(x, y))
          result_.derivation.steps.push_back(
              ProofStep{rule_for(move), from, to, std::move(move), std::nullopt, std::nullopt, {}});
      }
    }
  }

  // One Closure Lemma pass; returns whether anything changed.
  bool close() {
    std::map<int, std::vector<int>> components;
    for (int i = 0; i < static_cast<int>(result_.meshes.size()); ++i) components[find(i)].push_back(i);
    struct Addition {
      Mesh lower, mesh, upper;
    };
    std::vector<Addition> additions;
    for (const auto& [root, members] : components) {
      if (members.size() < 2) continue;
      std::vector<Mesh> minimal, maximal;
      for (int i : members) {
        const Mesh& m = result_.meshes[static_cast<std::size_t>(i)];
        bool is_min = true, is_max = true;
        for (int j : members) {
          if (i == j) continue;
          const Mesh& o = result_.meshes[static_cast<std::size_t>(j)];
          if (o.subset_of(m)) is_min = false;
          if (m.subset_of(o)) is_max = false;
        }
        if (is_min) minimal.push_back(m);
        if (is_max) maximal.push_back(m);
      }
      for (const Mesh& lo : minimal)
        for (const Mesh& hi : maximal) {
          if (!lo.subset_of(hi)) continue;
          const std::uint64_t free = hi.bits() & ~lo.bits();
          // Enumerate the submasks of `free`.
          std::uint64_t sub = free;
          while (true) {
            const Mesh s(lo.grid(), lo.bits() | sub);
            const auto it = result_.index.find(s.bits());
            if (it == result_.index.end() || find(static_cast<int>(it->second)) != root)
              additions.push_back({lo, s, hi});
            if (sub == 0) break;
            sub = (sub - 1) & free;
          }
        }
    }
    bool changed = false;
    for (const Addition& add : additions) {
      const int lo = node(add.lower);
      const int s = node(add.mesh);
      if (s < 0) return changed;
      if (unite(lo, s)) {
        result_.derivation.steps.push_back(
            ProofStep{Rule::Closure, add.lower, add.mesh, std::nullopt, add.upper, std::nullopt, {}});
        changed = true;
      }
    }
    return changed;
  }

  bool complete() const { return result_.complete; }

  ClosureResult finish() {
    std::map<int, int> class_id;
    result_.class_of.resize(result_.meshes.size());
    // Order classes by their smallest mesh mask.
    std::vector<std::size_t> order(result_.meshes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return result_.meshes[a].bits() < result_.meshes[b].bits();
    });
    for (std::size_t i : order) {
      const int root = find(static_cast<int>(i));
      auto [it, inserted] = class_id.try_emplace(root, static_cast<int>(result_.classes.size()));
      if (inserted) result_.classes.emplace_back();
      result_.classes[static_cast<std::size_t>(it->second)].push_back(result_.meshes[i]);
      result_.class_of[i] = it->second;
    }
    return std::move(result_);
  }

 private:
  std::size_t budget_;
  ClosureResult result_;
  std::vector<int> parent_;
  std::deque<int> queue_;
};

}  // namespace

std::optional<std::size_t> ClosureResult::class_index(const Mesh& m) const {
  const auto it = index.find(m.bits());
  if (it == index.end()) return std::nullopt;
  return static_cast<std::size_t>(class_of[it->second]);
}

bool ClosureResult::same_class(const Mesh& a, const Mesh& b) const {
  const auto ca = class_index(a), cb = class_index(b);
  return ca && cb && *ca == *cb;
}

std::optional<ProofTrace> ClosureResult::proof(const Mesh& a, const Mesh& b) const {
  if (!same_class(a, b)) return std::nullopt;
  const auto& steps = derivation.steps;
  std::set<std::size_t> chosen;

  // Shortest chain of steps below `limit` linking x and y. Each Closure step
  // on the chain also needs its sandwiching pair linked, by earlier steps.
  std::function<void(std::uint64_t, std::uint64_t, std::size_t)> connect =
      [&](std::uint64_t x, std::uint64_t y, std::size_t limit) {
        std::unordered_map<std::uint64_t, std::vector<std::size_t>> adjacent;
        for (std::size_t i = 0; i < limit; ++i) {
          adjacent[steps[i].from.bits()].push_back(i);
          adjacent[steps[i].to.bits()].push_back(i);
        }
        std::unordered_map<std::uint64_t, std::size_t> via;
        std::deque<std::uint64_t> queue{x};
        via.emplace(x, limit);
        while (!queue.empty() && !via.count(y)) {
          const std::uint64_t m = queue.front();
          queue.pop_front();
          for (std::size_t i : adjacent[m]) {
            const std::uint64_t next =
                steps[i].from.bits() == m ? steps[i].to.bits() : steps[i].from.bits();
            if (via.emplace(next, i).second) queue.push_back(next);
          }
        }
        if (!via.count(y)) throw std::logic_error("ssl_closure: class members are not linked");
        for (std::uint64_t m = y; m != x;) {
          const std::size_t i = via.at(m);
          m = steps[i].from.bits() == m ? steps[i].to.bits() : steps[i].from.bits();
          if (chosen.insert(i).second && steps[i].upper)
            connect(steps[i].from.bits(), steps[i].upper->bits(), i);
        }
      };
  connect(a.bits(), b.bits(), steps.size());

  ProofTrace out{p, {}};
  for (std::size_t i : chosen) out.steps.push_back(steps[i]);
  return out;
}

ClosureResult ssl_closure(const Permutation& p, const std::vector<Mesh>& seeds,
                          std::size_t budget) {
  Explorer explorer(p, budget);
  for (const Mesh& seed : seeds) {
    if (seed.grid() != p.size())
      throw std::invalid_argument("ssl_closure: seed mesh grid does not match the pattern");
    if (explorer.node(seed) < 0) break;
  }
  do {
    explorer.expand();
  } while (explorer.complete() && explorer.close());
  return explorer.finish();
}

}  // namespace meshcide
