#include "meshcide/partition.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "meshcide/coincidence.hpp"
#include "meshcide/io.hpp"
#include "meshcide/parallel.hpp"

namespace meshcide {

int default_partition_depth(int k) { return k <= 2 ? 7 : 6; }

std::uint64_t MeshClass::undecided_pairs() const {
  std::uint64_t total = meshes.size();
  std::uint64_t same = 0;
  for (const auto& b : blocks) same += b.size() * b.size();
  return (total * total - same) / 2;
}

std::size_t Partition::proven_count() const {
  std::size_t n = 0;
  for (const MeshClass& c : classes) n += c.proven();
  return n;
}

std::size_t Partition::conjectured_count() const { return classes.size() - proven_count(); }

std::uint64_t Partition::undecided_pairs() const {
  std::uint64_t n = 0;
  for (const MeshClass& c : classes) n += c.undecided_pairs();
  return n;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;  // the smallest mesh stays the root
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

Rule move_rule(const ShadeMove& move) {
  if (move.assignments.size() > 1) return Rule::SSL;
  return is_pair(move.assignments.front().direction) ? Rule::DSL : Rule::SL;
}

}  // namespace

Partition partition_meshes(const Permutation& p, const PartitionOptions& options) {
  const int k = p.size();
  if (k > options.max_k)
    throw std::length_error("partition: pattern length " + std::to_string(k) +
                            " exceeds the bound " + std::to_string(options.max_k));
  const int n_max = options.n_max > 0 ? options.n_max : default_partition_depth(k);
  const std::uint32_t count = std::uint32_t{1} << ((k + 1) * (k + 1));

  const HostTable table(p, n_max, options.threads);
  std::vector<Fingerprint> prints(count, Fingerprint(n_max));
  std::vector<std::vector<std::uint64_t>> encs(count);
  std::vector<std::vector<std::pair<std::uint32_t, Rule>>> moves(count);
  std::vector<FamilyTags> tags(count);
  parallel_for(count, options.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t m = begin; m < end; ++m) {
      const MeshPattern pi(p, Mesh(k, m));
      prints[m] = table.fingerprint(pi.mesh);
      encs[m] = enc_signature(pi);
      tags[m] = classify_family(pi);
      for (const ShadeMove& move : ssl_moves(pi))
        moves[m].emplace_back(static_cast<std::uint32_t>(m | move.added.bits()), move_rule(move));
    }
  });

  std::vector<std::uint32_t> group(count);
  std::vector<std::uint32_t> group_first;
  {
    std::unordered_map<Fingerprint, std::uint32_t, FingerprintHash> ids;
    for (std::uint32_t m = 0; m < count; ++m) {
      auto [it, fresh] = ids.try_emplace(prints[m], static_cast<std::uint32_t>(group_first.size()));
      if (fresh) group_first.push_back(m);
      group[m] = it->second;
    }
  }

  Partition result{p, n_max, options.use_gamma, {}, 0};
  UnionFind uf(count);
  std::vector<ProofEdge> edges;
  auto link = [&](std::uint32_t a, std::uint32_t b, Rule rule) {
    if (group[a] != group[b]) {
      ++result.soundness_violations;
      return false;
    }
    if (!uf.unite(a, b)) return false;
    edges.push_back({Mesh(k, a), Mesh(k, b), rule});
    return true;
  };

  for (std::uint32_t m = 0; m < count; ++m)
    for (const auto& [to, rule] : moves[m]) link(m, to, rule);

  std::map<std::vector<std::uint64_t>, std::uint32_t> vincular_by_enc;
  for (std::uint32_t m = 0; m < count; ++m) {
    if (encs[m].empty()) link(0, m, Rule::Classical);
    if (tags[m].vincular) {
      auto [it, fresh] = vincular_by_enc.try_emplace(encs[m], m);
      if (!fresh) link(it->second, m, Rule::Vincular);
    }
    if (tags[m].isolating) {
      const MeshPattern pi(p, Mesh(k, m));
      const MeshPattern core(p, enc_core(pi));
      if (core.mesh != pi.mesh && isolating_rule(core, pi))
        link(static_cast<std::uint32_t>(core.mesh.bits()), m, Rule::Isolating);
    }
  }

  if (options.use_gamma) {
    for (const Symmetry& s : Symmetry::all()) {
      const MeshPattern a = apply_symmetry(s, gamma1()), b = apply_symmetry(s, gamma2());
      if (a.p == p)
        link(static_cast<std::uint32_t>(a.mesh.bits()), static_cast<std::uint32_t>(b.mesh.bits()),
             Rule::Gamma);
    }
  }

  std::vector<std::vector<std::uint32_t>> images;
  for (const Symmetry& s : Symmetry::all()) {
    if (s == Symmetry::identity() || apply_symmetry(s, p) != p) continue;
    std::vector<std::uint32_t>& img = images.emplace_back(count);
    for (std::uint32_t m = 0; m < count; ++m)
      img[m] = static_cast<std::uint32_t>(apply_symmetry(s, Mesh(k, m)).bits());
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& img : images) {
      for (std::uint32_t m = 0; m < count; ++m)
        changed |= link(img[m], img[uf.find(m)], Rule::Symmetry);
    }

    // Closure: every mesh between two members of a block joins it.
    std::vector<std::vector<std::uint32_t>> members(count);
    for (std::uint32_t m = 0; m < count; ++m) members[uf.find(m)].push_back(m);
    for (std::uint32_t root = 0; root < count; ++root) {
      const auto& block = members[root];
      if (block.size() < 2) continue;
      std::uint32_t lo = ~std::uint32_t{0}, hi = 0;
      for (std::uint32_t m : block) lo &= m, hi |= m;
      std::vector<int> free_bits;
      for (int bit = 0; bit < 32; ++bit)
        if (((hi & ~lo) >> bit) & 1U) free_bits.push_back(bit);
      const std::size_t cube = std::size_t{1} << free_bits.size();
      auto local = [&](std::uint32_t m) {
        std::size_t t = 0;
        for (std::size_t i = 0; i < free_bits.size(); ++i) t |= std::size_t{(m >> free_bits[i]) & 1U} << i;
        return t;
      };
      std::vector<char> below(cube, 0), above(cube, 0), member(cube, 0);
      for (std::uint32_t m : block) member[local(m)] = below[local(m)] = above[local(m)] = 1;
      for (std::size_t i = 0; i < free_bits.size(); ++i) {
        const std::size_t bit = std::size_t{1} << i;
        for (std::size_t t = 0; t < cube; ++t) {
          if (t & bit) below[t] |= below[t ^ bit];
          else above[t] |= above[t ^ bit];
        }
      }
      for (std::size_t t = 0; t < cube; ++t) {
        if (member[t] || !below[t] || !above[t]) continue;
        std::uint32_t m = lo;
        for (std::size_t i = 0; i < free_bits.size(); ++i)
          if ((t >> i) & 1U) m |= std::uint32_t{1} << free_bits[i];
        changed |= link(root, m, Rule::Closure);
      }
    }
  }

  result.classes.resize(group_first.size(), MeshClass{Fingerprint(n_max), {}, {}, {}, {}});
  std::vector<std::map<std::uint32_t, std::size_t>> block_index(group_first.size());
  for (std::uint32_t m = 0; m < count; ++m) {
    MeshClass& c = result.classes[group[m]];
    if (c.meshes.empty()) {
      c.fingerprint = prints[m];
      c.enc = encs[m];
    }
    c.meshes.emplace_back(k, m);
    auto [it, fresh] = block_index[group[m]].try_emplace(uf.find(m), c.blocks.size());
    if (fresh) c.blocks.emplace_back();
    c.blocks[it->second].emplace_back(k, m);
  }
  for (const ProofEdge& e : edges) result.classes[group[e.from.bits()]].proof.push_back(e);
  return result;
}

namespace {

json meshes_json(const std::vector<Mesh>& meshes) {
  json out = json::array();
  for (const Mesh& m : meshes) out.push_back(to_json(m));
  return out;
}

std::vector<Mesh> meshes_from_json(int k, const json& j) {
  std::vector<Mesh> out;
  for (const json& m : j) out.push_back(mesh_from_json(k, m));
  return out;
}

}  // namespace

void write_partition(std::ostream& out, const Partition& partition) {
  for (const MeshClass& c : partition.classes) {
    const MeshPattern rep(partition.p, c.representative());
    json enc = json::array();
    for (const EnclosedDiagonal& d : enclosed_diagonals(rep)) enc.push_back(to_json(d));
    json blocks = json::array();
    for (const auto& b : c.blocks) blocks.push_back(meshes_json(b));
    json proof = json::array();
    for (const ProofEdge& e : c.proof)
      proof.push_back({{"rule", to_string(e.rule)}, {"from", to_json(e.from)}, {"to", to_json(e.to)}});
    const json record{{"p", to_json(partition.p)},
                      {"status", c.proven() ? "PROVEN" : "CONJECTURED"},
                      {"size", c.meshes.size()},
                      {"representative", to_json(rep)},
                      {"meshes", meshes_json(c.meshes)},
                      {"enc", enc},
                      {"depth", partition.n_max},
                      {"fingerprint", c.fingerprint.hex()},
                      {"blocks", blocks},
                      {"proof", proof}};
    out << record.dump() << '\n';
  }
  const json summary{{"summary",
                      {{"p", to_json(partition.p)},
                       {"depth", partition.n_max},
                       {"gamma", partition.use_gamma},
                       {"classes", partition.classes.size()},
                       {"proven", partition.proven_count()},
                       {"conjectured", partition.conjectured_count()},
                       {"undecided_pairs", partition.undecided_pairs()},
                       {"soundness_violations", partition.soundness_violations}}}};
  out << summary.dump() << '\n';
}

Partition read_partition(std::istream& in, int threads) {
  std::vector<json> records;
  std::optional<json> summary;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw std::runtime_error(std::string("partition cache: malformed line: ") + e.what());
    }
    if (j.contains("summary")) summary = j["summary"];
    else records.push_back(std::move(j));
  }
  if (!summary) throw std::runtime_error("partition cache: missing summary line");

  try {
    Partition result{permutation_from_json((*summary)["p"]), (*summary)["depth"].get<int>(),
                     (*summary)["gamma"].get<bool>(), {}, 0};
    result.soundness_violations = (*summary)["soundness_violations"].get<std::size_t>();
    const int k = result.p.size();
    const HostTable table(result.p, result.n_max, threads);
    for (const json& r : records) {
      MeshClass c{Fingerprint::from_hex(result.n_max, r["fingerprint"].get<std::string>()),
                  meshes_from_json(k, r["meshes"]), {}, {}, {}};
      for (const json& b : r["blocks"]) c.blocks.push_back(meshes_from_json(k, b));
      for (const json& e : r["proof"])
        c.proof.push_back({mesh_from_json(k, e["from"]), mesh_from_json(k, e["to"]),
                           parse_rule(e["rule"].get<std::string>())});
      if (c.meshes.empty()) throw std::runtime_error("partition cache: empty class");
      c.enc = enc_signature(MeshPattern(result.p, c.representative()));
      if (table.fingerprint(c.representative()) != c.fingerprint)
        throw std::runtime_error("partition cache: fingerprint mismatch for " +
                                 to_string(MeshPattern(result.p, c.representative())));
      result.classes.push_back(std::move(c));
    }
    if (result.classes.size() != (*summary)["classes"].get<std::size_t>())
      throw std::runtime_error("partition cache: class count does not match the summary");
    return result;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("partition cache: malformed record: ") + e.what());
  } catch (const ParseError& e) {
    throw std::runtime_error(std::string("partition cache: ") + e.what());
  }
}

}  // namespace meshcide
