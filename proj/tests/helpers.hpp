#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "meshcide/io.hpp"
#include "oracles.hpp"

namespace testing {

using namespace meshcide;

inline MeshPattern pat(const char* text) { return parse_mesh_pattern(text); }
inline Permutation perm(const char* text) { return parse_permutation(text); }

inline oracle::Word word(const Permutation& p) { return {p.word().begin(), p.word().end()}; }

inline std::vector<std::vector<int>> positions(const std::vector<Occurrence>& occ) {
  std::vector<std::vector<int>> out;
  for (const Occurrence& o : occ) out.push_back(o.positions);
  return out;
}

/// Every mesh pattern over every p of length k.
template <typename F>
void for_each_pattern(int k, F&& f) {
  for (const Permutation& p : all_permutations(k))
    for (std::uint64_t m = 0; m <= full_mask(k); ++m) f(MeshPattern(p, Mesh(k, m)));
}

inline MeshPattern random_pattern(std::mt19937_64& rng, int k) {
  const auto perms = all_permutations(k);
  const Permutation& p = perms[rng() % perms.size()];
  return MeshPattern(p, Mesh(k, rng() & full_mask(k)));
}

inline Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::shuffle(w.begin(), w.end(), rng);
  return Permutation(w);
}

}  // namespace testing
