#include "meshcide/mesh.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "meshcide/parallel.hpp"

namespace meshcide {

std::string to_string(MeshSquare sq) {
  return "(" + std::to_string(sq.a) + "," + std::to_string(sq.b) + ")";
}

Mesh::Mesh(int k, std::uint64_t bits) : k_(k), bits_(bits) {
  if (k < 1 || k > kMaxPatternLength)
    throw std::out_of_range("mesh grid size " + std::to_string(k) +
                            " is outside [1," + std::to_string(kMaxPatternLength) + "]");
  if ((bits & ~full_mask(k)) != 0) throw std::out_of_range("mesh bits outside the grid");
}

Mesh::Mesh(int k, std::initializer_list<MeshSquare> squares) : Mesh(k) {
  for (MeshSquare sq : squares) insert(sq);
}

Mesh::Mesh(int k, const std::vector<MeshSquare>& squares) : Mesh(k) {
  for (MeshSquare sq : squares) insert(sq);
}

Mesh Mesh::full(int k) { return Mesh(k, full_mask(k)); }

void Mesh::insert(MeshSquare sq) {
  if (!in_grid(sq.a, sq.b))
    throw std::out_of_range("square " + to_string(sq) + " is outside the grid [0," +
                            std::to_string(k_) + "]^2");
  bits_ |= std::uint64_t{1} << index(k_, sq.a, sq.b);
}

void Mesh::erase(MeshSquare sq) {
  if (in_grid(sq.a, sq.b)) bits_ &= ~(std::uint64_t{1} << index(k_, sq.a, sq.b));
}

Mesh Mesh::with(MeshSquare sq) const {
  Mesh out = *this;
  out.insert(sq);
  return out;
}

std::vector<MeshSquare> Mesh::squares() const {
  std::vector<MeshSquare> out;
  for (int a = 0; a <= k_; ++a)
    for (int b = 0; b <= k_; ++b)
      if (has(a, b)) out.push_back({a, b});
  return out;
}

MeshPattern::MeshPattern(Permutation perm, Mesh m) : p(std::move(perm)), mesh(m) {
  if (mesh.grid() != p.size())
    throw std::invalid_argument("mesh grid size " + std::to_string(mesh.grid()) +
                                " does not match pattern length " +
                                std::to_string(p.size()));
}

MeshPattern::MeshPattern(Permutation perm, std::initializer_list<MeshSquare> squares)
    : MeshPattern(perm, Mesh(perm.size(), squares)) {}

MeshPattern::MeshPattern(Permutation perm) : MeshPattern(perm, Mesh(perm.size())) {}

std::string to_string(const MeshPattern& pi) {
  std::string out = pi.p.to_string();
  if (!pi.mesh.empty()) {
    out += ':';
    for (MeshSquare sq : pi.mesh.squares()) out += to_string(sq);
  }
  return out;
}

Mesh apply_symmetry(Symmetry s, const Mesh& mesh) {
  Mesh out(mesh.grid());
  for (MeshSquare sq : mesh.squares()) {
    const auto [a, b] = s.map(sq.a, sq.b, mesh.grid());
    out.insert({a, b});
  }
  return out;
}

MeshPattern apply_symmetry(Symmetry s, const MeshPattern& pi) {
  return MeshPattern(apply_symmetry(s, pi.p), apply_symmetry(s, pi.mesh));
}

OpenBox corresponding_region(const Permutation& w, const Occurrence& occ, MeshSquare sq) {
  const int k = static_cast<int>(occ.size());
  const int n = w.size();
  if (sq.a < 0 || sq.b < 0 || sq.a > k || sq.b > k)
    throw std::out_of_range("square " + to_string(sq) +
                            " is outside the grid of a length-" + std::to_string(k) +
                            " occurrence");
  std::vector<int> values = occurrence_values(w, occ);
  std::sort(values.begin(), values.end());
  const auto pos = [&](int a) { return a == 0 ? 0 : a == k + 1 ? n + 1 : occ[static_cast<std::size_t>(a - 1)]; };
  const auto val = [&](int b) { return b == 0 ? 0 : b == k + 1 ? n + 1 : values[static_cast<std::size_t>(b - 1)]; };
  return OpenBox{pos(sq.a), pos(sq.a + 1), val(sq.b), val(sq.b + 1)};
}

std::uint64_t occupied_squares(const Permutation& w, std::span<const int> positions) {
  const int n = w.size();
  const int k = static_cast<int>(positions.size());
  // rank_below[v] = number of occurrence values strictly below v.
  std::uint64_t occupied = 0;
  std::vector<unsigned char> is_value(static_cast<std::size_t>(n) + 2, 0);
  for (int i : positions) is_value[static_cast<std::size_t>(w(i))] = 1;
  std::vector<int> rank_below(static_cast<std::size_t>(n) + 2, 0);
  for (int v = 1; v <= n + 1; ++v)
    rank_below[static_cast<std::size_t>(v)] =
        rank_below[static_cast<std::size_t>(v - 1)] + is_value[static_cast<std::size_t>(v - 1)];
  int column = 0;
  for (int x = 1; x <= n; ++x) {
    if (column < k && positions[static_cast<std::size_t>(column)] == x) {
      ++column;
      continue;
    }
    const int row = rank_below[static_cast<std::size_t>(w(x))];
    occupied |= std::uint64_t{1} << Mesh::index(k, column, row);
  }
  return occupied;
}

bool is_mesh_occurrence(const MeshPattern& pi, const Permutation& w, const Occurrence& occ) {
  if (static_cast<int>(occ.size()) != pi.k()) return false;
  for (std::size_t i = 0; i < occ.size(); ++i) {
    if (occ[i] < 1 || occ[i] > w.size()) return false;
    if (i > 0 && occ[i - 1] >= occ[i]) return false;
  }
  const auto values = occurrence_values(w, occ);
  if (Permutation::standardize(std::span<const int>(values)) != pi.p) return false;
  return (occupied_squares(w, occ.positions) & pi.mesh.bits()) == 0;
}

std::vector<Occurrence> mesh_occurrences(const MeshPattern& pi, const Permutation& w) {
  std::vector<Occurrence> out;
  const std::uint64_t shaded = pi.mesh.bits();
  for_each_classical_occurrence(pi.p, w, [&](std::span<const int> pos) {
    if ((occupied_squares(w, pos) & shaded) == 0)
      out.push_back(Occurrence{{pos.begin(), pos.end()}});
    return true;
  });
  return out;
}

bool contains(const MeshPattern& pi, const Permutation& w) {
  const std::uint64_t shaded = pi.mesh.bits();
  return !for_each_classical_occurrence(pi.p, w, [&](std::span<const int> pos) {
    return (occupied_squares(w, pos) & shaded) != 0;
  });
}

bool avoids(const MeshPattern& pi, const Permutation& w) { return !contains(pi, w); }

std::vector<Permutation> avoiders(const MeshPattern& pi, int n, int threads) {
  if (n < 1) throw std::invalid_argument("avoiders: n must be at least 1");
  const std::uint64_t total = factorial(n);
  std::vector<unsigned char> avoid(total, 0);
  parallel_for(total, threads, [&](std::size_t begin, std::size_t end) {
    if (begin >= end) return;
    Permutation w = nth_permutation(n, begin);
    std::vector<int> word(w.word().begin(), w.word().end());
    for (std::size_t j = begin; j < end; ++j) {
      avoid[j] = !contains(pi, Permutation(word));
      std::next_permutation(word.begin(), word.end());
    }
  });
  std::vector<Permutation> out;
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  for (std::size_t j = 0; j < total; ++j) {
    if (avoid[j]) out.emplace_back(word);
    std::next_permutation(word.begin(), word.end());
  }
  return out;
}

std::uint64_t count_avoiders(const MeshPattern& pi, int n, int threads) {
  return avoiders(pi, n, threads).size();
}

}  // namespace meshcide
