#include "meshcide/shading.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>

namespace meshcide {

std::string to_string(Direction d) {
  static constexpr std::array<const char*, 8> names{"NE", "NW", "SE", "SW", "E", "N", "W", "S"};
  return names[static_cast<std::size_t>(d)];
}

Direction parse_direction(std::string_view text) {
  for (int d = 0; d < 8; ++d)
    if (to_string(static_cast<Direction>(d)) == text) return static_cast<Direction>(d);
  throw ParseError("unknown direction '" + std::string(text) + "'");
}

namespace {

constexpr std::array<Direction, 4> kSingles{Direction::NE, Direction::NW, Direction::SE,
                                            Direction::SW};
constexpr std::array<Direction, 4> kPairs{Direction::E, Direction::N, Direction::W,
                                          Direction::S};

// Squares touching lattice point (i, j) on the given side or corner.
std::vector<MeshSquare> incident(int i, int j, Direction d) {
  switch (d) {
    case Direction::NE: return {{i, j}};
    case Direction::NW: return {{i - 1, j}};
    case Direction::SE: return {{i, j - 1}};
    case Direction::SW: return {{i - 1, j - 1}};
    case Direction::E: return {{i, j - 1}, {i, j}};
    case Direction::N: return {{i - 1, j}, {i, j}};
    case Direction::W: return {{i - 1, j - 1}, {i - 1, j}};
    case Direction::S: return {{i - 1, j - 1}, {i, j - 1}};
  }
  return {};
}

// First symmetry (in Symmetry::all order) carrying the d-squares of every
// point onto the NE square (or E pair) of the image point.
Symmetry find_reduction(Direction d) {
  const Direction target = is_pair(d) ? Direction::E : Direction::NE;
  constexpr int k = 3;
  for (const Symmetry& s : Symmetry::all()) {
    bool ok = true;
    for (int i = 1; i <= k && ok; ++i)
      for (int j = 1; j <= k && ok; ++j) {
        std::vector<MeshSquare> mapped;
        for (MeshSquare sq : incident(i, j, d)) {
          const auto [a, b] = s.map(sq.a, sq.b, k);
          mapped.push_back({a, b});
        }
        const auto [x, y] = s.map(i, j, k + 1);
        auto expected = incident(x, y, target);
        std::sort(mapped.begin(), mapped.end());
        std::sort(expected.begin(), expected.end());
        ok = mapped == expected;
      }
    if (ok) return s;
  }
  throw std::logic_error("no symmetry reduces direction " + to_string(d));
}

}  // namespace

Symmetry reduction_symmetry(Direction d) {
  static const std::array<Symmetry, 8> table = [] {
    std::array<Symmetry, 8> out{};
    for (int d = 0; d < 8; ++d) out[static_cast<std::size_t>(d)] = find_reduction(static_cast<Direction>(d));
    return out;
  }();
  return table[static_cast<std::size_t>(d)];
}

Mesh incident_squares(const MeshPattern& pi, int point, Direction d) {
  return Mesh(pi.k(), incident(point, pi.p(point), d));
}

bool northeast_shadeable(const MeshPattern& pi, int i) {
  const Mesh& r = pi.mesh;
  const int j = pi.p(i);
  const int k = pi.k();
  if (r.has(i, j) || r.has(i - 1, j - 1)) return false;
  if (r.has(i, j - 1) && r.has(i - 1, j)) return false;
  for (int x = 0; x <= k; ++x) {
    if (x == i - 1 || x == i) continue;
    if (r.has(x, j - 1) && !r.has(x, j)) return false;
  }
  for (int y = 0; y <= k; ++y) {
    if (y == j - 1 || y == j) continue;
    if (r.has(i - 1, y) && !r.has(i, y)) return false;
  }
  return true;
}

bool east_shadeable(const MeshPattern& pi, int i) {
  const Mesh& r = pi.mesh;
  const int j = pi.p(i);
  const int k = pi.k();
  if (r.has(i, j) || r.has(i - 1, j) || r.has(i, j - 1) || r.has(i - 1, j - 1)) return false;
  for (int x = 0; x <= k; ++x)
    if (r.has(x, j - 1) != r.has(x, j)) return false;
  for (int y = 0; y <= k; ++y)
    if (r.has(i - 1, y) && !r.has(i, y)) return false;
  return true;
}

namespace {

// Tests direction d at `point` against a pattern already conjugated by
// reduction_symmetry(d).
bool reduced_shadeable(const MeshPattern& pi, const MeshPattern& image, int point, Direction d) {
  const Symmetry s = reduction_symmetry(d);
  const int x = s.map(point, pi.p(point), pi.k() + 1).first;
  return is_pair(d) ? east_shadeable(image, x) : northeast_shadeable(image, x);
}

template <std::size_t N>
std::vector<Shade> collect(const MeshPattern& pi, const std::array<Direction, N>& dirs) {
  std::vector<Shade> out;
  std::array<std::optional<MeshPattern>, N> images;
  for (std::size_t d = 0; d < N; ++d) images[d] = apply_symmetry(reduction_symmetry(dirs[d]), pi);
  for (int i = 1; i <= pi.k(); ++i)
    for (std::size_t d = 0; d < N; ++d)
      if (reduced_shadeable(pi, *images[d], i, dirs[d]))
        out.push_back(Shade{i, dirs[d], incident_squares(pi, i, dirs[d])});
  return out;
}

}  // namespace

bool shadeable(const MeshPattern& pi, int point, Direction d) {
  if (point < 1 || point > pi.k()) return false;
  return reduced_shadeable(pi, apply_symmetry(reduction_symmetry(d), pi), point, d);
}

std::vector<Shade> shadeable_singles(const MeshPattern& pi) { return collect(pi, kSingles); }

std::vector<Shade> shadeable_pairs(const MeshPattern& pi) { return collect(pi, kPairs); }

bool is_valid_move(const MeshPattern& pi, const ShadeMove& move) {
  if (move.assignments.empty()) return false;
  std::uint64_t added = 0;
  int last_point = 0;
  for (const Shade& s : move.assignments) {
    if (s.point <= last_point) return false;
    last_point = s.point;
    if (s.squares != incident_squares(pi, s.point, s.direction)) return false;
    if (!shadeable(pi, s.point, s.direction)) return false;
    added |= s.squares.bits();
  }
  return added == move.added.bits() && !move.added.intersects(pi.mesh) &&
         move.added.grid() == pi.k();
}

ShadeMove ShadeMove::make(const MeshPattern& pi, std::vector<Shade> assignments) {
  std::sort(assignments.begin(), assignments.end(),
            [](const Shade& a, const Shade& b) { return a.point < b.point; });
  std::uint64_t added = 0;
  for (const Shade& s : assignments) added |= s.squares.bits();
  ShadeMove move{std::move(assignments), Mesh(pi.k(), added)};
  if (!is_valid_move(pi, move))
    throw std::invalid_argument("invalid simultaneous shading move on " + to_string(pi));
  return move;
}

std::vector<ShadeMove> ssl_moves(const MeshPattern& pi) {
  const int k = pi.k();
  std::vector<std::vector<Shade>> options(static_cast<std::size_t>(k));
  for (auto list : {shadeable_singles(pi), shadeable_pairs(pi)})
    for (Shade& s : list) options[static_cast<std::size_t>(s.point - 1)].push_back(s);

  // Mixed-radix counter; digit 0 means "no shade at this point".
  std::map<std::uint64_t, ShadeMove> unique;
  std::vector<std::size_t> digit(static_cast<std::size_t>(k), 0);
  while (true) {
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] > options[i].size()) digit[i++] = 0;
    if (i == digit.size()) break;
    std::vector<Shade> chosen;
    std::uint64_t added = 0;
    for (std::size_t p = 0; p < digit.size(); ++p)
      if (digit[p] > 0) {
        chosen.push_back(options[p][digit[p] - 1]);
        added |= chosen.back().squares.bits();
      }
    unique.try_emplace(added, ShadeMove{std::move(chosen), Mesh(k, added)});
  }
  std::vector<ShadeMove> out;
  out.reserve(unique.size());
  for (auto& [bits, move] : unique) out.push_back(std::move(move));
  return out;
}

namespace {

// Grid cell (column, row) of host point x relative to the occurrence, or
// -1 for the occurrence's own points.
std::vector<int> host_cells(const Permutation& w, std::span<const int> positions) {
  const int n = w.size();
  const int k = static_cast<int>(positions.size());
  std::vector<int> below(static_cast<std::size_t>(n) + 2, 0);
  for (int i : positions) below[static_cast<std::size_t>(w(i)) + 1] = 1;
  for (int v = 1; v <= n + 1; ++v) below[static_cast<std::size_t>(v)] += below[static_cast<std::size_t>(v - 1)];
  std::vector<int> cells(static_cast<std::size_t>(n) + 1, -1);
  int column = 0;
  for (int x = 1; x <= n; ++x) {
    if (column < k && positions[static_cast<std::size_t>(column)] == x) {
      ++column;
      continue;
    }
    cells[static_cast<std::size_t>(x)] = Mesh::index(k, column, below[static_cast<std::size_t>(w(x))]);
  }
  return cells;
}

// Whether candidate a beats b for the shade's extreme rule. A single
// square whose vertical neighbour on the same side is shaded must move
// sideways; every other shade moves along its own direction.
bool more_extreme(const MeshPattern& pi, const Shade& s, const Permutation& w, int a, int b) {
  const Direction d = s.direction;
  if (!is_pair(d)) {
    const MeshSquare sq = s.squares.squares().front();
    const int j = pi.p(s.point);
    if (pi.mesh.has(sq.a, sq.b == j ? j - 1 : j)) return sq.a == s.point ? a > b : a < b;
  }
  switch (d) {
    case Direction::N:
    case Direction::NE:
    case Direction::NW: return w(a) > w(b);
    case Direction::S:
    case Direction::SE:
    case Direction::SW: return w(a) < w(b);
    case Direction::E: return a > b;
    case Direction::W: return a < b;
  }
  return false;
}

}  // namespace

RepairResult ssl_repair_occurrence(const MeshPattern& pi, const ShadeMove& move,
                                   const Permutation& w, const Occurrence& occ) {
  if (!is_valid_move(pi, move))
    throw std::invalid_argument("ssl_repair_occurrence: move is not valid for " + to_string(pi));
  if (!is_mesh_occurrence(pi, w, occ))
    throw std::invalid_argument("ssl_repair_occurrence: " + to_string(occ) +
                                " is not a mesh occurrence of " + to_string(pi) + " in " +
                                w.to_string());
  const int k = pi.k();
  const int bound = 2 * k * w.size();
  std::vector<int> positions = occ.positions;
  int iterations = 0;
  while (true) {
    const auto cells = host_cells(w, positions);
    bool moved = false;
    for (const Shade& s : move.assignments) {
      int best = 0;
      for (int x = 1; x <= w.size(); ++x) {
        const int cell = cells[static_cast<std::size_t>(x)];
        if (cell < 0 || !((s.squares.bits() >> cell) & 1U)) continue;
        if (best == 0 || more_extreme(pi, s, w, x, best)) best = x;
      }
      if (best != 0) {
        positions[static_cast<std::size_t>(s.point - 1)] = best;
        moved = true;
        break;
      }
    }
    if (!moved) break;
    if (++iterations > bound)
      throw std::logic_error("ssl_repair_occurrence: walk exceeded " + std::to_string(bound) +
                             " steps");
    if (!std::is_sorted(positions.begin(), positions.end()))
      throw std::logic_error("ssl_repair_occurrence: repaired positions lost their order");
  }
  return RepairResult{Occurrence{std::move(positions)}, iterations};
}

}  // namespace meshcide
