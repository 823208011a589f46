#pragma once

#include <string>
#include <vector>

#include "meshcide/mesh.hpp"

namespace meshcide {

/// Single squares are tagged by the corner of the point they touch
/// (NE, NW, SE, SW); pairs of adjacent squares by the side (E, N, W, S).
enum class Direction { NE, NW, SE, SW, E, N, W, S };

std::string to_string(Direction d);
Direction parse_direction(std::string_view text);
inline bool is_pair(Direction d) { return d >= Direction::E; }

/// Squares incident to the graph point (i, p(i)) in direction d.
Mesh incident_squares(const MeshPattern& pi, int point, Direction d);

/// A square or pair of adjacent squares addable at one graph point.
struct Shade {
  int point;  ///< 1-based pattern index i of the point (i, p(i))
  Direction direction;
  Mesh squares;

  friend bool operator==(const Shade&, const Shade&) = default;
};

/// Literal Shading Lemma (northeast) test for square (i, p(i)).
bool northeast_shadeable(const MeshPattern& pi, int point);
/// Literal Double Shading Lemma (east) test for the pair {(i,p(i)), (i,p(i)-1)}.
bool east_shadeable(const MeshPattern& pi, int point);

/// Whether the squares of direction d at `point` may be added. Directions
/// other than NE and E are tested by conjugating with the symmetry that
/// carries them onto NE or E.
bool shadeable(const MeshPattern& pi, int point, Direction d);

/// The symmetry used to reduce direction d to NE (singles) or E (pairs).
Symmetry reduction_symmetry(Direction d);

std::vector<Shade> shadeable_singles(const MeshPattern& pi);
std::vector<Shade> shadeable_pairs(const MeshPattern& pi);

/// One shade per chosen point, applied simultaneously. `added` is the union
/// of the chosen squares and is disjoint from the source mesh.
struct ShadeMove {
  std::vector<Shade> assignments;  ///< sorted by point
  Mesh added;

  /// Validates every assignment against `pi` and throws
  /// std::invalid_argument when one is not shadeable, a point repeats, or
  /// the list is empty.
  static ShadeMove make(const MeshPattern& pi, std::vector<Shade> assignments);

  friend bool operator==(const ShadeMove&, const ShadeMove&) = default;
};

/// Non-throwing counterpart of ShadeMove::make's checks.
bool is_valid_move(const MeshPattern& pi, const ShadeMove& move);

/// Every choice of at most one shadeable single or pair per point (not all
/// empty), deduplicated by the union of added squares and sorted by it.
std::vector<ShadeMove> ssl_moves(const MeshPattern& pi);

struct RepairResult {
  Occurrence occurrence;
  int iterations;
};

/// Turns a mesh occurrence of pi in w into one of (p, R ∪ move.added) by
/// repeatedly moving the smallest-indexed point whose added region is hit
/// to the extreme host point inside that region. Throws
/// std::invalid_argument when `occ` is not a mesh occurrence of pi, and
/// std::logic_error if the walk exceeds 2kn steps.
RepairResult ssl_repair_occurrence(const MeshPattern& pi, const ShadeMove& move,
                                   const Permutation& w, const Occurrence& occ);

}  // namespace meshcide
