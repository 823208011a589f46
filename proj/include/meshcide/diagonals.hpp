#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "meshcide/mesh.hpp"

namespace meshcide {

enum class Orientation { NE, SE, Pointless };

std::string to_string(Orientation o);

/// A maximal NE or SE run of shaded squares threaded through consecutive
/// points of G(p), or a single pointless square. Squares are listed from
/// the anchor (leftmost square) outwards.
struct EnclosedDiagonal {
  Orientation orientation;
  std::vector<MeshSquare> squares;

  MeshSquare anchor() const { return squares.front(); }
  int length() const { return static_cast<int>(squares.size()); }
  std::uint64_t mask(int k) const;

  friend bool operator==(const EnclosedDiagonal&, const EnclosedDiagonal&) = default;
};

/// Report line: `NE (2,0)-(3,1) len=2`, `SE (0,2)-(1,1) len=2` or `PT (1,0)`.
std::string to_string(const EnclosedDiagonal& d);

/// enc(p,R): proper NE diagonals, proper SE diagonals and pointless squares,
/// sorted by anchor. Each shaded square lies in at most one of them.
std::vector<EnclosedDiagonal> enclosed_diagonals(const MeshPattern& pi);

/// Sorted square masks of enc(p,R). Orientation is implied by the squares
/// of a proper diagonal and meaningless for a pointless one, so two
/// patterns on the same p have equal enc sets iff their signatures match.
std::vector<std::uint64_t> enc_signature(const MeshPattern& pi);

/// Union of all enclosed-diagonal squares.
Mesh enc_core(const MeshPattern& pi);

/// Throws std::invalid_argument when the underlying permutations differ.
bool same_enc(const MeshPattern& pi, const MeshPattern& pi2);

/// A mesh pattern is coincident with a classical pattern iff enc is empty.
bool is_coincident_with_classical(const MeshPattern& pi);

/// A permutation on which two patterns disagree.
struct Witness {
  Permutation w;
  /// True when w contains the first pattern and avoids the second.
  bool contains_first;
};

/// For patterns on the same p with different enc sets, builds q in S_{k+1}
/// by inserting a new value just below the first square of a diagonal that
/// only one of them has (through the complement when that diagonal runs
/// SE). q avoids the diagonal's owner and contains the other pattern. The
/// result is re-verified; std::logic_error signals a failed verification.
Witness enc_witness(const MeshPattern& pi, const MeshPattern& pi2);

}  // namespace meshcide
