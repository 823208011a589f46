#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "meshcide/perm.hpp"

namespace meshcide {

/// An element of the dihedral group of order 8 acting on permutation graphs
/// and mesh grids. Stored as a signed 2x2 matrix acting on coordinates
/// centred in the grid; composition is matrix multiplication.
///
/// Every element factors uniquely as "inverse (optional), then reverse
/// (optional), then complement (optional)".
class Symmetry {
 public:
  constexpr Symmetry() = default;

  static constexpr Symmetry identity() { return {}; }
  /// w(i) -> w(n+1-i)
  static constexpr Symmetry reverse() { return Symmetry(-1, 0, 0, 1); }
  /// w(i) -> n+1-w(i)
  static constexpr Symmetry complement() { return Symmetry(1, 0, 0, -1); }
  /// Functional inverse; transposes the graph.
  static constexpr Symmetry inverse() { return Symmetry(0, 1, 1, 0); }

  /// All eight elements, identity first.
  static const std::array<Symmetry, 8>& all();

  /// Apply *this first, then `next`.
  constexpr Symmetry then(Symmetry next) const {
    return Symmetry(next.m00_ * m00_ + next.m01_ * m10_, next.m00_ * m01_ + next.m01_ * m11_,
                    next.m10_ * m00_ + next.m11_ * m10_, next.m10_ * m01_ + next.m11_ * m11_);
  }
  constexpr Symmetry inverted() const { return Symmetry(m00_, m10_, m01_, m11_); }

  constexpr bool swaps_axes() const { return m00_ == 0; }

  /// Maps a lattice coordinate pair in [0, extent]^2 (reflections send x to
  /// extent - x). Graph points use extent = n + 1; mesh squares of a
  /// length-k pattern use extent = k.
  constexpr std::pair<int, int> map(int x, int y, int extent) const {
    const int cx = 2 * x - extent;
    const int cy = 2 * y - extent;
    const int nx = m00_ * cx + m01_ * cy;
    const int ny = m10_ * cx + m11_ * cy;
    return {(nx + extent) / 2, (ny + extent) / 2};
  }

  /// "id", or the generator word in application order, e.g. "inverse-reverse".
  std::string name() const;

  friend constexpr bool operator==(Symmetry, Symmetry) = default;

 private:
  constexpr Symmetry(int m00, int m01, int m10, int m11)
      : m00_(m00), m01_(m01), m10_(m10), m11_(m11) {}

  int m00_ = 1, m01_ = 0, m10_ = 0, m11_ = 1;
};

Symmetry parse_symmetry(std::string_view name);

Permutation apply_symmetry(Symmetry s, const Permutation& w);

}  // namespace meshcide
