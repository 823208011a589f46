#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "meshcide/perm.hpp"
#include "meshcide/symmetry.hpp"

namespace meshcide {

/// Largest pattern length whose (k+1)^2 grid fits a 64-bit mask.
inline constexpr int kMaxPatternLength = 7;

/// Unit square [a,a+1] x [b,b+1], indexed by its lower-left corner.
struct MeshSquare {
  int a = 0;
  int b = 0;
  friend constexpr bool operator==(MeshSquare, MeshSquare) = default;
  friend constexpr auto operator<=>(MeshSquare, MeshSquare) = default;
};

std::string to_string(MeshSquare sq);

/// A set of squares of the (k+1) x (k+1) grid, held as a bitmask with
/// square (a,b) at bit a*(k+1)+b.
class Mesh {
 public:
  explicit Mesh(int k, std::uint64_t bits = 0);
  Mesh(int k, std::initializer_list<MeshSquare> squares);
  Mesh(int k, const std::vector<MeshSquare>& squares);

  static Mesh full(int k);

  int grid() const { return k_; }
  std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  static constexpr int index(int k, int a, int b) { return a * (k + 1) + b; }
  bool in_grid(int a, int b) const { return a >= 0 && b >= 0 && a <= k_ && b <= k_; }
  /// Out-of-grid squares are reported absent.
  bool has(int a, int b) const {
    return in_grid(a, b) && ((bits_ >> index(k_, a, b)) & 1U);
  }
  bool has(MeshSquare sq) const { return has(sq.a, sq.b); }

  /// Throws std::out_of_range for a square outside the grid.
  void insert(MeshSquare sq);
  void erase(MeshSquare sq);
  Mesh with(MeshSquare sq) const;

  /// Sorted by (a, b).
  std::vector<MeshSquare> squares() const;

  bool subset_of(const Mesh& other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(const Mesh& other) const { return (bits_ & other.bits_) != 0; }
  Mesh operator|(const Mesh& o) const { return Mesh(k_, bits_ | o.bits_); }
  Mesh operator&(const Mesh& o) const { return Mesh(k_, bits_ & o.bits_); }
  Mesh operator-(const Mesh& o) const { return Mesh(k_, bits_ & ~o.bits_); }

  friend bool operator==(const Mesh&, const Mesh&) = default;
  friend auto operator<=>(const Mesh&, const Mesh&) = default;

 private:
  int k_;
  std::uint64_t bits_;
};

/// Mask of every square of the grid for pattern length k.
constexpr std::uint64_t full_mask(int k) {
  const int cells = (k + 1) * (k + 1);
  return cells >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells) - 1;
}

/// A classical pattern p of length k plus a mesh over the k grid.
struct MeshPattern {
  MeshPattern(Permutation p, Mesh mesh);
  MeshPattern(Permutation p, std::initializer_list<MeshSquare> squares);
  explicit MeshPattern(Permutation p);

  Permutation p;
  Mesh mesh;

  int k() const { return p.size(); }
  /// Whether the lattice point (x,y) lies on the graph of p.
  bool on_graph(int x, int y) const { return x >= 1 && x <= k() && p(x) == y; }

  friend bool operator==(const MeshPattern&, const MeshPattern&) = default;
  friend auto operator<=>(const MeshPattern& a, const MeshPattern& b) {
    if (auto c = a.p <=> b.p; c != 0) return c;
    return a.mesh.bits() <=> b.mesh.bits();
  }
};

/// `231:(1,0)(3,2)` form; the mesh part is omitted when empty.
std::string to_string(const MeshPattern& pi);

/// Grammar `PERM [ ":" SQUARE* ]` with SQUARE = `(a,b)`, squares separated
/// by optional whitespace or commas. Also accepts the JSON object form.
MeshPattern parse_mesh_pattern(std::string_view text);

/// Symmetry action on mesh patterns; squares map as cells of the k grid.
MeshPattern apply_symmetry(Symmetry s, const MeshPattern& pi);
Mesh apply_symmetry(Symmetry s, const Mesh& mesh);

/// The open box (x_lo,x_hi) x (y_lo,y_hi).
struct OpenBox {
  int x_lo, x_hi, y_lo, y_hi;
  bool contains(int x, int y) const {
    return x_lo < x && x < x_hi && y_lo < y && y < y_hi;
  }
  friend bool operator==(const OpenBox&, const OpenBox&) = default;
};

/// Region of the host grid that square `sq` occupies relative to `occ`.
/// Throws std::out_of_range when `sq` is outside the occurrence's grid.
OpenBox corresponding_region(const Permutation& w, const Occurrence& occ, MeshSquare sq);

/// Squares of the k grid whose corresponding region (for this occurrence)
/// holds at least one point of G(w). `positions` must be an occurrence of
/// some length-k pattern in w.
std::uint64_t occupied_squares(const Permutation& w, std::span<const int> positions);

/// Whether `occ` is an occurrence of p in w whose shaded regions are empty.
bool is_mesh_occurrence(const MeshPattern& pi, const Permutation& w, const Occurrence& occ);

std::vector<Occurrence> mesh_occurrences(const MeshPattern& pi, const Permutation& w);
bool contains(const MeshPattern& pi, const Permutation& w);
bool avoids(const MeshPattern& pi, const Permutation& w);

/// Av(pi) ∩ S_n in lexicographic order.
std::vector<Permutation> avoiders(const MeshPattern& pi, int n, int threads = 0);
std::uint64_t count_avoiders(const MeshPattern& pi, int n, int threads = 0);

}  // namespace meshcide
