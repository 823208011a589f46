#include "meshcide/families.hpp"

#include <optional>

namespace meshcide {

namespace {

bool full_column(const Mesh& r, int a) {
  for (int y = 0; y <= r.grid(); ++y)
    if (!r.has(a, y)) return false;
  return true;
}

bool full_row(const Mesh& r, int b) {
  for (int x = 0; x <= r.grid(); ++x)
    if (!r.has(x, b)) return false;
  return true;
}

bool pointless(const MeshPattern& pi, MeshSquare sq) {
  return !pi.on_graph(sq.a, sq.b) && !pi.on_graph(sq.a + 1, sq.b) &&
         !pi.on_graph(sq.a, sq.b + 1) && !pi.on_graph(sq.a + 1, sq.b + 1);
}

}  // namespace

FamilyTags classify_family(const MeshPattern& pi) {
  const Mesh& r = pi.mesh;
  const int k = pi.k();
  FamilyTags tags;

  Mesh columns(k), rows(k);
  for (int a = 0; a <= k; ++a)
    if (full_column(r, a))
      for (int y = 0; y <= k; ++y) columns.insert({a, y});
  for (int b = 0; b <= k; ++b)
    if (full_row(r, b))
      for (int x = 0; x <= k; ++x) rows.insert({x, b});
  tags.vincular = columns == r;
  tags.bivincular = (columns | rows) == r;

  tags.isolating = true;
  for (MeshSquare sq : r.squares()) {
    if (pointless(pi, sq)) continue;
    for (MeshSquare other : r.squares())
      if (other.a == sq.a - 1 || other.a == sq.a + 1 || other.b == sq.b - 1 ||
          other.b == sq.b + 1)
        tags.isolating = false;
  }

  tags.sparse = true;
  for (int t = 0; t <= k; ++t) {
    int in_column = 0, in_row = 0;
    for (int u = 0; u <= k; ++u) {
      in_column += r.has(t, u);
      in_row += r.has(u, t);
    }
    if (in_column > 1 || in_row > 1) tags.sparse = false;
  }
  return tags;
}

MeshPattern gamma1() {
  return MeshPattern(Permutation({1, 2}), {{0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 0}});
}

MeshPattern gamma2() {
  return MeshPattern(Permutation({1, 2}), {{0, 2}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
}

std::optional<Symmetry> gamma_symmetry(const MeshPattern& pi, const MeshPattern& pi2) {
  if (pi == pi2) return std::nullopt;
  const MeshPattern g1 = gamma1(), g2 = gamma2();
  for (const Symmetry& s : Symmetry::all()) {
    const MeshPattern a = apply_symmetry(s, g1), b = apply_symmetry(s, g2);
    if ((pi == a && pi2 == b) || (pi == b && pi2 == a)) return s;
  }
  return std::nullopt;
}

bool contains_gamma_oracle(const Permutation& w) { return is_sum_decomposable(w); }

}  // namespace meshcide
