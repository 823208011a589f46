#include "meshcide/diagonals.hpp"

#include <algorithm>
#include <stdexcept>

namespace meshcide {

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::NE: return "NE";
    case Orientation::SE: return "SE";
    case Orientation::Pointless: return "PT";
  }
  return "?";
}

std::uint64_t EnclosedDiagonal::mask(int k) const {
  std::uint64_t m = 0;
  for (MeshSquare sq : squares) m |= std::uint64_t{1} << Mesh::index(k, sq.a, sq.b);
  return m;
}

std::string to_string(const EnclosedDiagonal& d) {
  if (d.orientation == Orientation::Pointless) return "PT " + to_string(d.anchor());
  return to_string(d.orientation) + " " + to_string(d.squares.front()) + "-" +
         to_string(d.squares.back()) + " len=" + std::to_string(d.length());
}

namespace {

// Scans one diagonal line of lattice points, given by its first point and
// step (dx, dy), for maximal runs of consecutive graph points. `square_at`
// maps the run's first point and an offset i to the i-th square.
template <typename SquareAt>
void scan_line(const MeshPattern& pi, int x, int y, int dy, Orientation o, SquareAt square_at,
               std::vector<EnclosedDiagonal>& out) {
  const int limit = pi.k() + 1;
  while (x <= limit && y >= 0 && y <= limit) {
    if (!pi.on_graph(x, y)) {
      ++x;
      y += dy;
      continue;
    }
    const int run_x = x, run_y = y;
    int c = 0;
    while (pi.on_graph(x, y)) {
      ++c;
      ++x;
      y += dy;
    }
    EnclosedDiagonal d{o, {}};
    bool shaded = true;
    for (int i = 0; i <= c && shaded; ++i) {
      const MeshSquare sq = square_at(run_x, run_y, i);
      shaded = pi.mesh.has(sq);
      d.squares.push_back(sq);
    }
    if (shaded) out.push_back(std::move(d));
  }
}

bool pointless(const MeshPattern& pi, MeshSquare sq) {
  for (int dx = 0; dx <= 1; ++dx)
    for (int dy = 0; dy <= 1; ++dy)
      if (pi.on_graph(sq.a + dx, sq.b + dy)) return false;
  return true;
}

}  // namespace

std::vector<EnclosedDiagonal> enclosed_diagonals(const MeshPattern& pi) {
  const int k = pi.k();
  std::vector<EnclosedDiagonal> out;
  // NE lines x - y = d: the square before the run's first point (x,y) is
  // (x-1, y-1), and the run continues up and to the right.
  for (int d = -(k + 1); d <= k + 1; ++d) {
    const int x0 = std::max(0, d);
    scan_line(pi, x0, x0 - d, +1, Orientation::NE,
              [](int x, int y, int i) { return MeshSquare{x - 1 + i, y - 1 + i}; }, out);
  }
  // SE lines x + y = s: the square before the run's first point (x,y) is
  // (x-1, y), and the run continues down and to the right.
  for (int s = 0; s <= 2 * (k + 1); ++s) {
    const int x0 = std::max(0, s - (k + 1));
    scan_line(pi, x0, s - x0, -1, Orientation::SE,
              [](int x, int y, int i) { return MeshSquare{x - 1 + i, y - i}; }, out);
  }
  for (MeshSquare sq : pi.mesh.squares())
    if (pointless(pi, sq)) out.push_back({Orientation::Pointless, {sq}});
  std::sort(out.begin(), out.end(), [](const EnclosedDiagonal& l, const EnclosedDiagonal& r) {
    if (l.anchor() != r.anchor()) return l.anchor() < r.anchor();
    return l.orientation < r.orientation;
  });
  return out;
}

std::vector<std::uint64_t> enc_signature(const MeshPattern& pi) {
  std::vector<std::uint64_t> sig;
  for (const auto& d : enclosed_diagonals(pi)) sig.push_back(d.mask(pi.k()));
  std::sort(sig.begin(), sig.end());
  return sig;
}

Mesh enc_core(const MeshPattern& pi) {
  std::uint64_t bits = 0;
  for (std::uint64_t m : enc_signature(pi)) bits |= m;
  return Mesh(pi.k(), bits);
}

bool same_enc(const MeshPattern& pi, const MeshPattern& pi2) {
  if (pi.p != pi2.p)
    throw std::invalid_argument("same_enc: underlying permutations differ (" +
                                pi.p.to_string() + " vs " + pi2.p.to_string() + ")");
  return enc_signature(pi) == enc_signature(pi2);
}

bool is_coincident_with_classical(const MeshPattern& pi) {
  return enclosed_diagonals(pi).empty();
}

namespace {

// Inserts a value between b and b+1 at the slot after position a, i.e. a
// new point inside square (a,b), and standardizes.
Permutation insert_point(const Permutation& p, MeshSquare sq) {
  std::vector<int> doubled;
  doubled.reserve(static_cast<std::size_t>(p.size()) + 1);
  for (int i = 1; i <= p.size(); ++i) {
    if (i == sq.a + 1) doubled.push_back(2 * sq.b + 1);
    doubled.push_back(2 * p(i));
  }
  if (sq.a == p.size()) doubled.push_back(2 * sq.b + 1);
  return Permutation::standardize(std::span<const int>(doubled));
}

// q avoids `owner` and contains `other`, where `d` is in enc(owner) only.
Permutation build_witness(const MeshPattern& owner, const EnclosedDiagonal& d) {
  if (d.orientation != Orientation::SE) return insert_point(owner.p, d.anchor());
  // The complement turns SE runs into NE runs and preserves containment.
  const Symmetry c = Symmetry::complement();
  const MeshPattern image = apply_symmetry(c, owner);
  const std::uint64_t target = apply_symmetry(c, Mesh(owner.k(), d.mask(owner.k()))).bits();
  for (const auto& e : enclosed_diagonals(image))
    if (e.mask(image.k()) == target) return apply_symmetry(c, build_witness(image, e));
  throw std::logic_error("enc_witness: complement of an SE diagonal is not enclosed");
}

}  // namespace

Witness enc_witness(const MeshPattern& pi, const MeshPattern& pi2) {
  if (pi.p != pi2.p)
    throw std::invalid_argument("enc_witness: underlying permutations differ");
  const auto enc1 = enclosed_diagonals(pi);
  const auto enc2 = enclosed_diagonals(pi2);
  const auto sig2 = enc_signature(pi2);
  const auto sig1 = enc_signature(pi);
  const int k = pi.k();

  const EnclosedDiagonal* chosen = nullptr;
  bool owner_is_first = true;
  for (const auto& d : enc1)
    if (!std::binary_search(sig2.begin(), sig2.end(), d.mask(k))) {
      chosen = &d;
      break;
    }
  if (chosen == nullptr) {
    owner_is_first = false;
    for (const auto& d : enc2)
      if (!std::binary_search(sig1.begin(), sig1.end(), d.mask(k))) {
        chosen = &d;
        break;
      }
  }
  if (chosen == nullptr)
    throw std::invalid_argument("enc_witness: patterns have the same enclosed diagonals");

  const MeshPattern& owner = owner_is_first ? pi : pi2;
  const MeshPattern& other = owner_is_first ? pi2 : pi;
  Permutation q = build_witness(owner, *chosen);
  if (contains(owner, q) || !contains(other, q))
    throw std::logic_error("enc_witness: constructed permutation " + q.to_string() +
                           " does not separate " + to_string(pi) + " and " + to_string(pi2));
  return Witness{std::move(q), !owner_is_first};
}

}  // namespace meshcide
