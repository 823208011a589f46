#include "meshcide/symmetry.hpp"

namespace meshcide {

const std::array<Symmetry, 8>& Symmetry::all() {
  static const std::array<Symmetry, 8> elements = [] {
    std::array<Symmetry, 8> out{};
    std::size_t i = 0;
    for (int inv = 0; inv < 2; ++inv)
      for (int rev = 0; rev < 2; ++rev)
        for (int comp = 0; comp < 2; ++comp) {
          Symmetry s;
          if (inv) s = s.then(inverse());
          if (rev) s = s.then(reverse());
          if (comp) s = s.then(complement());
          out[i++] = s;
        }
    return out;
  }();
  return elements;
}

std::string Symmetry::name() const {
  // Recover the inverse/reverse/complement factorization from the matrix.
  const bool inv = swaps_axes();
  const bool rev = inv ? m01_ < 0 : m00_ < 0;
  const bool comp = inv ? m10_ < 0 : m11_ < 0;
  std::string out;
  const auto add = [&](bool on, const char* word) {
    if (!on) return;
    if (!out.empty()) out += '-';
    out += word;
  };
  add(inv, "inverse");
  add(rev, "reverse");
  add(comp, "complement");
  return out.empty() ? "id" : out;
}

Symmetry parse_symmetry(std::string_view name) {
  for (const Symmetry& s : Symmetry::all())
    if (s.name() == name) return s;
  throw ParseError("unknown symmetry '" + std::string(name) + "'");
}

Permutation apply_symmetry(Symmetry s, const Permutation& w) {
  const int n = w.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const auto [x, y] = s.map(i, w(i), n + 1);
    out[static_cast<std::size_t>(x - 1)] = y;
  }
  return Permutation(std::move(out));
}

}  // namespace meshcide
