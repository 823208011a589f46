#include "meshcide/render.hpp"

#include <sstream>

#include "meshcide/io.hpp"

namespace meshcide {

RenderFormat parse_render_format(std::string_view text) {
  if (text == "ascii") return RenderFormat::Ascii;
  if (text == "tikz") return RenderFormat::Tikz;
  if (text == "json") return RenderFormat::Json;
  throw ParseError("unknown format '" + std::string(text) + "'; expected ascii, tikz or json");
}

namespace {

std::string ascii(const MeshPattern& pi) {
  const int k = pi.k();
  const int side = 2 * k + 3;
  std::vector<std::string> rows(side, std::string(side, ' '));
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      const bool lattice_row = r % 2 == 0, lattice_col = c % 2 == 0;
      char& ch = rows[r][c];
      if (lattice_row && lattice_col) {
        ch = pi.on_graph(c / 2, k + 1 - r / 2) ? 'o' : '+';
      } else if (lattice_row) {
        ch = '-';
      } else if (lattice_col) {
        ch = '|';
      } else {
        ch = pi.mesh.has(c / 2, k - r / 2) ? '#' : '.';
      }
    }
  }
  std::string out;
  for (const std::string& row : rows) out += row + '\n';
  return out;
}

std::string tikz(const MeshPattern& pi) {
  const int k = pi.k();
  std::ostringstream out;
  out << "\\begin{tikzpicture}[scale=0.5]\n";
  for (const MeshSquare& s : pi.mesh.squares())
    out << "  \\fill[gray!50] (" << s.a << "," << s.b << ") rectangle (" << s.a + 1 << ","
        << s.b + 1 << ");\n";
  for (int i = 1; i <= k; ++i) {
    out << "  \\draw (" << i << ",0) -- (" << i << "," << k + 1 << ");\n";
    out << "  \\draw (0," << i << ") -- (" << k + 1 << "," << i << ");\n";
  }
  for (int i = 1; i <= k; ++i)
    out << "  \\fill (" << i << "," << pi.p(i) << ") circle (5pt);\n";
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace

std::string render(const MeshPattern& pi, RenderFormat format) {
  switch (format) {
    case RenderFormat::Ascii: return ascii(pi);
    case RenderFormat::Tikz: return tikz(pi);
    case RenderFormat::Json: return to_json(pi).dump() + "\n";
  }
  return {};
}

}  // namespace meshcide
