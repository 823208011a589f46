#pragma once

#include <string>
#include <string_view>

#include "meshcide/mesh.hpp"

namespace meshcide {

enum class RenderFormat { Ascii, Tikz, Json };

/// Throws ParseError for anything but ascii, tikz or json.
RenderFormat parse_render_format(std::string_view text);

/// ascii: a (2k+3) x (2k+3) character matrix, top row first. Cells are `#`
/// (shaded) or `.`, lattice points `o` (pattern point) or `+`, joined by
/// `-` and `|`. Every line ends with a newline.
std::string render(const MeshPattern& pi, RenderFormat format);

}  // namespace meshcide
