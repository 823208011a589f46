#include "meshcide/io.hpp"

#include <cctype>
#include <charconv>

namespace meshcide {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

int parse_coordinate(std::string_view token, std::string_view square) {
  token = trim(token);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("invalid square '" + std::string(square) + "'");
  return v;
}

void add_square(Mesh& mesh, int a, int b, const std::string& shown) {
  if (!mesh.in_grid(a, b))
    throw ParseError("square " + shown + " is outside the grid of a length-" +
                     std::to_string(mesh.grid()) + " pattern");
  mesh.insert({a, b});
}

MeshPattern parse_text(std::string_view text) {
  const std::size_t colon = text.find(':');
  const Permutation p = parse_permutation(text.substr(0, colon));
  if (p.size() > kMaxPatternLength)
    throw ParseError("pattern '" + p.to_string() + "' is longer than " +
                     std::to_string(kMaxPatternLength));
  Mesh mesh(p.size());
  if (colon == std::string_view::npos) return MeshPattern(p, mesh);

  std::string_view rest = text.substr(colon + 1);
  while (true) {
    while (!rest.empty() && (is_space(rest.front()) || rest.front() == ',')) rest.remove_prefix(1);
    if (rest.empty()) break;
    if (rest.front() != '(') {
      const std::size_t end = rest.find_first_of(" \t,(");
      throw ParseError("unexpected token '" + std::string(rest.substr(0, end)) +
                       "' in mesh; expected (a,b)");
    }
    const std::size_t close = rest.find(')');
    if (close == std::string_view::npos)
      throw ParseError("unterminated square '" + std::string(rest) + "'");
    const std::string_view square = rest.substr(0, close + 1);
    const std::string_view inner = square.substr(1, square.size() - 2);
    const std::size_t comma = inner.find(',');
    if (comma == std::string_view::npos)
      throw ParseError("invalid square '" + std::string(square) + "'");
    const int a = parse_coordinate(inner.substr(0, comma), square);
    const int b = parse_coordinate(inner.substr(comma + 1), square);
    add_square(mesh, a, b, "(" + std::to_string(a) + "," + std::to_string(b) + ")");
    rest.remove_prefix(close + 1);
  }
  return MeshPattern(p, mesh);
}

json squares_json(const Mesh& mesh) {
  json out = json::array();
  for (const MeshSquare& s : mesh.squares()) out.push_back({s.a, s.b});
  return out;
}

}  // namespace

MeshPattern parse_mesh_pattern(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError("invalid JSON pattern '" + std::string(text) + "': " + e.what());
    }
    return pattern_from_json(j);
  }
  return parse_text(text);
}

json to_json(const Permutation& p) { return p.word(); }

json to_json(const Mesh& mesh) { return squares_json(mesh); }

json to_json(const MeshPattern& pi) {
  return json{{"perm", to_json(pi.p)}, {"mesh", to_json(pi.mesh)}};
}

json to_json(const EnclosedDiagonal& d) {
  json squares = json::array();
  for (const MeshSquare& s : d.squares) squares.push_back({s.a, s.b});
  return json{{"orientation", to_string(d.orientation)}, {"squares", squares}};
}

json to_json(const FamilyTags& tags) {
  return json{{"vincular", tags.vincular},
              {"bivincular", tags.bivincular},
              {"isolating", tags.isolating},
              {"sparse", tags.sparse}};
}

json to_json(const Shade& shade) {
  return json{{"point", {shade.point, 0}},
              {"shape", is_pair(shade.direction) ? "pair" : "single"},
              {"dir", to_string(shade.direction)},
              {"squares", to_json(shade.squares)}};
}

json to_json(const ShadeMove& move) {
  json assignments = json::array();
  for (const Shade& s : move.assignments) assignments.push_back(to_json(s));
  return json{{"added", to_json(move.added)}, {"assignments", assignments}};
}

json to_json(const ProofStep& step, const Permutation& p) {
  json out{{"rule", to_string(step.rule)},
           {"from", to_json(MeshPattern(p, step.from))},
           {"to", to_json(MeshPattern(p, step.to))}};
  if (step.move) {
    json move = to_json(*step.move);
    for (json& a : move["assignments"]) a["point"][1] = p(a["point"][0].get<int>());
    out["added"] = move["added"];
    out["assignments"] = move["assignments"];
  }
  if (step.upper) {
    out["lower"] = out["from"];
    out["upper"] = to_json(MeshPattern(p, *step.upper));
  }
  if (step.symmetry) {
    const Permutation image = apply_symmetry(*step.symmetry, p);
    out["symmetry"] = step.symmetry->name();
    json nested = json::array();
    for (const ProofStep& s : step.nested) nested.push_back(to_json(s, image));
    out["proof"] = nested;
  }
  return out;
}

json to_json(const ProofTrace& trace) {
  json out = json::array();
  for (const ProofStep& s : trace.steps) out.push_back(to_json(s, trace.p));
  return out;
}

json to_json(const CoincidenceVerdict& verdict) {
  json out{{"status", to_string(verdict.status)}, {"depth", verdict.depth}};
  if (verdict.witness) {
    out["witness"] = to_json(verdict.witness->w);
    out["contains_first"] = verdict.witness->contains_first;
  }
  if (verdict.trace) out["proof"] = to_json(*verdict.trace);
  return out;
}

Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("permutation must be a JSON array, got " + j.dump());
  std::vector<int> word;
  for (const json& v : j) {
    if (!v.is_number_integer()) throw ParseError("invalid permutation entry " + v.dump());
    word.push_back(v.get<int>());
  }
  return Permutation(std::move(word));
}

Mesh mesh_from_json(int k, const json& j) {
  if (!j.is_array()) throw ParseError("mesh must be a JSON array, got " + j.dump());
  Mesh mesh(k);
  for (const json& s : j) {
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer())
      throw ParseError("invalid square " + s.dump());
    add_square(mesh, s[0].get<int>(), s[1].get<int>(), s.dump());
  }
  return mesh;
}

MeshPattern pattern_from_json(const json& j) {
  if (!j.is_object() || !j.contains("perm"))
    throw ParseError("pattern JSON needs a \"perm\" field: " + j.dump());
  const Permutation p = permutation_from_json(j["perm"]);
  if (p.size() > kMaxPatternLength)
    throw ParseError("pattern '" + p.to_string() + "' is longer than " +
                     std::to_string(kMaxPatternLength));
  return MeshPattern(p, j.contains("mesh") ? mesh_from_json(p.size(), j["mesh"]) : Mesh(p.size()));
}

}  // namespace meshcide
