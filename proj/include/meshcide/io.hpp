#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "meshcide/coincidence.hpp"
#include "meshcide/diagonals.hpp"
#include "meshcide/families.hpp"
#include "meshcide/mesh.hpp"
#include "meshcide/trace.hpp"

namespace meshcide {

using json = nlohmann::json;

json to_json(const Permutation& p);
json to_json(const Mesh& mesh);  ///< [[a,b], ...] in mask order
json to_json(const MeshPattern& pi);  ///< {"perm":[...],"mesh":[[a,b],...]}
json to_json(const EnclosedDiagonal& d);
json to_json(const FamilyTags& tags);
json to_json(const Shade& shade);
json to_json(const ShadeMove& move);
json to_json(const ProofStep& step, const Permutation& p);
json to_json(const ProofTrace& trace);  ///< array of steps
json to_json(const CoincidenceVerdict& verdict);

Permutation permutation_from_json(const json& j);
Mesh mesh_from_json(int k, const json& j);
MeshPattern pattern_from_json(const json& j);

}  // namespace meshcide
