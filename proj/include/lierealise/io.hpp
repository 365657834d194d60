#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <lierealise/liealg.hpp>
#include <lierealise/realise.hpp>

namespace lierealise {

using Json = nlohmann::json;

// Reads and parses a JSON file. Throws Error(file_not_found) or
// Error(parse_error).
Json load_json_file(const std::string &path);

// {"dim": n, "basis": [...], "brackets": [{"lhs", "rhs", "out": {name: "p/q"}}]}
// Structural problems throw Error(schema_violation); a Jacobi failure throws
// Error(not_a_lie_algebra).
LieAlgebra algebra_from_json(const Json &j);
Json to_json(const LieAlgebra &a);

// Sparse {name: "p/q"} over the basis of `a`.
Json vector_to_json(const LieAlgebra &a, const Vector &v);
// Accepts a basis name, a sparse object or a dense array of rationals.
Vector vector_from_json(const LieAlgebra &a, const Json &j);

// {"algebra": {...}, "isotropy": [...], "complement": [...]}; without a
// complement the standard one is used. `complement_override` (basis names or
// vectors) replaces the stored complement.
TransitivePair pair_from_json(const Json &j, const std::optional<Json> &complement_override = std::nullopt);
Json to_json(const TransitivePair &p);

// Images are stored as rendered series per variable, so the document can be
// loaded back exactly.
Json to_json(const Realisation &r);
Realisation realisation_from_json(const Json &j);

Json to_json(const RealisationReport &report, const LieAlgebra &a);
Json to_json(const std::vector<LiftedImage> &lifted, const std::vector<std::string> &variables);

} // namespace lierealise
