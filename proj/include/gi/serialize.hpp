#pragma once

// JSON encoding of the domain objects ("schema": "gi/1").
//
// Scalars are strings in the scalars text form (integers are accepted on
// input), matrices are arrays of rows, group elements are integer arrays (a
// bare integer is accepted for cyclic groups). Malformed descriptors raise
// ParseError naming the offending field.

#include "gi/involution.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace gi::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "gi/1";

json to_json(const CycloScalar& x);
CycloScalar scalar_from_json(const json& j);

json to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const json& j);
json to_json(const GroupElement& g);
GroupElement element_from_json(const json& j, const FinAbGroup& group);
json to_json(const Character& c);
Character character_from_json(const json& j, const FinAbGroup& group);
std::vector<GroupElement> tuple_from_json(const json& j, const FinAbGroup& group);

/// Full matrices as an array of rows; UT_n matrices as {"upper_triangular": true, "rows": ...}.
json to_json(const SquareMatrix& m);
SquareMatrix matrix_from_json(const json& j);

json to_json(const ElementaryGrading& g);
json to_json(const EpsilonGrading& g);
/// Explicit component bases ("kind": "general").
json to_json(const GeneralGrading& g);

struct ParsedGrading {
    std::string kind;
    GeneralGrading grading;
    /// Present for elementary descriptors.
    std::optional<ElementaryGrading> elementary;
};

/// Descriptor kinds: elementary, epsilon, induced, general.
ParsedGrading grading_from_json(const json& j);

json to_json(const Involution& inv);
/// Descriptor kinds: form, circ, s, conjugated. `n` supplies the size for
/// circ / s descriptors without an "n" field.
Involution involution_from_json(const json& j, std::optional<size_t> n = std::nullopt);

json to_json(const LinearMap& f);
/// {"kind": "conjugation", "P": M} or {"kind": "images", "images": [f(e_11), f(e_12), ...]}.
LinearMap automorphism_from_json(const json& j);

} // namespace gi::io
