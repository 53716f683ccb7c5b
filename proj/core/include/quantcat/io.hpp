#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quantcat/qcat.hpp"

namespace quantcat {

/// Parses a JSON document; syntax errors raise InvalidInput with line and column.
Json parse_json(std::string_view text, const std::string& source = "input");
/// Throws InvalidInput when the file cannot be read or parsed.
Json read_json_file(const std::string& path);

/// {"elements": [...], "leq": [[a, b], ...]}.
FiniteLattice parse_lattice(const Json& j, const std::string& context = "lattice");
/// "builtin:<name>" or {"objects", "homs", "compose", "units"}; compose tables
/// are indexed [beta][alpha].
QuantaloidPtr parse_quantaloid(const Json& j);
/// A built-in name or a path to a quantaloid JSON file.
QuantaloidPtr load_quantaloid(std::string_view selector);

/// A name array (every element of the first object) or {"elements", "types"}.
TypedSet parse_typed_set(const Quantaloid& q, const Json& j, const std::string& context = "typed set");
/// {"src", "tgt", "entries": [[x, y, value], ...]}; omitted entries are bottom.
Relation parse_relation(const QuantaloidPtr& q, const Json& j, const std::string& context = "relation");
/// {"carrier", "hom"}; the hom may omit src and tgt. Throws InvalidCategory.
CategoryPtr parse_category(const QuantaloidPtr& q, const Json& j);

/// Lawvere space: {"points": [...]} with a(x, y) = |x - y|, or
/// {"names": [...], "distances": [[...]]}.
CategoryPtr parse_space(const Json& j);
/// One space or {"spaces": [...]}.
std::vector<CategoryPtr> parse_spaces(const Json& j);

Json category_json(const Category& x);

}  // namespace quantcat
