#pragma once

// JSON and text renderings.  Both formats carry the same fields.

#include <string>

#include <json.hpp>

#include "multinv/decomposition.hpp"
#include "multinv/isotropy.hpp"
#include "multinv/obstruction.hpp"

namespace multinv {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

Json to_json(const ObstructionReport& report);
/// Inverse of to_json; throws ValidationError on a malformed document.
ObstructionReport report_from_json(const Json& doc);
std::string to_text(const ObstructionReport& report);

Json to_json(const IsotropyCatalog& catalog, const std::string& name);
std::string to_text(const IsotropyCatalog& catalog, const std::string& name);

Json to_json(const DecompositionResult& result, const std::string& name);
std::string to_text(const DecompositionResult& result, const std::string& name);

Json to_json(const std::vector<GradedSlice>& slices, const std::string& name);
std::string to_text(const std::vector<GradedSlice>& slices, const std::string& name);

/// Integer entries as JSON numbers when they fit in 64 bits, decimal strings otherwise.
Json to_json(const IntVector& v);

}  // namespace multinv
