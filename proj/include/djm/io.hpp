#pragma once

// JSON file formats. Rationals are strings "p" or "p/q"; object fields keep
// a fixed order so equal values always serialize to equal bytes.

#include <string>
#include <variant>

#include <json.hpp>

#include "djm/cylinder.hpp"
#include "djm/grower.hpp"
#include "djm/matching.hpp"
#include "djm/model.hpp"
#include "djm/oracle.hpp"

namespace djm {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Point& p);
Json to_json(const Drawing& d);
Json to_json(const CylindricalDrawing& c);
Json to_json(const ValidationReport& r);
// `drawing_ref` names the file holding the base drawing.
Json to_json(const PlaneSubgraph& g, const std::string& drawing_ref);
Json to_json(const MatchingResult& r, const Drawing& d);
Json to_json(const OracleResult& r, const Drawing& d);

// All readers throw InputError on malformed input.
Rational rational_from_json(const Json& j);
Drawing drawing_from_json(const Json& j);
CylindricalDrawing cylindrical_from_json(const Json& j);
// Certificate is recomputed against d; throws CertificationFailure if it fails.
MatchingResult matching_from_json(const Json& j, const Drawing& d);

using FileInstance = std::variant<Drawing, CylindricalDrawing>;

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
std::string dump(const Json& j);  // two-space indent, trailing newline

// Drawing or cylindrical drawing, told apart by their fields.
FileInstance instance_from_json(const Json& j);
FileInstance read_instance(const std::string& path);

}  // namespace djm
