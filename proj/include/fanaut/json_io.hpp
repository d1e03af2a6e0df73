#pragma once

#include <json.hpp>
#include <string>

#include "fanaut/demazure.hpp"
#include "fanaut/fan.hpp"
#include "fanaut/linear_case.hpp"
#include "fanaut/spherical_nonlinear.hpp"
#include "fanaut/toric_levi.hpp"

namespace fanaut {

using Json = nlohmann::json;

// Integers that do not fit in 64 bits are written as decimal strings.
Json to_json(const Integer& x);
Json to_json(const IntVector& v);
Json to_json(const std::vector<IntVector>& vs);
Integer integer_from_json(const Json& j, const std::string& where);
IntVector vector_from_json(const Json& j, const std::string& where);

Fan fan_from_json(const Json& j);
Json fan_to_json(const Fan& f);
SphericalData spherical_from_json(const Json& j);
Json spherical_to_json(const SphericalData& sd);
bool is_spherical_json(const Json& j);

// Reads and parses a file; throws ParseError on I/O or syntax problems.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

Json to_json(const ValidationReport& r);
Json to_json(const std::vector<DemazureRoot>& roots);
Json to_json(const RootData& rd);
Json to_json(const Cone& c);
Json to_json(const ColoredFan& cf);
Json to_json(const HasseDiagram& h);
Json to_json(const LeviInvariants& inv);
Json to_json(const Sublattice& s);

}  // namespace fanaut
