#pragma once

#include <string>

#include "onepl/checks.hpp"
#include "onepl/drawing.hpp"
#include "onepl/graph.hpp"
#include "onepl/reports.hpp"

#include "json.hpp"

namespace onepl {

using Json = nlohmann::ordered_json;

// Plain edge-list format: first line "n m", then m lines "u v". Output is in
// ascending canonical order; lines starting with '#' are ignored on input.
SimpleGraph parse_edge_list(const std::string& text);
std::string write_edge_list(const SimpleGraph& g);

// Drawing file format .1pl (see README). Parsing is purely syntactic; feed
// the result to validate_drawing.
DrawingData parse_1pl(const std::string& text);
OnePlaneDrawing load_1pl(const std::string& text);

// Byte-deterministic: rotations start at their smallest neighbor id.
std::string write_1pl(const OnePlaneDrawing& d);

// serialize + reparse; the result equals the input field by field.
OnePlaneDrawing roundtrip(const OnePlaneDrawing& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

Json to_json(const IdentityReport& r);
Json to_json(const BoundReport& r);
Json to_json(const CliqueCensus& c);
Json to_json(const ConnectivityReport& r);
Json to_json(const SeparatorCensus& s);
Json to_json(const FaceCensus& c);
Json to_json(const RichnessReport& r);
Json to_json(const CycleSideReport& r);
Json to_json(const K4Class& k);

// Flattened scalar rows for the tsv output format (nested objects joined
// with '.', arrays comma-separated).
std::vector<std::pair<std::string, std::string>> flatten(const Json& j);

}  // namespace onepl
