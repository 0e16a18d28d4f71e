#pragma once

#include <string>

#include "json.hpp"

#include "arrkh/ses.hpp"

namespace arrkh {

using Json = nlohmann::ordered_json;

Json load_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

// Arrangement JSON; coordinates are written in the ambient subspace's own basis.
Json to_json(const VectorArrangement& a);
Json to_json(const SignedArrangement& a);
// Accepts arrangement JSON or graph JSON.
VectorArrangement arrangement_from_json(const Json& j);
SignedArrangement signed_arrangement_from_json(const Json& j);
Graph graph_from_json(const Json& j);
Json to_json(const Graph& g);

Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

Json betti_to_json(const BettiTable& b, int denominator);
BettiTable betti_from_json(const Json& j);
// Aligned grid: first two grading components as columns and rows, further
// components listed per cell.
std::string betti_to_table(const BettiTable& b, int denominator, const std::vector<std::string>& axes);

Json to_json(const MoveDescriptor& m);  // indices 1-based
MoveDescriptor move_from_json(const Json& j);

Json to_json(const SesReport& r, int denominator);

std::string degree_string(int stored, int denominator);

}  // namespace arrkh
