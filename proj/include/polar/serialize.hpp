#pragma once

#include <json.hpp>

#include "polar/geometry.hpp"

namespace polar {

// {rows, cols, entries: [indices row-major]}
nlohmann::json mat_to_json(const Mat& m);
Mat mat_from_json(const FieldPtr& f, const nlohmann::json& j);

// {"X": [nu^2 entries], "Z": [2 nu entries]}, row-major canonical indices.
nlohmann::json vertex_to_json(const Vertex& v);
// Throws std::invalid_argument on malformed input or a non-alternate X.
Vertex vertex_from_json(const OrthoSpace& sp, const nlohmann::json& j);

// Full matrix plus factor blocks.
nlohmann::json g01_to_json(const G01Element& g);
nlohmann::json g0_to_json(const OrthoSpace& sp, const G0Element& g);

}  // namespace polar
