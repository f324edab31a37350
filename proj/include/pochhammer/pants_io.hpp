#pragma once

// JSON files for surfaces and pants graphs, tagged "format": "pochhammer/1".
//
//   surface file:  {"format", "genus", "punctures", "alpha": [[...], ...]}
//   pants file:    {"format", "surface": {"genus", "punctures"},
//                   "pants": [names],
//                   "curves": [{"name", "ends": [p, q], "label": [...],
//                               "words": [w0 | null, w1 | null]}],
//                   "legs":   [{"name", "pants", "label", "word"}]}
//
// Curve ends name pants by name or index. "label" is the class at end 0;
// "labels": [l0, l1] gives both ends explicitly. Words use the generator
// names of the standard surface presentation.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pochhammer/pants.hpp"
#include "pochhammer/words.hpp"

namespace pochhammer {

inline constexpr std::string_view kFormatTag = "pochhammer/1";

struct SurfaceSpec {
    int genus = 0;
    int punctures = 0;
    std::optional<IntMatrix> alpha;  // default: Hurewicz
};

/// Throws ParseError (with line and column) on malformed JSON and
/// ValidationError (with a JSON path) on schema violations.
nlohmann::json parse_json(std::string_view text);
std::string read_file(const std::string& path);

SurfaceSpec surface_spec_from_json(const nlohmann::json& j);
SurfaceSpec parse_surface_spec(std::string_view text);

PantsGraph pants_from_json(const nlohmann::json& j);
nlohmann::json pants_to_json(const PantsGraph& g);
PantsGraph parse_pants(std::string_view text);
/// Two-space indented, with a trailing newline.
std::string write_pants(const PantsGraph& g);

}  // namespace pochhammer
