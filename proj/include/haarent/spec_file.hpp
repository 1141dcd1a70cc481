#pragma once

// Measure specification documents (JSON):
//
//   {
//     "space":   {"kind": "interval", "bounds": [a, b]}
//              | {"kind": "finite", "atoms": ["H", "T"] | [1, 2, 3]}
//              | {"kind": "group", "group": "D4"},
//     "density": {"kind": "expr", "payload": "1/x"}
//              | {"kind": "table", "payload": [0.5, 0.5]}
//              | {"kind": "builtin", "payload": "lebesgue" | "counting" | "haar" | "haar:R*" | "uniform"},
//     "label":   "optional text"
//   }
//
// Numeric atoms become coordinates (labels are their text); string atoms get
// coordinates 0..n-1. "haar" needs a group space; "haar:R*" is 1/x on a
// positive interval; "uniform" is the base measure divided by its total mass.

#include <optional>
#include <string>
#include <string_view>

#include "haarent/groups.hpp"
#include "haarent/measure.hpp"

namespace haarent {

struct MeasureSpec {
    Measure measure;
    std::optional<Group> group;  // set for group spaces
};

// Throws ParseError (malformed JSON or DSL payload; offsets refer to the
// payload for DSL errors) and DomainError for inconsistent documents.
MeasureSpec parse_measure_spec(std::string_view json_text);
MeasureSpec load_measure_spec(const std::string& path);

}  // namespace haarent
