#pragma once

#include <stdexcept>
#include <string>

#include "comptype/complex.hpp"

namespace comptype {

// Line-oriented pair format: '#' starts a comment, blank lines are skipped,
// every other line is "X v1 v2 ..." (facet of X) or "A v1 v2 ..." (facet of
// A). At least one X line is required and every A facet must be a simplex of
// the closure of the X facets.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

Pair parse_pair_text(const std::string& text);

// Canonical form: X facet lines then A facet lines, simplices in canonical
// order. parse_pair_text(serialize_pair(p)) reproduces p exactly.
std::string serialize_pair(const Pair& p);

}  // namespace comptype
