#pragma once

// Text formats for seeds and quivers, and DOT export.
//
// Seed:   line 1 "n m", n rows of B, n coefficient monomials, an optional
//         line of n labels.
// Quiver: line 1 "n m", then "src dst mult" per arrow, 0-based, with
//         mutable vertices 0..n-1 and frozen n..n+m-1.
//
// Blank lines and '#' comments are ignored. Errors are ParseError carrying
// the 1-based line number.

#include "clusterau/quiver.hpp"
#include "clusterau/seed.hpp"

#include <string>
#include <string_view>

namespace clusterau {

Seed parse_seed(std::string_view text);
std::string render_seed(const Seed& s);

Quiver parse_quiver(std::string_view text);
std::string render_quiver(const Quiver& q);

/// Mutable vertices as circles, frozen as boxes, multiplicities above one as
/// edge labels. Vertex names are 1-based for mutable and 1'..m' for frozen.
std::string quiver_dot(const Quiver& q, std::string_view name = "quiver");

/// Throws std::runtime_error if the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace clusterau
