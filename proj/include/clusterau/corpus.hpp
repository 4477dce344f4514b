#pragma once

// Built-in examples, each stored as the text of its file.
//
//   fig1         rank-2 seed, B = [[0,-2],[2,0]], y = (z1*z2^-1, z2^-1)
//   fig2         acyclic source-freezing quiver, 4 mutable and 3 frozen
//   cg3_single   Cremmer-Gervais quiver for n = 3, one arrow 6->3
//   cg3_double   the same with a double arrow 6->3
//   cg3_mutable  its mutable part, vertices numbered as in the labelled drawing
//   a2, a3       linearly oriented type A
//   markov       double arrows around a 3-cycle

#include "clusterau/quiver.hpp"
#include "clusterau/seed.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clusterau {

/// Multiplicity of the arrow 6->3 in the Cremmer-Gervais quiver.
enum class Reading { Single, Double };

Reading parse_reading(std::string_view text);

struct Example {
    std::string name;
    bool is_seed = false;
    std::string text;  ///< file contents, seed or quiver format
};

std::vector<std::string> builtin_names();

/// `reading` only affects cg3_mutable; cg3_single and cg3_double are fixed.
std::optional<Example> builtin(std::string_view name, Reading reading = Reading::Single);

}  // namespace clusterau
