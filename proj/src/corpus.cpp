#include "clusterau/corpus.hpp"

#include <stdexcept>

namespace clusterau {

namespace {

constexpr const char* kFig1 = R"(# rank 2 over two generators
2 2
0 -2
2 0
z1*z2^-1
z2^-1
)";

constexpr const char* kFig2 = R"(# mutable 0..3, frozen 4..6
4 3
0 1 1
0 2 1
0 3 1
2 1 1
2 3 1
0 4 1
1 4 1
2 5 1
3 5 1
3 6 1
0 6 1
)";

// Mutable arrows of the Cremmer-Gervais quiver, 0-based; vertex v here is
// label v+1 of the labelled drawing. The 6->3 arrow is appended separately.
constexpr const char* kCg3Mutable = R"(1 0 1
1 2 1
2 4 1
4 5 1
4 1 1
2 3 1
3 5 1
0 5 1
1 3 1
3 4 1
)";

// Frozen vertices 6, 7, 8 sit at grid positions (1,3), (3,3), (1,2).
constexpr const char* kCg3Frozen = R"(0 8 1
8 1 1
2 8 1
3 6 1
6 2 1
5 7 1
7 0 1
)";

constexpr const char* kA2 = "2 0\n0 1 1\n";
constexpr const char* kA3 = "3 0\n1 0 1\n2 1 1\n";
constexpr const char* kMarkov = "3 0\n0 1 2\n1 2 2\n2 0 2\n";

std::string cg3(std::size_t frozen, Reading reading) {
    std::string text = "# Cremmer-Gervais, 6->3 " + std::string(reading == Reading::Single ? "single" : "double") + "\n";
    text += "6 " + std::to_string(frozen) + "\n";
    text += kCg3Mutable;
    text += reading == Reading::Single ? "5 2 1\n" : "5 2 2\n";
    if (frozen) text += kCg3Frozen;
    return text;
}

}  // namespace

Reading parse_reading(std::string_view text) {
    if (text == "single") return Reading::Single;
    if (text == "double") return Reading::Double;
    throw std::invalid_argument("reading must be 'single' or 'double', got '" + std::string(text) + "'");
}

std::vector<std::string> builtin_names() {
    return {"fig1", "fig2", "cg3_single", "cg3_double", "cg3_mutable", "a2", "a3", "markov"};
}

std::optional<Example> builtin(std::string_view name, Reading reading) {
    if (name == "fig1") return Example{"fig1", true, kFig1};
    if (name == "fig2") return Example{"fig2", false, kFig2};
    if (name == "cg3_single") return Example{"cg3_single", false, cg3(3, Reading::Single)};
    if (name == "cg3_double") return Example{"cg3_double", false, cg3(3, Reading::Double)};
    if (name == "cg3_mutable") return Example{"cg3_mutable", false, cg3(0, reading)};
    if (name == "a2") return Example{"a2", false, kA2};
    if (name == "a3") return Example{"a3", false, kA3};
    if (name == "markov") return Example{"markov", false, kMarkov};
    return std::nullopt;
}

}  // namespace clusterau
