#pragma once

// Framed quivers and maximal green sequences.
//
// A framed state is the 2n×n matrix whose top block is the exchange matrix of
// the mutable part and whose bottom block is the c-matrix, initially the
// identity. Vertex i is green when c-column i is nonnegative and red when it
// is nonpositive; a column with both signs is reported as SignCoherenceError.

#include "clusterau/integer.hpp"
#include "clusterau/quiver.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace clusterau {

enum class Color { Green, Red };

const char* to_string(Color c);

class FramedState {
  public:
    FramedState() = default;
    /// Frames the mutable part of `q`; frozen vertices are discarded.
    explicit FramedState(const Quiver& q);

    std::size_t rank() const noexcept { return n_; }
    /// Row-major 2n×n.
    const std::vector<Int>& matrix() const noexcept { return b_; }
    Int b(std::size_t i, std::size_t j) const { return b_[i * n_ + j]; }
    Int c(std::size_t i, std::size_t j) const { return b_[(n_ + i) * n_ + j]; }
    const std::vector<std::size_t>& history() const noexcept { return history_; }

    /// Throws SignCoherenceError on a mixed-sign column.
    Color color(std::size_t i) const;
    std::vector<Color> colors() const;
    bool all_red() const;

    /// Mutates at k and checks sign-coherence of every c-column.
    FramedState mutated(std::size_t k) const;

    friend bool operator==(const FramedState& a, const FramedState& b) { return a.n_ == b.n_ && a.b_ == b.b_; }

  private:
    std::size_t n_ = 0;
    std::vector<Int> b_;
    std::vector<std::size_t> history_;
};

inline FramedState frame(const Quiver& q) { return FramedState(q); }
inline Color color(const FramedState& st, std::size_t i) { return st.color(i); }

struct MgsVerdict {
    bool accepted = false;
    std::string diagnostic;
    /// colors[t] holds the colors before step t; the last entry is the final coloring.
    std::vector<std::vector<Color>> colors;
    std::optional<std::size_t> failed_step;
    FramedState final_state;
};

/// Every mutation must be at a green vertex and every vertex must end red.
/// Indices are 0-based vertices of the mutable part; out-of-range indices
/// are rejected with a diagnostic, never thrown.
MgsVerdict verify_mgs(const Quiver& q, std::span<const std::size_t> seq);

/// Any colors allowed along the way; only the all-red end state is required.
MgsVerdict verify_reddening(const Quiver& q, std::span<const std::size_t> seq);

struct MgsSearch {
    std::optional<std::vector<std::size_t>> sequence;
    std::size_t states = 0;
    /// Set when the length or state limit cut the search short.
    bool truncated = false;
};

/// Breadth-first over green mutations with exact state deduplication; the
/// first all-red state found gives the shortest, lexicographically least MGS.
MgsSearch search_mgs(const Quiver& q, std::size_t max_len, std::size_t node_limit = 100000);

}  // namespace clusterau
