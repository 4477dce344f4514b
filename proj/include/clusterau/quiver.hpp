#pragma once

// Quivers with frozen vertices and the operations that act on whole
// mutation classes.
//
// Vertices 0..n-1 are mutable and n..n+m-1 frozen. Arrows are stored as a
// dense signed adjacency matrix: arrows(a, b) > 0 is the number of arrows
// a→b, and arrows(b, a) == -arrows(a, b). Through the seed encoding,
// arrows(i, j) == B_ji for mutable i, j and arrows(i, n+l) is the exponent of
// z_{l+1} in y_i.

#include "clusterau/integer.hpp"
#include "clusterau/seed.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace clusterau {

struct Arrow {
    std::size_t source;
    std::size_t target;
    Int multiplicity;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
  public:
    Quiver() = default;

    /// Arrowless quiver.
    Quiver(std::size_t mutable_count, std::size_t frozen_count);

    /// Records with the same endpoints are merged. Loops, opposing records
    /// (2-cycles), frozen-frozen arrows and nonpositive multiplicities are
    /// rejected with std::invalid_argument.
    static Quiver from_arrows(std::size_t mutable_count, std::size_t frozen_count, std::span<const Arrow> arrows);

    std::size_t mutable_count() const noexcept { return n_; }
    std::size_t frozen_count() const noexcept { return m_; }
    std::size_t vertex_count() const noexcept { return n_ + m_; }
    bool is_frozen(std::size_t v) const { return v >= n_; }

    /// Net number of arrows a→b (negative when they point b→a).
    Int arrows(std::size_t a, std::size_t b) const { return w_[a * (n_ + m_) + b]; }

    /// All arrows with positive multiplicity, sorted by (source, target).
    std::vector<Arrow> arrow_list() const;

    /// Arrows between mutable vertices only.
    std::vector<Arrow> mutable_arrows() const;

    Quiver mutable_part() const;

    /// Deletes mutable vertex v; later vertices shift down by one.
    Quiver without_vertex(std::size_t v) const;

    /// Vertex i of the result is vertex perm[i] of this quiver. The
    /// permutation must map mutable to mutable and frozen to frozen.
    Quiver relabeled(std::span<const std::size_t> perm) const;

    friend bool operator==(const Quiver&, const Quiver&) = default;

  private:
    friend Quiver mutate_quiver(const Quiver&, std::size_t);

    Int& at(std::size_t a, std::size_t b) { return w_[a * (n_ + m_) + b]; }

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<Int> w_;
};

/// Throws std::invalid_argument unless B is skew-symmetric.
Quiver quiver_from_seed(const Seed& s);

/// Skew-symmetric B and y read off the quiver, with a fresh initial cluster.
Seed quiver_to_seed(const Quiver& q);

/// For every path a→k→b adds the product of multiplicities to a→b, cancels
/// 2-cycles, reverses every arrow at k, and drops frozen-frozen arrows.
Quiver mutate_quiver(const Quiver& q, std::size_t k);

Quiver mutate_quiver_along(const Quiver& q, std::span<const std::size_t> path);

/// The mutable subquiver has no directed cycle.
bool is_acyclic_quiver(const Quiver& q);

/// No arrow leaves a frozen vertex.
bool is_source_freezing_quiver(const Quiver& q);

/// Mutable arrows (i1, i2) not on any bi-infinite path of mutable vertices:
/// i1 is not reachable from a cycle, or i2 reaches no cycle. Sorted.
std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const Quiver& q);

inline constexpr std::size_t kDefaultCanonicalBound = 10;

struct CanonicalForm {
    std::string key;
    /// order[i] is the vertex placed at canonical position i.
    std::vector<std::size_t> order;
};

/// Minimal serialisation over all partition-respecting relabelings (pruned
/// by vertex degree invariants). Equal keys iff the quivers are isomorphic
/// via a map that keeps mutable and frozen vertices apart.
/// Throws std::length_error if the quiver has more than `bound` vertices.
CanonicalForm canonical_labeling(const Quiver& q, std::size_t bound = kDefaultCanonicalBound);

inline std::string canonical_form(const Quiver& q, std::size_t bound = kDefaultCanonicalBound) {
    return canonical_labeling(q, bound).key;
}

struct SearchLimits {
    std::size_t depth = 8;
    std::size_t nodes = 100000;
};

struct SearchStats {
    std::size_t nodes_visited = 0;
    std::size_t max_depth = 0;
};

struct SearchOutcome {
    enum class Status { Found, Exhausted, LimitHit };
    struct Witness {
        Quiver quiver;
        std::vector<std::size_t> path;
    };

    Status status = Status::Exhausted;
    std::optional<Witness> witness;
    SearchStats stats;
};

using QuiverPredicate = std::function<bool(const Quiver&)>;

/// Breadth-first search of the mutation class, mutating mutable vertices in
/// index order and deduplicating isomorphism classes by canonical form.
/// Returns the first goal quiver in that order together with the path that
/// reaches it from `q`.
SearchOutcome search_mutation_class(const Quiver& q, const QuiverPredicate& goal, SearchLimits limits = {});

const char* to_string(SearchOutcome::Status status);

}  // namespace clusterau
