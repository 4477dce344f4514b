#pragma once

// The reduced Banff algorithm: repeatedly find a quiver mutation-equivalent to
// either an acyclic quiver (a leaf) or to one with a covering pair (split by
// deleting each endpoint), until every branch ends in an acyclic leaf.
//
// The run is recorded as a tree that doubles as a replayable certificate.

#include "clusterau/quiver.hpp"
#include "clusterau/seed.hpp"
#include "clusterau/semifield.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace clusterau {

struct BanffNode {
    enum class Kind { Pending, Acyclic, Split, Failed, Limit };

    Quiver quiver;                       ///< the quiver removed from the queue
    std::vector<std::size_t> vertices;   ///< root label of each vertex of `quiver`
    std::optional<std::size_t> parent;
    std::optional<std::size_t> deleted;  ///< vertex of the parent's `reached` removed to get here
    MutationPath path;                   ///< mutations from `quiver` to `reached`
    Quiver reached;
    Kind kind = Kind::Pending;  ///< Pending: not processed because the run stopped at a failure
    std::optional<std::pair<std::size_t, std::size_t>> pair;  ///< covering pair in `reached`, when split
    std::vector<std::size_t> children;
    SearchStats stats;
};

struct BanffTrace {
    enum class Status { Success, Fail, Inconclusive };

    Status status = Status::Inconclusive;
    std::vector<BanffNode> nodes;  ///< nodes[0] is the root; children follow their parents

    std::size_t leaf_count() const;
    std::size_t acyclic_leaf_count() const;
};

const char* to_string(BanffTrace::Status status);
const char* to_string(BanffNode::Kind kind);

/// Runs on the mutable part of `q`. Nodes are processed first in, first out;
/// each class search stops at the first quiver that is acyclic or has a
/// covering pair, testing acyclicity first. Among the covering pairs of that
/// quiver the one whose endpoint deletions leave the most acyclic quivers is
/// used, ties going to the lexicographically least pair. Processing stops at
/// the first exhausted class with neither kind of member.
BanffTrace banff_reduced(const Quiver& q, SearchLimits limits = {});

struct ReplayResult {
    bool ok = true;
    std::string message;
};

/// Re-derives every node from the root using only the recorded paths,
/// deletions and pairs, and checks each claim the node makes.
ReplayResult replay_certificate(const Quiver& q, const BanffTrace& trace);

/// Indented tree, one node per line, vertices in 1-based root labels.
std::string render_text(const BanffTrace& trace);
std::string render_dot(const BanffTrace& trace);

struct AUReport {
    enum class Verdict { Concluded, Inconclusive };

    Verdict verdict = Verdict::Inconclusive;
    GroundRing ring = GroundRing::full_laurent();
    std::string route;  ///< how the conclusion was reached, empty if inconclusive
    std::optional<BanffTrace> banff;
    AUVerdict seed_check;
    /// For each obstruction, the 0-based generators whose inversion would put it in the ring.
    std::vector<std::vector<std::size_t>> inversions;
    /// Union of `inversions`: inverting these clears every obstruction.
    std::vector<std::size_t> inversion_union;
};

/// Over zp, equality follows from a successful Banff run (local acyclicity).
/// Over zp+ and its localizations it follows only from the acyclic
/// source-freezing criterion at the seed of `q`; Banff is not run there.
AUReport au_report(const Quiver& q, const GroundRing& r, SearchLimits limits = {});

std::string render_report(const AUReport& report);

}  // namespace clusterau
