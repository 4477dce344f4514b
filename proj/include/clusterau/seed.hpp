#pragma once

// Seeds of geometric type and the operations built on them: mutation,
// freezing, the source / acyclicity / source-freezing predicates, and the
// sufficient criterion for A = U at a single seed.
//
// Cluster variables are stored as Laurent polynomials in the initial
// cluster, so every mutation is an exact computation and a failed division
// would expose a broken Laurent phenomenon rather than silently produce a
// rational function.
//
// All indices are 0-based.

#include "clusterau/exchange_matrix.hpp"
#include "clusterau/laurent.hpp"
#include "clusterau/semifield.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace clusterau {

using MutationPath = std::vector<std::size_t>;

class Seed {
  public:
    Seed() = default;

    /// Initial seed: x_i is the variable x_i itself. Coefficients must all
    /// live over `generators` generators.
    Seed(ExchangeMatrix b, std::vector<TropMonomial> y, std::size_t generators, std::vector<std::string> labels = {});

    /// Seed with an explicit cluster; dimensions are validated.
    Seed(ExchangeMatrix b, std::vector<TropMonomial> y, std::vector<LaurentPoly> x, std::size_t generators,
         std::vector<std::string> labels);

    std::size_t rank() const noexcept { return b_.size(); }
    std::size_t generators() const noexcept { return m_; }
    const ExchangeMatrix& matrix() const noexcept { return b_; }
    const std::vector<TropMonomial>& coefficients() const noexcept { return y_; }
    const std::vector<LaurentPoly>& cluster() const noexcept { return x_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// True if x_i is the i-th initial variable for every i.
    bool has_initial_cluster() const;

    /// Equality of (B, y, x). Labels are display names only.
    friend bool operator==(const Seed& a, const Seed& b) {
        return a.m_ == b.m_ && a.b_ == b.b_ && a.y_ == b.y_ && a.x_ == b.x_;
    }

  private:
    ExchangeMatrix b_;
    std::vector<TropMonomial> y_;
    std::vector<LaurentPoly> x_;
    std::size_t m_ = 0;
    std::vector<std::string> labels_;
};

std::vector<TropMonomial> mutate_coeffs(std::span<const TropMonomial> y, const ExchangeMatrix& b, std::size_t k);

/// The new cluster variable x_k' expressed in the initial cluster.
LaurentPoly exchange(const Seed& s, std::size_t k);

/// Full seed mutation. NotDivisible escaping from here means a bug.
Seed mutate_seed(const Seed& s, std::size_t k);

Seed mutate_along(const Seed& s, std::span<const std::size_t> path);

/// Relabels indices: position i of the result holds old index perm[i].
Seed permuted(const Seed& s, std::span<const std::size_t> perm);

/// Freezing at x_i. The result has rank n-1 over m+1 generators; x_i becomes
/// generator z_{m+1}, y_j gains the factor x_i^{B_ij}, and the new cluster is
/// a fresh initial cluster made of the remaining variables.
Seed freeze(const Seed& s, std::size_t i);

/// Column i of B is componentwise nonnegative.
bool is_source(const Seed& s, std::size_t i);
bool is_acyclic(const Seed& s);
bool is_source_freezing_seed(const Seed& s, const GroundRing& r);

/// Checks ((y_i⊕1) x_i') x_i − (y_i ∏_{B_ki>0, k≠j} x_k^{B_ki}) x_j^{B_ji} = 1
/// exactly. Requires i to be a source with B_ji > 0 (std::invalid_argument
/// otherwise).
bool check_exchange_identity(const Seed& s, std::size_t i, std::size_t j);

struct Obstruction {
    std::size_t index;      ///< mutable index i
    TropMonomial monomial;  ///< y_i ⊕ 1, not in the ground ring
    friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

struct AUVerdict {
    enum class Status { ConcludedEqual, Inconclusive };
    Status status = Status::Inconclusive;
    std::vector<Obstruction> obstructions;
    bool acyclic = false;
};

/// Checks the hypotheses of the acyclic source-freezing criterion at `s`
/// only; no search over the mutation class.
AUVerdict theorem_au_applies(const Seed& s, const GroundRing& r);

struct LaurentViolation {
    MutationPath sequence;
    std::size_t step;   ///< position in `sequence` of the offending mutation
    std::size_t index;  ///< the cluster variable produced
    std::string reason;
};

struct LaurentReport {
    std::size_t sequences = 0;
    std::size_t variables_checked = 0;
    std::vector<LaurentViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Applies every sequence from `s` and checks that each produced cluster
/// variable is a Laurent polynomial with coefficients in `r`. Violations are
/// collected, never thrown.
LaurentReport verify_laurent(const Seed& s, std::span<const MutationPath> sequences, const GroundRing& r);

struct UpperCheck {
    bool laurent_everywhere = true;
    std::vector<std::string> notes;
};

/// Finite necessary condition for membership in the upper cluster algebra.
///
/// `p` is written in the cluster of `initial`; each path names a seed
/// reachable from it. For every such seed the initial variables are rewritten
/// in that seed's cluster by mutating back along the reversed path, `p` is
/// substituted, and the result must be a Laurent polynomial with coefficients
/// in `r`.
UpperCheck is_laurent_over_seeds(const LaurentPoly& p, const Seed& initial, std::span<const MutationPath> paths,
                                 const GroundRing& r);

}  // namespace clusterau
