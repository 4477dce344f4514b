#pragma once

// Random object generators shared by the test binaries. Every generator is
// driven by an explicit std::mt19937 so runs are reproducible.

#include "clusterau/quiver.hpp"
#include "clusterau/seed.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace testing_support {

using namespace clusterau;

inline Int uniform(std::mt19937& rng, Int lo, Int hi) {
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

inline TropMonomial random_monomial(std::mt19937& rng, std::size_t m, Int bound) {
    std::vector<BigInt> e(m);
    for (auto& x : e) x = uniform(rng, -bound, bound);
    return TropMonomial(std::move(e));
}

/// Skew-symmetrizable B with |entries| <= max_entry: B_ij = A_ij d_j with A
/// skew-symmetric, so diag(d) B is skew-symmetric.
inline ExchangeMatrix random_matrix(std::mt19937& rng, std::size_t n, Int max_entry, bool symmetric_only = false) {
    std::vector<Int> d(n, 1);
    if (!symmetric_only)
        for (auto& x : d) x = uniform(rng, 1, 3);
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Int limit = max_entry / std::max(d[i], d[j]);
            Int v = uniform(rng, -limit, limit);
            a[i][j] = v;
            a[j][i] = -v;
        }
    std::vector<std::vector<Int>> b(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i][j] = a[i][j] * d[j];
    return ExchangeMatrix(b);
}

inline Seed random_seed(std::mt19937& rng, std::size_t n, std::size_t m, Int max_entry, Int y_bound = 2) {
    std::vector<TropMonomial> y;
    for (std::size_t i = 0; i < n; ++i) y.push_back(random_monomial(rng, m, y_bound));
    return Seed(random_matrix(rng, n, max_entry), std::move(y), m);
}

/// Acyclic skew-symmetrizable B: arrows only go forward along a random order.
inline ExchangeMatrix random_acyclic_matrix(std::mt19937& rng, std::size_t n, Int max_entry) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Int> d(n);
    for (auto& x : d) x = uniform(rng, 1, 2);
    std::vector<std::vector<Int>> b(n, std::vector<Int>(n, 0));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            std::size_t i = order[p], j = order[q];  // arrow i -> j, so B_ji > 0
            Int a = uniform(rng, 0, max_entry / std::max(d[i], d[j]));
            b[j][i] = a * d[i];
            b[i][j] = -a * d[j];
        }
    return ExchangeMatrix(b);
}

inline Quiver random_quiver(std::mt19937& rng, std::size_t n, std::size_t m, Int max_mult, double density = 0.5) {
    std::vector<Arrow> arrows;
    std::bernoulli_distribution present(density);
    for (std::size_t a = 0; a < n + m; ++a)
        for (std::size_t b = a + 1; b < n + m; ++b) {
            if (a >= n && b >= n) continue;
            if (!present(rng)) continue;
            Int mult = uniform(rng, 1, max_mult);
            if (uniform(rng, 0, 1))
                arrows.push_back({a, b, mult});
            else
                arrows.push_back({b, a, mult});
        }
    return Quiver::from_arrows(n, m, arrows);
}

inline Quiver random_acyclic_quiver(std::mt19937& rng, std::size_t n, Int max_mult) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Arrow> arrows;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            if (uniform(rng, 0, 1)) arrows.push_back({order[p], order[q], uniform(rng, 1, max_mult)});
    return Quiver::from_arrows(n, 0, arrows);
}

/// Random permutation keeping mutable and frozen vertices apart.
inline std::vector<std::size_t> random_block_permutation(std::mt19937& rng, std::size_t n, std::size_t m) {
    std::vector<std::size_t> perm(n + m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n), rng);
    std::shuffle(perm.begin() + static_cast<std::ptrdiff_t>(n), perm.end(), rng);
    return perm;
}

}  // namespace testing_support
