#pragma once

#include "clusterau/integer.hpp"

#include <cstddef>
#include <vector>

namespace clusterau {

/// Square integer matrix B that admits a positive diagonal D with DB
/// skew-symmetric. The symmetrizer is computed on construction.
class ExchangeMatrix {
  public:
    ExchangeMatrix() = default;

    /// Throws std::invalid_argument if `rows` is not square or not
    /// skew-symmetrizable.
    explicit ExchangeMatrix(const std::vector<std::vector<Int>>& rows);

    static ExchangeMatrix zero(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    Int operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    Int at(std::size_t i, std::size_t j) const;

    /// Diagonal of the minimal integer skew-symmetrizer (each connected block
    /// scaled to coprime entries).
    const std::vector<Int>& symmetrizer() const noexcept { return d_; }
    bool is_skew_symmetric() const;

    /// B with row and column `index` deleted.
    ExchangeMatrix without(std::size_t index) const;

    /// Row-major copy of the entries.
    std::vector<std::vector<Int>> rows() const;

    friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

  private:
    friend ExchangeMatrix mutate_matrix(const ExchangeMatrix&, std::size_t);

    ExchangeMatrix(std::size_t n, std::vector<Int> entries, std::vector<Int> d)
        : n_(n), entries_(std::move(entries)), d_(std::move(d)) {}

    std::size_t n_ = 0;
    std::vector<Int> entries_;
    std::vector<Int> d_;
};

/// Matrix mutation in direction k (0-based). The symmetrizer is unchanged.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k);

/// Mutation of a rectangular row-major matrix whose top square block is an
/// exchange matrix: the extended-matrix form used for frozen rows and
/// c-vectors.
void mutate_extended(std::vector<Int>& entries, std::size_t rows, std::size_t cols, std::size_t k);

/// No directed cycle in the graph with an edge i→j whenever B_ji > 0.
bool is_acyclic(const ExchangeMatrix& b);

}  // namespace clusterau
