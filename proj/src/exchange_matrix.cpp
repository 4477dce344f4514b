#include "clusterau/exchange_matrix.hpp"

#include "detail/digraph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace clusterau {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Propagates d_j = -d_i B_ij / B_ji over each connected block and checks that
// every entry agrees. Returns the block-wise minimal positive integer solution.
std::vector<Int> find_symmetrizer(std::size_t n, const std::vector<Int>& e) {
    auto entry = [&](std::size_t i, std::size_t j) { return e[i * n + j]; };
    for (std::size_t i = 0; i < n; ++i) {
        if (entry(i, i) != 0) throw std::invalid_argument("exchange matrix has a nonzero diagonal entry");
        for (std::size_t j = i + 1; j < n; ++j) {
            Int a = entry(i, j), b = entry(j, i);
            if ((a == 0) != (b == 0) || (a != 0 && (a > 0) == (b > 0)))
                throw std::invalid_argument("exchange matrix is not sign-skew-symmetric at (" + std::to_string(i + 1) +
                                            "," + std::to_string(j + 1) + ")");
        }
    }

    std::vector<Rational> d(n, Rational(0));
    std::vector<Int> out(n, 0);
    for (std::size_t root = 0; root < n; ++root) {
        if (d[root] != 0) continue;
        std::vector<std::size_t> block;
        std::deque<std::size_t> queue{root};
        d[root] = 1;
        while (!queue.empty()) {
            std::size_t i = queue.front();
            queue.pop_front();
            block.push_back(i);
            for (std::size_t j = 0; j < n; ++j) {
                if (entry(i, j) == 0) continue;
                Rational dj = -d[i] * Rational(entry(i, j)) / Rational(entry(j, i));
                if (d[j] == 0) {
                    d[j] = dj;
                    queue.push_back(j);
                } else if (d[j] != dj) {
                    throw std::invalid_argument("exchange matrix is not skew-symmetrizable");
                }
            }
        }
        BigInt lcm_den = 1;
        for (auto i : block) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(d[i]));
        BigInt gcd_num = 0;
        for (auto i : block) gcd_num = boost::multiprecision::gcd(gcd_num, BigInt(numerator(d[i]) * (lcm_den / denominator(d[i]))));
        for (auto i : block) out[i] = to_machine(numerator(d[i]) * (lcm_den / denominator(d[i])) / gcd_num);
    }
    return out;
}

}  // namespace

ExchangeMatrix::ExchangeMatrix(const std::vector<std::vector<Int>>& rows) : n_(rows.size()) {
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw std::invalid_argument("exchange matrix must be square");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    d_ = find_symmetrizer(n_, entries_);
}

ExchangeMatrix ExchangeMatrix::zero(std::size_t n) {
    return ExchangeMatrix(n, std::vector<Int>(n * n, 0), std::vector<Int>(n, 1));
}

Int ExchangeMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::out_of_range("exchange matrix index out of range");
    return (*this)(i, j);
}

bool ExchangeMatrix::is_skew_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

ExchangeMatrix ExchangeMatrix::without(std::size_t index) const {
    if (index >= n_) throw std::out_of_range("exchange matrix index out of range");
    std::vector<std::vector<Int>> out;
    for (std::size_t i = 0; i < n_; ++i) {
        if (i == index) continue;
        std::vector<Int> row;
        for (std::size_t j = 0; j < n_; ++j)
            if (j != index) row.push_back((*this)(i, j));
        out.push_back(std::move(row));
    }
    return ExchangeMatrix(out);
}

std::vector<std::vector<Int>> ExchangeMatrix::rows() const {
    std::vector<std::vector<Int>> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i].assign(entries_.begin() + i * n_, entries_.begin() + (i + 1) * n_);
    return out;
}

void mutate_extended(std::vector<Int>& entries, std::size_t rows, std::size_t cols, std::size_t k) {
    if (k >= cols || k >= rows) throw std::out_of_range("mutation direction out of range");
    const std::vector<Int> old = entries;
    auto at = [&](std::size_t i, std::size_t j) { return old[i * cols + j]; };
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            Int& out = entries[i * cols + j];
            if (i == k || j == k) {
                out = checked_neg(at(i, j));
                continue;
            }
            // B_ij + (|B_ik| B_kj + B_ik |B_kj|) / 2, which is ±B_ik B_kj when
            // both factors share a sign and 0 otherwise.
            Int a = at(i, k), b = at(k, j);
            if (a > 0 && b > 0)
                out = checked_add(at(i, j), checked_mul(a, b));
            else if (a < 0 && b < 0)
                out = checked_add(at(i, j), checked_neg(checked_mul(a, b)));
        }
    }
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
    if (k >= b.size()) throw std::out_of_range("mutation direction " + std::to_string(k + 1) + " out of range");
    auto entries = b.entries_;
    mutate_extended(entries, b.size(), b.size(), k);
    return ExchangeMatrix(b.size(), std::move(entries), b.d_);
}

bool is_acyclic(const ExchangeMatrix& b) {
    detail::Adjacency graph(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b(j, i) > 0) graph[i].push_back(j);
    return !detail::has_directed_cycle(graph);
}

}  // namespace clusterau
