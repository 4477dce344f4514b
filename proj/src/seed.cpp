#include "clusterau/seed.hpp"

#include "clusterau/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace clusterau {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
    return out;
}

void require_index(const Seed& s, std::size_t k) {
    if (k >= s.rank())
        throw std::out_of_range("index " + std::to_string(k + 1) + " out of range for rank " +
                                std::to_string(s.rank()));
}

LaurentPoly power(const LaurentPoly& p, Int e) {
    if (e < 0) throw std::invalid_argument("negative power of a cluster variable");
    if (e > Int(UINT32_MAX)) throw std::overflow_error("exponent too large");
    return p.pow(static_cast<unsigned>(e));
}

std::size_t cluster_variables(const Seed& s) {
    return s.cluster().empty() ? 0 : s.cluster().front().variables();
}

}  // namespace

Seed::Seed(ExchangeMatrix b, std::vector<TropMonomial> y, std::size_t generators, std::vector<std::string> labels)
    : b_(std::move(b)), y_(std::move(y)), m_(generators), labels_(std::move(labels)) {
    for (std::size_t i = 0; i < b_.size(); ++i) x_.push_back(LaurentPoly::variable(b_.size(), m_, i));
    if (labels_.empty()) labels_ = default_labels(b_.size());
    if (y_.size() != b_.size()) throw DimensionMismatch("coefficient tuple length differs from the rank");
    for (const auto& yi : y_)
        if (yi.generators() != m_) throw DimensionMismatch("coefficient over the wrong number of generators");
    if (labels_.size() != b_.size()) throw DimensionMismatch("label count differs from the rank");
}

Seed::Seed(ExchangeMatrix b, std::vector<TropMonomial> y, std::vector<LaurentPoly> x, std::size_t generators,
           std::vector<std::string> labels)
    : b_(std::move(b)), y_(std::move(y)), x_(std::move(x)), m_(generators), labels_(std::move(labels)) {
    if (labels_.empty()) labels_ = default_labels(b_.size());
    if (y_.size() != b_.size() || x_.size() != b_.size() || labels_.size() != b_.size())
        throw DimensionMismatch("seed components disagree on the rank");
    for (const auto& yi : y_)
        if (yi.generators() != m_) throw DimensionMismatch("coefficient over the wrong number of generators");
    for (const auto& xi : x_)
        if (xi.generators() != m_ || xi.variables() != x_.front().variables())
            throw DimensionMismatch("cluster variables over inconsistent rings");
}

bool Seed::has_initial_cluster() const {
    for (std::size_t i = 0; i < x_.size(); ++i)
        if (!(x_[i] == LaurentPoly::variable(rank(), m_, i))) return false;
    return true;
}

std::vector<TropMonomial> mutate_coeffs(std::span<const TropMonomial> y, const ExchangeMatrix& b, std::size_t k) {
    if (k >= b.size() || y.size() != b.size()) throw std::out_of_range("mutation direction out of range");
    const TropMonomial& yk = y[k];
    const TropMonomial denominator = oplus_one(yk);
    std::vector<TropMonomial> out(y.begin(), y.end());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i == k) {
            out[i] = yk.inverse();
            continue;
        }
        Int bki = b(k, i);
        out[i] = y[i] * yk.pow(std::max<Int>(bki, 0)) * denominator.pow(-BigInt(bki));
    }
    return out;
}

LaurentPoly exchange(const Seed& s, std::size_t k) {
    require_index(s, k);
    const std::size_t nv = cluster_variables(s);
    const TropMonomial& yk = s.coefficients()[k];
    const TropMonomial inv_denominator = oplus_one(yk).inverse();

    LaurentPoly plus = LaurentPoly::from_trop(nv, yk * inv_denominator);
    LaurentPoly minus = LaurentPoly::from_trop(nv, inv_denominator);
    for (std::size_t j = 0; j < s.rank(); ++j) {
        Int bjk = s.matrix()(j, k);
        if (bjk > 0) plus = plus * power(s.cluster()[j], bjk);
        if (bjk < 0) minus = minus * power(s.cluster()[j], checked_neg(bjk));
    }
    return lp_exact_div(plus + minus, s.cluster()[k]);
}

Seed mutate_seed(const Seed& s, std::size_t k) {
    require_index(s, k);
    auto x = s.cluster();
    x[k] = exchange(s, k);
    return Seed(mutate_matrix(s.matrix(), k), mutate_coeffs(s.coefficients(), s.matrix(), k), std::move(x),
                s.generators(), s.labels());
}

Seed mutate_along(const Seed& s, std::span<const std::size_t> path) {
    Seed cur = s;
    for (auto k : path) cur = mutate_seed(cur, k);
    return cur;
}

Seed permuted(const Seed& s, std::span<const std::size_t> perm) {
    const std::size_t n = s.rank();
    if (perm.size() != n) throw DimensionMismatch("permutation length differs from the rank");
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p >= n || seen[p]) throw std::invalid_argument("not a permutation");
        seen[p] = true;
    }
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n));
    std::vector<TropMonomial> y;
    std::vector<LaurentPoly> x;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = s.matrix()(perm[i], perm[j]);
        y.push_back(s.coefficients()[perm[i]]);
        x.push_back(s.cluster()[perm[i]]);
        labels.push_back(s.labels()[perm[i]]);
    }
    return Seed(ExchangeMatrix(rows), std::move(y), std::move(x), s.generators(), std::move(labels));
}

Seed freeze(const Seed& s, std::size_t i) {
    require_index(s, i);
    std::vector<TropMonomial> y;
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < s.rank(); ++j) {
        if (j == i) continue;
        y.push_back(s.coefficients()[j].appended(s.matrix()(i, j)));
        labels.push_back(s.labels()[j]);
    }
    return Seed(s.matrix().without(i), std::move(y), s.generators() + 1, std::move(labels));
}

bool is_source(const Seed& s, std::size_t i) {
    require_index(s, i);
    for (std::size_t k = 0; k < s.rank(); ++k)
        if (s.matrix()(k, i) < 0) return false;
    return true;
}

bool is_acyclic(const Seed& s) {
    return is_acyclic(s.matrix());
}

bool is_source_freezing_seed(const Seed& s, const GroundRing& r) {
    return std::all_of(s.coefficients().begin(), s.coefficients().end(),
                       [&](const TropMonomial& y) { return in_ground_ring(oplus_one(y), r); });
}

bool check_exchange_identity(const Seed& s, std::size_t i, std::size_t j) {
    require_index(s, i);
    require_index(s, j);
    if (!is_source(s, i)) throw std::invalid_argument("index " + std::to_string(i + 1) + " is not a source");
    if (s.matrix()(j, i) <= 0) throw std::invalid_argument("B_ji must be positive");

    const std::size_t nv = cluster_variables(s);
    const TropMonomial& yi = s.coefficients()[i];
    LaurentPoly first = LaurentPoly::from_trop(nv, oplus_one(yi)) * exchange(s, i) * s.cluster()[i];
    LaurentPoly second = LaurentPoly::from_trop(nv, yi);
    for (std::size_t k = 0; k < s.rank(); ++k)
        if (k != j && s.matrix()(k, i) > 0) second = second * power(s.cluster()[k], s.matrix()(k, i));
    second = second * power(s.cluster()[j], s.matrix()(j, i));
    return first - second == LaurentPoly::constant(nv, s.generators(), 1);
}

AUVerdict theorem_au_applies(const Seed& s, const GroundRing& r) {
    AUVerdict v;
    v.acyclic = is_acyclic(s);
    for (std::size_t i = 0; i < s.rank(); ++i) {
        auto m = oplus_one(s.coefficients()[i]);
        if (!in_ground_ring(m, r)) v.obstructions.push_back({i, std::move(m)});
    }
    v.status = v.acyclic && v.obstructions.empty() ? AUVerdict::Status::ConcludedEqual : AUVerdict::Status::Inconclusive;
    return v;
}

LaurentReport verify_laurent(const Seed& s, std::span<const MutationPath> sequences, const GroundRing& r) {
    LaurentReport report;
    for (const auto& seq : sequences) {
        ++report.sequences;
        Seed cur = s;
        for (std::size_t step = 0; step < seq.size(); ++step) {
            const std::size_t k = seq[step];
            if (k >= cur.rank()) {
                report.violations.push_back({seq, step, k, "index out of range"});
                break;
            }
            try {
                cur = mutate_seed(cur, k);
            } catch (const NotDivisible& e) {
                report.violations.push_back({seq, step, k, std::string("not a Laurent polynomial: ") + e.what()});
                break;
            }
            ++report.variables_checked;
            if (!coeffs_in_ring(cur.cluster()[k], r))
                report.violations.push_back(
                    {seq, step, k, "coefficients outside " + r.str() + ": " + cur.cluster()[k].str()});
        }
    }
    return report;
}

UpperCheck is_laurent_over_seeds(const LaurentPoly& p, const Seed& initial, std::span<const MutationPath> paths,
                                 const GroundRing& r) {
    const std::size_t n = initial.rank();
    const std::size_t m = initial.generators();
    if (p.variables() != n || p.generators() != m)
        throw DimensionMismatch("polynomial is not written in the initial cluster");

    UpperCheck out;
    // Multiplying by x^lift clears every negative power of the initial variables.
    std::vector<Int> lift(n, 0);
    auto low = p.min_exponents();
    for (std::size_t i = 0; i < n; ++i) lift[i] = std::max<Int>(0, checked_neg(low[i]));

    for (const auto& path : paths) {
        std::string where = "seed at path (";
        for (std::size_t t = 0; t < path.size(); ++t) where += (t ? "," : "") + std::to_string(path[t] + 1);
        where += ")";
        try {
            Seed target = mutate_along(initial, path);
            Seed fresh(target.matrix(), target.coefficients(), m, target.labels());
            MutationPath back_path(path.rbegin(), path.rend());
            // Initial cluster variables written in the target seed's cluster.
            const auto initial_vars = mutate_along(fresh, back_path).cluster();

            LaurentPoly numerator(n, m);
            for (const auto& [key, c] : p.terms()) {
                LaurentPoly term = LaurentPoly::from_trop(n, p.coefficient_monomial(key)) *
                                   LaurentPoly::constant(n, m, c);
                for (std::size_t i = 0; i < n; ++i) term = term * power(initial_vars[i], checked_add(key[i], lift[i]));
                numerator = numerator + term;
            }
            LaurentPoly denominator = LaurentPoly::constant(n, m, 1);
            for (std::size_t i = 0; i < n; ++i) denominator = denominator * power(initial_vars[i], lift[i]);

            LaurentPoly rewritten = lp_exact_div(numerator, denominator);
            if (!coeffs_in_ring(rewritten, r)) {
                out.laurent_everywhere = false;
                out.notes.push_back(where + ": coefficients outside " + r.str() + ": " + rewritten.str());
            }
        } catch (const NotDivisible&) {
            out.laurent_everywhere = false;
            out.notes.push_back(where + ": not a Laurent polynomial in this cluster");
        }
    }
    return out;
}

}  // namespace clusterau
