#include "clusterau/quiver.hpp"

#include "detail/digraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace clusterau {

Quiver::Quiver(std::size_t mutable_count, std::size_t frozen_count)
    : n_(mutable_count), m_(frozen_count), w_((mutable_count + frozen_count) * (mutable_count + frozen_count), 0) {}

Quiver Quiver::from_arrows(std::size_t mutable_count, std::size_t frozen_count, std::span<const Arrow> arrows) {
    Quiver q(mutable_count, frozen_count);
    const std::size_t total = q.vertex_count();
    for (const auto& a : arrows) {
        auto where = "arrow " + std::to_string(a.source) + "->" + std::to_string(a.target);
        if (a.source >= total || a.target >= total) throw std::invalid_argument(where + ": vertex out of range");
        if (a.source == a.target) throw std::invalid_argument(where + ": loops are not allowed");
        if (a.multiplicity <= 0) throw std::invalid_argument(where + ": multiplicity must be positive");
        if (q.is_frozen(a.source) && q.is_frozen(a.target))
            throw std::invalid_argument(where + ": no arrows between frozen vertices");
        if (q.arrows(a.source, a.target) < 0) throw std::invalid_argument(where + ": directed 2-cycle");
        q.at(a.source, a.target) = checked_add(q.at(a.source, a.target), a.multiplicity);
        q.at(a.target, a.source) = checked_neg(q.at(a.source, a.target));
    }
    return q;
}

std::vector<Arrow> Quiver::arrow_list() const {
    std::vector<Arrow> out;
    for (std::size_t a = 0; a < vertex_count(); ++a)
        for (std::size_t b = 0; b < vertex_count(); ++b)
            if (arrows(a, b) > 0) out.push_back({a, b, arrows(a, b)});
    return out;
}

std::vector<Arrow> Quiver::mutable_arrows() const {
    std::vector<Arrow> out;
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            if (arrows(a, b) > 0) out.push_back({a, b, arrows(a, b)});
    return out;
}

Quiver Quiver::mutable_part() const {
    Quiver out(n_, 0);
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) out.at(a, b) = arrows(a, b);
    return out;
}

Quiver Quiver::without_vertex(std::size_t v) const {
    if (v >= n_) throw std::out_of_range("only mutable vertices can be deleted");
    Quiver out(n_ - 1, m_);
    auto old_index = [v](std::size_t i) { return i < v ? i : i + 1; };
    for (std::size_t a = 0; a < out.vertex_count(); ++a)
        for (std::size_t b = 0; b < out.vertex_count(); ++b) out.at(a, b) = arrows(old_index(a), old_index(b));
    return out;
}

Quiver Quiver::relabeled(std::span<const std::size_t> perm) const {
    if (perm.size() != vertex_count()) throw std::invalid_argument("permutation has the wrong length");
    std::vector<bool> seen(vertex_count(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= vertex_count() || seen[perm[i]]) throw std::invalid_argument("not a permutation");
        if (is_frozen(i) != is_frozen(perm[i])) throw std::invalid_argument("permutation mixes frozen and mutable");
        seen[perm[i]] = true;
    }
    Quiver out(n_, m_);
    for (std::size_t a = 0; a < vertex_count(); ++a)
        for (std::size_t b = 0; b < vertex_count(); ++b) out.at(a, b) = arrows(perm[a], perm[b]);
    return out;
}

Quiver quiver_from_seed(const Seed& s) {
    const auto& b = s.matrix();
    if (!b.is_skew_symmetric()) throw std::invalid_argument("exchange matrix is not skew-symmetric");
    const std::size_t n = s.rank();
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (b(j, i) > 0) arrows.push_back({i, j, b(j, i)});
        const auto& y = s.coefficients()[i];
        for (std::size_t l = 0; l < s.generators(); ++l) {
            Int e = to_machine(y[l]);
            if (e > 0) arrows.push_back({i, n + l, e});
            if (e < 0) arrows.push_back({n + l, i, checked_neg(e)});
        }
    }
    return Quiver::from_arrows(n, s.generators(), arrows);
}

Seed quiver_to_seed(const Quiver& q) {
    const std::size_t n = q.mutable_count();
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n));
    std::vector<TropMonomial> y;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = q.arrows(j, i);
        std::vector<BigInt> exps(q.frozen_count());
        for (std::size_t l = 0; l < q.frozen_count(); ++l) exps[l] = q.arrows(i, n + l);
        y.emplace_back(std::move(exps));
    }
    return Seed(ExchangeMatrix(rows), std::move(y), q.frozen_count());
}

Quiver mutate_quiver(const Quiver& q, std::size_t k) {
    if (k >= q.mutable_count())
        throw std::out_of_range("vertex " + std::to_string(k) + " is not a mutable vertex");
    Quiver out = q;
    const std::size_t total = q.vertex_count();
    for (std::size_t a = 0; a < total; ++a) {
        if (a == k || q.arrows(a, k) <= 0) continue;
        for (std::size_t b = 0; b < total; ++b) {
            if (b == k || b == a || q.arrows(k, b) <= 0) continue;
            if (q.is_frozen(a) && q.is_frozen(b)) continue;
            Int added = checked_mul(q.arrows(a, k), q.arrows(k, b));
            out.at(a, b) = checked_add(out.at(a, b), added);
            out.at(b, a) = checked_neg(out.at(a, b));
        }
    }
    for (std::size_t a = 0; a < total; ++a) {
        out.at(a, k) = checked_neg(q.arrows(a, k));
        out.at(k, a) = checked_neg(q.arrows(k, a));
    }
    return out;
}

Quiver mutate_quiver_along(const Quiver& q, std::span<const std::size_t> path) {
    Quiver cur = q;
    for (auto k : path) cur = mutate_quiver(cur, k);
    return cur;
}

namespace {

detail::Adjacency mutable_adjacency(const Quiver& q) {
    detail::Adjacency g(q.mutable_count());
    for (std::size_t a = 0; a < q.mutable_count(); ++a)
        for (std::size_t b = 0; b < q.mutable_count(); ++b)
            if (q.arrows(a, b) > 0) g[a].push_back(b);
    return g;
}

std::vector<bool> reachable_from(const detail::Adjacency& g, const std::vector<bool>& sources) {
    std::vector<bool> seen = sources;
    std::deque<std::size_t> queue;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (sources[v]) queue.push_back(v);
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : g[v])
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
    }
    return seen;
}

}  // namespace

bool is_acyclic_quiver(const Quiver& q) {
    return !detail::has_directed_cycle(mutable_adjacency(q));
}

bool is_source_freezing_quiver(const Quiver& q) {
    for (std::size_t f = q.mutable_count(); f < q.vertex_count(); ++f)
        for (std::size_t v = 0; v < q.vertex_count(); ++v)
            if (q.arrows(f, v) > 0) return false;
    return true;
}

std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const Quiver& q) {
    const auto forward = mutable_adjacency(q);
    detail::Adjacency backward(forward.size());
    for (std::size_t a = 0; a < forward.size(); ++a)
        for (auto b : forward[a]) backward[b].push_back(a);

    std::vector<bool> on_cycle(forward.size(), false);
    for (const auto& component : detail::strongly_connected_components(forward))
        if (component.size() > 1)
            for (auto v : component) on_cycle[v] = true;

    const auto after_cycle = reachable_from(forward, on_cycle);
    const auto before_cycle = reachable_from(backward, on_cycle);

    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < forward.size(); ++a)
        for (auto b : forward[a])
            if (!(after_cycle[a] && before_cycle[b])) out.emplace_back(a, b);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Canonicalizer {
    const Quiver& q;
    std::size_t total;
    std::vector<std::vector<Int>> invariant;
    std::vector<std::size_t> block_of_position;  // sorted-invariant block per canonical position
    std::vector<std::size_t> sorted;              // vertices in invariant order
    std::vector<std::size_t> order;
    std::vector<bool> used;
    std::vector<Int> current, best;
    std::vector<std::size_t> best_order;
    bool have_best = false;

    explicit Canonicalizer(const Quiver& quiver) : q(quiver), total(quiver.vertex_count()), used(total, false) {
        for (std::size_t v = 0; v < total; ++v) {
            Int out_w = 0, in_w = 0, out_n = 0, in_n = 0;
            for (std::size_t u = 0; u < total; ++u) {
                Int a = q.arrows(v, u);
                if (a > 0) out_w += a, ++out_n;
                if (a < 0) in_w -= a, ++in_n;
            }
            invariant.push_back({q.is_frozen(v) ? 1 : 0, out_w, in_w, out_n, in_n});
        }
        sorted.resize(total);
        for (std::size_t v = 0; v < total; ++v) sorted[v] = v;
        std::stable_sort(sorted.begin(), sorted.end(),
                         [&](std::size_t a, std::size_t b) { return invariant[a] < invariant[b]; });
        std::size_t block = 0;
        for (std::size_t p = 0; p < total; ++p) {
            if (p > 0 && invariant[sorted[p]] != invariant[sorted[p - 1]]) ++block;
            block_of_position.push_back(block);
        }
    }

    std::size_t block_of_vertex(std::size_t v) const {
        auto it = std::find(sorted.begin(), sorted.end(), v);
        return block_of_position[static_cast<std::size_t>(it - sorted.begin())];
    }

    // Serialisation: for each position p, the arrows from order[p] to order[0..p-1].
    // A prefix of the serialisation depends only on the vertices placed so far,
    // which lets branches be cut as soon as they exceed the best prefix.
    void extend(std::size_t p) {
        if (p == total) {
            if (!have_best || current < best) {
                best = current;
                best_order = order;
                have_best = true;
            }
            return;
        }
        for (std::size_t v = 0; v < total; ++v) {
            if (used[v] || block_of_vertex(v) != block_of_position[p]) continue;
            std::size_t mark = current.size();
            for (std::size_t r = 0; r < p; ++r) current.push_back(q.arrows(v, order[r]));
            bool worse = false;
            if (have_best) {
                auto cmp = std::lexicographical_compare_three_way(current.begin(), current.end(), best.begin(),
                                                                  best.begin() + static_cast<std::ptrdiff_t>(current.size()));
                worse = cmp > 0;
            }
            if (!worse) {
                used[v] = true;
                order.push_back(v);
                extend(p + 1);
                order.pop_back();
                used[v] = false;
            }
            current.resize(mark);
        }
    }
};

}  // namespace

CanonicalForm canonical_labeling(const Quiver& q, std::size_t bound) {
    if (q.vertex_count() > bound)
        throw std::length_error("canonical form limited to " + std::to_string(bound) + " vertices");
    Canonicalizer c(q);
    c.extend(0);

    std::string key = std::to_string(q.mutable_count()) + "," + std::to_string(q.frozen_count()) + "|";
    for (auto v : c.sorted) {
        for (auto x : c.invariant[v]) key += std::to_string(x) + ".";
        key += ";";
    }
    key += "|";
    for (auto x : c.best) key += std::to_string(x) + ",";
    return {std::move(key), std::move(c.best_order)};
}

SearchOutcome search_mutation_class(const Quiver& q, const QuiverPredicate& goal, SearchLimits limits) {
    struct Node {
        Quiver quiver;
        std::vector<std::size_t> path;
    };
    SearchOutcome outcome;
    std::unordered_set<std::string> seen{canonical_form(q)};
    std::deque<Node> queue{{q, {}}};
    bool truncated = false;

    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        ++outcome.stats.nodes_visited;
        outcome.stats.max_depth = std::max(outcome.stats.max_depth, node.path.size());
        if (goal(node.quiver)) {
            outcome.status = SearchOutcome::Status::Found;
            outcome.witness = SearchOutcome::Witness{std::move(node.quiver), std::move(node.path)};
            return outcome;
        }
        const bool at_depth_limit = node.path.size() >= limits.depth;
        for (std::size_t k = 0; k < node.quiver.mutable_count(); ++k) {
            Quiver next;
            try {
                next = mutate_quiver(node.quiver, k);
            } catch (const std::overflow_error&) {
                // Multiplicities beyond Int: the class continues past what we can represent.
                truncated = true;
                continue;
            }
            auto key = canonical_form(next);
            if (seen.count(key)) continue;
            if (at_depth_limit || seen.size() >= limits.nodes) {
                truncated = true;
                continue;
            }
            seen.insert(std::move(key));
            auto path = node.path;
            path.push_back(k);
            queue.push_back({std::move(next), std::move(path)});
        }
    }
    outcome.status = truncated ? SearchOutcome::Status::LimitHit : SearchOutcome::Status::Exhausted;
    return outcome;
}

const char* to_string(SearchOutcome::Status status) {
    switch (status) {
        case SearchOutcome::Status::Found: return "FOUND";
        case SearchOutcome::Status::Exhausted: return "EXHAUSTED";
        case SearchOutcome::Status::LimitHit: return "LIMIT_HIT";
    }
    return "?";
}

}  // namespace clusterau
