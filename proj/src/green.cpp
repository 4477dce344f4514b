#include "clusterau/green.hpp"

#include "clusterau/errors.hpp"

#include <deque>
#include <set>

namespace clusterau {

const char* to_string(Color c) {
    return c == Color::Green ? "green" : "red";
}

FramedState::FramedState(const Quiver& q) : n_(q.mutable_count()), b_(2 * n_ * n_, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) b_[i * n_ + j] = q.arrows(j, i);
        b_[(n_ + i) * n_ + i] = 1;
    }
}

Color FramedState::color(std::size_t i) const {
    if (i >= n_) throw std::out_of_range("vertex " + std::to_string(i + 1) + " out of range");
    bool positive = false, negative = false;
    for (std::size_t r = 0; r < n_; ++r) {
        positive |= c(r, i) > 0;
        negative |= c(r, i) < 0;
    }
    if (positive == negative)
        throw SignCoherenceError("c-vector " + std::to_string(i + 1) + (positive ? " has mixed signs" : " is zero"));
    return positive ? Color::Green : Color::Red;
}

std::vector<Color> FramedState::colors() const {
    std::vector<Color> out;
    for (std::size_t i = 0; i < n_; ++i) out.push_back(color(i));
    return out;
}

bool FramedState::all_red() const {
    for (std::size_t i = 0; i < n_; ++i)
        if (color(i) != Color::Red) return false;
    return true;
}

FramedState FramedState::mutated(std::size_t k) const {
    if (k >= n_) throw std::out_of_range("vertex " + std::to_string(k + 1) + " out of range");
    FramedState out = *this;
    mutate_extended(out.b_, 2 * n_, n_, k);
    out.history_.push_back(k);
    out.colors();
    return out;
}

namespace {

MgsVerdict run(const Quiver& q, std::span<const std::size_t> seq, bool green_only) {
    MgsVerdict v;
    FramedState st(q);
    for (std::size_t t = 0; t < seq.size(); ++t) {
        v.colors.push_back(st.colors());
        const std::size_t k = seq[t];
        if (k >= st.rank()) {
            v.failed_step = t;
            v.diagnostic = "step " + std::to_string(t + 1) + ": vertex " + std::to_string(k + 1) + " out of range";
            v.final_state = st;
            return v;
        }
        if (green_only && st.color(k) != Color::Green) {
            v.failed_step = t;
            v.diagnostic = "step " + std::to_string(t + 1) + ": vertex " + std::to_string(k + 1) + " is red";
            v.final_state = st;
            return v;
        }
        st = st.mutated(k);
    }
    v.colors.push_back(st.colors());
    for (std::size_t i = 0; i < st.rank(); ++i)
        if (st.color(i) != Color::Red) {
            v.diagnostic = "vertex " + std::to_string(i + 1) + " is still green at the end";
            v.final_state = st;
            return v;
        }
    v.accepted = true;
    v.final_state = st;
    return v;
}

}  // namespace

MgsVerdict verify_mgs(const Quiver& q, std::span<const std::size_t> seq) {
    return run(q, seq, true);
}

MgsVerdict verify_reddening(const Quiver& q, std::span<const std::size_t> seq) {
    return run(q, seq, false);
}

MgsSearch search_mgs(const Quiver& q, std::size_t max_len, std::size_t node_limit) {
    MgsSearch result;
    FramedState start(q);
    std::set<std::vector<Int>> seen{start.matrix()};
    std::deque<FramedState> queue{start};
    while (!queue.empty()) {
        FramedState st = std::move(queue.front());
        queue.pop_front();
        ++result.states;
        if (st.all_red()) {
            result.sequence = st.history();
            return result;
        }
        for (std::size_t k = 0; k < st.rank(); ++k) {
            if (st.color(k) != Color::Green) continue;
            if (st.history().size() >= max_len || seen.size() >= node_limit) {
                result.truncated = true;
                break;
            }
            FramedState next = st.mutated(k);
            if (seen.insert(next.matrix()).second) queue.push_back(std::move(next));
        }
    }
    return result;
}

}  // namespace clusterau
