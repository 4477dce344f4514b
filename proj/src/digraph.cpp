#include "detail/digraph.hpp"

#include <algorithm>

namespace clusterau::detail {

namespace {

struct Tarjan {
    const Adjacency& graph;
    std::vector<int> index, low;
    std::vector<bool> on_stack;
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> components;
    int counter = 0;

    explicit Tarjan(const Adjacency& g)
        : graph(g), index(g.size(), -1), low(g.size(), -1), on_stack(g.size(), false) {}

    void visit(std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (std::size_t w : graph[v]) {
            if (index[w] == -1) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] != index[v]) return;
        std::vector<std::size_t> component;
        std::size_t w;
        do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
};

}  // namespace

std::vector<std::vector<std::size_t>> strongly_connected_components(const Adjacency& graph) {
    Tarjan t(graph);
    for (std::size_t v = 0; v < graph.size(); ++v)
        if (t.index[v] == -1) t.visit(v);
    return std::move(t.components);
}

bool has_directed_cycle(const Adjacency& graph) {
    for (std::size_t v = 0; v < graph.size(); ++v)
        if (std::find(graph[v].begin(), graph[v].end(), v) != graph[v].end()) return true;
    for (const auto& c : strongly_connected_components(graph))
        if (c.size() > 1) return true;
    return false;
}

}  // namespace clusterau::detail
