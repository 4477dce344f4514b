#include "clusterau/banff.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace clusterau {

std::size_t BanffTrace::leaf_count() const {
    return static_cast<std::size_t>(
        std::count_if(nodes.begin(), nodes.end(), [](const BanffNode& n) { return n.children.empty(); }));
}

std::size_t BanffTrace::acyclic_leaf_count() const {
    return static_cast<std::size_t>(
        std::count_if(nodes.begin(), nodes.end(), [](const BanffNode& n) { return n.kind == BanffNode::Kind::Acyclic; }));
}

const char* to_string(BanffTrace::Status status) {
    switch (status) {
        case BanffTrace::Status::Success: return "SUCCESS";
        case BanffTrace::Status::Fail: return "FAIL";
        case BanffTrace::Status::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

const char* to_string(BanffNode::Kind kind) {
    switch (kind) {
        case BanffNode::Kind::Pending: return "PENDING";
        case BanffNode::Kind::Acyclic: return "ACYCLIC";
        case BanffNode::Kind::Split: return "SPLIT";
        case BanffNode::Kind::Failed: return "FAILED";
        case BanffNode::Kind::Limit: return "LIMIT";
    }
    return "?";
}

namespace {

std::pair<std::size_t, std::size_t> choose_pair(const Quiver& q) {
    auto pairs = covering_pairs(q);
    std::pair<std::size_t, std::size_t> best = pairs.front();
    int best_score = -1;
    for (const auto& p : pairs) {
        int score = int(is_acyclic_quiver(q.without_vertex(p.first))) + int(is_acyclic_quiver(q.without_vertex(p.second)));
        if (score > best_score) {
            best_score = score;
            best = p;
        }
    }
    return best;
}

std::vector<std::size_t> drop(const std::vector<std::size_t>& labels, std::size_t v) {
    auto out = labels;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(v));
    return out;
}

}  // namespace

BanffTrace banff_reduced(const Quiver& q, SearchLimits limits) {
    BanffTrace trace;
    BanffNode root;
    root.quiver = q.mutable_part();
    for (std::size_t v = 0; v < q.mutable_count(); ++v) root.vertices.push_back(v);
    trace.nodes.push_back(std::move(root));

    const QuiverPredicate goal = [](const Quiver& x) { return is_acyclic_quiver(x) || !covering_pairs(x).empty(); };

    bool limited = false;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t id = queue.front();
        queue.pop_front();

        auto outcome = search_mutation_class(trace.nodes[id].quiver, goal, limits);
        trace.nodes[id].stats = outcome.stats;
        if (outcome.status != SearchOutcome::Status::Found) {
            trace.nodes[id].reached = trace.nodes[id].quiver;
            if (outcome.status == SearchOutcome::Status::Exhausted) {
                trace.nodes[id].kind = BanffNode::Kind::Failed;
                trace.status = BanffTrace::Status::Fail;
                return trace;
            }
            trace.nodes[id].kind = BanffNode::Kind::Limit;
            limited = true;
            continue;
        }

        auto& node = trace.nodes[id];
        node.path = std::move(outcome.witness->path);
        node.reached = std::move(outcome.witness->quiver);
        if (is_acyclic_quiver(node.reached)) {
            node.kind = BanffNode::Kind::Acyclic;
            continue;
        }
        node.kind = BanffNode::Kind::Split;
        node.pair = choose_pair(node.reached);

        for (std::size_t endpoint : {node.pair->first, node.pair->second}) {
            BanffNode child;
            const auto& parent = trace.nodes[id];
            child.quiver = parent.reached.without_vertex(endpoint);
            child.vertices = drop(parent.vertices, endpoint);
            child.parent = id;
            child.deleted = endpoint;
            trace.nodes[id].children.push_back(trace.nodes.size());
            queue.push_back(trace.nodes.size());
            trace.nodes.push_back(std::move(child));
        }
    }
    trace.status = limited ? BanffTrace::Status::Inconclusive : BanffTrace::Status::Success;
    return trace;
}

ReplayResult replay_certificate(const Quiver& q, const BanffTrace& trace) {
    auto fail = [](std::size_t id, const std::string& why) {
        return ReplayResult{false, "node " + std::to_string(id) + ": " + why};
    };
    if (trace.nodes.empty()) return {false, "empty trace"};

    std::vector<Quiver> rebuilt(trace.nodes.size());
    std::vector<std::vector<std::size_t>> labels(trace.nodes.size());
    rebuilt[0] = q.mutable_part();
    for (std::size_t v = 0; v < q.mutable_count(); ++v) labels[0].push_back(v);

    for (std::size_t id = 0; id < trace.nodes.size(); ++id) {
        const auto& node = trace.nodes[id];
        if (id > 0) {
            if (!node.parent || *node.parent >= id || !node.deleted) return fail(id, "missing parent link");
            const auto& parent = trace.nodes[*node.parent];
            if (!parent.pair || (*node.deleted != parent.pair->first && *node.deleted != parent.pair->second))
                return fail(id, "deleted vertex is not an endpoint of the parent's covering pair");
            Quiver reached = mutate_quiver_along(rebuilt[*node.parent], parent.path);
            rebuilt[id] = reached.without_vertex(*node.deleted);
            labels[id] = drop(labels[*node.parent], *node.deleted);
        }
        if (!(rebuilt[id] == node.quiver)) return fail(id, "recorded quiver differs from the replayed one");
        if (labels[id] != node.vertices) return fail(id, "vertex labels differ");
        for (auto k : node.path)
            if (k >= node.quiver.mutable_count()) return fail(id, "mutation index out of range");
        Quiver reached = mutate_quiver_along(rebuilt[id], node.path);
        if (node.kind == BanffNode::Kind::Acyclic || node.kind == BanffNode::Kind::Split)
            if (!(reached == node.reached)) return fail(id, "recorded mutation result differs");

        switch (node.kind) {
            case BanffNode::Kind::Acyclic:
                if (!is_acyclic_quiver(reached)) return fail(id, "leaf is not acyclic");
                if (!node.children.empty()) return fail(id, "acyclic leaf has children");
                break;
            case BanffNode::Kind::Split: {
                if (!node.pair) return fail(id, "split without a covering pair");
                auto pairs = covering_pairs(reached);
                if (std::find(pairs.begin(), pairs.end(), *node.pair) == pairs.end())
                    return fail(id, "recorded pair is not a covering pair");
                if (node.children.size() != 2) return fail(id, "split must have two children");
                for (auto c : node.children)
                    if (c >= trace.nodes.size() || trace.nodes[c].parent != id) return fail(id, "bad child link");
                break;
            }
            case BanffNode::Kind::Pending:
            case BanffNode::Kind::Failed:
            case BanffNode::Kind::Limit:
                if (trace.status == BanffTrace::Status::Success) return fail(id, "success trace with an open node");
                break;
        }
    }
    if (trace.status == BanffTrace::Status::Success && trace.acyclic_leaf_count() != trace.leaf_count())
        return {false, "success trace with a non-acyclic leaf"};
    return {true, "valid, " + std::to_string(trace.nodes.size()) + " nodes, " +
                      std::to_string(trace.acyclic_leaf_count()) + " acyclic leaves"};
}

namespace {

std::string label_set(const std::vector<std::size_t>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + std::to_string(labels[i] + 1);
    return out + "}";
}

std::string path_text(const BanffNode& node) {
    std::string out = "(";
    for (std::size_t i = 0; i < node.path.size(); ++i)
        out += (i ? "," : "") + std::to_string(node.vertices[node.path[i]] + 1);
    return out + ")";
}

std::string pair_text(const BanffNode& node) {
    return std::to_string(node.vertices[node.pair->first] + 1) + "->" + std::to_string(node.vertices[node.pair->second] + 1);
}

std::string node_summary(const BanffNode& node) {
    std::string out = label_set(node.vertices);
    if (!node.path.empty()) out += " mutate " + path_text(node);
    switch (node.kind) {
        case BanffNode::Kind::Pending: out += " PENDING (not processed)"; break;
        case BanffNode::Kind::Acyclic: out += " ACYCLIC"; break;
        case BanffNode::Kind::Split: out += " covering pair " + pair_text(node); break;
        case BanffNode::Kind::Failed: out += " FAILED (class exhausted)"; break;
        case BanffNode::Kind::Limit: out += " LIMIT (search bounds reached)"; break;
    }
    return out;
}

void render_subtree(const BanffTrace& trace, std::size_t id, std::size_t depth, std::ostringstream& os) {
    const auto& node = trace.nodes[id];
    os << std::string(2 * depth, ' ');
    if (node.parent) os << "delete " << trace.nodes[*node.parent].vertices[*node.deleted] + 1 << ": ";
    os << node_summary(node) << "  [" << node.stats.nodes_visited << " visited]\n";
    for (auto c : node.children) render_subtree(trace, c, depth + 1, os);
}

}  // namespace

std::string render_text(const BanffTrace& trace) {
    std::ostringstream os;
    os << "banff: " << to_string(trace.status) << ", " << trace.acyclic_leaf_count() << " acyclic leaves of "
       << trace.leaf_count() << "\n";
    if (!trace.nodes.empty()) render_subtree(trace, 0, 0, os);
    return os.str();
}

std::string render_dot(const BanffTrace& trace) {
    std::ostringstream os;
    os << "digraph banff {\n  node [shape=box];\n";
    for (std::size_t id = 0; id < trace.nodes.size(); ++id) {
        const auto& node = trace.nodes[id];
        os << "  n" << id << " [label=\"" << label_set(node.vertices);
        if (!node.path.empty()) os << "\\nmutate " << path_text(node);
        if (node.kind == BanffNode::Kind::Split)
            os << "\\n" << pair_text(node) << "\", color=red";
        else
            os << "\\n" << to_string(node.kind) << "\"";
        os << "];\n";
    }
    for (std::size_t id = 0; id < trace.nodes.size(); ++id)
        for (auto c : trace.nodes[id].children)
            os << "  n" << id << " -> n" << c << " [label=\"delete "
               << trace.nodes[id].vertices[*trace.nodes[c].deleted] + 1 << "\"];\n";
    os << "}\n";
    return os.str();
}

AUReport au_report(const Quiver& q, const GroundRing& r, SearchLimits limits) {
    AUReport report;
    report.ring = r;
    const Seed seed = quiver_to_seed(q);
    report.seed_check = theorem_au_applies(seed, r);

    std::set<std::size_t> all;
    for (const auto& ob : report.seed_check.obstructions) {
        report.inversions.push_back(blocking_generators(ob.monomial, r));
        all.insert(report.inversions.back().begin(), report.inversions.back().end());
    }
    report.inversion_union.assign(all.begin(), all.end());

    if (report.seed_check.status == AUVerdict::Status::ConcludedEqual) {
        report.verdict = AUReport::Verdict::Concluded;
        report.route = "acyclic source-freezing seed";
    }
    if (r.kind() == GroundRing::Kind::FullLaurent) {
        report.banff = banff_reduced(q, limits);
        if (report.verdict != AUReport::Verdict::Concluded && report.banff->status == BanffTrace::Status::Success) {
            report.verdict = AUReport::Verdict::Concluded;
            report.route = "local acyclicity (Banff success)";
        }
    }
    return report;
}

std::string render_report(const AUReport& report) {
    std::ostringstream os;
    os << "ground ring: " << report.ring.str() << "\n";
    os << "seed: " << (report.seed_check.acyclic ? "acyclic" : "not acyclic") << ", "
       << (report.seed_check.obstructions.empty() ? "source-freezing" : "not source-freezing") << "\n";
    if (report.banff)
        os << "banff: " << to_string(report.banff->status) << ", " << report.banff->acyclic_leaf_count()
           << " acyclic leaves\n";
    for (std::size_t i = 0; i < report.seed_check.obstructions.size(); ++i) {
        const auto& ob = report.seed_check.obstructions[i];
        os << "obstruction: y" << ob.index + 1 << " (+) 1 = " << ob.monomial.str() << " not in ring; invert";
        for (auto g : report.inversions[i]) os << " z" << g + 1;
        os << "\n";
    }
    if (!report.inversion_union.empty()) {
        os << "inverting";
        for (auto g : report.inversion_union) os << " z" << g + 1;
        os << " clears every obstruction\n";
    }
    if (report.verdict == AUReport::Verdict::Concluded)
        os << "CONCLUDED: A = U via " << report.route << "\n";
    else
        os << "INCONCLUSIVE: no criterion applies; equality is not claimed\n";
    return os.str();
}

}  // namespace clusterau
