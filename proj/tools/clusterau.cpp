// Command-line front end. Vertex and index arguments are 1-based.
//
// Exit codes: 0 success / accept / concluded, 1 negative, 2 inconclusive,
// 3 bad input or usage.

#include "clusterau/banff.hpp"
#include "clusterau/corpus.hpp"
#include "clusterau/errors.hpp"
#include "clusterau/green.hpp"
#include "clusterau/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <variant>

using namespace clusterau;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInconclusive = 2;
constexpr int kBadInput = 3;

struct Input {
    std::variant<Seed, Quiver> value;
    bool is_seed() const { return std::holds_alternative<Seed>(value); }
    Quiver quiver() const { return is_seed() ? quiver_from_seed(std::get<Seed>(value)) : std::get<Quiver>(value); }
    Seed seed() const { return is_seed() ? std::get<Seed>(value) : quiver_to_seed(std::get<Quiver>(value)); }
};

Input load(const std::string& source, const std::string& reading) {
    if (auto ex = builtin(source, parse_reading(reading))) {
        if (ex->is_seed) return {parse_seed(ex->text)};
        return {parse_quiver(ex->text)};
    }
    const std::string text = read_file(source);
    try {
        if (source.ends_with(".seed")) return {parse_seed(text)};
        return {parse_quiver(text)};
    } catch (const ParseError& e) {
        throw std::runtime_error(source + ": " + e.what());
    }
}

std::size_t env_limit(const char* name, std::size_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoul(v);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(name) + " must be a nonnegative integer");
    }
}

std::vector<std::size_t> to_zero_based(const std::vector<long long>& one_based) {
    std::vector<std::size_t> out;
    for (auto k : one_based) {
        if (k < 1) throw std::invalid_argument("indices are 1-based, got " + std::to_string(k));
        out.push_back(static_cast<std::size_t>(k - 1));
    }
    return out;
}

std::vector<std::size_t> parse_sequence(const std::string& text) {
    std::vector<long long> values;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        std::size_t used = 0;
        long long v = std::stoll(item, &used);
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw std::invalid_argument("bad sequence entry '" + item + "'");
        values.push_back(v);
    }
    return to_zero_based(values);
}

std::string join_one_based(const std::vector<std::size_t>& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? "," : "") + std::to_string(seq[i] + 1);
    return out;
}

void print_cluster(const Seed& s) {
    for (std::size_t i = 0; i < s.rank(); ++i) std::cout << s.labels()[i] << " = " << s.cluster()[i].str() << '\n';
}

void print_c_matrix(const FramedState& st) {
    std::cout << "c-matrix:\n";
    for (std::size_t i = 0; i < st.rank(); ++i) {
        for (std::size_t j = 0; j < st.rank(); ++j) std::cout << (j ? " " : "  ") << st.c(i, j);
        std::cout << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with cluster algebras of geometric type"};
    app.require_subcommand(1);

    std::string input;
    std::string reading = "single";
    std::size_t depth = 0, nodes = 0;
    bool dot = false, trace = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "built-in name or file (.seed for seeds, otherwise a quiver)")->required();
        cmd->add_option("--reading", reading, "multiplicity of 6->3 in cg3_mutable: single or double")
            ->check(CLI::IsMember({"single", "double"}));
    };
    auto add_limits = [&](CLI::App* cmd) {
        cmd->add_option("--depth", depth, "mutation depth limit (env CLUSTERAU_DEPTH, default 8)");
        cmd->add_option("--nodes", nodes, "node limit (env CLUSTERAU_NODES, default 100000)");
    };

    auto* mutate = app.add_subcommand("mutate", "mutate along a sequence of 1-based indices");
    add_common(mutate);
    std::vector<long long> sequence;
    mutate->add_option("sequence", sequence, "mutation indices");
    mutate->add_flag("--trace", trace, "print the new cluster variable after every step");
    mutate->add_flag("--dot", dot, "print the resulting quiver as DOT");

    auto* banff = app.add_subcommand("banff", "reduced Banff algorithm on the mutable part");
    add_common(banff);
    add_limits(banff);
    banff->add_flag("--dot", dot, "print the trace tree as DOT");

    auto* mgs = app.add_subcommand("mgs", "verify or search maximal green sequences");
    add_common(mgs);
    std::optional<std::string> verify;
    std::optional<std::size_t> search;
    bool reddening = false;
    auto* verify_opt = mgs->add_option("--verify", verify, "comma-separated 1-based sequence");
    mgs->add_option("--search", search, "maximum sequence length")->excludes(verify_opt);
    mgs->add_flag("--reddening", reddening, "with --verify: allow red mutations, require only an all-red end");
    mgs->add_option("--nodes", nodes, "state limit for --search (env CLUSTERAU_NODES, default 100000)");

    auto* report = app.add_subcommand("report", "decide A = U where a criterion applies");
    add_common(report);
    add_limits(report);
    std::string ring = "zp";
    report->add_option("--ring", ring, "zp, zp+, or zp+:z2,z5");

    auto* show = app.add_subcommand("show", "print an input in file format");
    add_common(show);
    show->add_flag("--dot", dot, "print the quiver as DOT");

    app.add_subcommand("list", "list built-in examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        SearchLimits limits;
        limits.depth = depth ? depth : env_limit("CLUSTERAU_DEPTH", limits.depth);
        limits.nodes = nodes ? nodes : env_limit("CLUSTERAU_NODES", limits.nodes);

        if (app.got_subcommand("list")) {
            for (const auto& name : builtin_names()) std::cout << name << '\n';
            return kOk;
        }

        const Input in = load(input, reading);

        if (*mutate) {
            const auto path = to_zero_based(sequence);
            Seed cur = in.seed();
            for (std::size_t t = 0; t < path.size(); ++t) {
                cur = mutate_seed(cur, path[t]);
                if (trace)
                    std::cout << "step " << t + 1 << " mu_" << path[t] + 1 << ": " << cur.labels()[path[t]]
                              << "' = " << cur.cluster()[path[t]].str() << '\n';
            }
            if (in.is_seed())
                std::cout << render_seed(cur);
            else
                std::cout << render_quiver(quiver_from_seed(cur));
            print_cluster(cur);
            if (dot) std::cout << quiver_dot(quiver_from_seed(cur));
            return kOk;
        }

        if (*banff) {
            const Quiver q = in.quiver();
            const BanffTrace t = banff_reduced(q, limits);
            std::cout << render_text(t);
            const ReplayResult replay = replay_certificate(q, t);
            std::cout << "certificate: " << replay.message << '\n';
            if (dot) std::cout << render_dot(t);
            switch (t.status) {
                case BanffTrace::Status::Success: return replay.ok ? kOk : kNegative;
                case BanffTrace::Status::Fail: return kNegative;
                case BanffTrace::Status::Inconclusive: return kInconclusive;
            }
        }

        if (*mgs) {
            const Quiver q = in.quiver();
            if (search) {
                const MgsSearch s = search_mgs(q, *search, limits.nodes);
                if (s.sequence) {
                    std::cout << "FOUND length " << s.sequence->size() << ": " << join_one_based(*s.sequence) << '\n';
                    return kOk;
                }
                std::cout << "NONE_WITHIN_BOUNDS (" << s.states << " states, "
                          << (s.truncated ? "bounds reached" : "green mutations exhausted") << ")\n";
                return s.truncated ? kInconclusive : kNegative;
            }
            if (!verify) throw std::invalid_argument("mgs needs --verify or --search");
            const auto seq = parse_sequence(*verify);
            const MgsVerdict v = reddening ? verify_reddening(q, seq) : verify_mgs(q, seq);
            for (std::size_t t = 0; t < v.colors.size(); ++t) {
                if (t < seq.size())
                    std::cout << "step " << t + 1 << " mutate " << seq[t] + 1 << " |";
                else
                    std::cout << "final         |";
                for (auto c : v.colors[t]) std::cout << ' ' << (c == Color::Green ? 'G' : 'R');
                std::cout << '\n';
            }
            print_c_matrix(v.final_state);
            std::cout << (v.accepted ? "ACCEPT" : "REJECT: " + v.diagnostic) << '\n';
            return v.accepted ? kOk : kNegative;
        }

        if (*report) {
            const AUReport r = au_report(in.quiver(), GroundRing::parse(ring), limits);
            std::cout << render_report(r);
            return r.verdict == AUReport::Verdict::Concluded ? kOk : kInconclusive;
        }

        if (*show) {
            if (dot)
                std::cout << quiver_dot(in.quiver(), input);
            else if (in.is_seed())
                std::cout << render_seed(std::get<Seed>(in.value));
            else
                std::cout << render_quiver(std::get<Quiver>(in.value));
            return kOk;
        }
    } catch (const SignCoherenceError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}
