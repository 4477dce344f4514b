#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clusterau/banff.hpp"
#include "clusterau/corpus.hpp"
#include "clusterau/io.hpp"
#include "support.hpp"

using namespace clusterau;

namespace {

Quiver named(const char* name, Reading r = Reading::Single) {
    return parse_quiver(builtin(name, r)->text);
}

using Kind = BanffNode::Kind;

}  // namespace

TEST_CASE("acyclic input is a single untouched leaf") {
    std::mt19937 rng(79);
    for (int trial = 0; trial < 30; ++trial) {
        Quiver q = testing_support::random_acyclic_quiver(rng, 5, 2);
        auto t = banff_reduced(q);
        CHECK(t.status == BanffTrace::Status::Success);
        REQUIRE(t.nodes.size() == 1);
        CHECK(t.nodes[0].kind == Kind::Acyclic);
        CHECK(t.nodes[0].path.empty());
        CHECK(replay_certificate(q, t).ok);
    }
    auto fig2 = banff_reduced(named("fig2"));
    CHECK(fig2.status == BanffTrace::Status::Success);
    CHECK(fig2.nodes.size() == 1);
}

TEST_CASE("Cremmer-Gervais run has the published tree shape") {
    Quiver q = named("cg3_mutable");
    auto t = banff_reduced(q);
    REQUIRE(t.status == BanffTrace::Status::Success);
    CHECK(t.acyclic_leaf_count() == 3);
    CHECK(t.leaf_count() == 3);

    const auto& root = t.nodes[0];
    REQUIRE(root.kind == Kind::Split);
    REQUIRE(root.children.size() == 2);
    const auto& left = t.nodes[root.children[0]];
    const auto& right = t.nodes[root.children[1]];
    const BanffNode& leaf = left.kind == Kind::Acyclic ? left : right;
    const BanffNode& inner = left.kind == Kind::Acyclic ? right : left;
    CHECK(leaf.kind == Kind::Acyclic);
    REQUIRE(inner.kind == Kind::Split);
    REQUIRE(inner.children.size() == 2);
    for (auto c : inner.children) CHECK(t.nodes[c].kind == Kind::Acyclic);

    CHECK(root.path == MutationPath{2});
    CHECK(*root.pair == std::pair<std::size_t, std::size_t>{1, 0});
    CHECK(replay_certificate(q, t).ok);
}

TEST_CASE("recorded covering pairs are covering pairs of their quivers") {
    for (const char* name : {"cg3_mutable", "cg3_double"}) {
        auto t = banff_reduced(named(name));
        for (const auto& node : t.nodes)
            if (node.pair) {
                auto pairs = covering_pairs(node.reached);
                CHECK(std::find(pairs.begin(), pairs.end(), *node.pair) != pairs.end());
            }
    }
}

TEST_CASE("tampered certificates are rejected") {
    Quiver q = named("cg3_mutable");
    auto t = banff_reduced(q);
    auto bad_pair = t;
    bad_pair.nodes[0].pair = std::pair<std::size_t, std::size_t>{0, 1};
    CHECK_FALSE(replay_certificate(q, bad_pair).ok);
    auto bad_path = t;
    bad_path.nodes[0].path = {0};
    CHECK_FALSE(replay_certificate(q, bad_path).ok);
    auto bad_leaf = t;
    bad_leaf.nodes[1].kind = Kind::Acyclic;
    bad_leaf.nodes[2].kind = Kind::Acyclic;
    bad_leaf.nodes[2].children.clear();
    CHECK_FALSE(replay_certificate(q, bad_leaf).ok);
    CHECK_FALSE(replay_certificate(named("markov"), t).ok);
}

TEST_CASE("covering-pair-free class fails") {
    auto t = banff_reduced(named("markov"));
    CHECK(t.status == BanffTrace::Status::Fail);
    CHECK(t.nodes[0].kind == Kind::Failed);
    CHECK(replay_certificate(named("markov"), t).ok);
}

TEST_CASE("bounded searches give inconclusive, never failure") {
    auto t = banff_reduced(named("cg3_mutable"), {0, 100});
    CHECK(t.status == BanffTrace::Status::Inconclusive);
    CHECK(t.nodes[0].kind == Kind::Limit);
    // Every mutation of the Markov quiver is isomorphic to it, so depth 0 already exhausts the class.
    CHECK(banff_reduced(named("markov"), {0, 1}).status == BanffTrace::Status::Fail);
}

TEST_CASE("text and DOT rendering") {
    auto t = banff_reduced(named("cg3_mutable"));
    auto text = render_text(t);
    CHECK(text.find("SUCCESS, 3 acyclic leaves") != std::string::npos);
    CHECK(text.find("covering pair 2->1") != std::string::npos);
    auto dot = render_dot(t);
    CHECK(dot.rfind("digraph banff {", 0) == 0);
    CHECK(dot.find("color=red") != std::string::npos);
}

TEST_CASE("equality reports by ground ring") {
    auto zp = au_report(named("cg3_mutable"), GroundRing::full_laurent());
    CHECK(zp.verdict == AUReport::Verdict::Concluded);
    REQUIRE(zp.banff);

    for (const char* name : {"cg3_mutable", "cg3_single", "cg3_double"}) {
        auto plus = au_report(named(name), GroundRing::polynomial());
        CHECK(plus.verdict == AUReport::Verdict::Inconclusive);
        CHECK_FALSE(plus.banff);
    }
    auto full = au_report(named("cg3_single"), GroundRing::polynomial());
    CHECK(full.inversion_union == std::vector<std::size_t>{0, 1, 2});

    CHECK(au_report(named("fig2"), GroundRing::polynomial()).verdict == AUReport::Verdict::Concluded);

    Quiver fig1 = quiver_from_seed(parse_seed(builtin("fig1")->text));
    auto r = au_report(fig1, GroundRing::polynomial());
    CHECK(r.verdict == AUReport::Verdict::Inconclusive);
    CHECK(r.inversion_union == std::vector<std::size_t>{1});
    CHECK(render_report(r).find("z2^-1") != std::string::npos);
    CHECK(au_report(fig1, GroundRing::localized({1})).verdict == AUReport::Verdict::Concluded);
}

TEST_CASE("polynomial reports only conclude through the seed criterion") {
    std::mt19937 rng(83);
    for (int trial = 0; trial < 100; ++trial) {
        Quiver q = testing_support::random_quiver(rng, 4, 2, 2);
        auto r = au_report(q, GroundRing::polynomial());
        auto seed_ok = theorem_au_applies(quiver_to_seed(q), GroundRing::polynomial()).status ==
                       AUVerdict::Status::ConcludedEqual;
        CHECK((r.verdict == AUReport::Verdict::Concluded) == seed_ok);
    }
}
