#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "lognet/guaranteed.hpp"
#include "lognet/oracle.hpp"
#include "support/generators.hpp"

using namespace lognet;

namespace {

Network undirected(std::vector<RawArc> arcs, std::vector<NodeId> nodes = {}) {
    for (auto& a : arcs) a.undirected = true;
    return build_network(arcs, nodes);
}

std::vector<std::pair<NodeId, NodeId>> edge_labels(const Network& net, const SpanningTree& t) {
    std::vector<std::pair<NodeId, NodeId>> out;
    for (const auto& e : t.edges) out.emplace_back(net.label(e.u), net.label(e.v));
    std::sort(out.begin(), out.end());
    return out;
}

// Efficiency comparisons between differently ordered products.
constexpr double kTol = 1e-10;

}  // namespace

TEST(SpanningTree, Triangle) {
    Network net = test::triangle();
    auto tree = max_product_spanning_tree(as_symmetric(net));
    EXPECT_EQ(edge_labels(net, tree), (std::vector<std::pair<NodeId, NodeId>>{{"a", "b"}, {"b", "c"}}));
    EXPECT_NEAR(tree.product, 0.72, 1e-12);
}

TEST(SpanningTree, TreeInputAndSingleNode) {
    Network star = undirected({{"s", "x", 0.9}, {"s", "y", 0.8}, {"s", "w", 0.5}});
    auto tree = max_product_spanning_tree(as_symmetric(star));
    EXPECT_EQ(tree.edges.size(), 3u);
    EXPECT_NEAR(tree.product, 0.9 * 0.8 * 0.5, 1e-12);

    Network single = build_network({}, std::vector<NodeId>{"a"});
    auto empty = max_product_spanning_tree(as_symmetric(single));
    EXPECT_TRUE(empty.edges.empty());
    EXPECT_EQ(empty.product, 1.0);
}

TEST(SpanningTree, Preconditions) {
    Network split = undirected({{"a", "b", 0.9}, {"c", "d", 0.9}});
    try {
        max_product_spanning_tree(as_symmetric(split));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotConnected);
    }
    std::vector<RawArc> one_way{{"a", "b", 0.9, false}};
    Network directed = build_network(one_way);
    try {
        guaranteed_min_by_tree(as_symmetric(directed));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotSymmetric);
    }
}

TEST(SpanningTree, TieBreakIsLexicographic) {
    // All four links equal: Kruskal takes a-b, a-c, a-d and skips the rest.
    Network net = undirected({{"a", "b", 0.5}, {"a", "c", 0.5}, {"a", "d", 0.5}, {"b", "c", 0.5}, {"c", "d", 0.5}});
    auto tree = max_product_spanning_tree(as_symmetric(net));
    EXPECT_EQ(edge_labels(net, tree), (std::vector<std::pair<NodeId, NodeId>>{{"a", "b"}, {"a", "c"}, {"a", "d"}}));
}

TEST(ByTree, Values) {
    EXPECT_NEAR(guaranteed_min_by_tree(as_symmetric(test::triangle())).value, 0.72, 1e-12);

    Network line = undirected({{"a", "b", 0.9}, {"b", "c", 0.9}});
    auto level = guaranteed_min_by_tree(as_symmetric(line));
    EXPECT_NEAR(level.value, 0.81, 1e-12);
    EXPECT_EQ(level.method, LevelMethod::Tree);
    const auto& tree = std::get<SpanningTree>(level.witness);
    EXPECT_EQ(level.value, tree.product);
    EXPECT_EQ(tree_path(line, tree, "a", "c").efficiency, level.value);

    Network lossless = undirected({{"a", "b", 1.0}, {"b", "c", 1.0}, {"a", "c", 1.0}});
    EXPECT_EQ(guaranteed_min_by_tree(as_symmetric(lossless)).value, 1.0);
}

TEST(TreePath, Paths) {
    Network net = test::triangle();
    auto tree = max_product_spanning_tree(as_symmetric(net));
    auto self = tree_path(net, tree, "b", "b");
    EXPECT_EQ(self.nodes, std::vector<NodeId>{"b"});
    EXPECT_EQ(self.efficiency, 1.0);

    auto ac = tree_path(net, tree, "a", "c");
    EXPECT_EQ(ac.nodes, (std::vector<NodeId>{"a", "b", "c"}));
    EXPECT_NEAR(ac.efficiency, 0.72, 1e-12);

    Network star = undirected({{"s", "x", 0.9}, {"s", "y", 0.8}});
    auto star_tree = max_product_spanning_tree(as_symmetric(star));
    auto xy = tree_path(star, star_tree, "x", "y");
    EXPECT_EQ(xy.nodes, (std::vector<NodeId>{"x", "s", "y"}));
    EXPECT_NEAR(xy.efficiency, 0.72, 1e-12);

    try {
        tree_path(net, tree, "a", "q");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnknownNode);
    }
}

TEST(AllPairs, Values) {
    auto tri = guaranteed_min_all_pairs(test::triangle());
    EXPECT_NEAR(tri.value, 0.72, 1e-12);
    const auto& worst = std::get<WorstPair>(tri.witness);
    EXPECT_EQ(worst.from, "a");
    EXPECT_EQ(worst.to, "c");
    EXPECT_EQ(worst.chain.nodes, (std::vector<NodeId>{"a", "b", "c"}));

    std::vector<RawArc> cycle{{"a", "b", 0.9, false}, {"b", "c", 0.9, false}, {"c", "a", 0.9, false}};
    auto cyc = guaranteed_min_all_pairs(build_network(cycle));
    EXPECT_NEAR(cyc.value, 0.81, 1e-12);
    EXPECT_EQ(std::get<WorstPair>(cyc.witness).chain.length(), 2u);

    std::vector<RawArc> one_way{{"a", "z", 0.5, false}};
    try {
        guaranteed_min_all_pairs(build_network(one_way));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::SomePairUnreachable);
        EXPECT_NE(std::string(e.what()).find("from z to a"), std::string::npos);
    }
}

TEST(AllPairs, ParallelMatchesSequential) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        Network net = test::random_connected_symmetric(rng, 5, 40, 0.2);
        auto seq = guaranteed_min_all_pairs(net, {1});
        auto par = guaranteed_min_all_pairs(net, {4});
        EXPECT_EQ(seq.value, par.value);
        const auto& a = std::get<WorstPair>(seq.witness);
        const auto& b = std::get<WorstPair>(par.witness);
        EXPECT_EQ(a.from, b.from);
        EXPECT_EQ(a.to, b.to);
        EXPECT_EQ(a.chain, b.chain);
    }
}

TEST(Properties, TreeIsMaxProductAndBoundsHold) {
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 200; ++trial) {
        Network net = test::random_connected_symmetric(rng, 2, 6, 0.5);
        auto view = as_symmetric(net);
        auto tree = max_product_spanning_tree(view);
        auto all = oracle::enumerate_spanning_trees(view);
        double best = 0;
        for (const auto& t : all) best = std::max(best, t.product);
        EXPECT_EQ(tree.product, best);

        auto by_tree = guaranteed_min_by_tree(view);
        auto exact = guaranteed_min_all_pairs(net);
        EXPECT_GE(exact.value, by_tree.value - kTol);
        for (const auto& u : net.nodes()) {
            for (const auto& v : net.nodes()) {
                EXPECT_GE(best_chain_multiplicative(net, u, v)->efficiency, by_tree.value - kTol);
                EXPECT_EQ(tree_path(net, tree, u, v).efficiency, tree_path(net, tree, v, u).efficiency);
            }
        }
        const auto& worst = std::get<WorstPair>(exact.witness);
        EXPECT_EQ(best_chain_multiplicative(net, worst.from, worst.to)->efficiency, exact.value);
    }
}

TEST(Properties, MethodsAgreeOnPaths) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<RawArc> arcs;
        const std::size_t n = 2 + trial % 7;
        for (std::size_t i = 1; i < n; ++i)
            arcs.push_back({test::node_name(i - 1), test::node_name(i), test::draw_efficiency(rng), true});
        Network line = build_network(arcs);
        EXPECT_NEAR(guaranteed_min_all_pairs(line).value, guaranteed_min_by_tree(as_symmetric(line)).value, kTol);
    }
}

// On a tree that is not a path no single chain uses every link, so the exact
// level sits strictly above the tree product.
TEST(Properties, StarTreeLevelsDiffer) {
    Network star = undirected({{"s", "x", 0.9}, {"s", "y", 0.9}, {"s", "w", 0.9}});
    EXPECT_NEAR(guaranteed_min_by_tree(as_symmetric(star)).value, 0.729, 1e-12);
    EXPECT_NEAR(guaranteed_min_all_pairs(star).value, 0.81, 1e-12);
}
