#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lognet/network.hpp"
#include "lognet/routing.hpp"

namespace lognet {

struct SpanningTree {
    /// Ascending by (u, v).
    std::vector<UndirectedEdge> edges;
    /// Product of all edge efficiencies (1 for the empty tree).
    double product = 1.0;
};

/// Product taken in the order given. Trees keep their edges sorted so that
/// equal edge sets always give bit-identical products.
double edge_product(std::span<const UndirectedEdge> edges);

SpanningTree max_product_spanning_tree(const UndirectedView& view);

/// The unique u..v path in `tree`, labelled with the names of `net`.
Chain tree_path(const Network& net, const SpanningTree& tree, std::string_view u,
                std::string_view v);

struct WorstPair {
    NodeId from;
    NodeId to;
    Chain chain;
};

enum class LevelMethod { Tree, AllPairs };

struct GuaranteedLevel {
    double value = 1.0;
    LevelMethod method = LevelMethod::Tree;
    std::variant<SpanningTree, WorstPair> witness;
};

/// Lower bound from the max-product spanning tree: value = tree product.
GuaranteedLevel guaranteed_min_by_tree(const UndirectedView& view);

struct AllPairsOptions {
    /// Worker threads for the per-source searches; 0 picks the hardware count.
    unsigned workers = 1;
};

/// Exact level: minimum over ordered pairs of the best chain efficiency.
/// Ties on the minimum go to the pair that is first in (from, to) label order.
/// Throws Errc::SomePairUnreachable naming the first unreachable pair.
GuaranteedLevel guaranteed_min_all_pairs(const Network& net, AllPairsOptions opts = {});

}  // namespace lognet
