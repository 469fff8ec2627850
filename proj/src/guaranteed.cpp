#include "lognet/guaranteed.hpp"

#include <algorithm>
#include <thread>

#include "lognet/detail/disjoint_set.hpp"

namespace lognet {

double edge_product(std::span<const UndirectedEdge> edges) {
    double product = 1.0;
    for (const auto& e : edges) product *= e.efficiency;
    return product;
}

SpanningTree max_product_spanning_tree(const UndirectedView& view) {
    if (!is_connected(view)) throw Error(Errc::NotConnected, "network is not connected");

    // Heaviest first; equal weights in ascending endpoint order.
    std::vector<UndirectedEdge> edges(view.edges().begin(), view.edges().end());
    std::sort(edges.begin(), edges.end(), [](const UndirectedEdge& a, const UndirectedEdge& b) {
        if (a.efficiency != b.efficiency) return a.efficiency > b.efficiency;
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });

    const std::size_t n = view.node_count();
    SpanningTree tree;
    detail::DisjointSet components(n);
    for (const auto& e : edges) {
        if (tree.edges.size() + 1 >= n) break;
        if (components.unite(e.u, e.v)) tree.edges.push_back(e);
    }
    std::sort(tree.edges.begin(), tree.edges.end(), [](const UndirectedEdge& a, const UndirectedEdge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    tree.product = edge_product(tree.edges);
    return tree;
}

Chain tree_path(const Network& net, const SpanningTree& tree, std::string_view u,
                std::string_view v) {
    const std::size_t from = net.index_of(u);
    const std::size_t to = net.index_of(v);
    const std::size_t n = net.node_count();

    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
    for (const auto& e : tree.edges) {
        adj[e.u].emplace_back(e.v, e.efficiency);
        adj[e.v].emplace_back(e.u, e.efficiency);
    }

    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(n, kNone);
    parent[from] = from;
    std::vector<std::size_t> stack{from};
    while (!stack.empty() && parent[to] == kNone) {
        std::size_t x = stack.back();
        stack.pop_back();
        for (auto [y, eta] : adj[x]) {
            if (parent[y] == kNone) {
                parent[y] = x;
                stack.push_back(y);
            }
        }
    }
    if (parent[to] == kNone)
        throw Error(Errc::UnknownNode, "'" + std::string(v) + "' is not connected to '" +
                                           std::string(u) + "' in the tree");

    std::vector<std::size_t> path;
    for (std::size_t x = to; x != from; x = parent[x]) path.push_back(x);
    path.push_back(from);
    std::reverse(path.begin(), path.end());

    Chain chain;
    for (std::size_t x : path) chain.nodes.push_back(net.label(x));
    std::vector<UndirectedEdge> used;
    for (std::size_t i = 1; i < path.size(); ++i) {
        auto [lo, hi] = std::minmax(path[i - 1], path[i]);
        for (auto [y, eta] : adj[path[i - 1]]) {
            if (y == path[i]) {
                used.push_back({lo, hi, eta});
                break;
            }
        }
    }
    std::sort(used.begin(), used.end(), [](const UndirectedEdge& a, const UndirectedEdge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    // Same multiplication order in both directions.
    chain.efficiency = edge_product(used);
    return chain;
}

GuaranteedLevel guaranteed_min_by_tree(const UndirectedView& view) {
    SpanningTree tree = max_product_spanning_tree(view);
    GuaranteedLevel level;
    level.value = tree.product;
    level.method = LevelMethod::Tree;
    level.witness = std::move(tree);
    return level;
}

namespace {

// Per-source outcome; ordering of sources makes the argmin independent of
// how the work was split.
struct SourceMin {
    double value = 1.0;
    std::size_t target = 0;
    bool has_pair = false;
    bool unreachable = false;
    std::size_t unreachable_target = 0;
};

SourceMin scan_source(const Network& net, std::size_t source) {
    auto res = max_efficiency_from(net, source);
    SourceMin best;
    for (std::size_t t = 0; t < net.node_count(); ++t) {
        if (t == source) continue;
        if (res.weight[t] == 0.0) {
            best.unreachable = true;
            best.unreachable_target = t;
            return best;
        }
        if (!best.has_pair || res.weight[t] < best.value) {
            best.value = res.weight[t];
            best.target = t;
            best.has_pair = true;
        }
    }
    return best;
}

}  // namespace

GuaranteedLevel guaranteed_min_all_pairs(const Network& net, AllPairsOptions opts) {
    const std::size_t n = net.node_count();
    std::vector<SourceMin> per_source(n);

    unsigned workers = opts.workers == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                         : opts.workers;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
    if (workers <= 1) {
        for (std::size_t s = 0; s < n; ++s) per_source[s] = scan_source(net, s);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t s = w; s < n; s += workers) per_source[s] = scan_source(net, s);
            });
        }
    }

    GuaranteedLevel level;
    level.method = LevelMethod::AllPairs;
    std::size_t best_source = 0;
    bool found = false;
    for (std::size_t s = 0; s < n; ++s) {
        const SourceMin& m = per_source[s];
        if (m.unreachable)
            throw Error(Errc::SomePairUnreachable, "no chain from " + net.label(s) + " to " +
                                                       net.label(m.unreachable_target));
        if (m.has_pair && (!found || m.value < level.value)) {
            level.value = m.value;
            best_source = s;
            found = true;
        }
    }

    WorstPair worst;
    if (found) {
        const std::size_t t = per_source[best_source].target;
        worst.from = net.label(best_source);
        worst.to = net.label(t);
        worst.chain = *best_chain_multiplicative(net, worst.from, worst.to);
    } else if (n == 1) {
        // A lone node: the only pair is the empty chain.
        worst.from = worst.to = net.label(0);
        worst.chain = Chain{{net.label(0)}, 1.0};
    }
    level.witness = std::move(worst);
    return level;
}

}  // namespace lognet
