#include "lognet/oracle.hpp"

#include <algorithm>
#include <functional>

#include "lognet/detail/disjoint_set.hpp"

namespace lognet::oracle {

namespace {

void require_size(std::size_t n, std::size_t limit) {
    if (n > limit)
        throw Error(Errc::SizeLimitExceeded, "brute force limited to " + std::to_string(limit) +
                                                 " nodes, network has " + std::to_string(n));
}

}  // namespace

std::vector<Chain> enumerate_chains(const Network& net, std::string_view from, std::string_view to,
                                    std::size_t max_nodes) {
    const std::size_t a = net.index_of(from);
    const std::size_t z = net.index_of(to);
    require_size(net.node_count(), max_nodes);

    std::vector<Chain> chains;
    std::vector<std::size_t> path{a};
    std::vector<bool> on_path(net.node_count(), false);
    on_path[a] = true;

    std::function<void(std::size_t)> dfs = [&](std::size_t u) {
        if (u == z) {
            Chain chain;
            for (std::size_t i = 0; i < path.size(); ++i) {
                chain.nodes.push_back(net.label(path[i]));
                if (i > 0) chain.efficiency *= net.step_efficiency(path[i - 1], path[i]);
            }
            chains.push_back(std::move(chain));
            return;
        }
        for (const auto& step : net.steps_from(u)) {
            if (on_path[step.to]) continue;
            on_path[step.to] = true;
            path.push_back(step.to);
            dfs(step.to);
            path.pop_back();
            on_path[step.to] = false;
        }
    };
    dfs(a);
    return chains;
}

std::optional<Chain> brute_best_chain(const Network& net, std::string_view from,
                                      std::string_view to, std::size_t max_nodes) {
    auto chains = enumerate_chains(net, from, to, max_nodes);
    if (chains.empty()) return std::nullopt;
    auto better = [](const Chain& x, const Chain& y) {
        if (x.efficiency != y.efficiency) return x.efficiency > y.efficiency;
        if (x.length() != y.length()) return x.length() < y.length();
        return x.nodes < y.nodes;
    };
    return *std::min_element(chains.begin(), chains.end(), better);
}

std::vector<SpanningTree> enumerate_spanning_trees(const UndirectedView& view, std::size_t max_nodes) {
    const std::size_t n = view.node_count();
    require_size(n, max_nodes);
    if (!is_connected(view)) throw Error(Errc::NotConnected, "network is not connected");

    const auto edges = view.edges();
    const std::size_t need = n == 0 ? 0 : n - 1;
    std::vector<SpanningTree> trees;
    std::vector<std::size_t> chosen;

    // Every (n-1)-subset of edges, kept iff it is acyclic.
    std::function<void(std::size_t)> pick = [&](std::size_t next) {
        if (chosen.size() == need) {
            detail::DisjointSet dsu(n);
            SpanningTree tree;
            for (std::size_t i : chosen) {
                if (!dsu.unite(edges[i].u, edges[i].v)) return;
                tree.edges.push_back(edges[i]);
            }
            tree.product = edge_product(tree.edges);
            trees.push_back(std::move(tree));
            return;
        }
        if (edges.size() - next < need - chosen.size()) return;
        for (std::size_t i = next; i < edges.size(); ++i) {
            chosen.push_back(i);
            pick(i + 1);
            chosen.pop_back();
        }
    };
    pick(0);
    return trees;
}

}  // namespace lognet::oracle
