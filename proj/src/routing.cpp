#include "lognet/routing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <unordered_set>

namespace lognet {

namespace {

struct Entry {
    double label;
    std::size_t node;
};

// Orders the heap so that top() is the node to settle next: best label
// first, ties resolved by node index according to `tie`.
template <bool Maximize>
struct SettleOrder {
    TieBreak tie;

    bool operator()(const Entry& a, const Entry& b) const {
        if (a.label != b.label) return Maximize ? a.label < b.label : a.label > b.label;
        return tie == TieBreak::SmallestLabel ? a.node > b.node : a.node < b.node;
    }
};

// Dijkstra skeleton shared by both domains. Labels only ever improve, so an
// entry is stale iff its node is settled or its label no longer matches.
template <bool Maximize, class Extend>
SingleSourceResult run_search(const Network& net, std::size_t source, double source_label,
                              double unreached, TieBreak tie, std::optional<std::size_t> stop_at,
                              Extend extend) {
    const std::size_t n = net.node_count();
    SingleSourceResult res;
    res.source = source;
    res.weight.assign(n, unreached);
    res.parent.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.parent[i] = i;
    std::vector<char> settled(n, 0);

    std::priority_queue<Entry, std::vector<Entry>, SettleOrder<Maximize>> heap(SettleOrder<Maximize>{tie});
    res.weight[source] = source_label;
    heap.push({source_label, source});

    while (!heap.empty()) {
        Entry top = heap.top();
        heap.pop();
        if (settled[top.node] || top.label != res.weight[top.node]) continue;
        settled[top.node] = 1;
        res.settle_order.push_back({top.node, top.label});
        if (stop_at && *stop_at == top.node) break;

        for (const auto& step : net.steps_from(top.node)) {
            if (settled[step.to]) continue;
            double candidate = extend(top.label, step.efficiency);
            bool better = Maximize ? candidate > res.weight[step.to] : candidate < res.weight[step.to];
            if (better) {
                res.weight[step.to] = candidate;
                res.parent[step.to] = top.node;
                heap.push({candidate, step.to});
            }
        }
    }
    return res;
}

std::vector<NodeId> trace_back(const Network& net, const SingleSourceResult& res, std::size_t target) {
    std::vector<NodeId> nodes;
    for (std::size_t v = target;; v = res.parent[v]) {
        nodes.push_back(net.label(v));
        if (v == res.source) break;
    }
    std::reverse(nodes.begin(), nodes.end());
    return nodes;
}

bool reached(const SingleSourceResult& res, std::size_t target) {
    return target == res.source || res.parent[target] != target;
}

}  // namespace

double chain_product(const Network& net, const std::vector<NodeId>& nodes) {
    double product = 1.0;
    for (std::size_t i = 1; i < nodes.size(); ++i)
        product *= net.step_efficiency(net.index_of(nodes[i - 1]), net.index_of(nodes[i]));
    return product;
}

bool is_valid_chain(const Network& net, const Chain& chain, double tol) {
    if (chain.nodes.empty()) return false;
    std::unordered_set<std::string> seen;
    for (const auto& label : chain.nodes) {
        if (!net.contains(label) || !seen.insert(label).second) return false;
    }
    double product = chain_product(net, chain.nodes);
    return product > 0.0 && std::abs(product - chain.efficiency) <= tol;
}

std::optional<Chain> SingleSourceResult::chain_to(const Network& net, std::size_t target) const {
    if (!reached(*this, target)) return std::nullopt;
    Chain chain;
    chain.nodes = trace_back(net, *this, target);
    chain.efficiency = chain_product(net, chain.nodes);
    return chain;
}

SingleSourceResult max_efficiency_from(const Network& net, std::size_t source, RoutingOptions opts,
                                       std::optional<std::size_t> stop_at) {
    return run_search<true>(net, source, 1.0, 0.0, opts.tie_break, stop_at,
                            [](double weight, double eta) { return weight * eta; });
}

SingleSourceResult min_lossiness_from(const Network& net, std::size_t source, double base,
                                      RoutingOptions opts, std::optional<std::size_t> stop_at) {
    if (!(base > 1.0) || !std::isfinite(base))
        throw Error(Errc::BadBase, "logarithm base must be finite and > 1");
    return run_search<false>(net, source, 0.0, std::numeric_limits<double>::infinity(),
                             opts.tie_break, stop_at, [base](double dist, double eta) {
                                 return dist + to_lossiness(Efficiency(eta), base).value;
                             });
}

std::optional<Chain> best_chain_multiplicative(const Network& net, std::string_view from,
                                               std::string_view to, RoutingOptions opts) {
    std::size_t a = net.index_of(from);
    std::size_t z = net.index_of(to);
    auto res = max_efficiency_from(net, a, opts, z);
    if (!reached(res, z)) return std::nullopt;
    Chain chain;
    chain.nodes = trace_back(net, res, z);
    // The settled weight is the left-to-right product along the history.
    chain.efficiency = res.weight[z];
    return chain;
}

std::optional<LossinessChain> best_chain_via_lossiness(const Network& net, std::string_view from,
                                                       std::string_view to, double base,
                                                       RoutingOptions opts) {
    std::size_t a = net.index_of(from);
    std::size_t z = net.index_of(to);
    auto res = min_lossiness_from(net, a, base, opts, z);
    auto chain = res.chain_to(net, z);
    if (!chain) return std::nullopt;
    return LossinessChain{std::move(*chain), res.weight[z], base};
}

}  // namespace lognet
