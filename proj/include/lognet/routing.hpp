#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lognet/network.hpp"

namespace lognet {

/// Node sequence from source to target with its overall efficiency.
struct Chain {
    std::vector<NodeId> nodes;
    double efficiency = 1.0;

    std::size_t length() const noexcept { return nodes.empty() ? 0 : nodes.size() - 1; }

    friend bool operator==(const Chain&, const Chain&) = default;
};

/// Which node to settle when several unsettled nodes share the best label.
enum class TieBreak { SmallestLabel, LargestLabel };

struct RoutingOptions {
    TieBreak tie_break = TieBreak::SmallestLabel;
};

/// One settle event of a search run.
struct SettleEvent {
    std::size_t node;
    /// Node weight (multiplicative) or distance (lossiness) when settled.
    double label;
};

/// Product of the arc efficiencies along `nodes`, left to right from 1.
/// Throws Errc::UnknownNode if a label is missing and returns 0 if a step does
/// not exist.
double chain_product(const Network& net, const std::vector<NodeId>& nodes);

/// True iff `chain` is a simple chain of existing steps whose product matches
/// the reported efficiency within `tol`.
bool is_valid_chain(const Network& net, const Chain& chain, double tol = 1e-10);

/// Multiplicative Dijkstra. Source weight 1, others 0; settle the unsettled
/// node of largest weight, then relax its out-steps on strict improvement.
/// Returns nullopt when no chain from `from` to `to` exists.
std::optional<Chain> best_chain_multiplicative(const Network& net, std::string_view from,
                                               std::string_view to, RoutingOptions opts = {});

struct LossinessChain {
    Chain chain;
    /// Minimal total -log_base over the chain's arcs.
    double total_lossiness = 0.0;
    double base = kDefaultBase;
};

/// Replaces arc efficiencies with their lossiness and runs a min-sum Dijkstra.
/// The returned chain's efficiency is the product of its arcs; the summed
/// lossiness is kept alongside it.
std::optional<LossinessChain> best_chain_via_lossiness(const Network& net, std::string_view from,
                                                       std::string_view to,
                                                       double base = kDefaultBase,
                                                       RoutingOptions opts = {});

/// Full single-source multiplicative search; weight 0 marks unreachable nodes.
struct SingleSourceResult {
    std::size_t source = 0;
    std::vector<double> weight;
    /// Predecessor on the best chain; equals the node itself for the source
    /// and for unreachable nodes.
    std::vector<std::size_t> parent;
    std::vector<SettleEvent> settle_order;

    /// Chain to `target`, or nullopt if unreachable.
    std::optional<Chain> chain_to(const Network& net, std::size_t target) const;
};

/// Runs until every reachable node is settled, or `stop_at` is settled.
SingleSourceResult max_efficiency_from(const Network& net, std::size_t source,
                                       RoutingOptions opts = {},
                                       std::optional<std::size_t> stop_at = std::nullopt);

/// Same search in the additive domain. `weight` holds distances (infinity for
/// unreachable nodes).
SingleSourceResult min_lossiness_from(const Network& net, std::size_t source, double base,
                                      RoutingOptions opts = {},
                                      std::optional<std::size_t> stop_at = std::nullopt);

}  // namespace lognet
