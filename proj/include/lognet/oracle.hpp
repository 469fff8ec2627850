#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lognet/guaranteed.hpp"
#include "lognet/network.hpp"
#include "lognet/routing.hpp"

// Brute-force references for tests. No pruning: every simple chain and every
// spanning tree is produced.
namespace lognet::oracle {

inline constexpr std::size_t kMaxChainNodes = 12;
inline constexpr std::size_t kMaxTreeNodes = 8;

/// Depth-first enumeration of all simple chains, neighbours in label order.
std::vector<Chain> enumerate_chains(const Network& net, std::string_view from, std::string_view to,
                                    std::size_t max_nodes = kMaxChainNodes);

/// Highest efficiency; ties go to the shorter chain, then the
/// lexicographically smaller node sequence.
std::optional<Chain> brute_best_chain(const Network& net, std::string_view from,
                                      std::string_view to, std::size_t max_nodes = kMaxChainNodes);

std::vector<SpanningTree> enumerate_spanning_trees(const UndirectedView& view,
                                                   std::size_t max_nodes = kMaxTreeNodes);

}  // namespace lognet::oracle
