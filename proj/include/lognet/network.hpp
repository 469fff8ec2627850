#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lognet/weights.hpp"

namespace lognet {

/// Node label: non-empty, no commas, no whitespace.
using NodeId = std::string;

bool is_valid_label(std::string_view label) noexcept;

/// Arc as supplied by a caller, before validation and merging.
struct RawArc {
    NodeId tail;
    NodeId head;
    double efficiency = 1.0;
    bool undirected = false;
};

/// Validated arc. Undirected links are stored once with tail < head.
struct Arc {
    NodeId tail;
    NodeId head;
    Efficiency efficiency;
    bool undirected = false;

    friend bool operator==(const Arc&, const Arc&) = default;
};

enum class NetworkKind { OneSided, SymmetricTwoSided, AsymmetricTwoSided, Mixed };

const char* to_string(NetworkKind kind) noexcept;

/// Opposite directed arcs whose efficiencies differ by at most this are merged
/// into one undirected link.
inline constexpr double kMergeTolerance = 1e-12;

/// Immutable logistic network. Nodes are kept in ascending label order and
/// every internal index refers to that order, so "smaller index" means
/// "smaller label" throughout the algorithms.
class Network {
public:
    struct Step {
        std::size_t to;
        double efficiency;
    };

    Network() = default;

    std::size_t node_count() const noexcept { return labels_.size(); }
    std::size_t arc_count() const noexcept { return arcs_.size(); }

    std::span<const NodeId> nodes() const noexcept { return labels_; }
    /// Canonical order: by (tail, head).
    std::span<const Arc> arcs() const noexcept { return arcs_; }

    const NodeId& label(std::size_t index) const { return labels_.at(index); }
    bool contains(std::string_view label) const;
    /// Throws Errc::UnknownNode.
    std::size_t index_of(std::string_view label) const;

    /// Service-carrying steps out of `from`, ascending by head index.
    std::span<const Step> steps_from(std::size_t from) const noexcept {
        return {steps_.data() + offsets_[from], steps_.data() + offsets_[from + 1]};
    }

    /// Efficiency of the step from -> to, or 0 when there is none.
    double step_efficiency(std::size_t from, std::size_t to) const noexcept;

    friend bool operator==(const Network& a, const Network& b) {
        return a.labels_ == b.labels_ && a.arcs_ == b.arcs_;
    }

private:
    friend Network build_network(std::span<const RawArc>, std::span<const NodeId>);

    std::vector<NodeId> labels_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Arc> arcs_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Step> steps_;
};

/// Validates the arcs and merges opposite directed pairs of equal efficiency.
/// `extra_nodes` declares nodes that may have no incident arcs.
Network build_network(std::span<const RawArc> raw_arcs, std::span<const NodeId> extra_nodes = {});

NetworkKind classify(const Network& net);

struct Neighbor {
    NodeId node;
    double efficiency;

    friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

std::vector<Neighbor> out_neighbors(const Network& net, std::string_view node);

struct UndirectedEdge {
    std::size_t u;  // u < v
    std::size_t v;
    double efficiency;

    friend bool operator==(const UndirectedEdge&, const UndirectedEdge&) = default;
};

/// The links of a network with no directed-only arcs, each listed once.
class UndirectedView {
public:
    const Network& network() const noexcept { return *net_; }
    std::size_t node_count() const noexcept { return net_->node_count(); }
    std::span<const UndirectedEdge> edges() const noexcept { return edges_; }

private:
    friend UndirectedView as_symmetric(const Network&);

    const Network* net_ = nullptr;
    std::vector<UndirectedEdge> edges_;
};

/// Throws Errc::NotSymmetric if any directed arc is present. The view borrows
/// `net`, which must outlive it.
UndirectedView as_symmetric(const Network& net);

bool is_connected(const UndirectedView& view);

}  // namespace lognet
