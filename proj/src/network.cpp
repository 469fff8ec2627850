#include "lognet/network.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>
#include <utility>

namespace lognet {

bool is_valid_label(std::string_view label) noexcept {
    if (label.empty()) return false;
    return std::none_of(label.begin(), label.end(), [](char c) {
        return c == ',' || std::isspace(static_cast<unsigned char>(c));
    });
}

const char* to_string(NetworkKind kind) noexcept {
    switch (kind) {
        case NetworkKind::OneSided: return "one-sided";
        case NetworkKind::SymmetricTwoSided: return "symmetric-two-sided";
        case NetworkKind::AsymmetricTwoSided: return "asymmetric-two-sided";
        case NetworkKind::Mixed: return "mixed";
    }
    return "unknown";
}

bool Network::contains(std::string_view label) const {
    return index_.find(std::string(label)) != index_.end();
}

std::size_t Network::index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) throw Error(Errc::UnknownNode, "unknown node '" + std::string(label) + "'");
    return it->second;
}

double Network::step_efficiency(std::size_t from, std::size_t to) const noexcept {
    auto steps = steps_from(from);
    auto it = std::lower_bound(steps.begin(), steps.end(), to,
                               [](const Step& s, std::size_t v) { return s.to < v; });
    return it != steps.end() && it->to == to ? it->efficiency : 0.0;
}

Network build_network(std::span<const RawArc> raw_arcs, std::span<const NodeId> extra_nodes) {
    using Pair = std::pair<NodeId, NodeId>;
    std::map<Pair, double> directed;    // ordered pair -> efficiency
    std::map<Pair, double> undirected;  // (min, max) -> efficiency
    std::set<NodeId> labels;

    auto check_label = [](const NodeId& label) {
        if (!is_valid_label(label))
            throw Error(Errc::InvalidLabel, "invalid node label '" + label + "'");
    };

    for (const auto& label : extra_nodes) {
        check_label(label);
        labels.insert(label);
    }

    for (const RawArc& raw : raw_arcs) {
        check_label(raw.tail);
        check_label(raw.head);
        if (raw.tail == raw.head) throw Error(Errc::SelfLoop, "self-loop at '" + raw.tail + "'");
        if (!is_valid_efficiency(raw.efficiency))
            throw Error(Errc::EfficiencyOutOfRange, "efficiency of " + raw.tail + "->" + raw.head +
                                                        " must lie in (0, 1]");
        labels.insert(raw.tail);
        labels.insert(raw.head);

        Pair key = std::minmax(raw.tail, raw.head);
        if (raw.undirected) {
            if (undirected.contains(key))
                throw Error(Errc::DuplicateArc,
                            "duplicate link " + key.first + "--" + key.second);
            if (directed.contains({raw.tail, raw.head}) || directed.contains({raw.head, raw.tail}))
                throw Error(Errc::ConflictingArc, "link " + key.first + "--" + key.second +
                                                      " is declared both directed and undirected");
            undirected.emplace(key, raw.efficiency);
        } else {
            if (directed.contains({raw.tail, raw.head}))
                throw Error(Errc::DuplicateArc, "duplicate arc " + raw.tail + "->" + raw.head);
            if (undirected.contains(key))
                throw Error(Errc::ConflictingArc, "link " + key.first + "--" + key.second +
                                                      " is declared both directed and undirected");
            directed.emplace(Pair{raw.tail, raw.head}, raw.efficiency);
        }
    }

    // Opposite arcs of equal efficiency become one undirected link.
    for (auto it = directed.begin(); it != directed.end();) {
        const auto& [tail, head] = it->first;
        if (tail < head) {
            auto back = directed.find({head, tail});
            if (back != directed.end() && std::abs(back->second - it->second) <= kMergeTolerance) {
                undirected.emplace(it->first, it->second);
                directed.erase(back);
                it = directed.erase(it);
                continue;
            }
        }
        ++it;
    }

    Network net;
    net.labels_.assign(labels.begin(), labels.end());
    for (std::size_t i = 0; i < net.labels_.size(); ++i) net.index_.emplace(net.labels_[i], i);

    for (const auto& [key, eta] : directed)
        net.arcs_.push_back(Arc{key.first, key.second, Efficiency(eta), false});
    for (const auto& [key, eta] : undirected)
        net.arcs_.push_back(Arc{key.first, key.second, Efficiency(eta), true});
    std::sort(net.arcs_.begin(), net.arcs_.end(), [](const Arc& a, const Arc& b) {
        return std::tie(a.tail, a.head) < std::tie(b.tail, b.head);
    });

    // Compressed adjacency of service-carrying steps.
    const std::size_t n = net.labels_.size();
    std::vector<std::vector<Network::Step>> adj(n);
    for (const Arc& arc : net.arcs_) {
        std::size_t t = net.index_.at(arc.tail);
        std::size_t h = net.index_.at(arc.head);
        adj[t].push_back({h, arc.efficiency.value()});
        if (arc.undirected) adj[h].push_back({t, arc.efficiency.value()});
    }
    net.offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::sort(adj[i].begin(), adj[i].end(),
                  [](const Network::Step& a, const Network::Step& b) { return a.to < b.to; });
        net.offsets_[i + 1] = net.offsets_[i] + adj[i].size();
    }
    net.steps_.reserve(net.offsets_[n]);
    for (auto& list : adj) net.steps_.insert(net.steps_.end(), list.begin(), list.end());
    return net;
}

NetworkKind classify(const Network& net) {
    bool any_one_way = false;
    bool any_two_way = false;
    bool any_asymmetric = false;

    std::map<std::pair<NodeId, NodeId>, int> directed_count;
    for (const Arc& arc : net.arcs()) {
        if (arc.undirected) {
            any_two_way = true;
            continue;
        }
        ++directed_count[std::minmax(arc.tail, arc.head)];
    }
    for (const auto& [pair, count] : directed_count) {
        if (count == 2) {
            // Both directions survived merging, so they differ.
            any_two_way = true;
            any_asymmetric = true;
        } else {
            any_one_way = true;
        }
    }

    if (!any_one_way) return any_asymmetric ? NetworkKind::AsymmetricTwoSided : NetworkKind::SymmetricTwoSided;
    if (!any_two_way) return NetworkKind::OneSided;
    return NetworkKind::Mixed;
}

std::vector<Neighbor> out_neighbors(const Network& net, std::string_view node) {
    std::vector<Neighbor> result;
    for (const auto& step : net.steps_from(net.index_of(node)))
        result.push_back({net.label(step.to), step.efficiency});
    return result;
}

UndirectedView as_symmetric(const Network& net) {
    UndirectedView view;
    view.net_ = &net;
    for (const Arc& arc : net.arcs()) {
        if (!arc.undirected)
            throw Error(Errc::NotSymmetric, "arc " + arc.tail + "->" + arc.head +
                                                " carries service one way only");
        view.edges_.push_back({net.index_of(arc.tail), net.index_of(arc.head), arc.efficiency.value()});
    }
    return view;
}

bool is_connected(const UndirectedView& view) {
    const std::size_t n = view.node_count();
    if (n <= 1) return true;
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : view.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v : adj[u]) {
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

}  // namespace lognet
