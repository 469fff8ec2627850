#pragma once

#include <vector>

#include "lognet/network.hpp"

namespace lognet::test {

/// Six-node energy network with a weight tie between d and e.
inline Network fig1_replica() {
    std::vector<RawArc> arcs{
        {"a", "b", 0.99, false}, {"b", "c", 0.98, false}, {"c", "d", 0.97, false},
        {"c", "e", 0.97, false}, {"d", "z", 0.99, false}, {"e", "z", 0.97, false},
        {"d", "e", 0.99, true},
    };
    return build_network(arcs);
}

inline Network triangle() {
    std::vector<RawArc> arcs{{"a", "b", 0.9, true}, {"b", "c", 0.8, true}, {"a", "c", 0.7, true}};
    return build_network(arcs);
}

}  // namespace lognet::test
