#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "lognet/network.hpp"

namespace lognet {

/// Parses an edge list: `tail,head,efficiency[,dir|undir]` per line.
/// A line holding a single label declares an isolated node. Blank lines and
/// lines starting with '#' are skipped, an optional header line is recognised
/// by a non-numeric third field, and CRLF endings are accepted.
Network parse_network(std::string_view text);
Network read_network_file(const std::string& path);

/// Canonical writer: one line per arc in canonical order, then isolated nodes.
/// Efficiencies use the shortest representation that parses back exactly.
std::string render_network(const Network& net);

std::string render_dot(const Network& net);

/// Fixed 8-decimal rendering (correctly rounded, ties to even).
std::string format_fixed8(double value);

}  // namespace lognet
