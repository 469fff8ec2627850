#include "lognet/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace lognet {

namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

std::optional<double> parse_number(std::string_view text) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

[[noreturn]] void fail(Errc code, std::size_t line, const std::string& what) {
    throw Error(code, "line " + std::to_string(line) + ": " + what, line);
}

std::string shortest(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

}  // namespace

std::string format_fixed8(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8f", value);
    return buf;
}

Network parse_network(std::string_view text) {
    std::vector<RawArc> arcs;
    std::vector<NodeId> isolated;

    // Mirrors build_network's per-arc rules so failures carry a line number.
    using Pair = std::pair<std::string, std::string>;
    std::set<Pair> directed;
    std::set<Pair> undirected;

    std::size_t line_no = 0;
    bool seen_content = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        auto fields = split_fields(line);
        const bool first = !seen_content;
        seen_content = true;

        if (fields.size() == 1) {
            if (!is_valid_label(fields[0]))
                fail(Errc::InvalidLabel, line_no, "invalid node label '" + std::string(fields[0]) + "'");
            isolated.emplace_back(fields[0]);
            continue;
        }
        if (fields.size() != 3 && fields.size() != 4)
            fail(Errc::ParseError, line_no,
                 "expected tail,head,efficiency[,mode], got " + std::to_string(fields.size()) + " fields");

        auto eta = parse_number(fields[2]);
        if (!eta) {
            if (first) continue;  // header
            fail(Errc::ParseError, line_no, "efficiency '" + std::string(fields[2]) + "' is not a number");
        }

        RawArc raw{std::string(fields[0]), std::string(fields[1]), *eta, false};
        if (fields.size() == 4) {
            if (fields[3] == "undir")
                raw.undirected = true;
            else if (fields[3] != "dir")
                fail(Errc::ParseError, line_no, "mode must be 'dir' or 'undir', got '" + std::string(fields[3]) + "'");
        }

        for (const auto& label : {raw.tail, raw.head})
            if (!is_valid_label(label)) fail(Errc::InvalidLabel, line_no, "invalid node label '" + label + "'");
        if (raw.tail == raw.head) fail(Errc::SelfLoop, line_no, "self-loop at '" + raw.tail + "'");
        if (!is_valid_efficiency(raw.efficiency))
            fail(Errc::EfficiencyOutOfRange, line_no,
                 "efficiency " + std::string(fields[2]) + " is outside (0, 1]");

        Pair key = std::minmax(raw.tail, raw.head);
        Pair fwd{raw.tail, raw.head};
        Pair rev{raw.head, raw.tail};
        if (raw.undirected) {
            if (undirected.contains(key)) fail(Errc::DuplicateArc, line_no, "duplicate link " + key.first + "--" + key.second);
            if (directed.contains(fwd) || directed.contains(rev))
                fail(Errc::ConflictingArc, line_no, "link " + key.first + "--" + key.second + " is both directed and undirected");
            undirected.insert(key);
        } else {
            if (directed.contains(fwd)) fail(Errc::DuplicateArc, line_no, "duplicate arc " + raw.tail + "->" + raw.head);
            if (undirected.contains(key))
                fail(Errc::ConflictingArc, line_no, "link " + key.first + "--" + key.second + " is both directed and undirected");
            directed.insert(fwd);
        }
        arcs.push_back(std::move(raw));
    }
    return build_network(arcs, isolated);
}

Network read_network_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_network(buf.str());
}

std::string render_network(const Network& net) {
    std::string out;
    std::vector<bool> touched(net.node_count(), false);
    for (const Arc& arc : net.arcs()) {
        touched[net.index_of(arc.tail)] = true;
        touched[net.index_of(arc.head)] = true;
        out += arc.tail + "," + arc.head + "," + shortest(arc.efficiency.value()) +
               (arc.undirected ? ",undir\n" : ",dir\n");
    }
    for (std::size_t i = 0; i < net.node_count(); ++i)
        if (!touched[i]) out += net.label(i) + "\n";
    return out;
}

std::string render_dot(const Network& net) {
    std::string out = "digraph network {\n";
    for (const auto& label : net.nodes()) out += "  \"" + label + "\";\n";
    for (const Arc& arc : net.arcs()) {
        out += "  \"" + arc.tail + "\" -> \"" + arc.head + "\" [label=\"" +
               shortest(arc.efficiency.value()) + "\"" + (arc.undirected ? ", dir=none" : "") + "];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace lognet
