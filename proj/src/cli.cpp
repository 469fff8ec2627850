#include "lognet/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <vector>

#include "lognet/guaranteed.hpp"
#include "lognet/io.hpp"
#include "lognet/network.hpp"
#include "lognet/routing.hpp"
#include "lognet/weights.hpp"

namespace lognet {

namespace {

using Json = nlohmann::ordered_json;

// JSON carries the same 8-decimal values as the plain output.
double rounded8(double value) { return std::stod(format_fixed8(value)); }

std::string join(const std::vector<NodeId>& nodes) {
    std::string out;
    for (std::size_t i = 0; i < nodes.size(); ++i) out += (i ? " " : "") + nodes[i];
    return out;
}

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::SomePairUnreachable: return kExitNoAnswer;
        case Errc::NotSymmetric:
        case Errc::NotConnected: return kExitPrecondition;
        default: return kExitBadInput;
    }
}

struct BestChainArgs {
    std::string net;
    std::string from;
    std::string to;
    std::string method = "mult";
    double base = kDefaultBase;
    bool json = false;
};

int best_chain(const BestChainArgs& args, std::ostream& out) {
    Network net = read_network_file(args.net);
    std::optional<Chain> chain;
    double total = 0.0;
    if (args.method == "log") {
        if (auto found = best_chain_via_lossiness(net, args.from, args.to, args.base)) {
            chain = std::move(found->chain);
            total = found->total_lossiness;
        }
    } else {
        chain = best_chain_multiplicative(net, args.from, args.to);
        if (chain) total = to_lossiness(Efficiency(chain->efficiency), args.base).value;
    }

    if (!chain) {
        std::string msg = "no chain from " + args.from + " to " + args.to;
        if (args.json)
            out << Json{{"error", msg}}.dump() << '\n';
        else
            out << msg << '\n';
        return kExitNoAnswer;
    }

    if (args.json) {
        Json j;
        j["chain"] = chain->nodes;
        j["efficiency"] = rounded8(chain->efficiency);
        j["lossiness_total"] = rounded8(total);
        j["base"] = args.base;
        out << j.dump() << '\n';
    } else {
        out << join(chain->nodes) << "  " << format_fixed8(chain->efficiency) << '\n';
    }
    return kExitOk;
}

struct GuaranteedArgs {
    std::string net;
    std::string method;
    unsigned workers = 0;
    bool json = false;
};

int guaranteed_min(const GuaranteedArgs& args, std::ostream& out) {
    Network net = read_network_file(args.net);
    if (args.method == "tree") {
        UndirectedView view = as_symmetric(net);
        GuaranteedLevel level = guaranteed_min_by_tree(view);
        const auto& tree = std::get<SpanningTree>(level.witness);
        if (args.json) {
            Json edges = Json::array();
            for (const auto& e : tree.edges)
                edges.push_back({{"u", net.label(e.u)}, {"v", net.label(e.v)}, {"efficiency", rounded8(e.efficiency)}});
            out << Json{{"method", "tree"}, {"value", rounded8(level.value)}, {"tree", edges}}.dump() << '\n';
        } else {
            out << format_fixed8(level.value) << '\n';
            for (const auto& e : tree.edges)
                out << "edge " << net.label(e.u) << ' ' << net.label(e.v) << ' ' << format_fixed8(e.efficiency) << '\n';
        }
        return kExitOk;
    }

    GuaranteedLevel level = guaranteed_min_all_pairs(net, {args.workers});
    const auto& worst = std::get<WorstPair>(level.witness);
    if (args.json) {
        Json j;
        j["method"] = "all-pairs";
        j["value"] = rounded8(level.value);
        j["pair"] = {worst.from, worst.to};
        j["chain"] = worst.chain.nodes;
        out << j.dump() << '\n';
    } else {
        out << format_fixed8(level.value) << '\n';
        out << "pair " << worst.from << ' ' << worst.to << '\n';
        out << "chain " << join(worst.chain.nodes) << "  " << format_fixed8(worst.chain.efficiency) << '\n';
    }
    return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximum-efficiency chains and guaranteed efficiency levels in logistic networks"};
    app.name(argv.empty() ? "lognet" : argv[0]);
    app.require_subcommand(1);

    BestChainArgs bc;
    auto* best = app.add_subcommand("best-chain", "most efficient chain between two nodes");
    best->add_option("--net", bc.net, "edge-list CSV")->required();
    best->add_option("--from", bc.from, "source node")->required();
    best->add_option("--to", bc.to, "target node")->required();
    best->add_option("--method", bc.method, "mult or log")->check(CLI::IsMember({"mult", "log"}));
    best->add_option("--base", bc.base, "logarithm base for lossiness");
    best->add_flag("--json", bc.json);

    GuaranteedArgs ga;
    auto* gmin = app.add_subcommand("guaranteed-min", "guaranteed minimum efficiency over all pairs");
    gmin->add_option("--net", ga.net, "edge-list CSV")->required();
    gmin->add_option("--method", ga.method, "tree or all-pairs")
        ->required()
        ->check(CLI::IsMember({"tree", "all-pairs"}));
    gmin->add_option("--workers", ga.workers, "threads for all-pairs (0 = all cores)");
    gmin->add_flag("--json", ga.json);

    std::string classify_net;
    auto* cls = app.add_subcommand("classify", "one-sided, two-sided or mixed");
    cls->add_option("--net", classify_net, "edge-list CSV")->required();

    double eta = 1.0;
    double base = kDefaultBase;
    auto* loss = app.add_subcommand("lossiness", "t = -log_base(eta)");
    loss->add_option("--eta", eta, "efficiency in (0, 1]")->required();
    loss->add_option("--base", base, "logarithm base > 1");

    std::string dot_net;
    auto* dot = app.add_subcommand("dot", "Graphviz dump of a parsed network");
    dot->add_option("--net", dot_net, "edge-list CSV")->required();

    auto* version = app.add_subcommand("version", "print the version");

    std::vector<const char*> cargv;
    for (const auto& a : argv) cargv.push_back(a.c_str());
    if (cargv.empty()) cargv.push_back("lognet");
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*best) return best_chain(bc, out);
        if (*gmin) return guaranteed_min(ga, out);
        if (*cls) {
            out << to_string(classify(read_network_file(classify_net))) << '\n';
            return kExitOk;
        }
        if (*loss) {
            out << format_fixed8(to_lossiness(Efficiency(eta), base).value) << '\n';
            return kExitOk;
        }
        if (*dot) {
            out << render_dot(read_network_file(dot_net));
            return kExitOk;
        }
        if (*version) {
            out << "lognet " << kVersion << '\n';
            return kExitOk;
        }
    } catch (const Error& e) {
        if (e.code() == Errc::SomePairUnreachable)
            out << e.what() << '\n';
        else
            err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return kExitBadInput;
}

}  // namespace lognet
