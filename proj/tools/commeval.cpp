// Command-line surface over the evaluation library: compare two community
// structures, list nodal weights, score modularity, generate planted
// benchmark networks, run perturbation experiments and rank conditions.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commeval/error.hpp"
#include "commeval/experiment.hpp"
#include "commeval/format.hpp"
#include "commeval/generalized.hpp"
#include "commeval/graph.hpp"
#include "commeval/partition.hpp"
#include "commeval/perturb.hpp"
#include "commeval/planted.hpp"
#include "commeval/ranking.hpp"
#include "commeval/stats.hpp"
#include "commeval/traditional.hpp"
#include "commeval/weights.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCompute = 3;

using commeval::Graph;
using commeval::Partition;
using commeval::WeightScheme;
using commeval::WeightVector;

// Wraps parse errors with the file name they came from.
std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw commeval::ParseError(path + ": cannot open file");
    return in;
}

Graph load_graph(const std::string& path) {
    std::ifstream in = open_input(path);
    try {
        return Graph::from_edge_list(in);
    } catch (const commeval::ParseError& e) {
        throw commeval::ParseError(path + ": " + e.what());
    }
}

Partition load_partition(const std::string& path, const Graph& g) {
    std::ifstream in = open_input(path);
    try {
        return Partition::from_stream(in, g);
    } catch (const commeval::ParseError& e) {
        throw commeval::ParseError(path + ": " + e.what());
    }
}

// --weights accepts a scheme name or @path pointing at a custom weight file.
struct WeightSpec {
    WeightScheme scheme = WeightScheme::degree_embeddedness;
    std::string custom_path; // non-empty selects the custom file
    std::string display;     // as passed on the command line
};

WeightSpec parse_weight_spec(const std::string& arg) {
    WeightSpec spec;
    spec.display = arg;
    if (!arg.empty() && arg.front() == '@') {
        spec.custom_path = arg.substr(1);
        if (spec.custom_path.empty())
            throw commeval::ParseError("--weights @ requires a file path");
        return spec;
    }
    const auto scheme = commeval::parse_weight_scheme(arg);
    if (!scheme)
        throw commeval::ParseError("unknown weight scheme '" + arg +
                                   "' (expected uniform, normalized_degree, embeddedness, "
                                   "degree_embeddedness, normalized_strength, "
                                   "strength_embeddedness or @file)");
    spec.scheme = *scheme;
    return spec;
}

WeightVector resolve_weights(const WeightSpec& spec, const Graph& g, const Partition& anchor) {
    if (!spec.custom_path.empty()) {
        std::ifstream in = open_input(spec.custom_path);
        try {
            return commeval::load_weights(in, g);
        } catch (const commeval::ParseError& e) {
            throw commeval::ParseError(spec.custom_path + ": " + e.what());
        }
    }
    return commeval::compute_weights(g, anchor, spec.scheme);
}

const std::vector<std::string>& all_measure_names() {
    static const std::vector<std::string> names = {
        "purity",        "inverse_purity",      "f_measure",
        "rand_index",    "adjusted_rand",       "nmi",
        "f_measure_modified", "rand_index_modified", "adjusted_rand_modified",
        "nmi_modified",  "modularity",
    };
    return names;
}

bool is_modified_measure(const std::string& name) {
    return name.ends_with("_modified");
}

std::vector<std::string> split_csv(const std::string& arg) {
    std::vector<std::string> out;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

struct CompareOptions {
    std::string graph_path;
    std::string reference_path;
    std::string estimated_path;
    std::string weights_arg = "degree_embeddedness";
    std::string anchor = "reference";
    std::string measures_arg;
    std::string format = "json";
};

int run_compare(const CompareOptions& opt) {
    const Graph g = load_graph(opt.graph_path);
    const Partition reference = load_partition(opt.reference_path, g);
    const Partition estimated = load_partition(opt.estimated_path, g);

    std::vector<std::string> requested = commeval::experiment_measures();
    if (!opt.measures_arg.empty()) {
        requested = split_csv(opt.measures_arg);
        for (const std::string& name : requested)
            if (std::find(all_measure_names().begin(), all_measure_names().end(), name) ==
                all_measure_names().end())
                throw commeval::ParseError("unknown measure '" + name + "'");
    }

    const WeightSpec spec = parse_weight_spec(opt.weights_arg);
    const bool needs_weights =
        std::any_of(requested.begin(), requested.end(),
                    [](const std::string& n) { return is_modified_measure(n); });
    const Partition& anchor = opt.anchor == "estimated" ? estimated : reference;
    std::optional<WeightVector> w;
    if (needs_weights)
        w = resolve_weights(spec, g, anchor);

    std::vector<std::pair<std::string, double>> values;
    for (const std::string& name : requested) {
        double v = 0.0;
        if (name == "purity")
            v = commeval::purity(estimated, reference);
        else if (name == "inverse_purity")
            v = commeval::purity(reference, estimated);
        else if (name == "f_measure")
            v = commeval::f_measure(estimated, reference);
        else if (name == "rand_index")
            v = commeval::rand_index(estimated, reference);
        else if (name == "adjusted_rand")
            v = commeval::adjusted_rand(estimated, reference);
        else if (name == "nmi")
            v = commeval::nmi(estimated, reference);
        else if (name == "f_measure_modified")
            v = commeval::modified_f_measure(estimated, reference, *w);
        else if (name == "rand_index_modified")
            v = commeval::modified_rand(estimated, reference, *w);
        else if (name == "adjusted_rand_modified")
            v = commeval::modified_adjusted_rand(estimated, reference, *w);
        else if (name == "nmi_modified")
            v = commeval::modified_nmi(estimated, reference, *w);
        else if (name == "modularity")
            v = commeval::modularity(g, estimated);
        values.push_back({name, v});
    }

    if (opt.format == "json") {
        std::cout << "{\n";
        std::cout << "\"meta\":{\"n\":" << g.node_count() << ",\"m\":" << g.edge_count()
                  << ",\"reference_parts\":" << reference.part_count()
                  << ",\"estimated_parts\":" << estimated.part_count() << ",\"weight_scheme\":\""
                  << spec.display << "\",\"anchor\":\"" << opt.anchor << "\"}";
        for (const auto& [name, v] : values)
            std::cout << ",\n\"" << name << "\":" << commeval::format_double_full(v);
        std::cout << "\n}\n";
    } else {
        std::cout << "# n\t" << g.node_count() << "\n# m\t" << g.edge_count()
                  << "\n# reference_parts\t" << reference.part_count() << "\n# estimated_parts\t"
                  << estimated.part_count() << "\n# weight_scheme\t" << spec.display
                  << "\n# anchor\t" << opt.anchor << "\n";
        for (const auto& [name, v] : values)
            std::cout << name << '\t' << commeval::format_double(v) << '\n';
    }
    return kExitOk;
}

struct WeightsOptions {
    std::string graph_path;
    std::string reference_path;
    std::string weights_arg = "degree_embeddedness";
};

int run_weights(const WeightsOptions& opt) {
    const Graph g = load_graph(opt.graph_path);
    const Partition reference = load_partition(opt.reference_path, g);
    const WeightVector w = resolve_weights(parse_weight_spec(opt.weights_arg), g, reference);

    std::vector<std::size_t> order(g.node_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return g.label(a) < g.label(b); });
    for (std::size_t u : order)
        std::cout << g.label(u) << ' ' << commeval::format_double(w[u]) << '\n';
    return kExitOk;
}

int run_modularity(const std::string& graph_path, const std::string& partition_path) {
    const Graph g = load_graph(graph_path);
    const Partition p = load_partition(partition_path, g);
    std::cout << commeval::format_double(commeval::modularity(g, p)) << '\n';
    return kExitOk;
}

struct GenerateOptions {
    commeval::PlantedConfig cfg;
    std::string graph_out;
    std::string partition_out;
};

int run_generate(const GenerateOptions& opt) {
    const auto [g, ref] = commeval::generate_planted(opt.cfg);

    std::ofstream graph_out(opt.graph_out);
    if (!graph_out)
        throw commeval::ParseError(opt.graph_out + ": cannot open for writing");
    std::vector<bool> covered(g.node_count(), false);
    for (std::size_t u = 0; u < g.node_count(); ++u)
        for (const commeval::Neighbor& nb : g.neighbors(u))
            if (u < nb.to) {
                graph_out << g.label(u) << ' ' << g.label(nb.to) << '\n';
                covered[u] = covered[nb.to] = true;
            }
    for (std::size_t u = 0; u < g.node_count(); ++u)
        if (!covered[u])
            graph_out << g.label(u) << '\n'; // isolated node declaration

    std::ofstream part_out(opt.partition_out);
    if (!part_out)
        throw commeval::ParseError(opt.partition_out + ": cannot open for writing");
    for (std::size_t u = 0; u < g.node_count(); ++u)
        part_out << g.label(u) << ' ' << ref.part_of(u) << '\n';
    return kExitOk;
}

struct BenchOptions {
    commeval::PlantedConfig cfg;
    std::size_t trials = 10;
    std::size_t count = 1;
    std::string scheme = "degree_embeddedness";
    std::string format = "tsv";
    std::string out_path; // empty -> stdout
};

int run_bench(const BenchOptions& opt) {
    const auto scheme = commeval::parse_weight_scheme(opt.scheme);
    if (!scheme)
        throw commeval::ParseError("unknown weight scheme '" + opt.scheme + "'");
    const commeval::ScoreTable table =
        commeval::run_experiment(opt.cfg, opt.trials, opt.count, *scheme);

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path);
        if (!file)
            throw commeval::ParseError(opt.out_path + ": cannot open for writing");
        out = &file;
    }
    if (opt.format == "json")
        table.write_json(*out);
    else
        table.write_tsv(*out);
    return kExitOk;
}

struct RankOptions {
    std::string scores_path;
    double alpha = 0.05;
    std::string mode = "unpaired";
    std::string format = "auto";
};

int run_rank(const RankOptions& opt) {
    std::ifstream in = open_input(opt.scores_path);
    std::string fmt = opt.format;
    if (fmt == "auto") {
        // A score-table JSON document starts with '['.
        const int first = in.peek();
        fmt = first == '[' ? "json" : "tsv";
    }
    commeval::ScoreTable table;
    try {
        table = fmt == "json" ? commeval::ScoreTable::read_json(in)
                              : commeval::ScoreTable::read_tsv(in);
    } catch (const commeval::ParseError& e) {
        throw commeval::ParseError(opt.scores_path + ": " + e.what());
    }
    const auto mode = opt.mode == "paired" ? commeval::TTestMode::paired
                                           : commeval::TTestMode::unpaired;
    const commeval::RankingReport report = commeval::rank(table, opt.alpha, mode);
    report.write_text(std::cout);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Evaluate estimated community structures against references"};
    app.require_subcommand(1);

    CompareOptions compare_opt;
    CLI::App* compare = app.add_subcommand(
        "compare", "Score an estimated partition against a reference partition");
    compare->add_option("--graph", compare_opt.graph_path, "Edge-list file")->required();
    compare->add_option("--reference", compare_opt.reference_path, "Reference partition file")
        ->required();
    compare->add_option("--estimated", compare_opt.estimated_path, "Estimated partition file")
        ->required();
    compare->add_option("--weights", compare_opt.weights_arg,
                        "Weight scheme name or @file with custom weights");
    compare->add_option("--anchor", compare_opt.anchor,
                        "Partition anchoring embeddedness-based weights")
        ->check(CLI::IsMember({"reference", "estimated"}));
    compare->add_option("--measures", compare_opt.measures_arg,
                        "Comma-separated list of measures to report");
    compare->add_option("--format", compare_opt.format, "Output format")
        ->check(CLI::IsMember({"json", "tsv"}));

    WeightsOptions weights_opt;
    CLI::App* weights = app.add_subcommand("weights", "List per-node weights");
    weights->add_option("--graph", weights_opt.graph_path, "Edge-list file")->required();
    weights->add_option("--reference", weights_opt.reference_path, "Reference partition file")
        ->required();
    weights->add_option("--weights", weights_opt.weights_arg,
                        "Weight scheme name or @file with custom weights");

    std::string mod_graph;
    std::string mod_partition;
    CLI::App* mod = app.add_subcommand("modularity", "Modularity of a partition");
    mod->add_option("--graph", mod_graph, "Edge-list file")->required();
    mod->add_option("--partition", mod_partition, "Partition file")->required();

    GenerateOptions gen_opt;
    CLI::App* gen = app.add_subcommand("generate", "Generate a planted-partition network");
    gen->set_config("--config", "", "Flat key=value configuration file");
    gen->add_option("--nodes", gen_opt.cfg.nodes, "Node count")->required();
    gen->add_option("--communities", gen_opt.cfg.communities, "Community count")->required();
    gen->add_option("--p-in", gen_opt.cfg.p_in, "Intra-community edge probability")->required();
    gen->add_option("--p-out", gen_opt.cfg.p_out, "Inter-community edge probability")
        ->required();
    gen->add_option("--seed", gen_opt.cfg.seed, "Generator seed");
    gen->add_option("--graph-out", gen_opt.graph_out, "Output edge-list file")->required();
    gen->add_option("--partition-out", gen_opt.partition_out, "Output partition file")
        ->required();

    BenchOptions bench_opt;
    CLI::App* bench = app.add_subcommand(
        "bench", "Run the high/low-weight perturbation experiment");
    bench->set_config("--config", "", "Flat key=value configuration file");
    bench->add_option("--nodes", bench_opt.cfg.nodes, "Node count")->required();
    bench->add_option("--communities", bench_opt.cfg.communities, "Community count")->required();
    bench->add_option("--p-in", bench_opt.cfg.p_in, "Intra-community edge probability")
        ->required();
    bench->add_option("--p-out", bench_opt.cfg.p_out, "Inter-community edge probability")
        ->required();
    bench->add_option("--seed", bench_opt.cfg.seed, "Base seed");
    bench->add_option("--trials", bench_opt.trials, "Trial count");
    bench->add_option("--count", bench_opt.count, "Nodes moved per perturbation");
    bench->add_option("--scheme", bench_opt.scheme, "Weight scheme");
    bench->add_option("--format", bench_opt.format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}));
    bench->add_option("--out", bench_opt.out_path, "Output file (default stdout)");

    RankOptions rank_opt;
    CLI::App* rank_cmd = app.add_subcommand("rank", "Significance-grouped ranking of a score table");
    rank_cmd->add_option("--scores", rank_opt.scores_path, "Score table (TSV or JSON)")
        ->required();
    rank_cmd->add_option("--alpha", rank_opt.alpha, "Significance level");
    rank_cmd->add_option("--mode", rank_opt.mode, "t-test pairing")
        ->check(CLI::IsMember({"unpaired", "paired"}));
    rank_cmd->add_option("--format", rank_opt.format, "Score table format")
        ->check(CLI::IsMember({"auto", "tsv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*compare)
            return run_compare(compare_opt);
        if (*weights)
            return run_weights(weights_opt);
        if (*mod)
            return run_modularity(mod_graph, mod_partition);
        if (*gen)
            return run_generate(gen_opt);
        if (*bench)
            return run_bench(bench_opt);
        if (*rank_cmd)
            return run_rank(rank_opt);
    } catch (const commeval::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const commeval::MeasureError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCompute;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCompute;
    }
    return kExitOk;
}
