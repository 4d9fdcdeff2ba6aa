#include "graphhash/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "graphhash/bench.hpp"
#include "graphhash/color_refinement.hpp"
#include "graphhash/error.hpp"
#include "graphhash/generators.hpp"
#include "graphhash/graph.hpp"
#include "graphhash/isomorphism.hpp"
#include "graphhash/vertex_coder.hpp"

namespace graphhash {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitNonIsomorphic = 1;
constexpr int kExitError = 2;

BenchRow parse_row(const std::string& text) {
    const auto x = text.find('x');
    std::size_t used_a = 0, used_b = 0;
    try {
        if (x == std::string::npos) throw std::invalid_argument(text);
        const auto a = std::stoul(text.substr(0, x), &used_a);
        const auto b = std::stoul(text.substr(x + 1), &used_b);
        if (used_a != x || used_b != text.size() - x - 1 || a == 0) throw std::invalid_argument(text);
        return {a, b};
    } catch (const std::logic_error&) {
        throw InvalidArgument("bench row '" + text + "' is not of the form <vertices>x<edges>");
    }
}

BenchMethod parse_method(const std::string& text) {
    if (text == "brute") return BenchMethod::brute;
    if (text == "hashed" || text == "hash") return BenchMethod::hashed;
    throw InvalidArgument("unknown bench method '" + text + "' (expected brute or hashed)");
}

struct HashArgs {
    std::string file;
    bool labels = false;
    bool per_vertex = false;
    std::uint64_t budget = CoderBudget::kDefaultMaxNodes;
};

struct CompareArgs {
    std::string a;
    std::string b;
    bool labels = false;
    std::string method = "hash";
    bool stats = false;
};

struct GenRandomArgs {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::optional<std::uint32_t> vertex_label_max;
    std::optional<std::uint32_t> edge_label_max;
    double directed_fraction = 0.0;
    Seed seed = 0;
    std::string output;
};

struct GenCopyArgs {
    std::string input;
    bool shift_labels = false;
    Seed seed = 0;
    std::string output;
};

struct GenRegularArgs {
    std::size_t n = 0;
    std::size_t k = 0;
    Seed seed = 0;
    std::vector<std::string> outputs;
};

struct BenchArgs {
    std::vector<std::string> rows;
    std::size_t trials = 50;
    Seed seed = 1;
    std::vector<std::string> methods;
    std::string csv;
};

int do_hash(const HashArgs& a, std::ostream& out) {
    const Graph g = read_graph_file(a.file);
    const CoderBudget budget{a.budget};
    const auto digests = vertex_hashes(g, a.labels, budget);
    out << combine_vertex_hashes(digests).hex() << '\n';
    if (a.per_vertex) {
        for (std::size_t v = 0; v < digests.size(); ++v) out << v << '\t' << digests[v].hex() << '\n';
    }
    return kExitOk;
}

int do_compare(const CompareArgs& a, std::ostream& out) {
    const Graph g = read_graph_file(a.a);
    const Graph h = read_graph_file(a.b);
    IsoResult res;
    if (a.method == "hash") {
        res = hash_partitioned_isomorphic(g, h, a.labels);
    } else if (a.method == "brute") {
        res = brute_force_isomorphic(g, h, a.labels);
    } else {
        if (g.vertex_count() > kOracleMaxVertices || h.vertex_count() > kOracleMaxVertices) {
            throw TooLarge("the oracle method refuses graphs above " + std::to_string(kOracleMaxVertices) +
                           " vertices; use --method hash or brute");
        }
        res = oracle_isomorphic(g, h, a.labels);
    }
    out << (res.isomorphic ? "isomorphic" : "non-isomorphic") << '\n';
    if (a.stats) out << "combinations=" << res.stats.combinations << '\n';
    return res.isomorphic ? kExitOk : kExitNonIsomorphic;
}

int do_refine(const std::string& file, std::ostream& out) {
    const Coloring c = refine(read_graph_file(file));
    for (std::size_t v = 0; v < c.color_of.size(); ++v) out << v << '\t' << c.color_of[v] << '\n';
    out << "classes=" << c.class_count() << '\n';
    return kExitOk;
}

int do_gen_random(const GenRandomArgs& a) {
    RandomGraphSpec spec{a.vertices, a.edges, a.vertex_label_max, a.edge_label_max, a.directed_fraction};
    write_graph_file(a.output, random_graph(spec, a.seed));
    return kExitOk;
}

int do_gen_copy(const GenCopyArgs& a, std::ostream& out) {
    const auto copy = isomorphic_copy(read_graph_file(a.input), a.seed, a.shift_labels);
    write_graph_file(a.output, copy.graph);
    out << "permutation=";
    for (std::size_t i = 0; i < copy.permutation.size(); ++i) out << (i ? "," : "") << copy.permutation[i];
    out << '\n';
    return kExitOk;
}

int do_gen_regular(const GenRegularArgs& a) {
    if (a.outputs.size() != 2) throw InvalidArgument("regular-pair needs exactly two output files");
    auto [first, second] = random_regular_pair(a.n, a.k, a.seed);
    write_graph_file(a.outputs[0], first);
    write_graph_file(a.outputs[1], second);
    return kExitOk;
}

int do_bench(const BenchArgs& a, std::ostream& out) {
    BenchConfig config;
    if (!a.rows.empty()) {
        config.rows.clear();
        for (const auto& r : a.rows) config.rows.push_back(parse_row(r));
    }
    if (!a.methods.empty()) {
        config.methods.clear();
        for (const auto& m : a.methods) {
            const BenchMethod method = parse_method(m);
            if (std::find(config.methods.begin(), config.methods.end(), method) == config.methods.end()) {
                config.methods.push_back(method);
            }
        }
    }
    config.trials_per_row = a.trials;
    config.seed = a.seed;

    const BenchReport report = run_bench(config);
    print_bench_table(out, report);
    if (!a.csv.empty()) {
        std::ofstream csv(a.csv);
        if (!csv) throw InvalidArgument("cannot write CSV file '" + a.csv + "'");
        write_bench_csv(csv, report);
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph hashing by neighborhood unrolling, with isomorphism deciders", "graphhash"};
    app.require_subcommand(1);

    HashArgs hash_args;
    auto* hash = app.add_subcommand("hash", "Print the graph digest");
    hash->add_option("file", hash_args.file, "Graph file")->required();
    hash->add_flag("--labels", hash_args.labels, "Include vertex and edge labels in the hash");
    hash->add_flag("--per-vertex", hash_args.per_vertex, "Also print one vertexId<TAB>digest line per vertex");
    hash->add_option("--budget", hash_args.budget, "Coder nodes allowed per vertex")
        ->check(CLI::PositiveNumber);

    CompareArgs cmp_args;
    auto* compare = app.add_subcommand("compare", "Decide whether two graphs are isomorphic");
    compare->add_option("fileA", cmp_args.a, "First graph file")->required();
    compare->add_option("fileB", cmp_args.b, "Second graph file")->required();
    compare->add_flag("--labels", cmp_args.labels, "Match vertex and edge labels exactly");
    compare->add_option("--method", cmp_args.method, "hash, brute or oracle")
        ->check(CLI::IsMember({"hash", "brute", "oracle"}));
    compare->add_flag("--stats", cmp_args.stats, "Print the number of search combinations");

    std::string refine_file;
    auto* refine_cmd = app.add_subcommand("refine", "Print the stable color refinement coloring");
    refine_cmd->add_option("file", refine_file, "Graph file")->required();

    auto* gen = app.add_subcommand("gen", "Generate graph files");
    gen->require_subcommand(1);

    GenRandomArgs rnd;
    auto* gen_random = gen->add_subcommand("random", "Random multigraph with uniform endpoints");
    gen_random->add_option("--vertices", rnd.vertices, "Vertex count")->required();
    gen_random->add_option("--edges", rnd.edges, "Edge count")->required();
    gen_random->add_option("--vertex-label-max", rnd.vertex_label_max, "Largest vertex label (default: unlabeled)");
    gen_random->add_option("--edge-label-max", rnd.edge_label_max, "Largest edge label (default: unlabeled)");
    gen_random->add_option("--directed-fraction", rnd.directed_fraction, "Probability an edge is directed")
        ->check(CLI::Range(0.0, 1.0));
    gen_random->add_option("--seed", rnd.seed, "Seed")->required();
    gen_random->add_option("-o,--output", rnd.output, "Output file")->required();

    GenCopyArgs cpy;
    auto* gen_copy = gen->add_subcommand("copy", "Randomly permuted copy of a graph");
    gen_copy->add_option("input", cpy.input, "Graph file")->required();
    gen_copy->add_flag("--shift-labels", cpy.shift_labels, "Add (largest label + 1) to every label");
    gen_copy->add_option("--seed", cpy.seed, "Seed")->required();
    gen_copy->add_option("-o,--output", cpy.output, "Output file")->required();

    GenRegularArgs reg;
    auto* gen_regular = gen->add_subcommand("regular-pair", "Two random simple k-regular graphs");
    gen_regular->add_option("--n", reg.n, "Vertex count")->required();
    gen_regular->add_option("--k", reg.k, "Degree")->required();
    gen_regular->add_option("--seed", reg.seed, "Seed")->required();
    gen_regular->add_option("-o,--output", reg.outputs, "Two output files")->required()->expected(2);

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Brute force versus hash-partitioned search combinations");
    bench->add_option("--rows", bench_args.rows, "Rows as <vertices>x<edges>, comma separated")->delimiter(',');
    bench->add_option("--trials", bench_args.trials, "Trials per row")->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_args.seed, "Seed");
    bench->add_option("--methods", bench_args.methods, "brute and/or hashed, comma separated")->delimiter(',');
    bench->add_option("--csv", bench_args.csv, "Write per-trial results to this CSV file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::string message = e.what();
        std::replace(message.begin(), message.end(), '\n', ' ');
        err << "error: " << message << '\n';
        return kExitError;
    }

    try {
        if (*hash) return do_hash(hash_args, out);
        if (*compare) return do_compare(cmp_args, out);
        if (*refine_cmd) return do_refine(refine_file, out);
        if (*gen_random) return do_gen_random(rnd);
        if (*gen_copy) return do_gen_copy(cpy, out);
        if (*gen_regular) return do_gen_regular(reg);
        if (*bench) return do_bench(bench_args, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace graphhash
