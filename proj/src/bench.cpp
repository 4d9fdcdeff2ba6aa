#include "graphhash/bench.hpp"

#include <cstdio>

#include "graphhash/error.hpp"
#include "graphhash/isomorphism.hpp"

namespace graphhash {

std::string to_string(BenchMethod m) {
    return m == BenchMethod::brute ? "brute" : "hashed";
}

std::optional<double> BenchReport::mean_combinations(std::size_t row, BenchMethod method) const {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& t : trials) {
        if (t.row == row && t.method == method) {
            sum += static_cast<double>(t.combinations);
            ++count;
        }
    }
    if (count == 0) return std::nullopt;
    return sum / static_cast<double>(count);
}

bool BenchReport::all_isomorphic() const {
    for (const auto& t : trials) {
        if (!t.isomorphic) return false;
    }
    return true;
}

Seed bench_trial_seed(Seed base, std::size_t row, std::size_t trial) {
    return splitmix64(splitmix64(splitmix64(base) ^ row) ^ trial);
}

BenchReport run_bench(const BenchConfig& config) {
    if (config.trials_per_row == 0) throw InvalidArgument("bench needs at least one trial per row");
    BenchReport report{config, {}};
    for (std::size_t r = 0; r < config.rows.size(); ++r) {
        RandomGraphSpec spec;
        spec.n_vertices = config.rows[r].n_vertices;
        spec.n_edges = config.rows[r].n_edges;
        spec.vertex_label_max = config.label_max;
        spec.edge_label_max = config.label_max;
        spec.directed_fraction = config.directed_fraction;
        for (std::size_t t = 0; t < config.trials_per_row; ++t) {
            const Seed seed = bench_trial_seed(config.seed, r, t);
            const Graph g = random_graph(spec, seed);
            const Graph h = isomorphic_copy(g, seed, /*shift_labels=*/true).graph;
            for (BenchMethod m : config.methods) {
                const IsoResult res = m == BenchMethod::brute ? brute_force_isomorphic(g, h, false)
                                                              : hash_partitioned_isomorphic(g, h, false);
                report.trials.push_back({r, t, m, res.stats.combinations, res.isomorphic});
            }
        }
    }
    return report;
}

namespace {

std::string fixed1(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

std::string method_heading(BenchMethod m) {
    return m == BenchMethod::brute ? "Brute force" : "Hashed";
}

}  // namespace

void print_bench_table(std::ostream& out, const BenchReport& report) {
    out << "Vertices x edges";
    for (BenchMethod m : report.config.methods) out << '\t' << method_heading(m);
    out << '\n';
    for (std::size_t r = 0; r < report.config.rows.size(); ++r) {
        const auto& row = report.config.rows[r];
        out << row.n_vertices << 'x' << row.n_edges;
        for (BenchMethod m : report.config.methods) {
            out << '\t' << fixed1(report.mean_combinations(r, m).value_or(0.0));
        }
        out << '\n';
    }
}

void write_bench_csv(std::ostream& out, const BenchReport& report) {
    out << "n_vertices,n_edges,method,trial,combinations,isomorphic\n";
    for (const auto& t : report.trials) {
        const auto& row = report.config.rows[t.row];
        out << row.n_vertices << ',' << row.n_edges << ',' << to_string(t.method) << ',' << t.trial << ','
            << t.combinations << ',' << (t.isomorphic ? "true" : "false") << '\n';
    }
}

}  // namespace graphhash
