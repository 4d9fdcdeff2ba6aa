#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "graphhash/generators.hpp"

namespace graphhash {

enum class BenchMethod {
    brute,
    hashed,
};

std::string to_string(BenchMethod m);

struct BenchRow {
    std::size_t n_vertices = 0;
    std::size_t n_edges = 0;

    friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchConfig {
    std::vector<BenchRow> rows = {{5, 5}, {5, 10}, {10, 10}, {10, 20}, {15, 15}};
    std::size_t trials_per_row = 50;
    Seed seed = 1;
    std::vector<BenchMethod> methods = {BenchMethod::brute, BenchMethod::hashed};
    // Random graph shape; labels are shifted in the copy and ignored when matching.
    double directed_fraction = 1.0;
    std::uint32_t label_max = 9;
};

struct BenchTrial {
    std::size_t row = 0;
    std::size_t trial = 0;
    BenchMethod method = BenchMethod::brute;
    std::uint64_t combinations = 0;
    bool isomorphic = false;
};

struct BenchReport {
    BenchConfig config;
    // Ordered by row, then trial, then method in config order.
    std::vector<BenchTrial> trials;

    std::optional<double> mean_combinations(std::size_t row, BenchMethod method) const;
    bool all_isomorphic() const;
};

// Seed of trial `trial` in row `row`; the graph and its copy both derive from it.
Seed bench_trial_seed(Seed base, std::size_t row, std::size_t trial);

// For every row and trial: draw a labeled random graph, build a copy with a
// random permutation and shifted labels, and decide isomorphism with each
// method using structure only.
BenchReport run_bench(const BenchConfig& config);

// Table with one line per row and one mean column per method, one decimal.
void print_bench_table(std::ostream& out, const BenchReport& report);

// Header: n_vertices,n_edges,method,trial,combinations,isomorphic
void write_bench_csv(std::ostream& out, const BenchReport& report);

}  // namespace graphhash
