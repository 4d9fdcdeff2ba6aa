#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "graphhash/graph.hpp"

namespace graphhash {

using Seed = std::uint64_t;

// Independent generator streams derived from one seed. Each purpose draws
// from its own engine, so adding draws for one purpose never shifts another.
enum class Stream : std::uint64_t {
    vertex_labels = 1,
    edge_endpoints = 2,
    edge_labels = 3,
    edge_direction = 4,
    permutation = 5,
    stubs = 6,
};

// std::mt19937_64 seeded through splitmix64, with bounded draws done here
// rather than by std::uniform_int_distribution, whose output is
// implementation-defined.
class Rng {
public:
    Rng(Seed seed, Stream stream);

    std::uint64_t next() { return engine_(); }
    // Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);
    // Uniform in [0, 1) with 53 random bits.
    double unit();

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

struct RandomGraphSpec {
    std::size_t n_vertices = 0;
    std::size_t n_edges = 0;
    // Labels are drawn uniformly from [0, max]; absent max means unlabeled.
    std::optional<std::uint32_t> vertex_label_max;
    std::optional<std::uint32_t> edge_label_max;
    double directed_fraction = 0.0;
};

// Endpoints are independent and uniform, so self-loops and parallel edges
// occur. Throws InvalidArgument for edges without vertices or a
// directed_fraction outside [0, 1].
Graph random_graph(const RandomGraphSpec& spec, Seed seed);

// Uniform permutation by Fisher-Yates on the permutation stream.
Permutation random_permutation(std::size_t n, Seed seed);

struct IsomorphicCopy {
    Graph graph;
    Permutation permutation;
};

// Applies a random permutation; with shift_labels every present label is
// increased by (largest vertex or edge label of g) + 1.
IsomorphicCopy isomorphic_copy(const Graph& g, Seed seed, bool shift_labels);

inline constexpr std::size_t kRegularRetryCap = 10'000;

// Simple k-regular graph on n vertices via the configuration model, redrawing
// the whole stub matching until it has no self-loop or parallel edge.
// Throws InfeasibleDegree or RetryExhausted.
Graph random_regular_graph(std::size_t n, std::size_t k, Rng& rng);

// Two independent draws from one seed.
std::pair<Graph, Graph> random_regular_pair(std::size_t n, std::size_t k, Seed seed);

}  // namespace graphhash
