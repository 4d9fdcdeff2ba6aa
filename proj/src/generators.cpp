#include "graphhash/generators.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "graphhash/error.hpp"

namespace graphhash {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(Seed seed, Stream stream)
    : engine_(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(stream))) {}

std::uint64_t Rng::below(std::uint64_t bound) {
    // Reject the top partial bucket so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

double Rng::unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

namespace {

Label draw_label(Rng& rng, const std::optional<std::uint32_t>& max) {
    if (!max) return std::nullopt;
    return static_cast<std::uint32_t>(rng.below(std::uint64_t{*max} + 1));
}

}  // namespace

Graph random_graph(const RandomGraphSpec& spec, Seed seed) {
    if (spec.n_vertices == 0 && spec.n_edges > 0) {
        throw InvalidArgument("cannot place edges in a graph without vertices");
    }
    if (!(spec.directed_fraction >= 0.0 && spec.directed_fraction <= 1.0)) {
        throw InvalidArgument("directed fraction must lie in [0, 1]");
    }
    Rng vertex_labels(seed, Stream::vertex_labels);
    Rng endpoints(seed, Stream::edge_endpoints);
    Rng edge_labels(seed, Stream::edge_labels);
    Rng direction(seed, Stream::edge_direction);

    std::vector<Label> labels(spec.n_vertices);
    for (auto& l : labels) l = draw_label(vertex_labels, spec.vertex_label_max);

    std::vector<Edge> edges(spec.n_edges);
    for (Edge& e : edges) {
        e.source = static_cast<VertexId>(endpoints.below(spec.n_vertices));
        e.target = static_cast<VertexId>(endpoints.below(spec.n_vertices));
        e.label = draw_label(edge_labels, spec.edge_label_max);
        e.directed = direction.unit() < spec.directed_fraction;
    }
    return Graph(std::move(labels), std::move(edges));
}

Permutation random_permutation(std::size_t n, Seed seed) {
    Rng rng(seed, Stream::permutation);
    Permutation perm = identity_permutation(n);
    for (std::size_t i = n; i > 1; --i) {
        std::swap(perm[i - 1], perm[rng.below(i)]);
    }
    return perm;
}

IsomorphicCopy isomorphic_copy(const Graph& g, Seed seed, bool shift_labels) {
    Permutation perm = random_permutation(g.vertex_count(), seed);
    Graph copy = apply_permutation(g, perm);
    if (!shift_labels) return {std::move(copy), std::move(perm)};

    std::optional<std::uint64_t> max_label;
    auto track = [&](const Label& l) {
        if (l) max_label = std::max<std::uint64_t>(max_label.value_or(0), *l);
    };
    for (const Label& l : copy.labels()) track(l);
    for (const Edge& e : copy.edges()) track(e.label);
    if (!max_label) return {std::move(copy), std::move(perm)};

    const std::uint64_t shift = *max_label + 1;
    auto shifted = [&](const Label& l) -> Label {
        if (!l) return l;
        const std::uint64_t v = *l + shift;
        if (v > std::numeric_limits<std::uint32_t>::max()) {
            throw InvalidArgument("shifted label " + std::to_string(v) + " does not fit in 32 bits");
        }
        return static_cast<std::uint32_t>(v);
    };
    std::vector<Label> labels;
    labels.reserve(copy.vertex_count());
    for (const Label& l : copy.labels()) labels.push_back(shifted(l));
    std::vector<Edge> edges(copy.edges().begin(), copy.edges().end());
    for (Edge& e : edges) e.label = shifted(e.label);
    return {Graph(std::move(labels), std::move(edges)), std::move(perm)};
}

Graph random_regular_graph(std::size_t n, std::size_t k, Rng& rng) {
    if ((n * k) % 2 != 0 || (n > 0 && k >= n) || (n == 0 && k > 0)) {
        throw InfeasibleDegree("no simple " + std::to_string(k) + "-regular graph on " + std::to_string(n) +
                               " vertices");
    }
    std::vector<VertexId> stubs;
    stubs.reserve(n * k);
    for (std::size_t v = 0; v < n; ++v) stubs.insert(stubs.end(), k, static_cast<VertexId>(v));

    std::vector<bool> adjacent(n * n);
    for (std::size_t attempt = 0; attempt < kRegularRetryCap; ++attempt) {
        for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[rng.below(i)]);

        std::fill(adjacent.begin(), adjacent.end(), false);
        bool simple = true;
        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        for (std::size_t i = 0; simple && i < stubs.size(); i += 2) {
            const VertexId a = std::min(stubs[i], stubs[i + 1]);
            const VertexId b = std::max(stubs[i], stubs[i + 1]);
            if (a == b || adjacent[a * n + b]) {
                simple = false;
            } else {
                adjacent[a * n + b] = true;
                edges.push_back({std::nullopt, a, b, false});
            }
        }
        if (simple) {
            std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
                return std::pair(x.source, x.target) < std::pair(y.source, y.target);
            });
            return Graph(std::vector<Label>(n), std::move(edges));
        }
    }
    throw RetryExhausted("no simple " + std::to_string(k) + "-regular graph on " + std::to_string(n) +
                         " vertices after " + std::to_string(kRegularRetryCap) + " attempts");
}

std::pair<Graph, Graph> random_regular_pair(std::size_t n, std::size_t k, Seed seed) {
    Rng rng(seed, Stream::stubs);
    Graph first = random_regular_graph(n, k, rng);
    Graph second = random_regular_graph(n, k, rng);
    return {std::move(first), std::move(second)};
}

}  // namespace graphhash
