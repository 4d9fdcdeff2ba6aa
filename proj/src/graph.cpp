#include "graphhash/graph.hpp"

#include <algorithm>
#include <string>

#include "graphhash/error.hpp"

namespace graphhash {

std::vector<std::vector<std::size_t>> build_incidence(std::size_t vertex_count,
                                                      std::span<const Edge> edges) {
    std::vector<std::vector<std::size_t>> incidence(vertex_count);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        incidence[edges[e].source].push_back(e);
        if (!edges[e].is_self_loop()) {
            incidence[edges[e].target].push_back(e);
        }
    }
    return incidence;
}

Graph::Graph(std::vector<Label> vertex_labels, std::vector<Edge> edges)
    : labels_(std::move(vertex_labels)), edges_(std::move(edges)) {
    const auto n = labels_.size();
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& edge = edges_[e];
        if (edge.source >= n || edge.target >= n) {
            throw DanglingEndpoint("edge " + std::to_string(e) + " references vertex " +
                                   std::to_string(std::max(edge.source, edge.target)) +
                                   " but the graph has " + std::to_string(n) + " vertices");
        }
    }
    incidence_ = build_incidence(n, edges_);
}

Graph Graph::isolated(std::size_t n) {
    return Graph(std::vector<Label>(n), {});
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& list : incidence_) best = std::max(best, list.size());
    return best;
}

bool is_bijection(std::span<const VertexId> perm) {
    std::vector<bool> seen(perm.size(), false);
    for (VertexId image : perm) {
        if (image >= perm.size() || seen[image]) return false;
        seen[image] = true;
    }
    return true;
}

Permutation identity_permutation(std::size_t n) {
    Permutation perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<VertexId>(i);
    return perm;
}

Permutation inverse(std::span<const VertexId> perm) {
    if (!is_bijection(perm)) throw NotABijection("permutation is not a bijection");
    Permutation inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<VertexId>(i);
    return inv;
}

Permutation compose(std::span<const VertexId> outer, std::span<const VertexId> inner) {
    if (outer.size() != inner.size() || !is_bijection(outer) || !is_bijection(inner)) {
        throw NotABijection("cannot compose: operands are not bijections of the same size");
    }
    Permutation out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
    return out;
}

Graph apply_permutation(const Graph& g, std::span<const VertexId> perm) {
    if (perm.size() != g.vertex_count() || !is_bijection(perm)) {
        throw NotABijection("permutation of size " + std::to_string(perm.size()) +
                            " is not a bijection on " + std::to_string(g.vertex_count()) +
                            " vertices");
    }
    std::vector<Label> labels(g.vertex_count());
    for (std::size_t i = 0; i < perm.size(); ++i) labels[perm[i]] = g.label(static_cast<VertexId>(i));

    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (Edge& e : edges) {
        e.source = perm[e.source];
        e.target = perm[e.target];
    }
    return Graph(std::move(labels), std::move(edges));
}

DisjointUnion disjoint_union(const Graph& g, const Graph& h) {
    const auto offset = static_cast<VertexId>(g.vertex_count());
    std::vector<Label> labels(g.labels().begin(), g.labels().end());
    labels.insert(labels.end(), h.labels().begin(), h.labels().end());

    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges.reserve(g.edge_count() + h.edge_count());
    for (Edge e : h.edges()) {
        e.source += offset;
        e.target += offset;
        edges.push_back(e);
    }
    return {Graph(std::move(labels), std::move(edges)), offset};
}

}  // namespace graphhash
