#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace graphhash {

using VertexId = std::uint32_t;

// Absent means "null label".
using Label = std::optional<std::uint32_t>;

// A vertex permutation: perm[i] is the image of vertex i.
using Permutation = std::vector<VertexId>;

struct Edge {
    Label label;
    VertexId source = 0;
    VertexId target = 0;
    bool directed = false;

    bool is_self_loop() const { return source == target; }
    // The endpoint opposite to v; v itself for a self-loop.
    VertexId other(VertexId v) const { return v == source ? target : source; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable multigraph with optional integer labels on vertices and edges.
// Edges may be directed or undirected independently; parallel edges and
// self-loops are allowed. Vertex ids are dense in [0, vertex_count()).
class Graph {
public:
    Graph() = default;

    // Throws DanglingEndpoint if an edge names a vertex >= labels.size().
    Graph(std::vector<Label> vertex_labels, std::vector<Edge> edges);

    // n unlabeled vertices, no edges.
    static Graph isolated(std::size_t n);

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const Label& label(VertexId v) const { return labels_[v]; }
    std::span<const Label> labels() const { return labels_; }

    const Edge& edge(std::size_t e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }

    // Indices of edges incident to v, in edge order. A self-loop appears once.
    std::span<const std::size_t> incident(VertexId v) const { return incidence_[v]; }

    std::size_t degree(VertexId v) const { return incidence_[v].size(); }
    std::size_t max_degree() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.edges_ == b.edges_ && a.incidence_ == b.incidence_;
    }

private:
    std::vector<Label> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incidence_;
};

// Rebuilds incidence lists from an edge list; exposed so tests can check
// the stored incidence against an independent construction.
std::vector<std::vector<std::size_t>> build_incidence(std::size_t vertex_count,
                                                      std::span<const Edge> edges);

// Canonical text format. Throws MalformedInput, DanglingEndpoint or
// DuplicateVertexId.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

// Vertex i of g becomes vertex perm[i]. Throws NotABijection.
Graph apply_permutation(const Graph& g, std::span<const VertexId> perm);

bool is_bijection(std::span<const VertexId> perm);
Permutation identity_permutation(std::size_t n);
Permutation inverse(std::span<const VertexId> perm);
// (outer o inner)(i) = outer[inner[i]]
Permutation compose(std::span<const VertexId> outer, std::span<const VertexId> inner);

struct DisjointUnion {
    Graph graph;
    VertexId offset = 0;
};

// h's vertices are shifted by |V(g)|; h's edges follow g's.
DisjointUnion disjoint_union(const Graph& g, const Graph& h);

}  // namespace graphhash
