#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "graphhash/digest.hpp"
#include "graphhash/graph.hpp"

namespace graphhash {

// Vertex hashing by neighborhood unrolling.
//
// Each vertex v is expanded into a tree of coder nodes: a node for vertex u
// gets one child per edge incident to u, reaching the edge's far endpoint.
// A branch stops when its vertex already occurs among its ancestors; that
// terminal node contributes the 1-based position of the first occurrence.
// Nodes are digested bottom-up and each child's subtree is released as soon
// as its code has been harvested by the parent, so only the current root to
// leaf path and its siblings are ever alive.
//
// Hash input of a node with a vertex, in order:
//   1. vertex label encoding              (hash_labels only)
//   2. per sorted child: edge label encoding (hash_labels only), direction
//   3. terminal value                     (childless nodes only)
//   4. per sorted child: its 16-byte code
// Integers are 4-byte big-endian. A label is 0x00 when absent, 0x01 followed
// by the value otherwise. Direction: 1 forward, 0 backward, 2 undirected.

enum class Direction : std::uint32_t {
    backward = 0,
    forward = 1,
    undirected = 2,
};

// Edge attributes a parent records about one child, plus the child's code.
struct ChildLink {
    Label edge_label;
    Direction direction = Direction::undirected;
    Digest128 code;
};

// Child order: (code, direction, edge label) ascending. The edge label only
// takes part when labels are hashed. Absent labels sort first.
bool child_less(const ChildLink& a, const ChildLink& b, bool hash_labels);

Direction direction_from(const Edge& e, VertexId from);

void append_u32(std::vector<std::uint8_t>& buf, std::uint32_t value);
void append_label(std::vector<std::uint8_t>& buf, const Label& label);

struct CoderBudget {
    static constexpr std::uint64_t kDefaultMaxNodes = 10'000'000;

    // Coder nodes that may be created by one vertex_hash call.
    std::uint64_t max_nodes = kDefaultMaxNodes;
};

struct CoderStats {
    std::uint64_t nodes_created = 0;
    std::uint64_t peak_live_nodes = 0;
    // Longest ancestor branch seen (the root vertex's branch is empty).
    std::size_t max_branch_length = 0;
};

// Throws BudgetExceeded when the unrolled tree needs more than
// budget.max_nodes nodes, InvalidArgument for a bad vertex or budget.
Digest128 vertex_hash(const Graph& g, VertexId v, bool hash_labels, CoderBudget budget = {},
                      CoderStats* stats = nullptr);

// vertex_hash for every vertex, indexed by vertex id.
std::vector<Digest128> vertex_hashes(const Graph& g, bool hash_labels, CoderBudget budget = {});

// md5 over the vertex digests sorted ascending; md5("") for the empty graph.
Digest128 graph_hash(const Graph& g, bool hash_labels, CoderBudget budget = {});
Digest128 combine_vertex_hashes(std::vector<Digest128> vertex_digests);

struct VertexClass {
    Digest128 digest;
    std::vector<VertexId> members;  // ascending
};

// Vertices grouped by equal digest, classes ordered by ascending digest.
std::vector<VertexClass> vertex_partition(const Graph& g, bool hash_labels, CoderBudget budget = {});
std::vector<VertexClass> partition_by_digest(const std::vector<Digest128>& vertex_digests);

}  // namespace graphhash
