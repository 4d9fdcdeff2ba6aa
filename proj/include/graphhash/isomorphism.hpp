#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "graphhash/graph.hpp"
#include "graphhash/vertex_coder.hpp"

namespace graphhash {

struct SearchStats {
    // Attempted vertex-pair assignments, failed ones included.
    std::uint64_t combinations = 0;
    // Search tree nodes visited: the root plus every accepted assignment.
    std::uint64_t nodes_expanded = 0;
    double seconds = 0.0;
};

struct IsoResult {
    bool isomorphic = false;
    // mapping[u] is the vertex of h that u of g maps to.
    std::optional<Permutation> mapping;
    SearchStats stats;
};

// True iff m is an isomorphism from g to h: for every ordered pair (u, v)
// the multiset of (direction, label) over edges joining u and v in g equals
// the one joining m(u) and m(v) in h, and vertex labels agree pointwise.
// Labels only take part when respect_labels. Throws SizeMismatch when the
// vertex counts or the mapping size disagree, NotABijection otherwise.
bool check_mapping(const Graph& g, const Graph& h, std::span<const VertexId> m, bool respect_labels);

inline constexpr std::size_t kOracleMaxVertices = 9;

// Tries every bijection in lexicographic order. Throws TooLarge when g has
// more than kOracleMaxVertices vertices. Different sizes: non-isomorphic, no search.
IsoResult oracle_isomorphic(const Graph& g, const Graph& h, bool respect_labels);

// Backtracking over g's vertices in id order, each tried against unused h
// vertices in id order, keeping an assignment only when every edge among the
// mapped vertices is consistent.
IsoResult brute_force_isomorphic(const Graph& g, const Graph& h, bool respect_labels);

// Same backtracking, but a vertex of g may only go to h vertices with an
// equal vertex digest. Graphs whose digest classes differ are rejected
// before any search. Labels are hashed and matched iff hash_labels.
IsoResult hash_partitioned_isomorphic(const Graph& g, const Graph& h, bool hash_labels,
                                      CoderBudget budget = {});

}  // namespace graphhash
