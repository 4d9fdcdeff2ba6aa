#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "graphhash/graph.hpp"

namespace graphhash {

using ColorId = std::uint32_t;

struct Coloring {
    // Dense ids; the class holding the smallest vertex id gets the smallest id.
    std::vector<ColorId> color_of;
    std::size_t round = 0;

    std::size_t class_count() const;
};

// Color refinement (naive vertex classification). Labels and edge direction
// are ignored; parallel edges count once per edge, and a self-loop makes a
// vertex its own neighbor once.
//
// Round 0 is the uniform coloring. A vertex's next color is the canonical id
// of (its color, sorted multiset of neighbor colors). Returns every round up
// to and including the first one whose partition equals its predecessor's.
std::vector<Coloring> refinement_history(const Graph& g);

// The stable coloring.
Coloring refine(const Graph& g);

// True iff every class of fine is contained in a class of coarse.
bool refines(const Coloring& fine, const Coloring& coarse);

enum class CrVerdict {
    non_isomorphic,
    inconclusive,
};

// Refines the disjoint union of g and h and compares the color multisets of
// the two sides. Inconclusive never claims isomorphism.
CrVerdict cr_compare(const Graph& g, const Graph& h);

}  // namespace graphhash
