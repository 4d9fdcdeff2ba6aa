#include "graphhash/color_refinement.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace graphhash {
namespace {

std::vector<std::vector<VertexId>> undirected_neighbors(const Graph& g) {
    std::vector<std::vector<VertexId>> nbrs(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t e : g.incident(static_cast<VertexId>(v))) {
            nbrs[v].push_back(g.edge(e).other(static_cast<VertexId>(v)));
        }
    }
    return nbrs;
}

Coloring next_round(const Coloring& current, const std::vector<std::vector<VertexId>>& nbrs) {
    using Signature = std::pair<ColorId, std::vector<ColorId>>;
    std::map<Signature, ColorId> ids;
    Coloring next;
    next.round = current.round + 1;
    next.color_of.reserve(current.color_of.size());
    for (std::size_t v = 0; v < current.color_of.size(); ++v) {
        Signature sig{current.color_of[v], {}};
        sig.second.reserve(nbrs[v].size());
        for (VertexId u : nbrs[v]) sig.second.push_back(current.color_of[u]);
        std::sort(sig.second.begin(), sig.second.end());
        auto [it, _] = ids.try_emplace(std::move(sig), static_cast<ColorId>(ids.size()));
        next.color_of.push_back(it->second);
    }
    return next;
}

}  // namespace

std::size_t Coloring::class_count() const {
    if (color_of.empty()) return 0;
    return *std::max_element(color_of.begin(), color_of.end()) + std::size_t{1};
}

std::vector<Coloring> refinement_history(const Graph& g) {
    const auto nbrs = undirected_neighbors(g);
    std::vector<Coloring> history;
    history.push_back({std::vector<ColorId>(g.vertex_count(), 0), 0});
    for (;;) {
        Coloring next = next_round(history.back(), nbrs);
        // Canonical ids make equal partitions compare equal element-wise.
        const bool stable = next.color_of == history.back().color_of;
        history.push_back(std::move(next));
        if (stable) break;
    }
    return history;
}

Coloring refine(const Graph& g) {
    return refinement_history(g).back();
}

bool refines(const Coloring& fine, const Coloring& coarse) {
    if (fine.color_of.size() != coarse.color_of.size()) return false;
    std::map<ColorId, ColorId> parent;
    for (std::size_t v = 0; v < fine.color_of.size(); ++v) {
        auto [it, inserted] = parent.try_emplace(fine.color_of[v], coarse.color_of[v]);
        if (!inserted && it->second != coarse.color_of[v]) return false;
    }
    return true;
}

CrVerdict cr_compare(const Graph& g, const Graph& h) {
    const auto joint = disjoint_union(g, h);
    const Coloring stable = refine(joint.graph);
    std::vector<ColorId> left(stable.color_of.begin(), stable.color_of.begin() + joint.offset);
    std::vector<ColorId> right(stable.color_of.begin() + joint.offset, stable.color_of.end());
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    return left == right ? CrVerdict::inconclusive : CrVerdict::non_isomorphic;
}

}  // namespace graphhash
