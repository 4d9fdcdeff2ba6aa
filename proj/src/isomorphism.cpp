#include "graphhash/isomorphism.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "graphhash/error.hpp"

namespace graphhash {
namespace {

using Clock = std::chrono::steady_clock;

// Every ordered vertex pair's edge multiset, interned to a small id shared
// by both graphs so pair comparisons are integer compares.
class PairTables {
public:
    PairTables(const Graph& g, const Graph& h, bool respect_labels)
        : g_(build(g, respect_labels)), h_(build(h, respect_labels)), ng_(g.vertex_count()), nh_(h.vertex_count()) {}

    std::uint32_t in_g(VertexId u, VertexId v) const { return g_[u * ng_ + v]; }
    std::uint32_t in_h(VertexId u, VertexId v) const { return h_[u * nh_ + v]; }

private:
    std::vector<std::uint32_t> build(const Graph& g, bool respect_labels) {
        const std::size_t n = g.vertex_count();
        std::vector<std::vector<std::uint64_t>> multisets(n * n);
        for (const Edge& e : g.edges()) {
            auto code = [&](VertexId from) {
                std::uint64_t c = std::uint64_t{static_cast<std::uint32_t>(direction_from(e, from))} << 33;
                if (respect_labels && e.label) c |= (std::uint64_t{1} << 32) | *e.label;
                return c;
            };
            multisets[e.source * n + e.target].push_back(code(e.source));
            if (!e.is_self_loop()) multisets[e.target * n + e.source].push_back(code(e.target));
        }
        std::vector<std::uint32_t> ids(n * n);
        for (std::size_t i = 0; i < multisets.size(); ++i) {
            std::sort(multisets[i].begin(), multisets[i].end());
            auto [it, _] = interned_.try_emplace(std::move(multisets[i]), static_cast<std::uint32_t>(interned_.size()));
            ids[i] = it->second;
        }
        return ids;
    }

    std::map<std::vector<std::uint64_t>, std::uint32_t> interned_;
    std::vector<std::uint32_t> g_;
    std::vector<std::uint32_t> h_;
    std::size_t ng_;
    std::size_t nh_;
};

bool labels_match(const Graph& g, const Graph& h, VertexId u, VertexId x, bool respect_labels) {
    return !respect_labels || g.label(u) == h.label(x);
}

bool full_check(const Graph& g, const Graph& h, const PairTables& tables, std::span<const VertexId> m,
                bool respect_labels) {
    const auto n = static_cast<VertexId>(g.vertex_count());
    for (VertexId u = 0; u < n; ++u) {
        if (!labels_match(g, h, u, m[u], respect_labels)) return false;
        for (VertexId v = 0; v < n; ++v) {
            if (tables.in_g(u, v) != tables.in_h(m[u], m[v])) return false;
        }
    }
    return true;
}

class Backtracker {
public:
    Backtracker(const Graph& g, const Graph& h, bool respect_labels, std::vector<std::vector<VertexId>> candidates)
        : g_(g),
          h_(h),
          respect_labels_(respect_labels),
          tables_(g, h, respect_labels),
          candidates_(std::move(candidates)),
          mapping_(g.vertex_count()),
          used_(h.vertex_count(), false) {}

    IsoResult run() {
        IsoResult result;
        stats_.nodes_expanded = 1;
        result.isomorphic = search(0);
        if (result.isomorphic) result.mapping = mapping_;
        result.stats = stats_;
        return result;
    }

private:
    bool search(VertexId u) {
        if (u == g_.vertex_count()) return true;
        for (VertexId x : candidates_[u]) {
            if (used_[x]) continue;
            ++stats_.combinations;
            if (!consistent(u, x)) continue;
            mapping_[u] = x;
            used_[x] = true;
            ++stats_.nodes_expanded;
            if (search(u + 1)) return true;
            used_[x] = false;
        }
        return false;
    }

    // Edges between u and every already mapped vertex, and u's self-loops.
    bool consistent(VertexId u, VertexId x) const {
        if (!labels_match(g_, h_, u, x, respect_labels_)) return false;
        if (tables_.in_g(u, u) != tables_.in_h(x, x)) return false;
        for (VertexId w = 0; w < u; ++w) {
            if (tables_.in_g(u, w) != tables_.in_h(x, mapping_[w])) return false;
        }
        return true;
    }

    const Graph& g_;
    const Graph& h_;
    bool respect_labels_;
    PairTables tables_;
    std::vector<std::vector<VertexId>> candidates_;
    Permutation mapping_;
    std::vector<bool> used_;
    SearchStats stats_;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

bool check_mapping(const Graph& g, const Graph& h, std::span<const VertexId> m, bool respect_labels) {
    if (g.vertex_count() != h.vertex_count() || m.size() != g.vertex_count()) {
        throw SizeMismatch("mapping of size " + std::to_string(m.size()) + " between graphs with " +
                           std::to_string(g.vertex_count()) + " and " + std::to_string(h.vertex_count()) +
                           " vertices");
    }
    if (!is_bijection(m)) throw NotABijection("mapping is not a bijection");
    const PairTables tables(g, h, respect_labels);
    return full_check(g, h, tables, m, respect_labels);
}

IsoResult oracle_isomorphic(const Graph& g, const Graph& h, bool respect_labels) {
    if (g.vertex_count() > kOracleMaxVertices) {
        throw TooLarge("the permutation oracle handles at most " + std::to_string(kOracleMaxVertices) +
                       " vertices");
    }
    const auto start = Clock::now();
    IsoResult result;
    if (g.vertex_count() != h.vertex_count()) {
        result.stats.seconds = seconds_since(start);
        return result;
    }
    const PairTables tables(g, h, respect_labels);
    Permutation m = identity_permutation(g.vertex_count());
    do {
        ++result.stats.combinations;
        if (full_check(g, h, tables, m, respect_labels)) {
            result.isomorphic = true;
            result.mapping = m;
            break;
        }
    } while (std::next_permutation(m.begin(), m.end()));
    result.stats.nodes_expanded = result.stats.combinations;
    result.stats.seconds = seconds_since(start);
    return result;
}

IsoResult brute_force_isomorphic(const Graph& g, const Graph& h, bool respect_labels) {
    const auto start = Clock::now();
    if (g.vertex_count() != h.vertex_count()) return {};
    const Permutation all = identity_permutation(h.vertex_count());
    Backtracker search(g, h, respect_labels, std::vector<std::vector<VertexId>>(g.vertex_count(), all));
    IsoResult result = search.run();
    result.stats.seconds = seconds_since(start);
    return result;
}

IsoResult hash_partitioned_isomorphic(const Graph& g, const Graph& h, bool hash_labels, CoderBudget budget) {
    const auto start = Clock::now();
    if (g.vertex_count() != h.vertex_count()) return {};

    const auto g_digests = vertex_hashes(g, hash_labels, budget);
    const auto h_digests = vertex_hashes(h, hash_labels, budget);
    auto g_sorted = g_digests;
    auto h_sorted = h_digests;
    std::sort(g_sorted.begin(), g_sorted.end());
    std::sort(h_sorted.begin(), h_sorted.end());
    if (g_sorted != h_sorted) {
        IsoResult rejected;
        rejected.stats.seconds = seconds_since(start);
        return rejected;
    }

    std::map<Digest128, std::vector<VertexId>> h_classes;
    for (const auto& cls : partition_by_digest(h_digests)) h_classes.emplace(cls.digest, cls.members);
    std::vector<std::vector<VertexId>> candidates(g.vertex_count());
    for (std::size_t u = 0; u < g.vertex_count(); ++u) candidates[u] = h_classes.at(g_digests[u]);

    Backtracker search(g, h, hash_labels, std::move(candidates));
    IsoResult result = search.run();
    result.stats.seconds = seconds_since(start);
    return result;
}

}  // namespace graphhash
