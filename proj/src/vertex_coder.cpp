#include "graphhash/vertex_coder.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "graphhash/error.hpp"

namespace graphhash {
namespace {

constexpr std::int64_t kNotOnBranch = -1;

// Depth-first encoder for a single root vertex. The ancestor branch is kept
// as one stack shared by the whole traversal, with a position index per
// vertex so the duplicate test is O(1).
class Encoder {
public:
    Encoder(const Graph& g, bool hash_labels, CoderBudget budget)
        : g_(g), hash_labels_(hash_labels), budget_(budget), position_(g.vertex_count(), kNotOnBranch) {}

    Digest128 encode_root(VertexId v) {
        create_nodes(1);
        Digest128 code = encode(v);
        live_ -= 1;
        return code;
    }

    const CoderStats& stats() const { return stats_; }

private:
    void create_nodes(std::uint64_t count) {
        stats_.nodes_created += count;
        if (stats_.nodes_created > budget_.max_nodes) {
            throw BudgetExceeded("vertex coder exceeded its budget of " +
                                 std::to_string(budget_.max_nodes) + " nodes");
        }
        live_ += count;
        stats_.peak_live_nodes = std::max(stats_.peak_live_nodes, live_);
    }

    Digest128 encode(VertexId v) {
        stats_.max_branch_length = std::max(stats_.max_branch_length, branch_.size());
        std::vector<std::uint8_t> input;
        if (hash_labels_) append_label(input, g_.label(v));

        const std::int64_t first = position_[v];
        const auto incident = g_.incident(v);
        if (first != kNotOnBranch || incident.empty()) {
            // Terminal: 1-based index of the duplicate, or branch length + 1.
            const auto value = first != kNotOnBranch ? first + 1 : static_cast<std::int64_t>(branch_.size()) + 1;
            append_u32(input, static_cast<std::uint32_t>(value));
            return digest(input);
        }

        // expand
        create_nodes(incident.size());
        std::vector<ChildLink> children;
        children.reserve(incident.size());
        position_[v] = static_cast<std::int64_t>(branch_.size());
        branch_.push_back(v);
        for (std::size_t e : incident) {
            const Edge& edge = g_.edge(e);
            ChildLink link{edge.label, direction_from(edge, v), {}};
            link.code = encode(edge.other(v));
            children.push_back(link);
        }
        branch_.pop_back();
        position_[v] = kNotOnBranch;

        std::sort(children.begin(), children.end(),
                  [this](const ChildLink& a, const ChildLink& b) { return child_less(a, b, hash_labels_); });
        for (const ChildLink& c : children) {
            if (hash_labels_) append_label(input, c.edge_label);
            append_u32(input, static_cast<std::uint32_t>(c.direction));
        }
        for (const ChildLink& c : children) input.insert(input.end(), c.code.bytes.begin(), c.code.bytes.end());

        // contract: this node's children are released once the parent has the code.
        live_ -= children.size();
        return digest(input);
    }

    const Graph& g_;
    bool hash_labels_;
    CoderBudget budget_;
    std::vector<std::int64_t> position_;
    std::vector<VertexId> branch_;
    std::uint64_t live_ = 0;
    CoderStats stats_;
};

}  // namespace

bool child_less(const ChildLink& a, const ChildLink& b, bool hash_labels) {
    if (a.code != b.code) return a.code < b.code;
    if (a.direction != b.direction) return a.direction < b.direction;
    return hash_labels && a.edge_label < b.edge_label;
}

Direction direction_from(const Edge& e, VertexId from) {
    if (!e.directed) return Direction::undirected;
    return e.source == from ? Direction::forward : Direction::backward;
}

void append_u32(std::vector<std::uint8_t>& buf, std::uint32_t value) {
    buf.push_back(static_cast<std::uint8_t>(value >> 24));
    buf.push_back(static_cast<std::uint8_t>(value >> 16));
    buf.push_back(static_cast<std::uint8_t>(value >> 8));
    buf.push_back(static_cast<std::uint8_t>(value));
}

void append_label(std::vector<std::uint8_t>& buf, const Label& label) {
    if (!label) {
        buf.push_back(0x00);
        return;
    }
    buf.push_back(0x01);
    append_u32(buf, *label);
}

Digest128 vertex_hash(const Graph& g, VertexId v, bool hash_labels, CoderBudget budget, CoderStats* stats) {
    if (v >= g.vertex_count()) {
        throw InvalidArgument("vertex " + std::to_string(v) + " is not in the graph");
    }
    if (budget.max_nodes < 1) throw InvalidArgument("coder budget must allow at least one node");
    Encoder encoder(g, hash_labels, budget);
    Digest128 code = encoder.encode_root(v);
    if (stats) *stats = encoder.stats();
    return code;
}

std::vector<Digest128> vertex_hashes(const Graph& g, bool hash_labels, CoderBudget budget) {
    std::vector<Digest128> out;
    out.reserve(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        out.push_back(vertex_hash(g, static_cast<VertexId>(v), hash_labels, budget));
    }
    return out;
}

Digest128 combine_vertex_hashes(std::vector<Digest128> vertex_digests) {
    std::sort(vertex_digests.begin(), vertex_digests.end());
    std::vector<std::uint8_t> input;
    input.reserve(16 * vertex_digests.size());
    for (const auto& d : vertex_digests) input.insert(input.end(), d.bytes.begin(), d.bytes.end());
    return digest(input);
}

Digest128 graph_hash(const Graph& g, bool hash_labels, CoderBudget budget) {
    return combine_vertex_hashes(vertex_hashes(g, hash_labels, budget));
}

std::vector<VertexClass> partition_by_digest(const std::vector<Digest128>& vertex_digests) {
    std::map<Digest128, std::vector<VertexId>> classes;
    for (std::size_t v = 0; v < vertex_digests.size(); ++v) {
        classes[vertex_digests[v]].push_back(static_cast<VertexId>(v));
    }
    std::vector<VertexClass> out;
    out.reserve(classes.size());
    for (auto& [d, members] : classes) out.push_back({d, std::move(members)});
    return out;
}

std::vector<VertexClass> vertex_partition(const Graph& g, bool hash_labels, CoderBudget budget) {
    return partition_by_digest(vertex_hashes(g, hash_labels, budget));
}

}  // namespace graphhash
