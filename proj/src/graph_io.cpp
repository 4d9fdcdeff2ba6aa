#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "graphhash/error.hpp"
#include "graphhash/graph.hpp"

namespace graphhash {
namespace {

using json = nlohmann::json;

std::uint32_t as_u32(const json& value, const std::string& what) {
    if (!value.is_number_integer()) {
        throw MalformedInput(what + " must be a non-negative integer");
    }
    if (value.is_number_unsigned()) {
        const auto v = value.get<std::uint64_t>();
        if (v <= std::numeric_limits<std::uint32_t>::max()) return static_cast<std::uint32_t>(v);
    } else if (value.get<std::int64_t>() >= 0) {
        const auto v = value.get<std::int64_t>();
        if (v <= std::numeric_limits<std::uint32_t>::max()) return static_cast<std::uint32_t>(v);
    }
    throw MalformedInput(what + " is out of range [0, 4294967295]");
}

Label optional_label(const json& obj, const std::string& what) {
    auto it = obj.find("label");
    if (it == obj.end() || it->is_null()) return std::nullopt;
    return as_u32(*it, what + " label");
}

void require_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& what) {
    if (!obj.is_object()) throw MalformedInput(what + " must be an object");
    for (const auto& [key, _] : obj.items()) {
        bool known = false;
        for (const char* k : allowed) known = known || key == k;
        if (!known) throw MalformedInput("unexpected key '" + key + "' in " + what);
    }
}

void append_label(std::string& out, const Label& label) {
    if (label) {
        out += ",\"label\":";
        out += std::to_string(*label);
    }
}

}  // namespace

Graph parse_graph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw MalformedInput(std::string("invalid graph text: ") + e.what());
    }
    require_keys(doc, {"vertices", "edges"}, "graph");
    if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
        throw MalformedInput("graph needs a 'vertices' array");
    }
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
        throw MalformedInput("graph needs an 'edges' array");
    }

    const auto& jvertices = doc["vertices"];
    const std::size_t n = jvertices.size();
    std::vector<Label> labels(n);
    std::vector<bool> seen(n, false);
    for (const auto& jv : jvertices) {
        require_keys(jv, {"id", "label"}, "vertex");
        if (!jv.contains("id")) throw MalformedInput("vertex is missing 'id'");
        const auto id = as_u32(jv["id"], "vertex id");
        if (id < n && seen[id]) throw DuplicateVertexId("duplicate vertex id " + std::to_string(id));
        if (id >= n) {
            throw MalformedInput("vertex id " + std::to_string(id) + " is not in [0, " +
                                 std::to_string(n) + "); ids must be dense");
        }
        seen[id] = true;
        labels[id] = optional_label(jv, "vertex " + std::to_string(id));
    }

    std::vector<Edge> edges;
    edges.reserve(doc["edges"].size());
    for (const auto& je : doc["edges"]) {
        require_keys(je, {"source", "target", "label", "directed"}, "edge");
        if (!je.contains("source") || !je.contains("target")) {
            throw MalformedInput("edge needs 'source' and 'target'");
        }
        Edge e;
        e.source = as_u32(je["source"], "edge source");
        e.target = as_u32(je["target"], "edge target");
        e.label = optional_label(je, "edge");
        if (auto it = je.find("directed"); it != je.end()) {
            if (!it->is_boolean()) throw MalformedInput("edge 'directed' must be a boolean");
            e.directed = it->get<bool>();
        }
        edges.push_back(e);
    }
    return Graph(std::move(labels), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::string out = "{\"vertices\":[";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (v > 0) out += ',';
        out += "{\"id\":";
        out += std::to_string(v);
        append_label(out, g.label(static_cast<VertexId>(v)));
        out += '}';
    }
    out += "],\"edges\":[";
    bool first = true;
    for (const Edge& e : g.edges()) {
        if (!first) out += ',';
        first = false;
        out += "{\"source\":" + std::to_string(e.source) + ",\"target\":" + std::to_string(e.target);
        append_label(out, e.label);
        out += e.directed ? ",\"directed\":true}" : ",\"directed\":false}";
    }
    out += "]}";
    return out;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInput("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write graph file '" + path + "'");
    out << serialize_graph(g) << '\n';
}

}  // namespace graphhash
