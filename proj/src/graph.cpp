#include "blockselect/graph.hpp"

#include "blockselect/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>
#include <string_view>
#include <unordered_map>

namespace blockselect {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw InputError("line " + std::to_string(line_no) + ": non-integer token '" + std::string(tok) + "'");
    return value;
}

bool is_blank_or_comment(std::string_view line) {
    for (char c : line) {
        if (c == '#')
            return true;
        if (c != ' ' && c != '\t' && c != '\r')
            return false;
    }
    return true;
}

} // namespace

Graph::Graph(Vertex n, std::vector<Edge> edges, std::vector<std::int64_t> original_ids)
    : edges_(std::move(edges)), adjacency_(static_cast<std::size_t>(n)), degrees_(static_cast<std::size_t>(n), 0),
      original_ids_(std::move(original_ids)) {
    if (n < 0)
        throw InputError("negative vertex count");
    if (original_ids_.empty()) {
        original_ids_.resize(static_cast<std::size_t>(n));
        std::iota(original_ids_.begin(), original_ids_.end(), std::int64_t{0});
    } else if (original_ids_.size() != static_cast<std::size_t>(n)) {
        throw InputError("id map size does not match vertex count");
    }
    for (auto &e : edges_) {
        if (e.u == e.v)
            throw InputError("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw InputError("edge endpoint out of range");
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw InputError("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
    for (const auto &e : edges_) {
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
        std::sort(adjacency_[u].begin(), adjacency_[u].end());
        degrees_[u] = static_cast<Count>(adjacency_[u].size());
    }
}

Count Graph::max_degree() const {
    return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto &adj = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(adj.begin(), adj.end(), v);
}

Graph load_edge_list(std::istream &in, const LoadOptions &options) {
    struct RawEdge {
        std::int64_t a, b;
        std::size_t line;
    };
    std::vector<RawEdge> raw;
    std::vector<std::int64_t> first_seen;
    std::unordered_map<std::int64_t, Vertex> index;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line))
            continue;
        auto toks = split_tokens(line);
        if (toks.size() < 2)
            throw InputError("line " + std::to_string(line_no) + ": expected two vertex ids");
        std::int64_t a = parse_int(toks[0], line_no);
        std::int64_t b = parse_int(toks[1], line_no);
        if (options.one_indexed) {
            --a;
            --b;
        }
        if (a < 0 || b < 0)
            throw InputError("line " + std::to_string(line_no) + ": negative vertex id");
        if (a == b)
            throw InputError("line " + std::to_string(line_no) + ": self-loop on vertex " + std::to_string(a));
        for (auto id : {a, b}) {
            if (index.emplace(id, static_cast<Vertex>(first_seen.size())).second)
                first_seen.push_back(id);
        }
        raw.push_back({a, b, line_no});
    }

    const std::int64_t max_id = first_seen.empty() ? -1 : *std::max_element(first_seen.begin(), first_seen.end());
    const bool dense = max_id + 1 == static_cast<std::int64_t>(first_seen.size());
    std::vector<std::int64_t> ids;
    if (dense) {
        ids.resize(first_seen.size());
        std::iota(ids.begin(), ids.end(), std::int64_t{0});
        for (auto &[id, v] : index)
            v = static_cast<Vertex>(id);
    } else {
        ids = first_seen;
    }
    if (options.one_indexed)
        for (auto &id : ids)
            ++id;

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    std::unordered_map<std::uint64_t, std::size_t> seen;
    seen.reserve(raw.size() * 2);
    for (const auto &r : raw) {
        Vertex u = index.at(r.a), v = index.at(r.b);
        if (u > v)
            std::swap(u, v);
        const auto key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
        auto [it, inserted] = seen.emplace(key, r.line);
        if (!inserted) {
            if (options.drop_duplicates)
                continue;
            throw InputError("line " + std::to_string(r.line) + ": duplicate edge (first seen on line " +
                             std::to_string(it->second) + ")");
        }
        edges.push_back({u, v});
    }
    const auto n = static_cast<Vertex>(ids.size());
    return Graph(n, std::move(edges), std::move(ids));
}

Graph load_edge_list_file(const std::string &path, const LoadOptions &options) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return load_edge_list(in, options);
}

void write_edge_list(std::ostream &out, const Graph &g) {
    for (const auto &e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

Graph largest_component(const Graph &g) {
    const Vertex n = g.num_vertices();
    if (n == 0)
        throw InputError("largest_component of an empty graph");
    std::vector<Vertex> comp(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> sizes;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0)
            continue;
        const Vertex c = static_cast<Vertex>(sizes.size());
        Vertex size = 0;
        std::queue<Vertex> q;
        q.push(s);
        comp[static_cast<std::size_t>(s)] = c;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            ++size;
            for (Vertex v : g.neighbors(u)) {
                if (comp[static_cast<std::size_t>(v)] < 0) {
                    comp[static_cast<std::size_t>(v)] = c;
                    q.push(v);
                }
            }
        }
        sizes.push_back(size);
    }
    // components are discovered in order of their smallest vertex, so the
    // first maximum wins the tie-break
    const Vertex best = static_cast<Vertex>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

    std::vector<Vertex> remap(static_cast<std::size_t>(n), -1);
    std::vector<std::int64_t> ids;
    for (Vertex u = 0; u < n; ++u) {
        if (comp[static_cast<std::size_t>(u)] == best) {
            remap[static_cast<std::size_t>(u)] = static_cast<Vertex>(ids.size());
            ids.push_back(g.original_ids()[static_cast<std::size_t>(u)]);
        }
    }
    std::vector<Edge> edges;
    for (const auto &e : g.edges())
        if (comp[static_cast<std::size_t>(e.u)] == best)
            edges.push_back({remap[static_cast<std::size_t>(e.u)], remap[static_cast<std::size_t>(e.v)]});
    const auto size = static_cast<Vertex>(ids.size());
    return Graph(size, std::move(edges), std::move(ids));
}

std::vector<std::int32_t> load_vertex_labels(std::istream &in, const Graph &g) {
    std::unordered_map<std::int64_t, Vertex> by_id;
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        by_id.emplace(g.original_ids()[static_cast<std::size_t>(u)], u);
    std::vector<std::int32_t> labels(static_cast<std::size_t>(g.num_vertices()), -1);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line))
            continue;
        auto toks = split_tokens(line);
        if (toks.size() < 2)
            throw InputError("line " + std::to_string(line_no) + ": expected 'vertex label'");
        const auto id = parse_int(toks[0], line_no);
        const auto label = parse_int(toks[1], line_no);
        auto it = by_id.find(id);
        if (it == by_id.end())
            throw InputError("line " + std::to_string(line_no) + ": unknown vertex " + std::to_string(id));
        if (label < 0)
            throw InputError("line " + std::to_string(line_no) + ": negative label");
        labels[static_cast<std::size_t>(it->second)] = static_cast<std::int32_t>(label);
    }
    for (std::size_t u = 0; u < labels.size(); ++u)
        if (labels[u] < 0)
            throw InputError("no label for vertex " + std::to_string(g.original_ids()[u]));
    return labels;
}

} // namespace blockselect
