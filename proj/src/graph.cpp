#include "agr/graph.hpp"

#include <algorithm>

namespace agr {

Graph::Graph(std::vector<std::string> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
    std::sort(nodes_.begin(), nodes_.end());
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
}

bool Graph::has_node(const std::string& id) const {
    return std::binary_search(nodes_.begin(), nodes_.end(), id);
}

const Edge* Graph::find_edge(const std::string& id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, const std::string& key) { return e.id < key; });
    if (it != edges_.end() && it->id == id) return &*it;
    return nullptr;
}

int Graph::node_index(const std::string& id) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
    if (it != nodes_.end() && *it == id) return static_cast<int>(it - nodes_.begin());
    return -1;
}

int Graph::edge_index(const std::string& id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, const std::string& key) { return e.id < key; });
    if (it != edges_.end() && it->id == id) return static_cast<int>(it - edges_.begin());
    return -1;
}

Graph make_graph(std::vector<std::string> nodes, std::vector<Edge> edges) {
    return Graph(std::move(nodes), std::move(edges));
}

std::vector<std::string> validate(const Graph& g) {
    std::vector<std::string> issues;
    const auto& ns = g.nodes();
    for (std::size_t i = 1; i < ns.size(); ++i)
        if (ns[i] == ns[i - 1]) issues.push_back("duplicate id: node " + ns[i]);
    const auto& es = g.edges();
    for (std::size_t i = 1; i < es.size(); ++i)
        if (es[i].id == es[i - 1].id) issues.push_back("duplicate id: edge " + es[i].id);
    for (const Edge& e : es) {
        if (!g.has_node(e.src))
            issues.push_back("dangling endpoint: edge " + e.id + " src " + e.src);
        if (!g.has_node(e.tgt))
            issues.push_back("dangling endpoint: edge " + e.id + " tgt " + e.tgt);
    }
    return issues;
}

std::vector<std::string> validate(const Graph& g, const std::vector<std::string>& alphabet) {
    std::vector<std::string> issues = validate(g);
    for (const Edge& e : g.edges()) {
        if (std::find(alphabet.begin(), alphabet.end(), e.label) == alphabet.end())
            issues.push_back("unknown label: edge " + e.id + " label " + e.label);
    }
    return issues;
}

} // namespace agr
