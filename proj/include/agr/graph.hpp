#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace agr {

// Directed multigraph edge. Ids are unique within a graph; src/tgt refer to
// node ids; label is drawn from the alphabet of the enclosing system.
struct Edge {
    std::string id;
    std::string src;
    std::string tgt;
    std::string label;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite labelled directed multigraph. Nodes and edges are kept sorted by id,
// so structural equality is plain field equality and iteration order is
// deterministic everywhere.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> nodes, std::vector<Edge> edges);

    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_node(const std::string& id) const;
    const Edge* find_edge(const std::string& id) const;

    // Position of a node/edge id in the sorted vectors, -1 if absent.
    int node_index(const std::string& id) const;
    int edge_index(const std::string& id) const;

    std::size_t item_count() const { return nodes_.size() + edges_.size(); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::string> nodes_;
    std::vector<Edge> edges_;
};

Graph make_graph(std::vector<std::string> nodes, std::vector<Edge> edges);

// Structural validation: duplicate ids, dangling endpoints and (when an
// alphabet is supplied) unknown labels. Empty result means the graph is valid.
std::vector<std::string> validate(const Graph& g);
std::vector<std::string> validate(const Graph& g, const std::vector<std::string>& alphabet);

} // namespace agr
