#pragma once

#include "agr/hom_search.hpp"

#include <cstdint>
#include <functional>
#include <set>

namespace agr {

// Size bounds for brute-force enumeration: graphs with at most max_nodes
// nodes, max_edges edges, whose labels come from `labels`.
struct EnumerationBudget {
    int max_nodes = 3;
    int max_edges = 4;
    std::vector<std::string> labels = {"a"};
};

// Canonical encoding of a graph: node count plus the lexicographically least
// sorted edge-triple list over all node orderings. Two graphs are isomorphic
// iff their encodings agree.
std::string canonical_encoding(const Graph& g, const std::vector<std::string>& labels);
Graph decode_encoding(const std::string& enc, const std::vector<std::string>& labels);

// Streams every graph within the budget, one per isomorphism class, in a
// deterministic order. Visited graphs are in canonical form (nodes n0..nk,
// edges e0..em). The visitor returns false to stop.
void for_each_canonical_graph(const EnumerationBudget& budget,
                              const std::function<bool(const Graph&)>& visit);

std::vector<Graph> enumerate_graphs(const EnumerationBudget& budget);
std::uint64_t count_graphs(const EnumerationBudget& budget);

// All subgraphs of g (node subset plus edge subset with endpoints inside),
// each with its inclusion morphism, in deterministic order.
std::vector<GraphMorphism> enumerate_subgraph_inclusions(const Graph& g);

} // namespace agr
