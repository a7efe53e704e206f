#pragma once

#include "agr/graph.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace agr {

// Total graph morphism: a node map and an edge map that preserve sources,
// targets and labels. Domain and codomain are stored by value; graphs at this
// scale are tiny.
class GraphMorphism {
public:
    GraphMorphism() = default;
    GraphMorphism(Graph dom, Graph cod,
                  std::map<std::string, std::string> node_map,
                  std::map<std::string, std::string> edge_map);

    const Graph& dom() const { return dom_; }
    const Graph& cod() const { return cod_; }
    const std::map<std::string, std::string>& node_map() const { return node_map_; }
    const std::map<std::string, std::string>& edge_map() const { return edge_map_; }

    const std::string& node(const std::string& id) const;
    const std::string& edge(const std::string& id) const;

    // Totality plus structure preservation; empty result means valid.
    std::vector<std::string> check() const;

    static GraphMorphism identity(const Graph& g);

    friend bool operator==(const GraphMorphism&, const GraphMorphism&) = default;

private:
    Graph dom_;
    Graph cod_;
    std::map<std::string, std::string> node_map_;
    std::map<std::string, std::string> edge_map_;
};

// Diagrammatic composition: first f, then g. Requires cod(f) == dom(g).
GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g);

bool is_mono(const GraphMorphism& f);
bool is_epi(const GraphMorphism& f);
bool is_iso(const GraphMorphism& f);

} // namespace agr
