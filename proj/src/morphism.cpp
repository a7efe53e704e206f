#include "agr/morphism.hpp"

#include <set>

namespace agr {

GraphMorphism::GraphMorphism(Graph dom, Graph cod,
                             std::map<std::string, std::string> node_map,
                             std::map<std::string, std::string> edge_map)
    : dom_(std::move(dom)), cod_(std::move(cod)),
      node_map_(std::move(node_map)), edge_map_(std::move(edge_map)) {}

const std::string& GraphMorphism::node(const std::string& id) const {
    auto it = node_map_.find(id);
    if (it == node_map_.end()) throw std::invalid_argument("morphism undefined on node " + id);
    return it->second;
}

const std::string& GraphMorphism::edge(const std::string& id) const {
    auto it = edge_map_.find(id);
    if (it == edge_map_.end()) throw std::invalid_argument("morphism undefined on edge " + id);
    return it->second;
}

std::vector<std::string> GraphMorphism::check() const {
    std::vector<std::string> issues;
    for (const auto& n : dom_.nodes()) {
        auto it = node_map_.find(n);
        if (it == node_map_.end()) {
            issues.push_back("node map not total at " + n);
        } else if (!cod_.has_node(it->second)) {
            issues.push_back("node image missing: " + n + " -> " + it->second);
        }
    }
    for (const auto& [n, img] : node_map_)
        if (!dom_.has_node(n)) issues.push_back("node map defined outside domain: " + n);
    for (const Edge& e : dom_.edges()) {
        auto it = edge_map_.find(e.id);
        if (it == edge_map_.end()) {
            issues.push_back("edge map not total at " + e.id);
            continue;
        }
        const Edge* img = cod_.find_edge(it->second);
        if (img == nullptr) {
            issues.push_back("edge image missing: " + e.id + " -> " + it->second);
            continue;
        }
        auto ns = node_map_.find(e.src);
        auto nt = node_map_.find(e.tgt);
        if (ns == node_map_.end() || nt == node_map_.end()) continue;
        if (img->src != ns->second)
            issues.push_back("source not preserved at edge " + e.id);
        if (img->tgt != nt->second)
            issues.push_back("target not preserved at edge " + e.id);
        if (img->label != e.label)
            issues.push_back("label not preserved at edge " + e.id);
    }
    for (const auto& [e, img] : edge_map_)
        if (dom_.find_edge(e) == nullptr) issues.push_back("edge map defined outside domain: " + e);
    return issues;
}

GraphMorphism GraphMorphism::identity(const Graph& g) {
    std::map<std::string, std::string> nm, em;
    for (const auto& n : g.nodes()) nm[n] = n;
    for (const Edge& e : g.edges()) em[e.id] = e.id;
    return GraphMorphism(g, g, std::move(nm), std::move(em));
}

GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g) {
    if (!(f.cod() == g.dom()))
        throw std::invalid_argument("compose: cod(f) != dom(g)");
    std::map<std::string, std::string> nm, em;
    for (const auto& [x, y] : f.node_map()) nm[x] = g.node(y);
    for (const auto& [x, y] : f.edge_map()) em[x] = g.edge(y);
    return GraphMorphism(f.dom(), g.cod(), std::move(nm), std::move(em));
}

namespace {

bool injective(const std::map<std::string, std::string>& m) {
    std::set<std::string> seen;
    for (const auto& [k, v] : m)
        if (!seen.insert(v).second) return false;
    return true;
}

} // namespace

bool is_mono(const GraphMorphism& f) {
    return injective(f.node_map()) && injective(f.edge_map());
}

bool is_epi(const GraphMorphism& f) {
    std::set<std::string> ns, es;
    for (const auto& [k, v] : f.node_map()) ns.insert(v);
    for (const auto& [k, v] : f.edge_map()) es.insert(v);
    return ns.size() == f.cod().nodes().size() && es.size() == f.cod().edges().size();
}

bool is_iso(const GraphMorphism& f) {
    return f.dom().nodes().size() == f.cod().nodes().size() &&
           f.dom().edges().size() == f.cod().edges().size() &&
           is_mono(f) && is_epi(f);
}

} // namespace agr
