#include "agr/hom_search.hpp"

#include <algorithm>

namespace agr {

namespace {

struct Searcher {
    const Graph& g;
    const Graph& h;
    const HomSearchOptions& opts;
    const std::function<bool(const GraphMorphism&)>& visit;

    // Node candidates per g-node (indices into h.nodes()), -1 entries excluded.
    std::vector<int> node_assign;  // g-node idx -> h-node idx
    std::vector<bool> h_node_used;
    std::vector<int> edge_assign;  // g-edge idx -> h-edge idx
    std::vector<bool> h_edge_used;
    // h edges grouped by (src idx, tgt idx, label): sorted list of edge indices.
    std::map<std::tuple<int, int, std::string>, std::vector<int>> h_groups;
    // g edges grouped the same way, for demand pruning.
    std::map<std::tuple<int, int, std::string>, int> g_demand;
    // g edges incident to a node, used to prune as soon as endpoints are known.
    std::vector<std::vector<int>> g_incident;
    bool stopped = false;

    Searcher(const Graph& g_, const Graph& h_, const HomSearchOptions& opts_,
             const std::function<bool(const GraphMorphism&)>& visit_)
        : g(g_), h(h_), opts(opts_), visit(visit_) {
        node_assign.assign(g.nodes().size(), -1);
        h_node_used.assign(h.nodes().size(), false);
        edge_assign.assign(g.edges().size(), -1);
        h_edge_used.assign(h.edges().size(), false);
        for (std::size_t i = 0; i < h.edges().size(); ++i) {
            const Edge& e = h.edges()[i];
            h_groups[{h.node_index(e.src), h.node_index(e.tgt), e.label}].push_back(
                static_cast<int>(i));
        }
        g_incident.assign(g.nodes().size(), {});
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            const Edge& e = g.edges()[i];
            int s = g.node_index(e.src), t = g.node_index(e.tgt);
            g_demand[{s, t, e.label}] += 1;
            g_incident[s].push_back(static_cast<int>(i));
            if (t != s) g_incident[t].push_back(static_cast<int>(i));
        }
    }

    // Edges whose endpoints are both assigned must have enough candidates.
    bool endpoints_feasible(int gnode) {
        for (int ei : g_incident[gnode]) {
            const Edge& e = g.edges()[ei];
            int s = node_assign[g.node_index(e.src)];
            int t = node_assign[g.node_index(e.tgt)];
            if (s < 0 || t < 0) continue;
            auto it = h_groups.find({s, t, e.label});
            int supply = it == h_groups.end() ? 0 : static_cast<int>(it->second.size());
            if (supply == 0) return false;
            if (opts.injective &&
                supply < g_demand[{g.node_index(e.src), g.node_index(e.tgt), e.label}])
                return false;
        }
        return true;
    }

    void assign_edges(std::size_t ei) {
        if (stopped) return;
        if (ei == g.edges().size()) {
            emit();
            return;
        }
        const Edge& e = g.edges()[ei];
        int s = node_assign[g.node_index(e.src)];
        int t = node_assign[g.node_index(e.tgt)];
        auto it = h_groups.find({s, t, e.label});
        if (it == h_groups.end()) return;
        auto pin = opts.edge_pins.find(e.id);
        for (int cand : it->second) {
            if (opts.injective && h_edge_used[cand]) continue;
            if (pin != opts.edge_pins.end() && h.edges()[cand].id != pin->second) continue;
            edge_assign[ei] = cand;
            h_edge_used[cand] = true;
            assign_edges(ei + 1);
            h_edge_used[cand] = false;
            edge_assign[ei] = -1;
            if (stopped) return;
        }
    }

    void assign_nodes(std::size_t ni) {
        if (stopped) return;
        if (ni == g.nodes().size()) {
            assign_edges(0);
            return;
        }
        const std::string& n = g.nodes()[ni];
        auto pin = opts.node_pins.find(n);
        for (std::size_t cand = 0; cand < h.nodes().size(); ++cand) {
            if (opts.injective && h_node_used[cand]) continue;
            if (pin != opts.node_pins.end() && h.nodes()[cand] != pin->second) continue;
            node_assign[ni] = static_cast<int>(cand);
            h_node_used[cand] = true;
            if (endpoints_feasible(static_cast<int>(ni))) assign_nodes(ni + 1);
            h_node_used[cand] = false;
            node_assign[ni] = -1;
            if (stopped) return;
        }
    }

    void emit() {
        std::map<std::string, std::string> nm, em;
        for (std::size_t i = 0; i < g.nodes().size(); ++i)
            nm[g.nodes()[i]] = h.nodes()[node_assign[i]];
        for (std::size_t i = 0; i < g.edges().size(); ++i)
            em[g.edges()[i].id] = h.edges()[edge_assign[i]].id;
        if (!visit(GraphMorphism(g, h, std::move(nm), std::move(em)))) stopped = true;
    }

    void run() {
        if (opts.injective && (g.nodes().size() > h.nodes().size() ||
                               g.edges().size() > h.edges().size()))
            return;
        assign_nodes(0);
    }
};

} // namespace

void for_each_hom(const Graph& g, const Graph& h, const HomSearchOptions& opts,
                  const std::function<bool(const GraphMorphism&)>& visit) {
    Searcher(g, h, opts, visit).run();
}

std::vector<GraphMorphism> enumerate_homs(const Graph& g, const Graph& h,
                                          const HomSearchOptions& opts) {
    std::vector<GraphMorphism> out;
    for_each_hom(g, h, opts, [&](const GraphMorphism& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

std::vector<GraphMorphism> enumerate_monos(const Graph& g, const Graph& h,
                                           const HomSearchOptions& opts) {
    HomSearchOptions o = opts;
    o.injective = true;
    return enumerate_homs(g, h, o);
}

std::optional<GraphMorphism> find_iso(const Graph& g, const Graph& h) {
    if (g.nodes().size() != h.nodes().size() || g.edges().size() != h.edges().size())
        return std::nullopt;
    std::optional<GraphMorphism> found;
    HomSearchOptions o;
    o.injective = true;
    for_each_hom(g, h, o, [&](const GraphMorphism& m) {
        found = m;
        return false;
    });
    return found;
}

} // namespace agr
