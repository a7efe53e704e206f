#include "agr/limits.hpp"

#include "agr/ids.hpp"

#include <algorithm>
#include <set>

namespace agr {

namespace {

// Union-find keyed by tagged item ids; class representatives are the
// lexicographically least members, which makes every colimit reproducible.
class NamedUnionFind {
public:
    void add(const std::string& x) { parent_.emplace(x, x); }

    const std::string& find(const std::string& x) {
        auto it = parent_.find(x);
        if (it == parent_.end()) throw std::logic_error("union-find: unknown item " + x);
        if (it->second == x) return it->first;
        const std::string& root = find(it->second);
        it->second = root;
        return root;
    }

    void unite(const std::string& a, const std::string& b) {
        std::string ra = find(a), rb = find(b);
        if (ra == rb) return;
        if (rb < ra) std::swap(ra, rb);
        parent_[rb] = ra;  // keep the least id as representative
    }

private:
    std::map<std::string, std::string> parent_;
};

std::string pair_id(const std::string& a, const std::string& b) {
    return "(" + escape_id_component(a) + "," + escape_id_component(b) + ")";
}

} // namespace

CospanResult pushout(const GraphMorphism& f, const GraphMorphism& g) {
    if (!(f.dom() == g.dom())) throw std::invalid_argument("pushout: legs must share a domain");
    const Graph& i = f.dom();
    const Graph& b = f.cod();
    const Graph& c = g.cod();

    NamedUnionFind nodes, edges;
    for (const auto& n : b.nodes()) nodes.add("l:" + n);
    for (const auto& n : c.nodes()) nodes.add("r:" + n);
    for (const Edge& e : b.edges()) edges.add("l:" + e.id);
    for (const Edge& e : c.edges()) edges.add("r:" + e.id);
    for (const auto& n : i.nodes()) nodes.unite("l:" + f.node(n), "r:" + g.node(n));
    for (const Edge& e : i.edges()) edges.unite("l:" + f.edge(e.id), "r:" + g.edge(e.id));

    std::set<std::string> node_reps;
    for (const auto& n : b.nodes()) node_reps.insert(nodes.find("l:" + n));
    for (const auto& n : c.nodes()) node_reps.insert(nodes.find("r:" + n));

    auto node_rep = [&](char tag, const std::string& n) {
        return nodes.find(std::string(1, tag) + ":" + n);
    };

    std::vector<Edge> apex_edges;
    std::set<std::string> seen_edges;
    auto add_edge = [&](char tag, const Edge& e) {
        std::string rep = edges.find(std::string(1, tag) + ":" + e.id);
        if (!seen_edges.insert(rep).second) return;
        apex_edges.push_back({rep, node_rep(tag, e.src), node_rep(tag, e.tgt), e.label});
    };
    for (const Edge& e : b.edges()) add_edge('l', e);
    for (const Edge& e : c.edges()) add_edge('r', e);

    Graph apex(std::vector<std::string>(node_reps.begin(), node_reps.end()),
               std::move(apex_edges));

    std::map<std::string, std::string> bn, be, cn, ce;
    for (const auto& n : b.nodes()) bn[n] = node_rep('l', n);
    for (const Edge& e : b.edges()) be[e.id] = edges.find("l:" + e.id);
    for (const auto& n : c.nodes()) cn[n] = node_rep('r', n);
    for (const Edge& e : c.edges()) ce[e.id] = edges.find("r:" + e.id);

    return {apex, GraphMorphism(b, apex, std::move(bn), std::move(be)),
            GraphMorphism(c, apex, std::move(cn), std::move(ce))};
}

GraphMorphism pushout_mediator(const CospanResult& po, const GraphMorphism& u,
                               const GraphMorphism& v) {
    if (!(u.cod() == v.cod())) throw std::invalid_argument("pushout_mediator: cocone codomains differ");
    std::map<std::string, std::string> nm, em;
    auto define = [](std::map<std::string, std::string>& m, const std::string& k,
                     const std::string& val) {
        auto [it, fresh] = m.emplace(k, val);
        if (!fresh && it->second != val)
            throw std::invalid_argument("pushout_mediator: cocone does not commute");
    };
    for (const auto& [x, rep] : po.left.node_map()) define(nm, rep, u.node(x));
    for (const auto& [x, rep] : po.right.node_map()) define(nm, rep, v.node(x));
    for (const auto& [x, rep] : po.left.edge_map()) define(em, rep, u.edge(x));
    for (const auto& [x, rep] : po.right.edge_map()) define(em, rep, v.edge(x));
    GraphMorphism med(po.apex, u.cod(), std::move(nm), std::move(em));
    if (!med.check().empty())
        throw std::invalid_argument("pushout_mediator: induced map is not a morphism");
    return med;
}

CospanResult pullback(const GraphMorphism& f, const GraphMorphism& g) {
    if (!(f.cod() == g.cod())) throw std::invalid_argument("pullback: legs must share a codomain");
    const Graph& b = f.dom();
    const Graph& c = g.dom();

    std::vector<std::string> apex_nodes;
    std::map<std::string, std::string> ln, rn, le, re;
    for (const auto& x : b.nodes())
        for (const auto& y : c.nodes()) {
            if (f.node(x) != g.node(y)) continue;
            std::string id = pair_id(x, y);
            apex_nodes.push_back(id);
            ln[id] = x;
            rn[id] = y;
        }
    std::vector<Edge> apex_edges;
    for (const Edge& e : b.edges())
        for (const Edge& d : c.edges()) {
            if (f.edge(e.id) != g.edge(d.id)) continue;
            std::string id = pair_id(e.id, d.id);
            apex_edges.push_back({id, pair_id(e.src, d.src), pair_id(e.tgt, d.tgt), e.label});
            le[id] = e.id;
            re[id] = d.id;
        }
    Graph apex(std::move(apex_nodes), std::move(apex_edges));
    return {apex, GraphMorphism(apex, b, std::move(ln), std::move(le)),
            GraphMorphism(apex, c, std::move(rn), std::move(re))};
}

GraphMorphism pullback_mediator(const CospanResult& pb, const GraphMorphism& f,
                                const GraphMorphism& g, const GraphMorphism& u,
                                const GraphMorphism& v) {
    if (!(u.dom() == v.dom())) throw std::invalid_argument("pullback_mediator: cone domains differ");
    for (const auto& n : u.dom().nodes())
        if (f.node(u.node(n)) != g.node(v.node(n)))
            throw std::invalid_argument("pullback_mediator: cone does not commute");
    for (const Edge& e : u.dom().edges())
        if (f.edge(u.edge(e.id)) != g.edge(v.edge(e.id)))
            throw std::invalid_argument("pullback_mediator: cone does not commute");
    std::map<std::string, std::string> nm, em;
    for (const auto& n : u.dom().nodes()) nm[n] = pair_id(u.node(n), v.node(n));
    for (const Edge& e : u.dom().edges()) em[e.id] = pair_id(u.edge(e.id), v.edge(e.id));
    GraphMorphism med(u.dom(), pb.apex, std::move(nm), std::move(em));
    if (!med.check().empty())
        throw std::invalid_argument("pullback_mediator: induced map is not a morphism");
    return med;
}

bool gluing_ok(const GraphMorphism& phi_l, const GraphMorphism& m) {
    const Graph& l = phi_l.cod();
    const Graph& x = m.cod();
    // Nodes of X deleted by the rule: images of L-nodes outside phi_l's image.
    std::set<std::string> preserved_l_nodes;
    for (const auto& [n, img] : phi_l.node_map()) preserved_l_nodes.insert(img);
    std::set<std::string> deleted_x_nodes;
    for (const auto& n : l.nodes())
        if (!preserved_l_nodes.count(n)) deleted_x_nodes.insert(m.node(n));
    if (deleted_x_nodes.empty()) return true;
    std::set<std::string> matched_edges;
    for (const auto& [e, img] : m.edge_map()) matched_edges.insert(img);
    for (const Edge& e : x.edges()) {
        if (matched_edges.count(e.id)) continue;
        if (deleted_x_nodes.count(e.src) || deleted_x_nodes.count(e.tgt)) return false;
    }
    return true;
}

std::optional<PushoutComplement> pushout_complement(const GraphMorphism& phi_l,
                                                    const GraphMorphism& m) {
    if (!(phi_l.cod() == m.dom()))
        throw std::invalid_argument("pushout_complement: cod(phi_l) != dom(m)");
    if (!is_mono(phi_l) || !is_mono(m))
        throw std::invalid_argument("pushout_complement: both legs must be monos");
    if (!gluing_ok(phi_l, m)) return std::nullopt;

    const Graph& l = phi_l.cod();
    const Graph& x = m.cod();
    std::set<std::string> keep_l_nodes, keep_l_edges;
    for (const auto& [n, img] : phi_l.node_map()) keep_l_nodes.insert(img);
    for (const auto& [e, img] : phi_l.edge_map()) keep_l_edges.insert(img);
    std::set<std::string> drop_nodes, drop_edges;
    for (const auto& n : l.nodes())
        if (!keep_l_nodes.count(n)) drop_nodes.insert(m.node(n));
    for (const Edge& e : l.edges())
        if (!keep_l_edges.count(e.id)) drop_edges.insert(m.edge(e.id));

    std::vector<std::string> c_nodes;
    for (const auto& n : x.nodes())
        if (!drop_nodes.count(n)) c_nodes.push_back(n);
    std::vector<Edge> c_edges;
    for (const Edge& e : x.edges())
        if (!drop_edges.count(e.id)) c_edges.push_back(e);
    Graph c(std::move(c_nodes), std::move(c_edges));

    std::map<std::string, std::string> in, ie;
    for (const auto& n : phi_l.dom().nodes()) in[n] = m.node(phi_l.node(n));
    for (const Edge& e : phi_l.dom().edges()) ie[e.id] = m.edge(phi_l.edge(e.id));
    GraphMorphism to_context(phi_l.dom(), c, std::move(in), std::move(ie));

    std::map<std::string, std::string> cn, ce;
    for (const auto& n : c.nodes()) cn[n] = n;
    for (const Edge& e : c.edges()) ce[e.id] = e.id;
    GraphMorphism inclusion(c, x, std::move(cn), std::move(ce));

    return PushoutComplement{c, to_context, inclusion};
}

bool is_pushout_square(const GraphMorphism& f, const GraphMorphism& g,
                       const GraphMorphism& p, const GraphMorphism& q) {
    if (!(compose(f, p) == compose(g, q)))
        throw std::invalid_argument("is_pushout_square: square does not commute");
    CospanResult po = pushout(f, g);
    try {
        return is_iso(pushout_mediator(po, p, q));
    } catch (const std::invalid_argument&) {
        return false;
    }
}

bool is_pullback_square(const GraphMorphism& p, const GraphMorphism& q,
                        const GraphMorphism& f, const GraphMorphism& g) {
    if (!(compose(p, f) == compose(q, g)))
        throw std::invalid_argument("is_pullback_square: square does not commute");
    CospanResult pb = pullback(f, g);
    try {
        return is_iso(pullback_mediator(pb, f, g, p, q));
    } catch (const std::invalid_argument&) {
        return false;
    }
}

Graph terminal_graph(const std::vector<std::string>& labels) {
    std::vector<Edge> loops;
    for (const auto& l : labels) loops.push_back({"loop:" + l, "pt", "pt", l});
    return Graph({"pt"}, std::move(loops));
}

GraphMorphism to_terminal(const Graph& g, const std::vector<std::string>& labels) {
    Graph t = terminal_graph(labels);
    std::map<std::string, std::string> nm, em;
    for (const auto& n : g.nodes()) nm[n] = "pt";
    for (const Edge& e : g.edges()) em[e.id] = "loop:" + e.label;
    return GraphMorphism(g, t, std::move(nm), std::move(em));
}

CospanResult product(const Graph& a, const Graph& b, const std::vector<std::string>& labels) {
    return pullback(to_terminal(a, labels), to_terminal(b, labels));
}

GraphMorphism pairing(const CospanResult& prod, const GraphMorphism& u, const GraphMorphism& v) {
    if (!(u.dom() == v.dom())) throw std::invalid_argument("pairing: domains differ");
    std::map<std::string, std::string> nm, em;
    for (const auto& n : u.dom().nodes()) nm[n] = pair_id(u.node(n), v.node(n));
    for (const Edge& e : u.dom().edges()) em[e.id] = pair_id(u.edge(e.id), v.edge(e.id));
    GraphMorphism med(u.dom(), prod.apex, std::move(nm), std::move(em));
    if (!med.check().empty())
        throw std::invalid_argument("pairing: components do not pair into the product");
    return med;
}

} // namespace agr
