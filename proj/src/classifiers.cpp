#include "agr/classifiers.hpp"

#include "agr/ids.hpp"

#include <algorithm>
#include <set>

namespace agr {

namespace {

std::string pair_edge_id(const std::string& u, const std::string& v, const std::string& label) {
    return "pair:" + escape_id_component(u) + "," + escape_id_component(v) + "," + label;
}

} // namespace

OmegaGraph make_omega(const std::vector<std::string>& labels) {
    std::vector<Edge> edges;
    for (const auto& l : labels) {
        edges.push_back({"all:" + l, "in", "in", l});
        edges.push_back({"nodes:" + l, "in", "in", l});
        edges.push_back({"src:" + l, "in", "out", l});
        edges.push_back({"tgt:" + l, "out", "in", l});
        edges.push_back({"none:" + l, "out", "out", l});
    }
    Graph omega({"in", "out"}, std::move(edges));
    Graph one = terminal_graph(labels);
    std::map<std::string, std::string> nm{{"pt", "in"}};
    std::map<std::string, std::string> em;
    for (const auto& l : labels) em["loop:" + l] = "all:" + l;
    return {omega, GraphMorphism(one, omega, std::move(nm), std::move(em))};
}

GraphMorphism characteristic(const GraphMorphism& m, const std::vector<std::string>& labels) {
    if (!is_mono(m)) throw std::invalid_argument("characteristic: morphism must be mono");
    const Graph& x = m.cod();
    OmegaGraph om = make_omega(labels);
    std::set<std::string> in_nodes, in_edges;
    for (const auto& [k, v] : m.node_map()) in_nodes.insert(v);
    for (const auto& [k, v] : m.edge_map()) in_edges.insert(v);
    std::map<std::string, std::string> nm, em;
    for (const auto& n : x.nodes()) nm[n] = in_nodes.count(n) ? "in" : "out";
    for (const Edge& e : x.edges()) {
        std::string cls;
        if (in_edges.count(e.id)) {
            cls = "all";
        } else {
            bool s = in_nodes.count(e.src) > 0, t = in_nodes.count(e.tgt) > 0;
            cls = s && t ? "nodes" : s ? "src" : t ? "tgt" : "none";
        }
        em[e.id] = cls + ":" + e.label;
    }
    return GraphMorphism(x, om.omega, std::move(nm), std::move(em));
}

PartialMapClassifier make_pmc(const Graph& g, const std::vector<std::string>& labels) {
    std::set<std::string> taken(g.nodes().begin(), g.nodes().end());
    std::string bottom = fresh_id("bot", taken);
    std::vector<std::string> nodes = g.nodes();
    nodes.push_back(bottom);
    std::vector<std::string> endpoints = g.nodes();
    endpoints.push_back(bottom);

    std::vector<Edge> edges = g.edges();
    for (const auto& l : labels)
        for (const auto& u : endpoints)
            for (const auto& v : endpoints)
                edges.push_back({pair_edge_id(u, v, l), u, v, l});

    Graph total(std::move(nodes), std::move(edges));
    std::map<std::string, std::string> nm, em;
    for (const auto& n : g.nodes()) nm[n] = n;
    for (const Edge& e : g.edges()) em[e.id] = e.id;
    return {total, GraphMorphism(g, total, std::move(nm), std::move(em)), bottom};
}

GraphMorphism classify_partial_map(const GraphMorphism& incl, const GraphMorphism& h,
                                   const PartialMapClassifier& pmc) {
    if (!is_mono(incl)) throw std::invalid_argument("classify_partial_map: domain leg must be mono");
    if (!(incl.dom() == h.dom()))
        throw std::invalid_argument("classify_partial_map: legs must share a domain");
    const Graph& x = incl.cod();
    // Invert the inclusion to read the partial map off X directly.
    std::map<std::string, std::string> node_val, edge_val;
    for (const auto& [d, xn] : incl.node_map()) node_val[xn] = h.node(d);
    for (const auto& [d, xe] : incl.edge_map()) edge_val[xe] = h.edge(d);
    std::map<std::string, std::string> nm, em;
    for (const auto& n : x.nodes()) {
        auto it = node_val.find(n);
        nm[n] = it == node_val.end() ? pmc.bottom : it->second;
    }
    for (const Edge& e : x.edges()) {
        auto it = edge_val.find(e.id);
        if (it != edge_val.end()) {
            em[e.id] = it->second;
        } else {
            em[e.id] = pair_edge_id(nm[e.src], nm[e.tgt], e.label);
        }
    }
    return GraphMorphism(x, pmc.total, std::move(nm), std::move(em));
}

FpbcResult fpbc_mono(const GraphMorphism& alpha, const GraphMorphism& m) {
    if (!(alpha.cod() == m.dom())) throw std::invalid_argument("fpbc_mono: cod(alpha) != dom(m)");
    if (!is_mono(alpha) || !is_mono(m))
        throw std::invalid_argument("fpbc_mono: both legs must be monos");
    const Graph& l = alpha.cod();
    const Graph& g = m.cod();
    std::set<std::string> kept_l_nodes, kept_l_edges;
    for (const auto& [k, v] : alpha.node_map()) kept_l_nodes.insert(v);
    for (const auto& [k, v] : alpha.edge_map()) kept_l_edges.insert(v);
    std::set<std::string> drop_nodes, drop_edges;
    for (const auto& n : l.nodes())
        if (!kept_l_nodes.count(n)) drop_nodes.insert(m.node(n));
    for (const Edge& e : l.edges())
        if (!kept_l_edges.count(e.id)) drop_edges.insert(m.edge(e.id));

    std::vector<std::string> f_nodes;
    for (const auto& n : g.nodes())
        if (!drop_nodes.count(n)) f_nodes.push_back(n);
    std::vector<Edge> f_edges;
    for (const Edge& e : g.edges()) {
        if (drop_edges.count(e.id)) continue;
        if (drop_nodes.count(e.src) || drop_nodes.count(e.tgt)) continue;  // dangling: deleted
        f_edges.push_back(e);
    }
    Graph f(std::move(f_nodes), std::move(f_edges));

    std::map<std::string, std::string> gn, ge;
    for (const auto& n : alpha.dom().nodes()) gn[n] = m.node(alpha.node(n));
    for (const Edge& e : alpha.dom().edges()) ge[e.id] = m.edge(alpha.edge(e.id));
    GraphMorphism gamma(alpha.dom(), f, std::move(gn), std::move(ge));

    std::map<std::string, std::string> bn, be;
    for (const auto& n : f.nodes()) bn[n] = n;
    for (const Edge& e : f.edges()) be[e.id] = e.id;
    GraphMorphism beta(f, g, std::move(bn), std::move(be));
    return {f, gamma, beta};
}

bool is_fpbc(const FpbcSquare& sq, const EnumerationBudget& budget) {
    if (!(compose(sq.alpha, sq.m) == compose(sq.gamma, sq.beta)))
        throw std::invalid_argument("is_fpbc: square does not commute");
    if (!is_pullback_square(sq.alpha, sq.gamma, sq.m, sq.beta)) return false;

    const Graph& g = sq.m.cod();
    bool ok = true;
    for_each_canonical_graph(budget, [&](const Graph& fp) {
        for (const GraphMorphism& beta_p : enumerate_homs(fp, g)) {
            CospanResult pb = pullback(sq.m, beta_p);
            const GraphMorphism& alpha_p = pb.left;   // I' -> L
            const GraphMorphism& gamma_p = pb.right;  // I' -> F'
            for (const GraphMorphism& f : enumerate_homs(pb.apex, sq.alpha.dom())) {
                if (!(compose(f, sq.alpha) == alpha_p)) continue;
                GraphMorphism want = compose(f, sq.gamma);  // I' -> F
                int count = 0;
                for_each_hom(fp, sq.beta.dom(), {}, [&](const GraphMorphism& fprime) {
                    if (compose(fprime, sq.beta) == beta_p &&
                        compose(gamma_p, fprime) == want)
                        ++count;
                    return count <= 1;
                });
                if (count != 1) {
                    ok = false;
                    return false;
                }
            }
        }
        return true;
    });
    return ok;
}

SliceClassifier slice_classifier(const Graph& a, const std::vector<std::string>& labels) {
    OmegaGraph om = make_omega(labels);
    CospanResult prod = product(a, om.omega, labels);
    GraphMorphism truth = pairing(prod, GraphMorphism::identity(a),
                                  characteristic(GraphMorphism::identity(a), labels));
    return {prod.apex, prod.left, prod.right, truth};
}

} // namespace agr
