#include "agr/materialization.hpp"

#include "agr/ids.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

namespace agr {

namespace {

std::string opt_edge_id(const std::string& x, const std::string& y, const std::string& a) {
    return "opt:" + escape_id_component(x) + "," + escape_id_component(y) + "," +
           escape_id_component(a);
}

} // namespace

bool preimage_exact(const GraphMorphism& psi, const GraphMorphism& m0,
                    const GraphMorphism& m) {
    std::set<std::string> a_nodes, a_edges, x_nodes, x_edges;
    for (const auto& [k, v] : m0.node_map()) a_nodes.insert(v);
    for (const auto& [k, v] : m0.edge_map()) a_edges.insert(v);
    for (const auto& [k, v] : m.node_map()) x_nodes.insert(v);
    for (const auto& [k, v] : m.edge_map()) x_edges.insert(v);
    for (const auto& n : psi.dom().nodes())
        if (a_nodes.count(psi.node(n)) && !x_nodes.count(n)) return false;
    for (const Edge& e : psi.dom().edges())
        if (a_edges.count(psi.edge(e.id)) && !x_edges.count(e.id)) return false;
    return true;
}

Materialization materialize(const GraphMorphism& phi) {
    if (!phi.check().empty()) throw std::invalid_argument("materialize: phi is not a morphism");
    const Graph& l = phi.dom();
    const Graph& a = phi.cod();

    std::set<std::string> taken(l.nodes().begin(), l.nodes().end());
    std::map<std::string, std::string> bottom_of;
    std::vector<std::string> nodes = l.nodes();
    for (const auto& u : a.nodes()) {
        std::string b = fresh_id("bot:" + u, taken);
        taken.insert(b);
        bottom_of[u] = b;
        nodes.push_back(b);
    }

    // phi-preimages per A-node, extended by the bottom node.
    std::map<std::string, std::vector<std::string>> fiber;
    for (const auto& u : a.nodes()) fiber[u] = {};
    for (const auto& x : l.nodes()) fiber[phi.node(x)].push_back(x);
    for (const auto& u : a.nodes()) fiber[u].push_back(bottom_of[u]);

    std::vector<Edge> edges = l.edges();
    std::map<std::string, std::string> psi_e;
    for (const Edge& e : l.edges()) psi_e[e.id] = phi.edge(e.id);
    for (const Edge& ae : a.edges())
        for (const auto& x : fiber[ae.src])
            for (const auto& y : fiber[ae.tgt]) {
                std::string id = opt_edge_id(x, y, ae.id);
                edges.push_back({id, x, y, ae.label});
                psi_e[id] = ae.id;
            }

    Graph mat(std::move(nodes), std::move(edges));

    std::map<std::string, std::string> eta_n, eta_e;
    for (const auto& n : l.nodes()) eta_n[n] = n;
    for (const Edge& e : l.edges()) eta_e[e.id] = e.id;
    GraphMorphism eta(l, mat, std::move(eta_n), std::move(eta_e));

    std::map<std::string, std::string> psi_n;
    for (const auto& x : l.nodes()) psi_n[x] = phi.node(x);
    for (const auto& [u, b] : bottom_of) psi_n[b] = u;
    GraphMorphism psi(mat, a, std::move(psi_n), std::move(psi_e));

    return {phi, mat, eta, psi, bottom_of};
}

bool materialization_terminal(const Materialization& mat, const EnumerationBudget& budget) {
    const Graph& l = mat.phi.dom();
    const Graph& a = mat.phi.cod();
    bool ok = true;
    for_each_canonical_graph(budget, [&](const Graph& x) {
        for (const GraphMorphism& mx : enumerate_monos(l, x)) {
            HomSearchOptions pin;
            for (const auto& [ln, xn] : mx.node_map()) pin.node_pins[xn] = mat.phi.node(ln);
            for (const auto& [le, xe] : mx.edge_map()) pin.edge_pins[xe] = mat.phi.edge(le);
            for (const GraphMorphism& psix : enumerate_homs(x, a, pin)) {
                // (mx, psix) is a factorization of phi; exactly one arrow into
                // the materialization may exist.
                HomSearchOptions fpin;
                for (const auto& [ln, xn] : mx.node_map()) fpin.node_pins[xn] = mat.eta.node(ln);
                for (const auto& [le, xe] : mx.edge_map()) fpin.edge_pins[xe] = mat.eta.edge(le);
                int count = 0;
                for_each_hom(x, mat.mat, fpin, [&](const GraphMorphism& f) {
                    if (compose(f, mat.psi) == psix && preimage_exact(f, mat.eta, mx)) ++count;
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

std::optional<GraphMorphism> mono_language_member(const GraphMorphism& m0,
                                                  const GraphMorphism& m) {
    if (!is_mono(m0) || !is_mono(m))
        throw std::invalid_argument("mono_language_member: both arguments must be monos");
    if (!(m0.dom() == m.dom()))
        throw std::invalid_argument("mono_language_member: monos must share a domain");
    HomSearchOptions pin;
    for (const auto& [ln, xn] : m.node_map()) pin.node_pins[xn] = m0.node(ln);
    for (const auto& [le, xe] : m.edge_map()) pin.edge_pins[xe] = m0.edge(le);
    std::optional<GraphMorphism> found;
    for_each_hom(m.cod(), m0.cod(), pin, [&](const GraphMorphism& psi) {
        if (preimage_exact(psi, m0, m)) {
            found = psi;
            return false;
        }
        return true;
    });
    return found;
}

FpbcSquare materialization_square(const Materialization& mat,
                                  const std::vector<std::string>& labels) {
    SliceClassifier sc = slice_classifier(mat.phi.cod(), labels);
    CospanResult prod{sc.product, sc.pi1, sc.pi2};
    GraphMorphism chi = pairing(prod, mat.psi, characteristic(mat.eta, labels));
    return {mat.phi, mat.eta, sc.truth, chi};
}

RewritableMaterialization rewritable_materialize(const GraphMorphism& phi,
                                                 const GraphMorphism& phi_l) {
    if (!(phi_l.cod() == phi.dom()))
        throw std::invalid_argument("rewritable_materialize: cod(phi_l) != dom(phi)");
    if (!is_mono(phi_l))
        throw std::invalid_argument("rewritable_materialize: phi_l must be mono");
    Materialization base = materialize(phi);
    FpbcResult fr = fpbc_mono(phi_l, base.eta);
    CospanResult po = pushout(phi_l, fr.gamma);
    GraphMorphism alpha = pushout_mediator(po, base.eta, fr.beta);
    GraphMorphism psi = compose(alpha, base.psi);
    RewritableMaterialization rm{base,    phi_l,   fr,   po.apex,
                                 po.left, po.right, alpha, psi};
    if (!gluing_ok(phi_l, rm.n_l))
        throw std::logic_error("rewritable_materialize: gluing condition violated");
    return rm;
}

LanguageReport materialization_language_check(const Materialization& mat,
                                              const EnumerationBudget& budget) {
    const Graph& l = mat.phi.dom();
    const Graph& a = mat.phi.cod();
    LanguageReport rep;
    for_each_canonical_graph(budget, [&](const Graph& x) {
        std::string xenc = canonical_encoding(x, budget.labels);
        for (const GraphMorphism& m : enumerate_monos(l, x)) {
            bool lhs = mono_language_member(mat.eta, m).has_value();
            HomSearchOptions pin;
            for (const auto& [ln, xn] : m.node_map()) pin.node_pins[xn] = mat.phi.node(ln);
            for (const auto& [le, xe] : m.edge_map()) pin.edge_pins[xe] = mat.phi.edge(le);
            bool rhs = false;
            for_each_hom(x, a, pin, [&](const GraphMorphism&) {
                rhs = true;
                return false;
            });
            if (lhs != rhs) {
                rep.ok = false;
                rep.mismatches.push_back((lhs ? "only-language: " : "only-factorization: ") +
                                         xenc);
            }
        }
        return true;
    });
    return rep;
}

std::string mono_pair_encoding(const GraphMorphism& m, const std::vector<std::string>& labels) {
    const Graph& k = m.dom();
    const Graph& x = m.cod();
    const std::vector<std::string>& xs = x.nodes();
    int nv = static_cast<int>(xs.size());
    std::map<std::string, int> node_ix;
    for (int i = 0; i < nv; ++i) node_ix[xs[i]] = i;
    auto label_ix = [&](const std::string& lab) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == lab) return static_cast<int>(i);
        throw std::invalid_argument("mono_pair_encoding: label not in alphabet: " + lab);
    };

    std::vector<int> node_color(nv, -1);
    {
        int c = 0;
        for (const auto& n : k.nodes()) node_color[node_ix.at(m.node(n))] = c++;
    }
    std::map<std::string, int> edge_color;
    {
        int c = 0;
        for (const Edge& e : k.edges()) edge_color[m.edge(e.id)] = c++;
    }
    struct Quad {
        int s, t, l, c;
        bool operator<(const Quad& o) const {
            return std::tie(s, t, l, c) < std::tie(o.s, o.t, o.l, o.c);
        }
    };
    std::vector<Quad> quads;
    for (const Edge& e : x.edges()) {
        auto it = edge_color.find(e.id);
        quads.push_back({node_ix.at(e.src), node_ix.at(e.tgt), label_ix(e.label),
                         it == edge_color.end() ? -1 : it->second});
    }

    std::vector<int> perm(nv);
    for (int i = 0; i < nv; ++i) perm[i] = i;
    std::string best;
    do {
        std::vector<int> colors(nv, -1);
        for (int i = 0; i < nv; ++i) colors[perm[i]] = node_color[i];
        std::vector<Quad> qs = quads;
        for (Quad& q : qs) {
            q.s = perm[q.s];
            q.t = perm[q.t];
        }
        std::sort(qs.begin(), qs.end());
        std::string enc = std::to_string(nv) + ":";
        for (int i = 0; i < nv; ++i) {
            if (i) enc += ",";
            enc += std::to_string(colors[i]);
        }
        enc += ";";
        for (std::size_t i = 0; i < qs.size(); ++i) {
            if (i) enc += "|";
            enc += std::to_string(qs[i].s) + "," + std::to_string(qs[i].t) + "," +
                   std::to_string(qs[i].l) + "," + std::to_string(qs[i].c);
        }
        if (best.empty() || enc < best) best = enc;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::set<std::string> mono_pair_language(const GraphMorphism& m0,
                                         const EnumerationBudget& budget) {
    std::set<std::string> out;
    for_each_canonical_graph(budget, [&](const Graph& x) {
        for (const GraphMorphism& m : enumerate_monos(m0.dom(), x))
            if (mono_language_member(m0, m)) out.insert(mono_pair_encoding(m, budget.labels));
        return true;
    });
    return out;
}

namespace {

// Co-match pairs reachable by rewriting a match that carries a witness
// against m0: either a language member of m0 (pullback square required) or a
// plain factorization of m0. Hosts get slack |L \ I| so every result within
// budget is reached.
std::set<std::string> rewritten_pair_set(const Production& p, const GraphMorphism& m0,
                                         bool require_pullback,
                                         const EnumerationBudget& budget) {
    EnumerationBudget host = budget;
    host.max_nodes += static_cast<int>(p.left.nodes().size()) -
                      static_cast<int>(p.interface.nodes().size());
    host.max_edges += static_cast<int>(p.left.edges().size()) -
                      static_cast<int>(p.interface.edges().size());
    std::set<std::string> out;
    for_each_canonical_graph(host, [&](const Graph& x) {
        for (const GraphMorphism& m : enumerate_monos(p.left, x)) {
            bool witnessed;
            if (require_pullback) {
                witnessed = mono_language_member(m0, m).has_value();
            } else {
                HomSearchOptions pin;
                for (const auto& [ln, xn] : m.node_map()) pin.node_pins[xn] = m0.node(ln);
                for (const auto& [le, xe] : m.edge_map()) pin.edge_pins[xe] = m0.edge(le);
                witnessed = false;
                for_each_hom(x, m0.cod(), pin, [&](const GraphMorphism&) {
                    witnessed = true;
                    return false;
                });
            }
            if (!witnessed) continue;
            std::optional<DpoTrace> tr = dpo_step(p, m);
            if (!tr) continue;
            if (static_cast<int>(tr->result.nodes().size()) > budget.max_nodes ||
                static_cast<int>(tr->result.edges().size()) > budget.max_edges)
                continue;
            out.insert(mono_pair_encoding(tr->co_match, budget.labels));
        }
        return true;
    });
    return out;
}

LanguageReport pair_set_diff(const std::set<std::string>& lhs, const std::set<std::string>& rhs,
                             const char* lhs_tag, const char* rhs_tag) {
    LanguageReport rep;
    for (const std::string& e : lhs)
        if (!rhs.count(e)) {
            rep.ok = false;
            rep.mismatches.push_back(std::string(lhs_tag) + e);
        }
    for (const std::string& e : rhs)
        if (!lhs.count(e)) {
            rep.ok = false;
            rep.mismatches.push_back(std::string(rhs_tag) + e);
        }
    return rep;
}

} // namespace

LanguageReport rewriting_match_language_check(const Production& p, const GraphMorphism& n_l,
                                              const EnumerationBudget& budget) {
    std::optional<DpoTrace> tr = dpo_step(p, n_l);
    if (!tr)
        throw std::invalid_argument(
            "rewriting_match_language_check: the rule does not apply at n_l");
    std::set<std::string> lhs = mono_pair_language(tr->co_match, budget);
    std::set<std::string> rhs = rewritten_pair_set(p, n_l, true, budget);
    return pair_set_diff(lhs, rhs, "only-language: ", "only-rewritten: ");
}

LanguageReport comatch_language_check(const Production& p, const GraphMorphism& phi,
                                      const EnumerationBudget& budget) {
    RewritableMaterialization rm = rewritable_materialize(phi, p.phi_l);
    std::optional<DpoTrace> tr = dpo_step(p, rm.n_l);
    if (!tr)
        throw std::logic_error("comatch_language_check: rewritable materialization step failed");
    std::set<std::string> lhs = mono_pair_language(tr->co_match, budget);
    std::set<std::string> rhs = rewritten_pair_set(p, phi, false, budget);
    return pair_set_diff(lhs, rhs, "only-language: ", "only-rewritten: ");
}

LanguageReport rmat_language_check(const RewritableMaterialization& rm, const Production& p,
                                   const EnumerationBudget& budget) {
    const Graph& l = rm.base.phi.dom();
    const Graph& a = rm.base.phi.cod();
    LanguageReport rep;
    for_each_canonical_graph(budget, [&](const Graph& x) {
        std::string xenc = canonical_encoding(x, budget.labels);
        for (const GraphMorphism& m : enumerate_monos(l, x)) {
            bool lhs = mono_language_member(rm.n_l, m).has_value();
            HomSearchOptions pin;
            for (const auto& [ln, xn] : m.node_map()) pin.node_pins[xn] = rm.base.phi.node(ln);
            for (const auto& [le, xe] : m.edge_map()) pin.edge_pins[xe] = rm.base.phi.edge(le);
            bool factors = false;
            for_each_hom(x, a, pin, [&](const GraphMorphism&) {
                factors = true;
                return false;
            });
            bool rhs = factors && gluing_ok(p.phi_l, m);
            if (lhs != rhs) {
                rep.ok = false;
                rep.mismatches.push_back((lhs ? "only-language: " : "only-rewritable: ") +
                                         xenc);
            }
        }
        return true;
    });
    return rep;
}

} // namespace agr
