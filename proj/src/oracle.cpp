#include "agr/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace agr {

namespace {

struct Triple {
    int src, tgt, lab;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Least sorted triple list over the given node permutations.
std::vector<Triple> minimize(const std::vector<Triple>& triples,
                             const std::vector<std::vector<int>>& perms) {
    std::vector<Triple> best, cur;
    bool first = true;
    for (const auto& p : perms) {
        cur.clear();
        for (const Triple& t : triples) cur.push_back({p[t.src], p[t.tgt], t.lab});
        std::sort(cur.begin(), cur.end());
        if (first || cur < best) {
            best = cur;
            first = false;
        }
    }
    return best;
}

std::string render(int nv, const std::vector<Triple>& triples) {
    std::string out = std::to_string(nv) + ":";
    for (std::size_t i = 0; i < triples.size(); ++i) {
        if (i) out.push_back('|');
        out += std::to_string(triples[i].src) + "," + std::to_string(triples[i].tgt) + "," +
               std::to_string(triples[i].lab);
    }
    return out;
}

Graph build(int nv, const std::vector<Triple>& triples, const std::vector<std::string>& labels) {
    std::vector<std::string> nodes;
    for (int i = 0; i < nv; ++i) nodes.push_back("n" + std::to_string(i));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < triples.size(); ++i)
        edges.push_back({"e" + std::to_string(i), "n" + std::to_string(triples[i].src),
                         "n" + std::to_string(triples[i].tgt),
                         labels.at(static_cast<std::size_t>(triples[i].lab))});
    return Graph(std::move(nodes), std::move(edges));
}

} // namespace

std::string canonical_encoding(const Graph& g, const std::vector<std::string>& labels) {
    int nv = static_cast<int>(g.nodes().size());
    std::vector<Triple> triples;
    for (const Edge& e : g.edges()) {
        auto it = std::find(labels.begin(), labels.end(), e.label);
        if (it == labels.end())
            throw std::invalid_argument("canonical_encoding: unknown label " + e.label);
        triples.push_back({g.node_index(e.src), g.node_index(e.tgt),
                           static_cast<int>(it - labels.begin())});
    }
    return render(nv, minimize(triples, permutations(nv)));
}

Graph decode_encoding(const std::string& enc, const std::vector<std::string>& labels) {
    auto colon = enc.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("decode_encoding: bad encoding");
    int nv = std::stoi(enc.substr(0, colon));
    std::vector<Triple> triples;
    std::size_t pos = colon + 1;
    while (pos < enc.size()) {
        auto bar = enc.find('|', pos);
        if (bar == std::string::npos) bar = enc.size();
        std::string part = enc.substr(pos, bar - pos);
        auto c1 = part.find(','), c2 = part.find(',', c1 + 1);
        triples.push_back({std::stoi(part.substr(0, c1)),
                           std::stoi(part.substr(c1 + 1, c2 - c1 - 1)),
                           std::stoi(part.substr(c2 + 1))});
        pos = bar + 1;
    }
    return build(nv, triples, labels);
}

void for_each_canonical_graph(const EnumerationBudget& budget,
                              const std::function<bool(const Graph&)>& visit) {
    const int nl = static_cast<int>(budget.labels.size());
    if (nl == 0) throw std::invalid_argument("enumeration: empty alphabet");
    for (int nv = 0; nv <= budget.max_nodes; ++nv) {
        const auto perms = permutations(nv);
        const int ntriples = nv * nv * nl;
        std::unordered_set<std::string> seen;
        std::vector<Triple> all;
        for (int s = 0; s < nv; ++s)
            for (int t = 0; t < nv; ++t)
                for (int l = 0; l < nl; ++l) all.push_back({s, t, l});

        std::vector<int> pick;  // non-decreasing triple indices
        bool stopped = false;
        // Depth-first over edge multisets of size 0..max_edges.
        std::function<void(int)> gen = [&](int start) {
            if (stopped) return;
            std::vector<Triple> triples;
            triples.reserve(pick.size());
            for (int idx : pick) triples.push_back(all[static_cast<std::size_t>(idx)]);
            std::vector<Triple> canon = minimize(triples, perms);
            std::string enc = render(nv, canon);
            if (seen.insert(enc).second) {
                if (!visit(build(nv, canon, budget.labels))) {
                    stopped = true;
                    return;
                }
            }
            if (static_cast<int>(pick.size()) == budget.max_edges) return;
            for (int idx = start; idx < ntriples; ++idx) {
                pick.push_back(idx);
                gen(idx);
                pick.pop_back();
                if (stopped) return;
            }
        };
        gen(0);
        if (stopped) return;
    }
}

std::vector<Graph> enumerate_graphs(const EnumerationBudget& budget) {
    std::vector<Graph> out;
    for_each_canonical_graph(budget, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

std::uint64_t count_graphs(const EnumerationBudget& budget) {
    std::uint64_t n = 0;
    for_each_canonical_graph(budget, [&](const Graph&) {
        ++n;
        return true;
    });
    return n;
}

std::vector<GraphMorphism> enumerate_subgraph_inclusions(const Graph& g) {
    std::vector<GraphMorphism> out;
    const auto& ns = g.nodes();
    const auto& es = g.edges();
    const std::size_t nn = ns.size();
    if (nn > 20 || es.size() > 20)
        throw std::invalid_argument("enumerate_subgraph_inclusions: graph too large");
    for (std::uint32_t nmask = 0; nmask < (1u << nn); ++nmask) {
        std::vector<std::string> sub_nodes;
        for (std::size_t i = 0; i < nn; ++i)
            if (nmask & (1u << i)) sub_nodes.push_back(ns[i]);
        std::vector<const Edge*> eligible;
        for (const Edge& e : es)
            if ((nmask & (1u << g.node_index(e.src))) && (nmask & (1u << g.node_index(e.tgt))))
                eligible.push_back(&e);
        const std::size_t ne = eligible.size();
        for (std::uint32_t emask = 0; emask < (1u << ne); ++emask) {
            std::vector<Edge> sub_edges;
            for (std::size_t i = 0; i < ne; ++i)
                if (emask & (1u << i)) sub_edges.push_back(*eligible[i]);
            Graph sub(sub_nodes, std::move(sub_edges));
            std::map<std::string, std::string> nm, em;
            for (const auto& n : sub.nodes()) nm[n] = n;
            for (const Edge& e : sub.edges()) em[e.id] = e.id;
            out.emplace_back(sub, g, std::move(nm), std::move(em));
        }
    }
    return out;
}

} // namespace agr
