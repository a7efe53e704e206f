#include "agr/serialization.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace agr {

namespace {

using nlohmann::json;

const json& expect(const json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw SpecError(where + ": missing field '" + key + "'");
    return *it;
}

std::string expect_string(const json& j, const std::string& key, const std::string& where) {
    const json& v = expect(j, key, where);
    if (!v.is_string()) throw SpecError(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

template <typename T>
const T& lookup(const std::map<std::string, T>& table, const std::string& name,
                const std::string& what) {
    auto it = table.find(name);
    if (it == table.end()) throw SpecError("unknown " + what + ": " + name);
    return it->second;
}

} // namespace

const Graph& SystemSpec::graph(const std::string& name) const {
    return lookup(graphs, name, "graph");
}

const GraphMorphism& SystemSpec::morphism(const std::string& name) const {
    return lookup(morphisms, name, "morphism");
}

const Production& SystemSpec::rule(const std::string& name) const {
    return lookup(rules, name, "rule");
}

const AnnotatedGraph& SystemSpec::annotated_graph(const std::string& name) const {
    return lookup(annotated, name, "annotated graph");
}

nlohmann::json graph_json(const Graph& g) {
    json nodes = json::array();
    for (const std::string& n : g.nodes()) nodes.push_back(n);
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({{"id", e.id}, {"src", e.src}, {"tgt", e.tgt}, {"label", e.label}});
    return {{"nodes", nodes}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SpecError("graph: expected an object");
    std::vector<std::string> nodes;
    for (const json& n : expect(j, "nodes", "graph")) {
        if (!n.is_string()) throw SpecError("graph: node ids must be strings");
        nodes.push_back(n.get<std::string>());
    }
    std::vector<Edge> edges;
    for (const json& e : expect(j, "edges", "graph")) {
        edges.push_back({expect_string(e, "id", "edge"), expect_string(e, "src", "edge"),
                         expect_string(e, "tgt", "edge"), expect_string(e, "label", "edge")});
    }
    return make_graph(std::move(nodes), std::move(edges));
}

nlohmann::json morphism_json(const GraphMorphism& f) {
    json nodes = json::object(), edges = json::object();
    for (const auto& [k, v] : f.node_map()) nodes[k] = v;
    for (const auto& [k, v] : f.edge_map()) edges[k] = v;
    return {{"nodes", nodes}, {"edges", edges}};
}

AnnotationFunctor functor_from_name(const std::string& name, int n) {
    if (name == "mult" || name == "B") return AnnotationFunctor::mult(n);
    if (name == "outdeg" || name == "S") return AnnotationFunctor::outdeg(n);
    if (name == "path" || name == "T") return AnnotationFunctor::path();
    throw SpecError("unknown annotation functor: " + name);
}

nlohmann::json annotation_json(const AnnotationFunctor& fun, const Graph& g,
                               const Annotation& a) {
    if (fun.kind() == AnnotationFunctor::Kind::path) {
        json pairs = json::array();
        const std::vector<std::string>& ns = g.nodes();
        int nv = static_cast<int>(ns.size());
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nv; ++j)
                if (a.paths >> (i * nv + j) & 1)
                    pairs.push_back(json::array({ns[static_cast<std::size_t>(i)],
                                                 ns[static_cast<std::size_t>(j)]}));
        return pairs;
    }
    MnMonoid mn = fun.monoid();
    json out = json::object();
    std::vector<std::string> items = fun.domain_items(g);
    for (std::size_t i = 0; i < items.size(); ++i)
        out[items[i]] = mn.render(a.at(static_cast<int>(i)));
    return out;
}

Annotation annotation_from_json(const AnnotationFunctor& fun, const Graph& g,
                                const nlohmann::json& j, bool is_upper) {
    Annotation a = is_upper ? fun.top(g) : fun.zero(g);
    if (j.is_null()) return a;
    if (fun.kind() == AnnotationFunctor::Kind::path) {
        if (!j.is_array()) throw SpecError("path annotation: expected an array of node pairs");
        a.paths = 0;
        int nv = static_cast<int>(g.nodes().size());
        for (const json& p : j) {
            if (!p.is_array() || p.size() != 2)
                throw SpecError("path annotation: each entry must be a [src, tgt] pair");
            int s = g.node_index(p[0].get<std::string>());
            int t = g.node_index(p[1].get<std::string>());
            if (s < 0 || t < 0)
                throw SpecError("path annotation: unknown node in pair");
            a.paths |= std::uint64_t{1} << (s * nv + t);
        }
        return a;
    }
    if (!j.is_object()) throw SpecError("annotation: expected an object of item values");
    MnMonoid mn = fun.monoid();
    std::vector<std::string> items = fun.domain_items(g);
    for (const auto& [key, val] : j.items()) {
        auto it = std::find(items.begin(), items.end(), key);
        if (it == items.end()) throw SpecError("annotation: unknown item: " + key);
        int v;
        if (val.is_string())
            v = mn.parse(val.get<std::string>());
        else if (val.is_number_integer())
            v = mn.parse(std::to_string(val.get<long long>()));
        else
            throw SpecError("annotation: value for " + key + " must be a string or integer");
        a.set(static_cast<int>(it - items.begin()), v);
    }
    return a;
}

SystemSpec parse_system_spec(const nlohmann::json& j) {
    if (!j.is_object()) throw SpecError("spec: expected a JSON object");
    SystemSpec spec;
    for (const json& l : expect(j, "labels", "spec")) {
        if (!l.is_string()) throw SpecError("spec: labels must be strings");
        spec.labels.push_back(l.get<std::string>());
    }

    if (auto it = j.find("graphs"); it != j.end()) {
        for (const auto& [name, gj] : it->items()) {
            Graph g = graph_from_json(gj);
            std::vector<std::string> errs = validate(g, spec.labels);
            if (!errs.empty()) throw SpecError("graph " + name + ": " + errs.front());
            spec.graphs.emplace(name, std::move(g));
        }
    }

    if (auto it = j.find("morphisms"); it != j.end()) {
        for (const auto& [name, mj] : it->items()) {
            std::string where = "morphism " + name;
            MorphismRefs refs{expect_string(mj, "from", where), expect_string(mj, "to", where)};
            const Graph& dom = lookup(spec.graphs, refs.from, "graph");
            const Graph& cod = lookup(spec.graphs, refs.to, "graph");
            std::map<std::string, std::string> nm, em;
            if (auto nit = mj.find("nodes"); nit != mj.end())
                for (const auto& [k, v] : nit->items()) nm[k] = v.template get<std::string>();
            if (auto eit = mj.find("edges"); eit != mj.end())
                for (const auto& [k, v] : eit->items()) em[k] = v.template get<std::string>();
            GraphMorphism f(dom, cod, std::move(nm), std::move(em));
            std::vector<std::string> errs = f.check();
            if (!errs.empty()) throw SpecError(where + ": " + errs.front());
            spec.morphisms.emplace(name, std::move(f));
            spec.morphism_refs.emplace(name, std::move(refs));
        }
    }

    if (auto it = j.find("rules"); it != j.end()) {
        for (const auto& [name, rj] : it->items()) {
            std::string where = "rule " + name;
            RuleRefs refs{expect_string(rj, "left", where), expect_string(rj, "interface", where),
                          expect_string(rj, "right", where), expect_string(rj, "to_left", where),
                          expect_string(rj, "to_right", where)};
            Production p{lookup(spec.graphs, refs.left, "graph"),
                         lookup(spec.graphs, refs.interface_name, "graph"),
                         lookup(spec.graphs, refs.right, "graph"),
                         lookup(spec.morphisms, refs.to_left, "morphism"),
                         lookup(spec.morphisms, refs.to_right, "morphism")};
            try {
                p.check();
            } catch (const std::exception& e) {
                throw SpecError(where + ": " + e.what());
            }
            spec.rules.emplace(name, std::move(p));
            spec.rule_refs.emplace(name, std::move(refs));
        }
    }

    if (auto it = j.find("annotated"); it != j.end()) {
        for (const auto& [name, aj] : it->items()) {
            std::string where = "annotated graph " + name;
            std::string gname = expect_string(aj, "graph", where);
            const Graph& g = lookup(spec.graphs, gname, "graph");
            std::string fname = expect_string(aj, "functor", where);
            int n = 0;
            if (auto nit = aj.find("n"); nit != aj.end()) n = nit->template get<int>();
            AnnotationFunctor fun = functor_from_name(fname, n);
            try {
                json lo = aj.contains("lower") ? aj.at("lower") : json();
                json up = aj.contains("upper") ? aj.at("upper") : json();
                spec.annotated.emplace(name,
                                       AnnotatedGraph{g, fun,
                                                      annotation_from_json(fun, g, lo, false),
                                                      annotation_from_json(fun, g, up, true)});
            } catch (const std::exception& e) {
                throw SpecError(where + ": " + e.what());
            }
            spec.annotated_graph_refs.emplace(name, gname);
        }
    }
    return spec;
}

SystemSpec load_system_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SpecError("spec file " + path + ": " + e.what());
    }
    return parse_system_spec(j);
}

nlohmann::json serialize_system_spec(const SystemSpec& spec) {
    json j;
    j["labels"] = spec.labels;
    json graphs = json::object();
    for (const auto& [name, g] : spec.graphs) graphs[name] = graph_json(g);
    j["graphs"] = graphs;
    json morphisms = json::object();
    for (const auto& [name, f] : spec.morphisms) {
        const MorphismRefs& refs = spec.morphism_refs.at(name);
        json m = morphism_json(f);
        m["from"] = refs.from;
        m["to"] = refs.to;
        morphisms[name] = m;
    }
    j["morphisms"] = morphisms;
    json rules = json::object();
    for (const auto& [name, refs] : spec.rule_refs)
        rules[name] = {{"left", refs.left},
                       {"interface", refs.interface_name},
                       {"right", refs.right},
                       {"to_left", refs.to_left},
                       {"to_right", refs.to_right}};
    j["rules"] = rules;
    json annotated = json::object();
    for (const auto& [name, a] : spec.annotated) {
        json aj;
        aj["graph"] = spec.annotated_graph_refs.at(name);
        aj["functor"] = a.functor.name();
        if (a.functor.kind() != AnnotationFunctor::Kind::path) aj["n"] = a.functor.n();
        aj["lower"] = annotation_json(a.functor, a.graph, a.lower);
        aj["upper"] = annotation_json(a.functor, a.graph, a.upper);
        annotated[name] = aj;
    }
    j["annotated"] = annotated;
    return j;
}

namespace {

std::string value_or(const std::map<std::string, std::string>& m, const std::string& k) {
    auto it = m.find(k);
    return it == m.end() ? "" : it->second;
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string render_dot_impl(const Graph& g, const GraphMorphism* image,
                            const AnnotatedGraph* ann) {
    std::set<std::string> solid_nodes, solid_edges;
    if (image) {
        for (const auto& [k, v] : image->node_map()) solid_nodes.insert(v);
        for (const auto& [k, v] : image->edge_map()) solid_edges.insert(v);
    }
    std::map<std::string, std::string> intervals;
    if (ann) {
        const AnnotationFunctor& fun = ann->functor;
        MnMonoid mn = fun.monoid();
        std::vector<std::string> items = fun.domain_items(g);
        for (std::size_t i = 0; i < items.size(); ++i)
            intervals[items[i]] = " [" + mn.render(ann->lower.at(static_cast<int>(i))) + "," +
                                  mn.render(ann->upper.at(static_cast<int>(i))) + "]";
    }
    std::ostringstream out;
    out << "digraph G {\n";
    if (ann && ann->functor.kind() == AnnotationFunctor::Kind::path)
        out << "  label=" << dot_quote("lower=" + render_annotation(ann->functor, g, ann->lower) +
                                       " upper=" +
                                       render_annotation(ann->functor, g, ann->upper))
            << ";\n";
    for (const std::string& n : g.nodes()) {
        out << "  " << dot_quote(n) << " [label=" << dot_quote(n + value_or(intervals, n));
        if (image && !solid_nodes.count(n)) out << ", style=dashed";
        out << "];\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  " << dot_quote(e.src) << " -> " << dot_quote(e.tgt)
            << " [label=" << dot_quote(e.label + value_or(intervals, e.id));
        if (image && !solid_edges.count(e.id)) out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace

std::string render_dot(const Graph& g) { return render_dot_impl(g, nullptr, nullptr); }

std::string render_dot_highlighted(const Graph& g, const GraphMorphism& image) {
    return render_dot_impl(g, &image, nullptr);
}

std::string render_dot_annotated(const AnnotatedGraph& a) {
    return render_dot_impl(a.graph, nullptr, &a);
}

} // namespace agr
