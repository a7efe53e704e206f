#include "agr/annotation.hpp"

#include "agr/hom_search.hpp"
#include "agr/limits.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace agr {

namespace {

constexpr std::size_t kPairCap = std::size_t(1) << 20;

std::uint8_t row_mask(std::uint64_t pairs, int v, int nv) {
    return static_cast<std::uint8_t>((pairs >> (v * nv)) & ((1u << nv) - 1));
}

} // namespace

int MnMonoid::parse(const std::string& s) const {
    if (s == "*") return star();
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a monoid value: " + s);
    }
    if (pos != s.size() || v < 0 || v > n_)
        throw std::invalid_argument("monoid value out of range: " + s);
    return v;
}

std::uint64_t path_plus(std::uint64_t p0, std::uint64_t p1, int nv) {
    if (nv <= 0) return 0;
    std::array<std::uint8_t, 8> q0{}, q1{}, r0{}, r1{};
    for (int v = 0; v < nv; ++v) {
        q0[v] = row_mask(p0, v, nv);
        q1[v] = row_mask(p1, v, nv);
        r0[v] = q0[v];
        r1[v] = q1[v];
    }
    // r0/r1 accumulate pairs reachable by nonempty strictly alternating
    // chains whose last step is a p0 (resp. p1) pair.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < nv; ++v) {
            std::uint8_t add0 = 0, add1 = 0;
            for (int m = 0; m < nv; ++m) {
                if (r1[v] >> m & 1) add0 |= q0[m];
                if (r0[v] >> m & 1) add1 |= q1[m];
            }
            if ((add0 & ~r0[v]) != 0) { r0[v] |= add0; changed = true; }
            if ((add1 & ~r1[v]) != 0) { r1[v] |= add1; changed = true; }
        }
    }
    std::uint64_t out = 0;
    for (int v = 0; v < nv; ++v)
        out |= static_cast<std::uint64_t>(r0[v] | r1[v]) << (v * nv);
    return out;
}

std::uint64_t path_closure(const Graph& g) {
    int nv = static_cast<int>(g.nodes().size());
    if (nv > 8) throw std::invalid_argument("path annotations support at most 8 nodes");
    std::array<std::uint8_t, 8> step{};
    for (const Edge& e : g.edges()) {
        int s = g.node_index(e.src);
        int t = g.node_index(e.tgt);
        step[s] |= static_cast<std::uint8_t>(1u << t);
    }
    std::array<std::uint8_t, 8> reach = step;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < nv; ++v) {
            std::uint8_t add = 0;
            for (int m = 0; m < nv; ++m)
                if (reach[v] >> m & 1) add |= step[m];
            if ((add & ~reach[v]) != 0) { reach[v] |= add; changed = true; }
        }
    }
    std::uint64_t out = 0;
    for (int v = 0; v < nv; ++v)
        out |= static_cast<std::uint64_t>(reach[v]) << (v * nv);
    return out;
}

std::string AnnotationFunctor::name() const {
    switch (kind_) {
        case Kind::mult: return "mult";
        case Kind::outdeg: return "outdeg";
        case Kind::path: return "path";
    }
    return "";
}

std::vector<std::string> AnnotationFunctor::domain_items(const Graph& g) const {
    std::vector<std::string> out;
    switch (kind_) {
        case Kind::mult:
            for (const std::string& v : g.nodes()) out.push_back(v);
            for (const Edge& e : g.edges()) out.push_back(e.id);
            break;
        case Kind::outdeg:
            for (const std::string& v : g.nodes()) out.push_back(v);
            break;
        case Kind::path:
            break;
    }
    return out;
}

int AnnotationFunctor::domain_size(const Graph& g) const {
    switch (kind_) {
        case Kind::mult: return static_cast<int>(g.nodes().size() + g.edges().size());
        case Kind::outdeg: return static_cast<int>(g.nodes().size());
        case Kind::path: return 0;
    }
    return 0;
}

Annotation AnnotationFunctor::zero(const Graph& g) const {
    int items = domain_size(g);
    if (items > Annotation::kMaxItems)
        throw std::invalid_argument("annotation domain too large");
    if (kind_ == Kind::path && g.nodes().size() > 8)
        throw std::invalid_argument("path annotations support at most 8 nodes");
    Annotation a;
    a.size = items;
    return a;
}

Annotation AnnotationFunctor::top(const Graph& g) const {
    Annotation a = zero(g);
    if (kind_ == Kind::path) {
        a.paths = path_closure(g);
    } else {
        for (int i = 0; i < a.size; ++i) a.set(i, monoid().star());
    }
    return a;
}

Annotation AnnotationFunctor::standard(const Graph& g) const {
    Annotation a = zero(g);
    MnMonoid mn = monoid();
    switch (kind_) {
        case Kind::mult:
            for (int i = 0; i < a.size; ++i) a.set(i, mn.cap(1));
            break;
        case Kind::outdeg: {
            for (const Edge& e : g.edges()) {
                int s = g.node_index(e.src);
                a.set(s, mn.cap(a.at(s) == mn.star() ? mn.n() + 1 : a.at(s) + 1));
            }
            break;
        }
        case Kind::path:
            a.paths = path_closure(g);
            break;
    }
    return a;
}

Annotation AnnotationFunctor::plus(const Graph& g, const Annotation& a, const Annotation& b) const {
    Annotation out = a;
    if (kind_ == Kind::path) {
        out.paths = path_plus(a.paths, b.paths, static_cast<int>(g.nodes().size()));
        return out;
    }
    MnMonoid mn = monoid();
    for (int i = 0; i < out.size; ++i) out.set(i, mn.plus(a.at(i), b.at(i)));
    return out;
}

Annotation AnnotationFunctor::minus(const Graph& g, const Annotation& a, const Annotation& b) const {
    (void)g;
    Annotation out = a;
    if (kind_ == Kind::path) return out;  // set difference is not used; minus keeps the first argument
    MnMonoid mn = monoid();
    for (int i = 0; i < out.size; ++i) out.set(i, mn.minus(a.at(i), b.at(i)));
    return out;
}

bool AnnotationFunctor::leq(const Graph& g, const Annotation& a, const Annotation& b) const {
    (void)g;
    if (kind_ == Kind::path) return (a.paths & ~b.paths) == 0;
    MnMonoid mn = monoid();
    for (int i = 0; i < a.size; ++i)
        if (!mn.leq(a.at(i), b.at(i))) return false;
    return true;
}

IndexedMorphism AnnotationFunctor::index(const GraphMorphism& f) const {
    IndexedMorphism ix;
    const Graph& d = f.dom();
    const Graph& c = f.cod();
    ix.cod_nodes = static_cast<int>(c.nodes().size());
    ix.cod_edges = static_cast<int>(c.edges().size());
    ix.node_to.reserve(d.nodes().size());
    for (const std::string& v : d.nodes()) ix.node_to.push_back(c.node_index(f.node(v)));
    if (kind_ == Kind::mult) {
        ix.edge_to.reserve(d.edges().size());
        for (const Edge& e : d.edges()) ix.edge_to.push_back(c.edge_index(f.edge(e.id)));
    }
    return ix;
}

Annotation AnnotationFunctor::apply_indexed(const IndexedMorphism& ix, const Annotation& a) const {
    Annotation out;
    MnMonoid mn = monoid();
    switch (kind_) {
        case Kind::mult: {
            out.size = ix.cod_nodes + ix.cod_edges;
            int nn = static_cast<int>(ix.node_to.size());
            for (int i = 0; i < nn; ++i) {
                int p = ix.node_to[i];
                out.set(p, mn.plus(out.at(p), a.at(i)));
            }
            for (std::size_t j = 0; j < ix.edge_to.size(); ++j) {
                int p = ix.cod_nodes + ix.edge_to[j];
                out.set(p, mn.plus(out.at(p), a.at(nn + static_cast<int>(j))));
            }
            break;
        }
        case Kind::outdeg: {
            out.size = ix.cod_nodes;
            for (std::size_t i = 0; i < ix.node_to.size(); ++i) {
                int p = ix.node_to[i];
                int v = a.at(static_cast<int>(i));
                if (mn.leq(out.at(p), v)) out.set(p, v);
            }
            break;
        }
        case Kind::path: {
            int dn = static_cast<int>(ix.node_to.size());
            std::uint64_t pairs = a.paths;
            while (pairs != 0) {
                int bit = std::countr_zero(pairs);
                pairs &= pairs - 1;
                int i = bit / dn;
                int j = bit % dn;
                out.paths |= std::uint64_t(1) << (ix.node_to[i] * ix.cod_nodes + ix.node_to[j]);
            }
            break;
        }
    }
    return out;
}

Annotation AnnotationFunctor::red_indexed(const IndexedMorphism& ix, const Annotation& b) const {
    if (kind_ != Kind::mult)
        throw CapabilityAbsent(name() + " has no reduction");
    Annotation out;
    int nn = static_cast<int>(ix.node_to.size());
    out.size = nn + static_cast<int>(ix.edge_to.size());
    for (int i = 0; i < nn; ++i) out.set(i, b.at(ix.node_to[i]));
    for (std::size_t j = 0; j < ix.edge_to.size(); ++j)
        out.set(nn + static_cast<int>(j), b.at(ix.cod_nodes + ix.edge_to[j]));
    return out;
}

Annotation AnnotationFunctor::apply(const GraphMorphism& f, const Annotation& a) const {
    return apply_indexed(index(f), a);
}

Annotation AnnotationFunctor::red(const GraphMorphism& f, const Annotation& b) const {
    if (!is_mono(f)) throw std::invalid_argument("red requires a mono");
    return red_indexed(index(f), b);
}

std::vector<Annotation> AnnotationFunctor::enumerate(const Graph& g) const {
    std::vector<Annotation> out;
    if (kind_ == Kind::path) {
        std::uint64_t mask = path_closure(g);
        // all submasks of the connectivity closure, ascending
        std::uint64_t sub = 0;
        while (true) {
            Annotation a;
            a.paths = sub;
            out.push_back(a);
            if (sub == mask) break;
            sub = (sub - mask) & mask;
        }
        return out;
    }
    int items = domain_size(g);
    if (items > Annotation::kMaxItems)
        throw std::invalid_argument("annotation domain too large");
    int base = monoid().star() + 1;
    double count = std::pow(static_cast<double>(base), items);
    if (count > static_cast<double>(std::size_t(1) << 22))
        throw std::invalid_argument("annotation carrier too large to enumerate");
    Annotation a = zero(g);
    while (true) {
        out.push_back(a);
        int i = 0;
        for (; i < items; ++i) {
            if (a.at(i) + 1 < base) {
                a.set(i, a.at(i) + 1);
                break;
            }
            a.set(i, 0);
        }
        if (i == items) break;
    }
    return out;
}

std::string property_name(AnnotationProperty p) {
    switch (p) {
        case AnnotationProperty::homomorphism: return "homomorphism";
        case AnnotationProperty::adjunction: return "adjunction";
        case AnnotationProperty::pushout: return "pushout";
        case AnnotationProperty::pushout_standard: return "pushout-standard";
        case AnnotationProperty::beck_chevalley: return "beck-chevalley";
        case AnnotationProperty::isomorphism: return "isomorphism";
    }
    return "";
}

std::string render_annotation(const AnnotationFunctor& fun, const Graph& g, const Annotation& a) {
    std::ostringstream os;
    if (fun.kind() == AnnotationFunctor::Kind::path) {
        os << "{";
        bool first = true;
        int nv = static_cast<int>(g.nodes().size());
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nv; ++j)
                if (a.paths >> (i * nv + j) & 1) {
                    if (!first) os << ",";
                    first = false;
                    os << "(" << g.nodes()[i] << "," << g.nodes()[j] << ")";
                }
        os << "}";
        return os.str();
    }
    MnMonoid mn = fun.monoid();
    std::vector<std::string> items = fun.domain_items(g);
    os << "{";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) os << ",";
        os << items[i] << "=" << mn.render(a.at(static_cast<int>(i)));
    }
    os << "}";
    return os.str();
}

namespace {

// Bounded-exhaustive context: every graph class within the budget plus an
// index for recognizing subgraphs, with annotation carriers cached per class.
struct Battery {
    AnnotationFunctor fun;
    EnumerationBudget budget;
    std::vector<Graph> graphs;
    std::unordered_map<std::string, int> index_of;
    std::vector<std::vector<Annotation>> anns_;
    std::vector<bool> anns_ready_;

    Battery(const AnnotationFunctor& f, const EnumerationBudget& b) : fun(f), budget(b) {
        graphs = enumerate_graphs(budget);
        for (std::size_t i = 0; i < graphs.size(); ++i)
            index_of[canonical_encoding(graphs[i], budget.labels)] = static_cast<int>(i);
        anns_.resize(graphs.size());
        anns_ready_.assign(graphs.size(), false);
    }

    int class_index(const Graph& g) const {
        auto it = index_of.find(canonical_encoding(g, budget.labels));
        return it == index_of.end() ? -1 : it->second;
    }

    const std::vector<Annotation>& anns(int gi) {
        if (!anns_ready_[static_cast<std::size_t>(gi)]) {
            anns_[static_cast<std::size_t>(gi)] = fun.enumerate(graphs[static_cast<std::size_t>(gi)]);
            anns_ready_[static_cast<std::size_t>(gi)] = true;
        }
        return anns_[static_cast<std::size_t>(gi)];
    }
};

struct MonoCase {
    int dom = -1;
    int cod = -1;
    GraphMorphism m;
};

// One mono per (codomain, image subgraph), with the domain normalized to its
// class representative; properties are invariant under precomposition with
// isos, so this covers all monos within the budget.
std::vector<MonoCase> mono_cases(Battery& B) {
    std::vector<MonoCase> out;
    for (std::size_t h = 0; h < B.graphs.size(); ++h) {
        for (const GraphMorphism& incl : enumerate_subgraph_inclusions(B.graphs[h])) {
            int g = B.class_index(incl.dom());
            if (g < 0) continue;
            std::optional<GraphMorphism> iso = find_iso(B.graphs[static_cast<std::size_t>(g)], incl.dom());
            if (!iso) continue;
            out.push_back({g, static_cast<int>(h), compose(*iso, incl)});
        }
    }
    return out;
}

std::string render_map(const GraphMorphism& f) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const std::string& v : f.dom().nodes()) {
        if (!first) os << ",";
        first = false;
        os << v << "->" << f.node(v);
    }
    for (const Edge& e : f.dom().edges()) {
        if (!first) os << ",";
        first = false;
        os << e.id << "->" << f.edge(e.id);
    }
    os << "}";
    return os.str();
}

// Visits (i, j) over [0,count)^2, or a deterministic stride sample of about
// kPairCap pairs when the full square is too large. The visitor returns
// false to stop.
template <typename F>
bool for_each_pair_index(std::size_t count, F&& fn) {
    if (count == 0) return true;
    if (count * count <= kPairCap) {
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j)
                if (!fn(i, j)) return false;
        return true;
    }
    std::size_t per = std::max<std::size_t>(1, kPairCap / count);
    std::size_t step = std::max<std::size_t>(1, count / per);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t j = (i * 2654435761u) % count;
        for (std::size_t t = 0; t < per; ++t) {
            if (!fn(i, j)) return false;
            j += step;
            if (j >= count) j -= count;
        }
    }
    return true;
}

// Visits all pairs a <= b of annotations of g. Exhaustive: the count is
// bounded by product over items of the number of ordered value pairs.
template <typename F>
bool for_each_leq_pair(const AnnotationFunctor& fun, const Graph& g, F&& fn) {
    if (fun.kind() == AnnotationFunctor::Kind::path) {
        std::uint64_t mask = path_closure(g);
        // per pair bit: (0,0), (0,1) or (1,1)
        std::vector<int> bits;
        for (int i = 0; i < 64; ++i)
            if (mask >> i & 1) bits.push_back(i);
        std::vector<int> state(bits.size(), 0);
        while (true) {
            Annotation a, b;
            for (std::size_t k = 0; k < bits.size(); ++k) {
                if (state[k] >= 1) b.paths |= std::uint64_t(1) << bits[k];
                if (state[k] == 2) a.paths |= std::uint64_t(1) << bits[k];
            }
            if (!fn(a, b)) return false;
            std::size_t k = 0;
            for (; k < state.size(); ++k) {
                if (state[k] < 2) {
                    ++state[k];
                    break;
                }
                state[k] = 0;
            }
            if (k == state.size()) break;
        }
        return true;
    }
    MnMonoid mn = fun.monoid();
    int items = fun.domain_size(g);
    int star = mn.star();
    Annotation a = fun.zero(g), b = fun.zero(g);
    // odometer over per-item pairs (v, w) with v <= w
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == items) return fn(a, b);
        for (int v = 0; v <= star; ++v) {
            for (int w = 0; w <= star; ++w) {
                if (!mn.leq(v, w)) continue;
                a.set(i, v);
                b.set(i, w);
                if (!rec(i + 1)) return false;
            }
        }
        return true;
    };
    return rec(0);
}

PropertyOutcome fail(std::string detail) {
    return {PropertyOutcome::Status::fail, std::move(detail)};
}

PropertyOutcome check_homomorphism(Battery& B) {
    for (const MonoCase& mc : mono_cases(B)) {
        const Graph& g = B.graphs[static_cast<std::size_t>(mc.dom)];
        const Graph& h = B.graphs[static_cast<std::size_t>(mc.cod)];
        IndexedMorphism ix = B.fun.index(mc.m);
        std::string where = "G=" + canonical_encoding(g, B.budget.labels) + " H=" + canonical_encoding(h, B.budget.labels) +
                            " mono=" + render_map(mc.m);
        if (B.fun.apply_indexed(ix, B.fun.zero(g)) != B.fun.zero(h))
            return fail("zero not preserved: " + where);
        const std::vector<Annotation>& as = B.anns(mc.dom);
        std::string bad;
        for_each_pair_index(as.size(), [&](std::size_t i, std::size_t j) {
            const Annotation& a = as[i];
            const Annotation& b = as[j];
            if (B.fun.apply_indexed(ix, B.fun.plus(g, a, b)) !=
                B.fun.plus(h, B.fun.apply_indexed(ix, a), B.fun.apply_indexed(ix, b))) {
                bad = "plus not preserved: " + where + " a=" + render_annotation(B.fun, g, a) +
                      " b=" + render_annotation(B.fun, g, b);
                return false;
            }
            if (B.fun.apply_indexed(ix, B.fun.minus(g, a, b)) !=
                B.fun.minus(h, B.fun.apply_indexed(ix, a), B.fun.apply_indexed(ix, b))) {
                bad = "minus not preserved: " + where + " a=" + render_annotation(B.fun, g, a) +
                      " b=" + render_annotation(B.fun, g, b);
                return false;
            }
            return true;
        });
        if (!bad.empty()) return fail(bad);
        for_each_leq_pair(B.fun, g, [&](const Annotation& a, const Annotation& b) {
            if (!B.fun.leq(h, B.fun.apply_indexed(ix, a), B.fun.apply_indexed(ix, b))) {
                bad = "monotonicity violated: " + where + " a=" + render_annotation(B.fun, g, a) +
                      " b=" + render_annotation(B.fun, g, b);
                return false;
            }
            return true;
        });
        if (!bad.empty()) return fail(bad);
    }
    return {};
}

PropertyOutcome check_adjunction(Battery& B) {
    if (!B.fun.has_red())
        return {PropertyOutcome::Status::capability_absent, B.fun.name() + " has no reduction"};
    for (const MonoCase& mc : mono_cases(B)) {
        const Graph& g = B.graphs[static_cast<std::size_t>(mc.dom)];
        const Graph& h = B.graphs[static_cast<std::size_t>(mc.cod)];
        IndexedMorphism ix = B.fun.index(mc.m);
        std::string where = "G=" + canonical_encoding(g, B.budget.labels) + " H=" + canonical_encoding(h, B.budget.labels) +
                            " mono=" + render_map(mc.m);
        if (B.fun.red_indexed(ix, B.fun.zero(h)) != B.fun.zero(g))
            return fail("red does not preserve zero: " + where);
        if (B.fun.red_indexed(ix, B.fun.standard(h)) != B.fun.standard(g))
            return fail("red does not preserve the standard annotation: " + where);
        const std::vector<Annotation>& bs = B.anns(mc.cod);
        std::string bad;
        for_each_pair_index(bs.size(), [&](std::size_t i, std::size_t j) {
            const Annotation& b = bs[i];
            const Annotation& b2 = bs[j];
            if (B.fun.red_indexed(ix, B.fun.plus(h, b, b2)) !=
                B.fun.plus(g, B.fun.red_indexed(ix, b), B.fun.red_indexed(ix, b2))) {
                bad = "red does not preserve plus: " + where + " b=" + render_annotation(B.fun, h, b) +
                      " b'=" + render_annotation(B.fun, h, b2);
                return false;
            }
            if (B.fun.red_indexed(ix, B.fun.minus(h, b, b2)) !=
                B.fun.minus(g, B.fun.red_indexed(ix, b), B.fun.red_indexed(ix, b2))) {
                bad = "red does not preserve minus: " + where + " b=" + render_annotation(B.fun, h, b) +
                      " b'=" + render_annotation(B.fun, h, b2);
                return false;
            }
            return true;
        });
        if (!bad.empty()) return fail(bad);
        for_each_leq_pair(B.fun, h, [&](const Annotation& b, const Annotation& b2) {
            if (!B.fun.leq(g, B.fun.red_indexed(ix, b), B.fun.red_indexed(ix, b2))) {
                bad = "red not monotone: " + where + " b=" + render_annotation(B.fun, h, b) +
                      " b'=" + render_annotation(B.fun, h, b2);
                return false;
            }
            return true;
        });
        if (!bad.empty()) return fail(bad);
        for (const Annotation& a : B.anns(mc.dom)) {
            if (!B.fun.leq(g, a, B.fun.red_indexed(ix, B.fun.apply_indexed(ix, a))))
                return fail("unit inequality fails: " + where + " a=" + render_annotation(B.fun, g, a));
        }
        for (const Annotation& b : bs) {
            if (!B.fun.leq(h, B.fun.apply_indexed(ix, B.fun.red_indexed(ix, b)), b))
                return fail("counit inequality fails: " + where + " b=" + render_annotation(B.fun, h, b));
        }
    }
    return {};
}

// Spans of monos B <- A -> C with the pushout apex still inside the budget.
template <typename F>
PropertyOutcome for_each_pushout_square(Battery& B, bool need_red, F&& fn) {
    if (need_red && !B.fun.has_red())
        return {PropertyOutcome::Status::capability_absent, B.fun.name() + " has no reduction"};
    for (const MonoCase& mc : mono_cases(B)) {
        const Graph& a = B.graphs[static_cast<std::size_t>(mc.dom)];
        for (std::size_t c = 0; c < B.graphs.size(); ++c) {
            for (const GraphMorphism& phi2 : enumerate_monos(a, B.graphs[c])) {
                CospanResult po = pushout(mc.m, phi2);
                if (static_cast<int>(po.apex.nodes().size()) > B.budget.max_nodes) continue;
                if (static_cast<int>(po.apex.edges().size()) > B.budget.max_edges) continue;
                PropertyOutcome out = fn(mc.m, phi2, po);
                if (out.status != PropertyOutcome::Status::pass) return out;
            }
        }
    }
    return {};
}

PropertyOutcome check_pushout(Battery& B) {
    return for_each_pushout_square(B, true, [&](const GraphMorphism& phi1, const GraphMorphism& phi2,
                                                const CospanResult& po) -> PropertyOutcome {
        const Graph& d = po.apex;
        IndexedMorphism ix1 = B.fun.index(po.left);
        IndexedMorphism ix2 = B.fun.index(po.right);
        IndexedMorphism ixe = B.fun.index(compose(phi1, po.left));
        for (const Annotation& v : B.fun.enumerate(d)) {
            Annotation t1 = B.fun.apply_indexed(ix1, B.fun.red_indexed(ix1, v));
            Annotation t2 = B.fun.apply_indexed(ix2, B.fun.red_indexed(ix2, v));
            Annotation t3 = B.fun.apply_indexed(ixe, B.fun.red_indexed(ixe, v));
            if (v != B.fun.plus(d, t1, B.fun.minus(d, t2, t3)))
                return fail("pushout decomposition fails: A=" + canonical_encoding(phi1.dom(), B.budget.labels) +
                            " B=" + canonical_encoding(phi1.cod(), B.budget.labels) +
                            " C=" + canonical_encoding(phi2.cod(), B.budget.labels) +
                            " d=" + render_annotation(B.fun, d, v));
        }
        return {};
    });
}

PropertyOutcome check_pushout_standard(Battery& B) {
    return for_each_pushout_square(B, false, [&](const GraphMorphism& phi1, const GraphMorphism& phi2,
                                                 const CospanResult& po) -> PropertyOutcome {
        const Graph& d = po.apex;
        Annotation lhs = B.fun.standard(d);
        Annotation t1 = B.fun.apply(po.left, B.fun.standard(phi1.cod()));
        Annotation t2 = B.fun.apply(po.right, B.fun.standard(phi2.cod()));
        Annotation t3 = B.fun.apply(compose(phi1, po.left), B.fun.standard(phi1.dom()));
        if (lhs != B.fun.plus(d, t1, B.fun.minus(d, t2, t3)))
            return fail("standard annotation not glued: A=" + canonical_encoding(phi1.dom(), B.budget.labels) +
                        " B=" + canonical_encoding(phi1.cod(), B.budget.labels) +
                        " C=" + canonical_encoding(phi2.cod(), B.budget.labels));
        return {};
    });
}

PropertyOutcome check_beck_chevalley(Battery& B) {
    if (!B.fun.has_red())
        return {PropertyOutcome::Status::capability_absent, B.fun.name() + " has no reduction"};
    for (std::size_t d = 0; d < B.graphs.size(); ++d) {
        for (const GraphMorphism& incl : enumerate_subgraph_inclusions(B.graphs[d])) {
            int ci = B.class_index(incl.dom());
            if (ci < 0) continue;
            std::optional<GraphMorphism> iso = find_iso(B.graphs[static_cast<std::size_t>(ci)], incl.dom());
            if (!iso) continue;
            GraphMorphism psi2 = compose(*iso, incl);
            for (std::size_t bi = 0; bi < B.graphs.size(); ++bi) {
                for (const GraphMorphism& psi1 : enumerate_homs(B.graphs[bi], B.graphs[d])) {
                    CospanResult pb = pullback(psi1, psi2);
                    IndexedMorphism ixp1 = B.fun.index(pb.left);
                    IndexedMorphism ixp2 = B.fun.index(pb.right);
                    IndexedMorphism ixq1 = B.fun.index(psi1);
                    IndexedMorphism ixq2 = B.fun.index(psi2);
                    for (const Annotation& b : B.anns(static_cast<int>(bi))) {
                        Annotation lhs = B.fun.apply_indexed(ixp2, B.fun.red_indexed(ixp1, b));
                        Annotation rhs = B.fun.red_indexed(ixq2, B.fun.apply_indexed(ixq1, b));
                        if (lhs != rhs)
                            return fail("beck-chevalley fails: B=" + canonical_encoding(B.graphs[bi], B.budget.labels) +
                                        " C=" + canonical_encoding(psi2.dom(), B.budget.labels) +
                                        " D=" + canonical_encoding(B.graphs[d], B.budget.labels) +
                                        " psi1=" + render_map(psi1) +
                                        " b=" + render_annotation(B.fun, B.graphs[bi], b));
                    }
                }
            }
        }
    }
    return {};
}

PropertyOutcome check_isomorphism(Battery& B) {
    for (std::size_t x = 0; x < B.graphs.size(); ++x) {
        Annotation sx = B.fun.standard(B.graphs[x]);
        for (std::size_t y = 0; y < B.graphs.size(); ++y) {
            Annotation sy = B.fun.standard(B.graphs[y]);
            for (const GraphMorphism& psi : enumerate_homs(B.graphs[x], B.graphs[y])) {
                bool preserves = B.fun.apply(psi, sx) == sy;
                bool iso = is_iso(psi);
                if (preserves && !iso)
                    return fail("standard-preserving morphism is not an iso: X=" +
                                canonical_encoding(B.graphs[x], B.budget.labels) + " Y=" + canonical_encoding(B.graphs[y], B.budget.labels) +
                                " psi=" + render_map(psi));
                if (iso && !preserves)
                    return fail("iso does not preserve the standard annotation: X=" +
                                canonical_encoding(B.graphs[x], B.budget.labels) + " Y=" + canonical_encoding(B.graphs[y], B.budget.labels) +
                                " psi=" + render_map(psi));
            }
        }
    }
    return {};
}

} // namespace

PropertyOutcome check_property(const AnnotationFunctor& fun, AnnotationProperty prop,
                               const EnumerationBudget& budget) {
    Battery B(fun, budget);
    switch (prop) {
        case AnnotationProperty::homomorphism: return check_homomorphism(B);
        case AnnotationProperty::adjunction: return check_adjunction(B);
        case AnnotationProperty::pushout: return check_pushout(B);
        case AnnotationProperty::pushout_standard: return check_pushout_standard(B);
        case AnnotationProperty::beck_chevalley: return check_beck_chevalley(B);
        case AnnotationProperty::isomorphism: return check_isomorphism(B);
    }
    throw std::invalid_argument("unknown property");
}

PropertyOutcome check_well_behaved_subtraction(const AnnotationFunctor& fun,
                                               const EnumerationBudget& budget) {
    for (const Graph& g : enumerate_graphs(budget)) {
        Annotation z = fun.zero(g);
        for (const Annotation& a : fun.enumerate(g)) {
            if (fun.minus(g, a, a) != z)
                return {PropertyOutcome::Status::fail,
                        "a - a != 0: G=" + canonical_encoding(g, budget.labels) + " a=" + render_annotation(fun, g, a)};
        }
        std::string bad;
        for_each_leq_pair(fun, g, [&](const Annotation& b, const Annotation& a) {
            // b <= a must give (a - b) + b = a
            if (fun.plus(g, fun.minus(g, a, b), b) != a) {
                bad = "(a - b) + b != a: G=" + canonical_encoding(g, budget.labels) +
                      " a=" + render_annotation(fun, g, a) + " b=" + render_annotation(fun, g, b);
                return false;
            }
            return true;
        });
        if (!bad.empty()) return {PropertyOutcome::Status::fail, bad};
    }
    return {};
}

} // namespace agr
