#include "agr/abstract_rewrite.hpp"

#include "agr/hom_search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace agr {

namespace {

std::string render_morphism(const GraphMorphism& f) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : f.node_map()) {
        if (!first) s += ",";
        first = false;
        s += k + "->" + v;
    }
    s += ";";
    first = true;
    for (const auto& [k, v] : f.edge_map()) {
        if (!first) s += ",";
        first = false;
        s += k + "->" + v;
    }
    return s + "}";
}

// First legal arrow x[sx, sx] -> a, with the standard annotation precomputed.
std::optional<GraphMorphism> find_legal_arrow(const Graph& x, const Annotation& sx,
                                              const AnnotatedGraph& a) {
    const AnnotationFunctor& fun = a.functor;
    std::optional<GraphMorphism> found;
    for_each_hom(x, a.graph, {}, [&](const GraphMorphism& psi) {
        Annotation v = fun.apply(psi, sx);
        if (fun.leq(a.graph, a.lower, v) && fun.leq(a.graph, v, a.upper)) {
            found = psi;
            return false;
        }
        return true;
    });
    return found;
}

// Flat item position (nodes first, then edges) of each domain item's image.
std::vector<int> flat_image(const IndexedMorphism& ix) {
    std::vector<int> out;
    out.reserve(ix.node_to.size() + ix.edge_to.size());
    for (int p : ix.node_to) out.push_back(p);
    for (int p : ix.edge_to) out.push_back(ix.cod_nodes + p);
    return out;
}

bool vec_le(const std::vector<int>& x, const std::vector<int>& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > y[i]) return false;
    return true;
}

void insert_extremal(std::vector<std::vector<int>>& kept, const std::vector<int>& cand,
                     bool keep_minimal) {
    for (const std::vector<int>& k : kept) {
        bool k_wins = keep_minimal ? vec_le(k, cand) : vec_le(cand, k);
        if (k_wins) return;
    }
    kept.erase(std::remove_if(kept.begin(), kept.end(),
                              [&](const std::vector<int>& k) {
                                  return keep_minimal ? vec_le(cand, k) : vec_le(k, cand);
                              }),
               kept.end());
    kept.push_back(cand);
}

// Extremal per-slot value vectors within the given inclusive ranges whose
// monoid sum is >= bound (lower side, minimal solutions) or <= bound (upper
// side, maximal solutions). Values use the monoid encoding, so integer order
// on them coincides with the monoid order.
std::vector<std::vector<int>> extremal_fiber(const MnMonoid& mn,
                                             const std::vector<std::pair<int, int>>& rng,
                                             int bound, bool lower_side) {
    auto pick = [&](bool hi) {
        std::vector<int> v;
        v.reserve(rng.size());
        for (const auto& r : rng) v.push_back(hi ? r.second : r.first);
        return v;
    };
    auto fold = [&](const std::vector<int>& v) {
        int s = 0;
        for (int x : v) s = mn.plus(s, x);
        return s;
    };
    std::vector<int> lo = pick(false), hi = pick(true);
    int lo_sum = fold(lo), hi_sum = fold(hi);
    std::vector<std::vector<int>> out;
    if (lower_side) {
        if (!mn.leq(bound, hi_sum)) return out;
        if (mn.leq(bound, lo_sum)) {
            out.push_back(lo);
            return out;
        }
    } else {
        if (!mn.leq(lo_sum, bound)) return out;
        if (mn.leq(hi_sum, bound)) {
            out.push_back(hi);
            return out;
        }
    }
    long long total = 1;
    for (const auto& r : rng) {
        total *= r.second - r.first + 1;
        if (total > (1 << 20))
            throw std::invalid_argument("annotated_materializations: fiber too large");
    }
    std::vector<int> cur = lo;
    while (true) {
        int s = fold(cur);
        bool sat = lower_side ? mn.leq(bound, s) : mn.leq(s, bound);
        if (sat) insert_extremal(out, cur, lower_side);
        std::size_t k = 0;
        for (; k < rng.size(); ++k) {
            if (cur[k] < rng[k].second) {
                ++cur[k];
                break;
            }
            cur[k] = rng[k].first;
        }
        if (k == rng.size()) break;
    }
    return out;
}

void insert_extremal_ann(const AnnotationFunctor& fun, const Graph& g,
                         std::vector<Annotation>& kept, const Annotation& cand,
                         bool keep_minimal) {
    for (const Annotation& k : kept) {
        bool k_wins = keep_minimal ? fun.leq(g, k, cand) : fun.leq(g, cand, k);
        if (k_wins) return;
    }
    kept.erase(std::remove_if(kept.begin(), kept.end(),
                              [&](const Annotation& k) {
                                  return keep_minimal ? fun.leq(g, cand, k) : fun.leq(g, k, cand);
                              }),
               kept.end());
    kept.push_back(cand);
}

constexpr long long kPairCapacity = 4096;

} // namespace

AnnotatedGraph with_default_bounds(const Graph& g, const AnnotationFunctor& fun) {
    return {g, fun, fun.zero(g), fun.top(g)};
}

bool is_legal(const GraphMorphism& psi, const AnnotatedGraph& src, const AnnotatedGraph& dst) {
    if (!(src.functor == dst.functor))
        throw std::invalid_argument("is_legal: annotation functors differ");
    if (!(psi.dom() == src.graph) || !(psi.cod() == dst.graph))
        throw std::invalid_argument("is_legal: morphism endpoints do not match");
    const AnnotationFunctor& fun = src.functor;
    Annotation l = fun.apply(psi, src.lower);
    Annotation u = fun.apply(psi, src.upper);
    return fun.leq(dst.graph, dst.lower, l) && fun.leq(dst.graph, u, dst.upper);
}

std::optional<GraphMorphism> member(const Graph& x, const AnnotatedGraph& a) {
    return find_legal_arrow(x, a.functor.standard(x), a);
}

std::set<std::string> annotated_language(const AnnotatedGraph& a,
                                         const EnumerationBudget& budget) {
    std::set<std::string> out;
    for_each_canonical_graph(budget, [&](const Graph& x) {
        if (member(x, a)) out.insert(canonical_encoding(x, budget.labels));
        return true;
    });
    return out;
}

std::vector<AnnPair> annotated_materializations(const AnnotatedGraph& a,
                                                const RewritableMaterialization& rm,
                                                StepMode mode) {
    const AnnotationFunctor& fun = a.functor;
    if (!(a.graph == rm.base.phi.cod()))
        throw std::invalid_argument("annotated_materializations: annotation is not on cod(phi)");
    if (mode == StepMode::hook && !fun.has_red())
        throw CapabilityAbsent(fun.name() + " has no reduction; hook mode is unavailable");

    const Graph& rmat = rm.rmat;
    const Graph& l = rm.base.phi.dom();
    Annotation s_l = fun.standard(l);
    IndexedMorphism ix_psi = fun.index(rm.psi);
    IndexedMorphism ix_nl = fun.index(rm.n_l);

    std::vector<Annotation> lowers, uppers;

    if (fun.kind() == AnnotationFunctor::Kind::mult) {
        // Constraints decompose along the fibers of psi, so each fiber is
        // solved on its own and the solutions multiply out.
        MnMonoid mn = fun.monoid();
        int star = mn.star();
        int items = fun.domain_size(rmat);
        int a_items = fun.domain_size(a.graph);
        std::vector<int> to_a = flat_image(ix_psi);
        std::vector<int> matched(static_cast<std::size_t>(items), -1);
        {
            std::vector<int> l_to = flat_image(ix_nl);
            for (std::size_t li = 0; li < l_to.size(); ++li)
                matched[static_cast<std::size_t>(l_to[li])] = s_l.at(static_cast<int>(li));
        }
        std::vector<std::pair<int, int>> lo_rng(static_cast<std::size_t>(items), {0, star});
        std::vector<std::pair<int, int>> up_rng = lo_rng;
        for (int j = 0; j < items; ++j) {
            int v = matched[static_cast<std::size_t>(j)];
            if (v < 0) continue;
            if (mode == StepMode::hook) {
                lo_rng[static_cast<std::size_t>(j)] = {v, v};
                up_rng[static_cast<std::size_t>(j)] = {v, v};
            } else {
                up_rng[static_cast<std::size_t>(j)].first = v;
            }
        }
        std::vector<std::vector<int>> fiber(static_cast<std::size_t>(a_items));
        for (int j = 0; j < items; ++j)
            fiber[static_cast<std::size_t>(to_a[static_cast<std::size_t>(j)])].push_back(j);

        std::vector<std::vector<std::vector<int>>> lo_sol(static_cast<std::size_t>(a_items));
        std::vector<std::vector<std::vector<int>>> up_sol(static_cast<std::size_t>(a_items));
        for (int i = 0; i < a_items; ++i) {
            std::vector<std::pair<int, int>> lr, ur;
            for (int j : fiber[static_cast<std::size_t>(i)]) {
                lr.push_back(lo_rng[static_cast<std::size_t>(j)]);
                ur.push_back(up_rng[static_cast<std::size_t>(j)]);
            }
            lo_sol[static_cast<std::size_t>(i)] = extremal_fiber(mn, lr, a.lower.at(i), true);
            up_sol[static_cast<std::size_t>(i)] = extremal_fiber(mn, ur, a.upper.at(i), false);
            if (lo_sol[static_cast<std::size_t>(i)].empty() ||
                up_sol[static_cast<std::size_t>(i)].empty())
                return {};
        }

        Annotation base = fun.zero(rmat);
        auto assemble = [&](const std::vector<std::vector<std::vector<int>>>& sol) {
            long long count = 1;
            for (const auto& s : sol) {
                count *= static_cast<long long>(s.size());
                if (count > kPairCapacity)
                    throw std::invalid_argument(
                        "annotated_materializations: too many extremal annotations");
            }
            std::vector<Annotation> out;
            std::vector<std::size_t> choice(static_cast<std::size_t>(a_items), 0);
            while (true) {
                Annotation ann = base;
                for (int i = 0; i < a_items; ++i) {
                    const std::vector<int>& vals =
                        sol[static_cast<std::size_t>(i)][choice[static_cast<std::size_t>(i)]];
                    const std::vector<int>& slots = fiber[static_cast<std::size_t>(i)];
                    for (std::size_t s = 0; s < slots.size(); ++s)
                        ann.set(slots[s], vals[s]);
                }
                out.push_back(ann);
                std::size_t k = 0;
                for (; k < choice.size(); ++k) {
                    if (choice[k] + 1 < sol[k].size()) {
                        ++choice[k];
                        break;
                    }
                    choice[k] = 0;
                }
                if (k == choice.size()) break;
            }
            return out;
        };
        lowers = assemble(lo_sol);
        uppers = assemble(up_sol);
    } else {
        // Small carriers: filter the full enumeration on each side and keep
        // the extremal elements.
        Annotation nlsl = fun.apply_indexed(ix_nl, s_l);
        for (const Annotation& cand : fun.enumerate(rmat)) {
            Annotation img = fun.apply_indexed(ix_psi, cand);
            if (fun.leq(a.graph, a.lower, img))
                insert_extremal_ann(fun, rmat, lowers, cand, true);
            if (fun.leq(a.graph, img, a.upper) &&
                (mode != StepMode::squiggle || fun.leq(rmat, nlsl, cand)))
                insert_extremal_ann(fun, rmat, uppers, cand, false);
        }
    }

    if (static_cast<long long>(lowers.size()) * static_cast<long long>(uppers.size()) >
        kPairCapacity)
        throw std::invalid_argument("annotated_materializations: too many annotation pairs");
    std::vector<AnnPair> out;
    for (const Annotation& lo : lowers)
        for (const Annotation& up : uppers) out.push_back({lo, up});
    return out;
}

AbstractStep abstract_step(const AnnotatedGraph& a, const Production& p, const GraphMorphism& phi,
                           StepMode mode) {
    p.check();
    const AnnotationFunctor& fun = a.functor;
    if (!(phi.dom() == p.left))
        throw std::invalid_argument("abstract_step: dom(phi) must be the rule's left-hand side");
    if (!(phi.cod() == a.graph))
        throw std::invalid_argument("abstract_step: cod(phi) must be the annotated graph");

    RewritableMaterialization rm = rewritable_materialize(phi, p.phi_l);
    std::vector<AnnPair> mats = annotated_materializations(a, rm, mode);
    std::optional<DpoTrace> tr = dpo_step(p, rm.n_l);
    if (!tr) throw std::logic_error("abstract_step: rule does not apply at n_L");

    const Graph& rmat = rm.rmat;
    const Graph& b = tr->result;
    const Graph& c = tr->context;
    MnMonoid mn = fun.monoid();

    Annotation s_i = fun.standard(p.interface);
    Annotation dl = fun.minus(rmat, fun.apply(rm.n_l, fun.standard(p.left)),
                              fun.apply(compose(p.phi_l, rm.n_l), s_i));
    Annotation dr = fun.minus(b, fun.apply(tr->co_match, fun.standard(p.right)),
                              fun.apply(compose(p.phi_r, tr->co_match), s_i));
    IndexedMorphism ix_ca = fun.index(tr->from_context); // C >-> rmat
    IndexedMorphism ix_cb = fun.index(tr->to_result);    // C -> B

    bool pointwise = fun.kind() == AnnotationFunctor::Kind::mult;
    int c_items = fun.domain_size(c);
    int rmat_items = fun.domain_size(rmat);
    std::vector<int> c_pos;
    std::vector<char> in_image;
    std::vector<Annotation> carrier;
    if (pointwise) {
        c_pos = flat_image(ix_ca);
        in_image.assign(static_cast<std::size_t>(rmat_items), 0);
        for (int ppos : c_pos) in_image[static_cast<std::size_t>(ppos)] = 1;
    } else {
        carrier = fun.enumerate(c);
    }

    AbstractStep step{rm, *tr, mats, {}, {}};
    for (const AnnPair& m : mats) {
        std::vector<Annotation> c1s, c2s;
        if (pointwise) {
            // Closed form: the constraint is independent per item, so the
            // minimal c1 and maximal c2 are unique when they exist.
            bool ok1 = true, ok2 = true;
            for (int y = 0; y < rmat_items; ++y) {
                if (in_image[static_cast<std::size_t>(y)]) continue;
                if (!mn.leq(m.lower.at(y), dl.at(y))) ok1 = false;
                if (!mn.leq(dl.at(y), m.upper.at(y))) ok2 = false;
            }
            Annotation c1 = fun.zero(c), c2 = fun.zero(c);
            for (int x = 0; x < c_items && (ok1 || ok2); ++x) {
                int y = c_pos[static_cast<std::size_t>(x)];
                int d = dl.at(y);
                int v = m.lower.at(y), u = m.upper.at(y);
                if (d == mn.star())
                    c1.set(x, 0);
                else if (v == mn.star())
                    c1.set(x, d == 0 ? mn.star() : mn.star() - d);
                else
                    c1.set(x, std::max(0, v - d));
                if (u == mn.star())
                    c2.set(x, mn.star());
                else if (d == mn.star() || d > u)
                    ok2 = false;
                else
                    c2.set(x, u - d);
            }
            if (ok1) c1s.push_back(c1);
            if (ok2) c2s.push_back(c2);
        } else {
            for (const Annotation& cand : carrier) {
                Annotation lifted = fun.plus(rmat, fun.apply_indexed(ix_ca, cand), dl);
                if (fun.leq(rmat, m.lower, lifted)) insert_extremal_ann(fun, c, c1s, cand, true);
                if (fun.leq(rmat, lifted, m.upper)) insert_extremal_ann(fun, c, c2s, cand, false);
            }
        }
        for (const Annotation& c1 : c1s)
            for (const Annotation& c2 : c2s) {
                Annotation b1 = fun.plus(b, fun.apply_indexed(ix_cb, c1), dr);
                Annotation b2 = fun.plus(b, fun.apply_indexed(ix_cb, c2), dr);
                step.items.push_back({m, {c1, c2}, {b1, b2}});
            }
    }

    for (const StepItem& it : step.items) {
        const AnnPair& q = it.result;
        bool dominated = false;
        for (const AnnPair& k : step.post)
            if (fun.leq(b, k.lower, q.lower) && fun.leq(b, q.upper, k.upper)) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        step.post.erase(std::remove_if(step.post.begin(), step.post.end(),
                                       [&](const AnnPair& k) {
                                           return fun.leq(b, q.lower, k.lower) &&
                                                  fun.leq(b, k.upper, q.upper);
                                       }),
                        step.post.end());
        step.post.push_back(q);
    }
    return step;
}

AbstractStep strongest_post(const AnnotatedGraph& a, const Production& p,
                            const GraphMorphism& phi) {
    return abstract_step(a, p, phi, StepMode::hook);
}

VerifyReport verify_soundness(const AnnotatedGraph& a, const Production& p, StepMode mode,
                              const EnumerationBudget& budget, const PostOverride& override) {
    const AnnotationFunctor& fun = a.functor;
    std::map<std::string, AbstractStep> cache;
    VerifyReport rep;
    for_each_canonical_graph(budget, [&](const Graph& x) {
        std::vector<std::pair<GraphMorphism, DpoTrace>> steps;
        for (const GraphMorphism& ml : find_matches(p, x))
            if (std::optional<DpoTrace> tr = dpo_step(p, ml)) steps.emplace_back(ml, *tr);
        if (steps.empty()) return true;
        Annotation sx = fun.standard(x);
        for (const GraphMorphism& psi : enumerate_homs(x, a.graph)) {
            Annotation v = fun.apply(psi, sx);
            if (!(fun.leq(a.graph, a.lower, v) && fun.leq(a.graph, v, a.upper))) continue;
            for (const auto& [ml, tr] : steps) {
                GraphMorphism phi = compose(ml, psi);
                std::string key = render_morphism(phi);
                auto it = cache.find(key);
                if (it == cache.end()) it = cache.emplace(key, abstract_step(a, p, phi, mode)).first;
                const AbstractStep& step = it->second;
                std::vector<AnnPair> post = override ? override(phi, step) : step.post;
                Annotation sy = fun.standard(tr.result);
                bool covered = false;
                for (const AnnPair& pr : post) {
                    AnnotatedGraph bann{step.trace.result, fun, pr.lower, pr.upper};
                    if (find_legal_arrow(tr.result, sy, bann)) {
                        covered = true;
                        break;
                    }
                }
                if (!covered) {
                    rep.ok = false;
                    rep.detail = "uncovered step: X=" + canonical_encoding(x, budget.labels) +
                                 " psi=" + render_morphism(psi) + " match=" + render_morphism(ml) +
                                 " Y=" + canonical_encoding(tr.result, budget.labels);
                    return false;
                }
            }
        }
        return true;
    });
    return rep;
}

namespace {

// Is some language member X of a rewritable to y at a match compatible with
// phi? Searched backwards: reverse steps from y enumerate every derivation
// landing at y, then a pinned hom search looks for a legal psi with
// psi o m_L = phi.
bool concrete_post_witness(const AnnotatedGraph& a, const Production& p, const GraphMorphism& phi,
                           const Graph& y) {
    const AnnotationFunctor& fun = a.functor;
    Production rp = p.reversed();
    for (const GraphMorphism& mr : find_matches(rp, y)) {
        std::optional<DpoTrace> rtr = dpo_step(rp, mr);
        if (!rtr) continue;
        const Graph& x = rtr->result;
        const GraphMorphism& ml = rtr->co_match; // L >-> X
        HomSearchOptions pin;
        for (const auto& [ln, xn] : ml.node_map()) pin.node_pins[xn] = phi.node(ln);
        for (const auto& [le, xe] : ml.edge_map()) pin.edge_pins[xe] = phi.edge(le);
        Annotation sx = fun.standard(x);
        bool found = false;
        for_each_hom(x, a.graph, pin, [&](const GraphMorphism& psi) {
            Annotation v = fun.apply(psi, sx);
            if (fun.leq(a.graph, a.lower, v) && fun.leq(a.graph, v, a.upper)) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) return true;
    }
    return false;
}

} // namespace

VerifyReport post_cover_check(const AnnotatedGraph& a, const Production& p,
                              const GraphMorphism& phi, const EnumerationBudget& budget,
                              StepMode mode) {
    AbstractStep step = abstract_step(a, p, phi, mode);
    const AnnotationFunctor& fun = a.functor;
    VerifyReport rep;
    for_each_canonical_graph(budget, [&](const Graph& y) {
        Annotation sy = fun.standard(y);
        bool in_post = false;
        for (const AnnPair& pr : step.post) {
            AnnotatedGraph bann{step.trace.result, fun, pr.lower, pr.upper};
            if (find_legal_arrow(y, sy, bann)) {
                in_post = true;
                break;
            }
        }
        if (!in_post) return true;
        if (!concrete_post_witness(a, p, phi, y)) {
            rep.ok = false;
            rep.detail =
                "covered but unreachable: Y=" + canonical_encoding(y, budget.labels);
            return false;
        }
        return true;
    });
    return rep;
}

VerifyReport verify_completeness(const AnnotatedGraph& a, const Production& p,
                                 const GraphMorphism& phi, const EnumerationBudget& budget,
                                 const EnumerationBudget& battery_budget) {
    const AnnotationFunctor& fun = a.functor;
    for (AnnotationProperty prop :
         {AnnotationProperty::homomorphism, AnnotationProperty::adjunction,
          AnnotationProperty::pushout, AnnotationProperty::pushout_standard,
          AnnotationProperty::beck_chevalley, AnnotationProperty::isomorphism}) {
        PropertyOutcome out = check_property(fun, prop, battery_budget);
        if (out.status != PropertyOutcome::Status::pass)
            return {false, true,
                    property_name(prop) + ": " +
                        (out.status == PropertyOutcome::Status::capability_absent
                             ? "capability absent"
                             : out.counterexample)};
    }
    PropertyOutcome wb = check_well_behaved_subtraction(fun, battery_budget);
    if (wb.status != PropertyOutcome::Status::pass)
        return {false, true, "well-behaved subtraction: " + wb.counterexample};
    return post_cover_check(a, p, phi, budget, StepMode::hook);
}

PostEquality strongest_post_equality(const AnnotatedGraph& a, const Production& p,
                                     const GraphMorphism& phi, const EnumerationBudget& budget) {
    AbstractStep step = strongest_post(a, p, phi);
    const AnnotationFunctor& fun = a.functor;
    PostEquality eq;
    for_each_canonical_graph(budget, [&](const Graph& y) {
        Annotation sy = fun.standard(y);
        bool lhs = false;
        for (const AnnPair& pr : step.post) {
            AnnotatedGraph bann{step.trace.result, fun, pr.lower, pr.upper};
            if (find_legal_arrow(y, sy, bann)) {
                lhs = true;
                break;
            }
        }
        bool rhs = concrete_post_witness(a, p, phi, y);
        if (lhs != rhs)
            (lhs ? eq.only_abstract : eq.only_concrete)
                .push_back(canonical_encoding(y, budget.labels));
        return true;
    });
    eq.ok = eq.only_abstract.empty() && eq.only_concrete.empty();
    return eq;
}

} // namespace agr
