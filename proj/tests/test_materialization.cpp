#include "agr/materialization.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <stdexcept>

using namespace agr;
using agrtest::e;

namespace {

Graph figure_mat() {
    // three nodes (the two of L plus one bottom) and ten edges: the image of
    // el plus one optional edge per ordered node pair
    std::vector<Edge> edges{e("el", "w", "b")};
    const char* ids[] = {"w", "b", "v"};
    int k = 0;
    for (const char* s : ids)
        for (const char* t : ids)
            edges.push_back(e("o" + std::to_string(k++), s, t));
    return make_graph({"w", "b", "v"}, edges);
}

} // namespace

TEST_CASE("materialization reproduces the three-node ten-edge figure") {
    agrtest::RunningExample ex;
    Materialization mat = materialize(ex.phi);
    CHECK(mat.mat.nodes().size() == 3);
    CHECK(mat.mat.edges().size() == 10);
    CHECK(mat.eta.edge_map().size() == 1);
    CHECK(is_mono(mat.eta));
    CHECK(compose(mat.eta, mat.psi) == ex.phi);
    CHECK(mat.bottom_of.size() == 1);
    CHECK(find_iso(mat.mat, figure_mat()).has_value());
}

TEST_CASE("materialization is terminal among bounded factorizations") {
    agrtest::RunningExample ex;
    Materialization mat = materialize(ex.phi);
    CHECK(materialization_terminal(mat, {2, 3, {"a"}}));
}

TEST_CASE("materialization square is a bounded final pullback complement") {
    agrtest::RunningExample ex;
    Materialization mat = materialize(ex.phi);
    FpbcSquare sq = materialization_square(mat, {"a"});
    CHECK(compose(sq.alpha, sq.m) == compose(sq.gamma, sq.beta));
    CHECK(is_pullback_square(sq.alpha, sq.gamma, sq.m, sq.beta));
    CHECK(is_fpbc(sq, {2, 2, {"a"}}));
}

TEST_CASE("mono language membership demands an exact preimage") {
    agrtest::RunningExample ex;
    Materialization mat = materialize(ex.phi);
    // eta itself is a member via the identity
    CHECK(mono_language_member(mat.eta, mat.eta).has_value());
    // the concrete arrow graph hosts L and maps onto the materialization
    GraphMorphism mok(ex.l, agrtest::arrow(), {{"w", "x"}, {"b", "y"}}, {{"el", "e1"}});
    std::optional<GraphMorphism> w = mono_language_member(mat.eta, mok);
    REQUIRE(w.has_value());
    CHECK(compose(mok, *w) == mat.eta);
    CHECK(preimage_exact(*w, mat.eta, mok));

    // against the identity mono, any proper extension fails: the extra node
    // would have to land inside the image
    GraphMorphism id_l = GraphMorphism::identity(ex.l);
    Graph ext = make_graph({"w", "b", "z"}, {e("el", "w", "b")});
    GraphMorphism incl(ex.l, ext, {{"w", "w"}, {"b", "b"}}, {{"el", "el"}});
    CHECK(mono_language_member(id_l, incl) == std::nullopt);
    CHECK(mono_language_member(id_l, id_l).has_value());
}

TEST_CASE("preimage_exact detects items that slip into the image") {
    agrtest::RunningExample ex;
    Graph ext = make_graph({"w", "b", "z"}, {e("el", "w", "b")});
    GraphMorphism incl(ex.l, ext, {{"w", "w"}, {"b", "b"}}, {{"el", "el"}});
    GraphMorphism collapse(ext, ex.l, {{"w", "w"}, {"b", "b"}, {"z", "b"}}, {{"el", "el"}});
    // collapse sends z onto b, which lies in the image of the identity but
    // not in the image of incl
    CHECK(compose(incl, collapse) == GraphMorphism::identity(ex.l));
    CHECK(!preimage_exact(collapse, GraphMorphism::identity(ex.l), incl));
}

TEST_CASE("rewritable materialization reproduces the F and rmat figures") {
    agrtest::RunningExample ex;
    RewritableMaterialization rm = rewritable_materialize(ex.phi, ex.il);
    CHECK(rm.fpbc.f.nodes().size() == 2);
    CHECK(rm.fpbc.f.edges().size() == 4);
    CHECK(rm.rmat.nodes().size() == 3);
    CHECK(rm.rmat.edges().size() == 5);
    CHECK(is_mono(rm.n_l));
    // the embedded L is rewritable: the gluing condition holds at n_l
    CHECK(gluing_ok(ex.il, rm.n_l));
    // projections agree: rmat -> <phi> -> A equals rmat -> A
    CHECK(compose(rm.n_l, rm.alpha) == rm.base.eta);
    CHECK(compose(rm.alpha, rm.base.psi) == rm.psi);
    CHECK(compose(rm.n_l, rm.psi) == ex.phi);
}

TEST_CASE("language of the materialization matches factorizations, bounded") {
    agrtest::RunningExample ex;
    Materialization mat = materialize(ex.phi);
    LanguageReport r = materialization_language_check(mat, {2, 3, {"a"}});
    CHECK(r.ok);
    CHECK(r.mismatches.empty());
}

TEST_CASE("language of the rewritable materialization, bounded") {
    agrtest::RunningExample ex;
    RewritableMaterialization rm = rewritable_materialize(ex.phi, ex.il);
    LanguageReport r = rmat_language_check(rm, ex.rule, {2, 3, {"a"}});
    CHECK(r.ok);
}

TEST_CASE("pair encodings identify pairs only up to match-compatible isos") {
    std::vector<std::string> labels{"a"};
    Graph k = make_graph({"k"}, {});
    Graph d2 = agrtest::discrete(2);
    GraphMorphism m1(k, d2, {{"k", "d0"}}, {});
    GraphMorphism m2(k, d2, {{"k", "d1"}}, {});
    CHECK(mono_pair_encoding(m1, labels) == mono_pair_encoding(m2, labels));

    Graph arr = agrtest::arrow();
    GraphMorphism src(k, arr, {{"k", "x"}}, {});
    GraphMorphism tgt(k, arr, {{"k", "y"}}, {});
    CHECK(mono_pair_encoding(src, labels) != mono_pair_encoding(tgt, labels));
}

TEST_CASE("pair language of eta collects every bounded occurrence pair") {
    agrtest::RunningExample ex;
    Materialization mat = materialize(ex.phi);
    // over the one-loop abstract graph every mono L >-> X factors, so the
    // language is exactly the occurrence pairs: the plain arrow plus the four
    // one-extra-edge extensions
    std::set<std::string> pairs = mono_pair_language(mat.eta, {2, 2, {"a"}});
    CHECK(pairs.size() == 5);
    GraphMorphism mok(ex.l, agrtest::arrow(), {{"w", "x"}, {"b", "y"}}, {{"el", "e1"}});
    CHECK(pairs.count(mono_pair_encoding(mok, {"a"})) == 1);
}

TEST_CASE("rewriting the match language commutes with the language map, bounded") {
    agrtest::RunningExample ex;
    RewritableMaterialization rm = rewritable_materialize(ex.phi, ex.il);
    LanguageReport r = rewriting_match_language_check(ex.rule, rm.n_l, {2, 2, {"a"}});
    CHECK(r.ok);
    CHECK(r.mismatches.empty());
}

TEST_CASE("rewriting match language requires an applicable rule") {
    agrtest::RunningExample ex;
    Materialization mat = materialize(ex.phi);
    // at eta the bottom node hangs off the deleted w, so the rule cannot fire
    CHECK_THROWS_AS(rewriting_match_language_check(ex.rule, mat.eta, {2, 2, {"a"}}),
                    std::invalid_argument);
}

TEST_CASE("co-match language of the rewritable materialization, bounded") {
    agrtest::RunningExample ex;
    LanguageReport r = comatch_language_check(ex.rule, ex.phi, {2, 2, {"a"}});
    CHECK(r.ok);
    CHECK(r.mismatches.empty());
}
