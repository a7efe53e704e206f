#include "agr/dpo.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace agr;
using agrtest::e;

TEST_CASE("production check accepts the running example and rejects non-spans") {
    agrtest::RunningExample ex;
    CHECK_NOTHROW(ex.rule.check());
    Production broken = ex.rule;
    broken.phi_r = GraphMorphism(ex.i, ex.a, {{"b", "u"}}, {});  // wrong codomain
    CHECK_THROWS(broken.check());
    Production collapsed{ex.a, ex.l, ex.a, ex.phi, ex.phi};      // legs are not monos
    CHECK_THROWS(collapsed.check());
}

TEST_CASE("find_matches enumerates mono occurrences of the left-hand side") {
    agrtest::RunningExample ex;
    CHECK(find_matches(ex.rule, agrtest::arrow()).size() == 1);
    CHECK(find_matches(ex.rule, ex.a).empty());  // loop admits no injective image
    Graph two = make_graph({"x", "y", "p", "q"},
                           {e("e1", "x", "y"), e("e2", "p", "q")});
    CHECK(find_matches(ex.rule, two).size() == 2);
}

TEST_CASE("dpo step deletes, keeps the context and adds the right-hand side") {
    agrtest::RunningExample ex;
    GraphMorphism m(ex.l, agrtest::arrow(), {{"w", "x"}, {"b", "y"}}, {{"el", "e1"}});
    std::optional<DpoTrace> tr = dpo_step(ex.rule, m);
    REQUIRE(tr.has_value());
    CHECK(tr->context.nodes().size() == 1);
    CHECK(tr->context.edges().empty());
    CHECK(tr->result.nodes().size() == 2);
    CHECK(tr->result.edges().size() == 1);
    CHECK(is_mono(tr->co_match));
    CHECK(tr->co_match.dom() == ex.r);
    // both squares of the derivation commute appropriately
    CHECK(compose(ex.il, m) == compose(tr->to_context, tr->from_context));
    CHECK(compose(ex.ir, tr->co_match) == compose(tr->to_context, tr->to_result));
    // the rewrite of x->y along the rule is again an arrow graph
    CHECK(find_iso(tr->result, agrtest::arrow()).has_value());
}

TEST_CASE("dpo step refuses matches that violate the gluing condition") {
    agrtest::RunningExample ex;
    Graph x2 = make_graph({"x", "y"}, {e("e1", "x", "y"), e("e2", "y", "x")});
    GraphMorphism m(ex.l, x2, {{"w", "x"}, {"b", "y"}}, {{"el", "e1"}});
    CHECK(!dpo_step(ex.rule, m).has_value());
}

TEST_CASE("reversed rule undoes a step up to the traced occurrence") {
    agrtest::RunningExample ex;
    GraphMorphism m(ex.l, agrtest::arrow(), {{"w", "x"}, {"b", "y"}}, {{"el", "e1"}});
    std::optional<DpoTrace> tr = dpo_step(ex.rule, m);
    REQUIRE(tr.has_value());
    Production rev = ex.rule.reversed();
    CHECK_NOTHROW(rev.check());
    std::optional<DpoTrace> back = dpo_step(rev, tr->co_match);
    REQUIRE(back.has_value());
    CHECK(find_iso(back->result, agrtest::arrow()).has_value());
    // reversing twice is the original rule again
    Production twice = rev.reversed();
    CHECK(twice.left == ex.rule.left);
    CHECK(twice.right == ex.rule.right);
    CHECK(twice.phi_l == ex.rule.phi_l);
}

TEST_CASE("dpo step handles node-only interfaces with loops in the context") {
    // rule deleting a loop while keeping its node
    Graph l = make_graph({"n"}, {e("lp", "n", "n")});
    Graph i = make_graph({"n"}, {});
    GraphMorphism il(i, l, {{"n", "n"}}, {});
    Production drop{l, i, i, il, GraphMorphism::identity(i)};
    CHECK_NOTHROW(drop.check());
    Graph host = make_graph({"n", "m"}, {e("lp", "n", "n"), e("f", "n", "m")});
    std::vector<GraphMorphism> ms = find_matches(drop, host);
    REQUIRE(ms.size() == 1);
    std::optional<DpoTrace> tr = dpo_step(drop, ms.front());
    REQUIRE(tr.has_value());
    CHECK(tr->result.nodes().size() == 2);
    CHECK(tr->result.edges().size() == 1);  // the dangling-safe edge f survives
}
