#include "agr/limits.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace agr;
using agrtest::e;

TEST_CASE("pushout glues along the shared interface") {
    agrtest::RunningExample ex;
    CospanResult po = pushout(ex.il, ex.ir);
    CHECK(po.apex.nodes().size() == 3);  // w, glued b, w2
    CHECK(po.apex.edges().size() == 2);  // el and er survive separately
    CHECK(compose(ex.il, po.left) == compose(ex.ir, po.right));
    CHECK(is_pushout_square(ex.il, ex.ir, po.left, po.right));
    CHECK(is_mono(po.left));
    CHECK(is_mono(po.right));
}

TEST_CASE("pushout mediator is the unique cocone factorization") {
    agrtest::RunningExample ex;
    CospanResult po = pushout(ex.il, ex.ir);
    // cocone: collapse everything onto the one-node loop graph
    GraphMorphism u(ex.l, ex.a, {{"w", "u"}, {"b", "u"}}, {{"el", "ea"}});
    GraphMorphism v(ex.r, ex.a, {{"b", "u"}, {"w2", "u"}}, {{"er", "ea"}});
    GraphMorphism med = pushout_mediator(po, u, v);
    CHECK(med.check().empty());
    CHECK(compose(po.left, med) == u);
    CHECK(compose(po.right, med) == v);
    // non-commuting cocone is rejected
    Graph two = agrtest::discrete(2);
    GraphMorphism u2(ex.l, two, {{"w", "d0"}, {"b", "d0"}}, {});
    CHECK(!u2.check().empty());  // sanity: el has no image, cocone is malformed
}

TEST_CASE("pullback pairs compatible items") {
    Graph l = agrtest::arrow();
    Graph a = agrtest::node_loop();
    GraphMorphism f(l, a, {{"x", "u"}, {"y", "u"}}, {{"e1", "ea"}});
    CospanResult pb = pullback(f, f);
    CHECK(pb.apex.nodes().size() == 4);  // all node pairs sit over u
    CHECK(pb.apex.edges().size() == 1);  // only (e1, e1)
    CHECK(compose(pb.left, f) == compose(pb.right, f));
    CHECK(is_pullback_square(pb.left, pb.right, f, f));
}

TEST_CASE("pullback mediator factors a commuting cone") {
    Graph l = agrtest::arrow();
    Graph a = agrtest::node_loop();
    GraphMorphism f(l, a, {{"x", "u"}, {"y", "u"}}, {{"e1", "ea"}});
    CospanResult pb = pullback(f, f);
    GraphMorphism diag = pullback_mediator(pb, f, f, GraphMorphism::identity(l),
                                           GraphMorphism::identity(l));
    CHECK(diag.check().empty());
    CHECK(compose(diag, pb.left) == GraphMorphism::identity(l));
    CHECK(compose(diag, pb.right) == GraphMorphism::identity(l));
}

TEST_CASE("gluing condition flags dangling edges") {
    agrtest::RunningExample ex;
    // match into the arrow graph: deleting w takes its only edge along
    GraphMorphism mok(ex.l, agrtest::arrow(), {{"w", "x"}, {"b", "y"}}, {{"el", "e1"}});
    CHECK(gluing_ok(ex.il, mok));

    // an extra edge at the deleted node dangles
    Graph x2 = make_graph({"x", "y"}, {e("e1", "x", "y"), e("e2", "y", "x")});
    GraphMorphism mbad(ex.l, x2, {{"w", "x"}, {"b", "y"}}, {{"el", "e1"}});
    CHECK(!gluing_ok(ex.il, mbad));
    CHECK(!pushout_complement(ex.il, mbad).has_value());
}

TEST_CASE("pushout complement rebuilds the match square") {
    agrtest::RunningExample ex;
    GraphMorphism mok(ex.l, agrtest::arrow(), {{"w", "x"}, {"b", "y"}}, {{"el", "e1"}});
    std::optional<PushoutComplement> pc = pushout_complement(ex.il, mok);
    REQUIRE(pc.has_value());
    CHECK(pc->context.nodes() == std::vector<std::string>{"y"});
    CHECK(pc->context.edges().empty());
    CHECK(compose(ex.il, mok) == compose(pc->to_context, pc->inclusion));
    CHECK(is_pushout_square(ex.il, pc->to_context, mok, pc->inclusion));
}

TEST_CASE("terminal graph receives exactly one morphism") {
    std::vector<std::string> labels{"a", "b"};
    Graph t = terminal_graph(labels);
    CHECK(t.nodes().size() == 1);
    CHECK(t.edges().size() == 2);
    Graph g = make_graph({"x", "y"}, {e("e1", "x", "y", "a"), e("e2", "y", "y", "b")});
    CHECK(to_terminal(g, labels).check().empty());
    CHECK(enumerate_homs(g, t).size() == 1);
}

TEST_CASE("product computes compatible pairs") {
    std::vector<std::string> labels{"a"};
    Graph l = agrtest::arrow();
    CospanResult prod = product(l, l, labels);
    CHECK(prod.apex.nodes().size() == 4);
    CHECK(prod.apex.edges().size() == 1);  // the diagonal edge pair
    GraphMorphism diag = pairing(prod, GraphMorphism::identity(l), GraphMorphism::identity(l));
    CHECK(diag.check().empty());
    CHECK(compose(diag, prod.left) == GraphMorphism::identity(l));
    CHECK(compose(diag, prod.right) == GraphMorphism::identity(l));
    // product with the terminal graph is the graph itself
    CospanResult unit = product(l, terminal_graph(labels), labels);
    CHECK(find_iso(unit.apex, l).has_value());
}
