#include "agr/annotation.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <stdexcept>

using namespace agr;
using agrtest::e;

TEST_CASE("ordered monoid laws hold exhaustively for n <= 3") {
    for (int n = 0; n <= 3; ++n) {
        MnMonoid mn(n);
        std::vector<int> cs = mn.carrier();
        CHECK(cs.size() == static_cast<std::size_t>(n) + 2);
        for (int a : cs) {
            CHECK(mn.plus(a, 0) == a);
            CHECK(mn.minus(a, 0) == a);
            CHECK(mn.minus(a, a) == 0);
            CHECK(mn.leq(0, a));
            CHECK(mn.leq(a, mn.star()));
            for (int b : cs) {
                CHECK(mn.plus(a, b) == mn.plus(b, a));
                // subtraction is well-behaved: it undoes addition from below
                if (mn.leq(b, a)) CHECK(mn.plus(mn.minus(a, b), b) == a);
                // plus is monotone in each argument
                for (int c : cs) {
                    CHECK(mn.plus(a, mn.plus(b, c)) == mn.plus(mn.plus(a, b), c));
                    if (mn.leq(b, c)) {
                        CHECK(mn.leq(mn.plus(a, b), mn.plus(a, c)));
                        CHECK(mn.leq(mn.minus(b, a), mn.minus(c, a)));
                    }
                }
            }
        }
        // the order is total and star is absorbing
        CHECK(mn.plus(mn.star(), 1) == mn.star());
        CHECK(mn.minus(mn.star(), mn.star()) == 0);
        // subtracting any numeric value leaves star unchanged (at n = 0 the
        // value 1 already is star, so only larger monoids have numeric b > 0)
        for (int b = 0; b < mn.star(); ++b) CHECK(mn.minus(mn.star(), b) == mn.star());
    }
}

TEST_CASE("addition saturates while subtraction stays exact below the cap") {
    // in M_3: 2 + (2 - 1) = 3, but (2 + 2) - 1 saturates to * first
    MnMonoid m3(3);
    CHECK(m3.plus(2, m3.minus(2, 1)) == 3);
    CHECK(m3.plus(2, 2) == m3.star());
    CHECK(m3.minus(m3.plus(2, 2), 1) == m3.star());
    CHECK(m3.plus(2, m3.minus(2, 1)) != m3.minus(m3.plus(2, 2), 1));
}

TEST_CASE("monoid values render and parse round-trip") {
    MnMonoid mn(2);
    for (int v : mn.carrier()) CHECK(mn.parse(mn.render(v)) == v);
    CHECK(mn.render(mn.star()) == "*");
    CHECK(mn.parse("*") == mn.star());
    CHECK_THROWS_AS(mn.parse("7"), std::invalid_argument);
    CHECK_THROWS_AS(mn.parse("x"), std::invalid_argument);
}

TEST_CASE("integer order on encodings coincides with the monoid order") {
    MnMonoid mn(2);
    for (int a : mn.carrier())
        for (int b : mn.carrier()) CHECK(mn.leq(a, b) == (a <= b));
}

TEST_CASE("path plus is the strictly alternating chain closure") {
    // two nodes: p0 = {(0,1)}, p1 = {(1,0)}
    std::uint64_t p0 = 1u << 1, p1 = 1u << 2;
    std::uint64_t closed = path_plus(p0, p1, 2);
    CHECK(closed == 0xFull);  // all four pairs are alternately reachable
    CHECK(path_plus(p0, 0, 2) == p0);
    CHECK(path_plus(0, p1, 2) == p1);
    CHECK(path_plus(p0, p1, 2) == path_plus(p1, p0, 2));
    // chains cannot repeat the same relation twice in a row
    std::uint64_t q0 = 1u << 1;          // (0,1)
    std::uint64_t q1 = 1u << (1 * 3 + 2);  // (1,2) on three nodes
    std::uint64_t r = path_plus(q0, q1, 3);
    CHECK((r & (1u << 2)) != 0);  // (0,2) via one step of each
    CHECK(path_plus(q0, q0, 3) == q0);
}

TEST_CASE("path closure is the transitive closure of the edge relation") {
    CHECK(path_closure(agrtest::arrow()) == (1u << 1));
    CHECK(path_closure(agrtest::node_loop()) == 1u);
    Graph chain = make_graph({"a", "b", "c"}, {e("e1", "a", "b"), e("e2", "b", "c")});
    std::uint64_t cl = path_closure(chain);
    CHECK((cl & (1u << 1)) != 0);   // (a,b)
    CHECK((cl & (1u << 5)) != 0);   // (b,c)
    CHECK((cl & (1u << 2)) != 0);   // (a,c) transitively
    CHECK((cl & 1u) == 0);          // no loop at a
}

TEST_CASE("functor domains, standard annotations and tops") {
    Graph l = agrtest::arrow();
    AnnotationFunctor mult = AnnotationFunctor::mult(2);
    AnnotationFunctor outdeg = AnnotationFunctor::outdeg(2);
    AnnotationFunctor path = AnnotationFunctor::path();

    CHECK(mult.domain_items(l) == std::vector<std::string>{"x", "y", "e1"});
    CHECK(outdeg.domain_items(l) == std::vector<std::string>{"x", "y"});
    CHECK(mult.name() == "mult");
    CHECK(mult.has_red());
    CHECK(!outdeg.has_red());
    CHECK(!path.has_red());

    Annotation sm = mult.standard(l);
    CHECK(sm.at(0) == 1);
    CHECK(sm.at(2) == 1);
    Annotation so = outdeg.standard(l);
    CHECK(so.at(0) == 1);  // x has one outgoing edge
    CHECK(so.at(1) == 0);
    CHECK(path.standard(l).paths == path_closure(l));

    CHECK(mult.leq(l, mult.zero(l), mult.top(l)));
    CHECK(mult.leq(l, sm, mult.top(l)));
    CHECK(!mult.leq(l, mult.top(l), sm));
}

TEST_CASE("apply pushes annotations forward: sums, sups and images") {
    Graph l = agrtest::arrow();
    Graph a = agrtest::node_loop();
    GraphMorphism f(l, a, {{"x", "u"}, {"y", "u"}}, {{"e1", "ea"}});

    AnnotationFunctor mult = AnnotationFunctor::mult(2);
    Annotation sm = mult.apply(f, mult.standard(l));
    CHECK(sm.at(0) == 2);  // both nodes land on u
    CHECK(sm.at(1) == 1);

    AnnotationFunctor outdeg = AnnotationFunctor::outdeg(2);
    Annotation so = outdeg.apply(f, outdeg.standard(l));
    CHECK(so.at(0) == 1);  // sup(1, 0), not the sum

    AnnotationFunctor path = AnnotationFunctor::path();
    Annotation sp = path.apply(f, path.standard(l));
    CHECK(sp.paths == 1u);  // (x,y) maps onto the loop pair (u,u)
}

TEST_CASE("reduction is the mono-indexed restriction, for mult only") {
    Graph l = agrtest::arrow();
    Graph ext = make_graph({"x", "y", "z"}, {e("e1", "x", "y")});
    GraphMorphism incl(l, ext, {{"x", "x"}, {"y", "y"}}, {{"e1", "e1"}});
    AnnotationFunctor mult = AnnotationFunctor::mult(2);
    Annotation b = mult.zero(ext);
    b.set(0, 2);  // x
    b.set(2, 1);  // z
    b.set(3, 1);  // e1
    Annotation r = mult.red(incl, b);
    CHECK(r.at(0) == 2);
    CHECK(r.at(1) == 0);
    CHECK(r.at(2) == 1);

    AnnotationFunctor outdeg = AnnotationFunctor::outdeg(2);
    CHECK_THROWS_AS(outdeg.red(incl, outdeg.zero(ext)), CapabilityAbsent);
    GraphMorphism collapse(ext, l, {{"x", "x"}, {"y", "y"}, {"z", "y"}}, {{"e1", "e1"}});
    CHECK_THROWS_AS(mult.red(collapse, mult.zero(l)), std::invalid_argument);
}

TEST_CASE("annotation carriers enumerate completely or refuse loudly") {
    Graph l = agrtest::arrow();
    CHECK(AnnotationFunctor::mult(1).enumerate(l).size() == 27);    // 3 items, 3 values
    CHECK(AnnotationFunctor::outdeg(1).enumerate(l).size() == 9);   // 2 nodes
    // path carriers range over submasks of the connectivity closure: the
    // arrow only realizes (x,y), a two-cycle realizes all four pairs
    CHECK(AnnotationFunctor::path().enumerate(l).size() == 2);
    Graph cyc = make_graph({"x", "y"}, {e("e1", "x", "y"), e("e2", "y", "x")});
    CHECK(AnnotationFunctor::path().enumerate(cyc).size() == 16);
    // 2 nodes with 10 parallel edges: 4^12 annotations is beyond the cap
    std::vector<Edge> many;
    for (int i = 0; i < 10; ++i) many.push_back(e("m" + std::to_string(i), "x", "y"));
    Graph wide = make_graph({"x", "y"}, many);
    CHECK_THROWS_AS(AnnotationFunctor::mult(2).enumerate(wide), std::invalid_argument);
}

TEST_CASE("property battery: mult passes, the others differ where expected") {
    EnumerationBudget tiny{2, 1, {"a"}};
    AnnotationFunctor mult = AnnotationFunctor::mult(1);
    AnnotationFunctor outdeg = AnnotationFunctor::outdeg(1);
    AnnotationFunctor path = AnnotationFunctor::path();

    CHECK(check_property(mult, AnnotationProperty::homomorphism, tiny).status ==
          PropertyOutcome::Status::pass);
    CHECK(check_property(mult, AnnotationProperty::adjunction, tiny).status ==
          PropertyOutcome::Status::pass);
    CHECK(check_property(mult, AnnotationProperty::isomorphism, tiny).status ==
          PropertyOutcome::Status::pass);
    CHECK(check_property(mult, AnnotationProperty::beck_chevalley, tiny).status ==
          PropertyOutcome::Status::pass);

    CHECK(check_property(outdeg, AnnotationProperty::homomorphism, tiny).status ==
          PropertyOutcome::Status::pass);
    CHECK(check_property(outdeg, AnnotationProperty::pushout_standard, tiny).status ==
          PropertyOutcome::Status::pass);
    CHECK(check_property(outdeg, AnnotationProperty::adjunction, tiny).status ==
          PropertyOutcome::Status::capability_absent);
    CHECK(check_property(outdeg, AnnotationProperty::pushout, tiny).status ==
          PropertyOutcome::Status::capability_absent);
    PropertyOutcome oiso = check_property(outdeg, AnnotationProperty::isomorphism, tiny);
    CHECK(oiso.status == PropertyOutcome::Status::fail);
    CHECK(!oiso.counterexample.empty());

    CHECK(check_property(path, AnnotationProperty::homomorphism, tiny).status ==
          PropertyOutcome::Status::pass);
    CHECK(check_property(path, AnnotationProperty::pushout_standard, tiny).status ==
          PropertyOutcome::Status::pass);
    CHECK(check_property(path, AnnotationProperty::beck_chevalley, tiny).status ==
          PropertyOutcome::Status::capability_absent);
}

TEST_CASE("well-behaved subtraction holds for monoid functors, fails for path") {
    EnumerationBudget tiny{2, 1, {"a"}};
    CHECK(check_well_behaved_subtraction(AnnotationFunctor::mult(1), tiny).status ==
          PropertyOutcome::Status::pass);
    CHECK(check_well_behaved_subtraction(AnnotationFunctor::outdeg(1), tiny).status ==
          PropertyOutcome::Status::pass);
    PropertyOutcome p = check_well_behaved_subtraction(AnnotationFunctor::path(), tiny);
    CHECK(p.status == PropertyOutcome::Status::fail);
    CHECK(!p.counterexample.empty());
}

TEST_CASE("functoriality: identities and composites at small bounds") {
    EnumerationBudget tiny{2, 2, {"a"}};
    std::vector<Graph> all = enumerate_graphs(tiny);
    for (const AnnotationFunctor& fun :
         {AnnotationFunctor::mult(1), AnnotationFunctor::outdeg(1), AnnotationFunctor::path()}) {
        for (const Graph& g : all) {
            GraphMorphism id = GraphMorphism::identity(g);
            for (const Annotation& a : fun.enumerate(g)) CHECK(fun.apply(id, a) == a);
        }
        for (const Graph& g : all)
            for (const Graph& h : all)
                for (const GraphMorphism& f : enumerate_homs(g, h))
                    for (const GraphMorphism& k : enumerate_homs(h, g)) {
                        GraphMorphism fk = compose(f, k);
                        Annotation s = fun.standard(g);
                        CHECK(fun.apply(fk, s) == fun.apply(k, fun.apply(f, s)));
                    }
    }
}

TEST_CASE("render_annotation shows values and path pairs") {
    Graph l = agrtest::arrow();
    AnnotationFunctor mult = AnnotationFunctor::mult(2);
    Annotation a = mult.standard(l);
    a.set(1, mult.monoid().star());
    std::string s = render_annotation(mult, l, a);
    CHECK(s.find("x=1") != std::string::npos);
    CHECK(s.find("y=*") != std::string::npos);
    AnnotationFunctor path = AnnotationFunctor::path();
    std::string sp = render_annotation(path, l, path.standard(l));
    CHECK(sp.find("(x,y)") != std::string::npos);
}
