#include "agr/oracle.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace agr;
using agrtest::e;

TEST_CASE("canonical encoding is an isomorphism invariant") {
    std::vector<std::string> labels{"a"};
    Graph l = agrtest::arrow();
    Graph renamed = make_graph({"p", "q"}, {e("zz", "q", "p")});
    CHECK(canonical_encoding(l, labels) == canonical_encoding(renamed, labels));
    CHECK(canonical_encoding(l, labels) != canonical_encoding(agrtest::discrete(2), labels));
    CHECK(canonical_encoding(l, labels) != canonical_encoding(agrtest::node_loop(), labels));
    // decoding reproduces the class
    Graph back = decode_encoding(canonical_encoding(l, labels), labels);
    CHECK(find_iso(back, l).has_value());
}

TEST_CASE("graph enumeration counts are frozen") {
    CHECK(count_graphs({1, 0, {"a"}}) == 2);  // empty graph and the single node
    CHECK(count_graphs({1, 1, {"a"}}) == 3);  // plus the loop
    CHECK(count_graphs({2, 1, {"a"}}) == 6);
    CHECK(count_graphs({2, 2, {"a"}}) == 13);
}

TEST_CASE("enumeration yields one representative per class, in canonical form") {
    EnumerationBudget budget{2, 1, {"a"}};
    std::vector<Graph> all = enumerate_graphs(budget);
    CHECK(all.size() == 6);
    std::set<std::string> encodings;
    for (const Graph& g : all) {
        CHECK(validate(g, budget.labels).empty());
        encodings.insert(canonical_encoding(g, budget.labels));
    }
    CHECK(encodings.size() == all.size());
}

TEST_CASE("enumeration respects the budget and label set") {
    for (const Graph& g : enumerate_graphs({2, 2, {"a", "b"}})) {
        CHECK(g.nodes().size() <= 2);
        CHECK(g.edges().size() <= 2);
    }
    // a second label strictly enlarges the space
    CHECK(count_graphs({2, 2, {"a", "b"}}) > count_graphs({2, 2, {"a"}}));
}

TEST_CASE("visitor can stop the stream early") {
    int seen = 0;
    for_each_canonical_graph({3, 4, {"a"}}, [&](const Graph&) {
        ++seen;
        return seen < 4;
    });
    CHECK(seen == 4);
}

TEST_CASE("subgraph inclusions cover exactly the closed item subsets") {
    std::vector<GraphMorphism> subs = enumerate_subgraph_inclusions(agrtest::arrow());
    CHECK(subs.size() == 5);  // {}, {x}, {y}, {x,y}, {x,y,e1}
    for (const GraphMorphism& s : subs) {
        CHECK(s.check().empty());
        CHECK(is_mono(s));
    }
    CHECK(enumerate_subgraph_inclusions(agrtest::node_loop()).size() == 3);
}
