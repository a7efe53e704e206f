#pragma once

#include "agr/dpo.hpp"
#include "agr/graph.hpp"
#include "agr/morphism.hpp"

#include <map>
#include <string>
#include <vector>

namespace agrtest {

inline agr::Edge e(std::string id, std::string src, std::string tgt, std::string label = "a") {
    return {std::move(id), std::move(src), std::move(tgt), std::move(label)};
}

// Single node "u" with one loop "ea". Over {"a"} this is the terminal graph.
inline agr::Graph node_loop() { return agr::make_graph({"u"}, {e("ea", "u", "u")}); }

// Two nodes "x", "y" with one edge "e1" from x to y.
inline agr::Graph arrow() { return agr::make_graph({"x", "y"}, {e("e1", "x", "y")}); }

inline agr::Graph discrete(int k) {
    std::vector<std::string> nodes;
    for (int i = 0; i < k; ++i) nodes.push_back("d" + std::to_string(i));
    return agr::Graph(std::move(nodes), {});
}

// The running example: a rule that deletes a node "w" together with its edge
// into "b" and recreates a fresh successor, plus the arrow phi into the
// one-node one-loop abstract graph.
struct RunningExample {
    agr::Graph l = agr::make_graph({"w", "b"}, {e("el", "w", "b")});
    agr::Graph i = agr::make_graph({"b"}, {});
    agr::Graph r = agr::make_graph({"b", "w2"}, {e("er", "b", "w2")});
    agr::Graph a = node_loop();
    agr::GraphMorphism il{i, l, {{"b", "b"}}, {}};
    agr::GraphMorphism ir{i, r, {{"b", "b"}}, {}};
    agr::GraphMorphism phi{l, a, {{"w", "u"}, {"b", "u"}}, {{"el", "ea"}}};
    agr::Production rule{l, i, r, il, ir};
};

// The annotated example: a rule that replaces a C-loop by a fresh node linked
// with an A and a B edge, on an abstract graph with one C-loop and one D-loop.
struct AnnotatedExample {
    agr::Graph l = agr::make_graph({"l0"}, {e("lc", "l0", "l0", "C")});
    agr::Graph i = agr::make_graph({"l0"}, {});
    agr::Graph r = agr::make_graph({"l0", "r1"}, {e("ra", "l0", "r1", "A"), e("rb", "r1", "l0", "B")});
    agr::Graph g = agr::make_graph({"v"}, {e("vc", "v", "v", "C"), e("vd", "v", "v", "D")});
    agr::GraphMorphism il{i, l, {{"l0", "l0"}}, {}};
    agr::GraphMorphism ir{i, r, {{"l0", "l0"}}, {}};
    agr::GraphMorphism phi{l, g, {{"l0", "v"}}, {{"lc", "vc"}}};
    agr::Production rule{l, i, r, il, ir};
    std::vector<std::string> labels{"A", "B", "C", "D"};
};

} // namespace agrtest
