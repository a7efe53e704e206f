#pragma once

#include "agr/limits.hpp"
#include "agr/oracle.hpp"

namespace agr {

// Subobject classifier for labelled graphs: two nodes "in"/"out" and, per
// label, the five edge classes all/nodes/src/tgt/none recording how much of
// an edge lies inside a subgraph. `truth` is the mono from the terminal graph
// selecting "in" and each "all:<label>" loop.
struct OmegaGraph {
    Graph omega;
    GraphMorphism truth;
};

OmegaGraph make_omega(const std::vector<std::string>& labels);

// Characteristic morphism of a mono m : L >-> X into Omega over `labels`.
GraphMorphism characteristic(const GraphMorphism& m, const std::vector<std::string>& labels);

// Partial map classifier T(G) with the mono eta : G >-> T(G). Nodes gain a
// fresh bottom node; per label, pair edges "pair:<u>,<v>,<label>" with
// endpoints ranging over nodes of G plus bottom record undefined edges.
struct PartialMapClassifier {
    Graph total;        // T(G)
    GraphMorphism eta;  // G >-> T(G)
    std::string bottom; // id of the bottom node
};

PartialMapClassifier make_pmc(const Graph& g, const std::vector<std::string>& labels);

// Classifying morphism X -> T(G) of the partial map (incl : D >-> X, h : D -> G).
GraphMorphism classify_partial_map(const GraphMorphism& incl, const GraphMorphism& h,
                                   const PartialMapClassifier& pmc);

// Final pullback complement of I >-alpha-> L >-m-> G for monos alpha, m:
// removes m(L minus alpha(I)) from G together with edges left dangling.
// Returns gamma : I >-> F and beta : F >-> G.
struct FpbcResult {
    Graph f;
    GraphMorphism gamma;
    GraphMorphism beta;
};

FpbcResult fpbc_mono(const GraphMorphism& alpha, const GraphMorphism& m);

// A commuting square alpha;m = gamma;beta as used by is_fpbc.
struct FpbcSquare {
    GraphMorphism alpha;  // I -> L
    GraphMorphism gamma;  // I -> F
    GraphMorphism m;      // L -> G
    GraphMorphism beta;   // F -> G
};

// Bounded decision of the final-pullback-complement property: the square
// must be a pullback, and every pullback square over m with foot F' within
// the budget must factor uniquely through F.
bool is_fpbc(const FpbcSquare& sq, const EnumerationBudget& budget);

// Slice-topos truth object over A: the product A x Omega with projections and
// the mono true_A = <id_A, true o !> : A >-> A x Omega.
struct SliceClassifier {
    Graph product;      // A x Omega
    GraphMorphism pi1;  // -> A
    GraphMorphism pi2;  // -> Omega
    GraphMorphism truth;
};

SliceClassifier slice_classifier(const Graph& a, const std::vector<std::string>& labels);

} // namespace agr
