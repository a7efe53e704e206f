#pragma once

#include "agr/hom_search.hpp"

#include <optional>

namespace agr {

// Result of a pushout (legs point into the apex) or a pullback (legs point
// out of the apex).
struct CospanResult {
    Graph apex;
    GraphMorphism left;
    GraphMorphism right;
};

// Pushout of the span dom(f) -> cod(f), dom(f) -> cod(g). Items of cod(f) are
// tagged "l:", items of cod(g) "r:"; each equivalence class is named by its
// lexicographically least tagged id.
CospanResult pushout(const GraphMorphism& f, const GraphMorphism& g);

// Mediating morphism out of a canonical pushout for a commuting cocone
// (u out of cod(f), v out of cod(g)). Throws if the cocone does not commute.
GraphMorphism pushout_mediator(const CospanResult& po, const GraphMorphism& u,
                               const GraphMorphism& v);

// Pullback of the cospan cod(f) <- dom(f), cod(g) <- dom(g); apex items are
// named "(x,y)" from the paired item ids.
CospanResult pullback(const GraphMorphism& f, const GraphMorphism& g);

// Mediating morphism into a canonical pullback for a commuting cone
// (u into dom(f), v into dom(g)).
GraphMorphism pullback_mediator(const CospanResult& pb, const GraphMorphism& f,
                                const GraphMorphism& g, const GraphMorphism& u,
                                const GraphMorphism& v);

// Dangling-edge condition for a rule leg phiL : I >-> L and a mono match
// m : L >-> X: no edge of X outside m(E_L) touches a node deleted by the rule.
bool gluing_ok(const GraphMorphism& phi_l, const GraphMorphism& m);

struct PushoutComplement {
    Graph context;              // C
    GraphMorphism to_context;   // I -> C
    GraphMorphism inclusion;    // C >-> X
};

// Pushout complement of I >-> L >-> X along a mono match; empty when the
// gluing condition fails. The context keeps the item ids of X.
std::optional<PushoutComplement> pushout_complement(const GraphMorphism& phi_l,
                                                    const GraphMorphism& m);

// Universal-property deciders. The square is f;p = g;q with f : I -> B,
// g : I -> C, p : B -> D, q : C -> D (pushout), resp. p : A -> B, q : A -> C,
// f : B -> D, g : C -> D (pullback). Non-commuting squares are rejected with
// an exception.
bool is_pushout_square(const GraphMorphism& f, const GraphMorphism& g,
                       const GraphMorphism& p, const GraphMorphism& q);
bool is_pullback_square(const GraphMorphism& p, const GraphMorphism& q,
                        const GraphMorphism& f, const GraphMorphism& g);

// Terminal graph over an alphabet: one node "pt" with a loop "loop:<label>"
// per label.
Graph terminal_graph(const std::vector<std::string>& labels);
GraphMorphism to_terminal(const Graph& g, const std::vector<std::string>& labels);

// Binary product, realised as the pullback over the terminal graph.
CospanResult product(const Graph& a, const Graph& b, const std::vector<std::string>& labels);

// Pairing <u,v> : X -> A x B for the canonical product of A and B.
GraphMorphism pairing(const CospanResult& prod, const GraphMorphism& u, const GraphMorphism& v);

} // namespace agr
