#pragma once

#include "agr/limits.hpp"

namespace agr {

// Rewriting rule: a span of monos L <-phi_l- I -phi_r-> R.
struct Production {
    Graph left;
    Graph interface;
    Graph right;
    GraphMorphism phi_l;  // I >-> L
    GraphMorphism phi_r;  // I >-> R

    // Throws unless both legs are monos with matching endpoints.
    void check() const;

    // The reversed rule R <- I -> L.
    Production reversed() const;
};

// Full derivation trace of a double-pushout step at a mono match.
struct DpoTrace {
    GraphMorphism match;        // m_L : L >-> X
    Graph context;              // C
    GraphMorphism to_context;   // I -> C
    GraphMorphism from_context; // C >-> X
    Graph result;               // Y
    GraphMorphism co_match;     // m_R : R >-> Y
    GraphMorphism to_result;    // C -> Y
};

// All mono matches of the rule's left-hand side, in search order.
std::vector<GraphMorphism> find_matches(const Production& p, const Graph& x);

// One DPO step at a mono match; empty when the gluing condition fails.
std::optional<DpoTrace> dpo_step(const Production& p, const GraphMorphism& match);

} // namespace agr
