#pragma once

#include "agr/morphism.hpp"

#include <functional>
#include <optional>

namespace agr {

// Options for the backtracking search over graph morphisms G -> H.
// Pins force part of the assignment up front; searches are deterministic:
// domain items are processed in ascending id order and candidates are tried
// in ascending id order.
struct HomSearchOptions {
    bool injective = false;
    std::map<std::string, std::string> node_pins;
    std::map<std::string, std::string> edge_pins;
};

// Visits every morphism G -> H satisfying the options. The visitor returns
// false to stop the search early.
void for_each_hom(const Graph& g, const Graph& h, const HomSearchOptions& opts,
                  const std::function<bool(const GraphMorphism&)>& visit);

std::vector<GraphMorphism> enumerate_homs(const Graph& g, const Graph& h,
                                          const HomSearchOptions& opts = {});
std::vector<GraphMorphism> enumerate_monos(const Graph& g, const Graph& h,
                                           const HomSearchOptions& opts = {});

// First isomorphism G -> H in search order, if any.
std::optional<GraphMorphism> find_iso(const Graph& g, const Graph& h);

} // namespace agr
