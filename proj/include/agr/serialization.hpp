#pragma once

#include "agr/abstract_rewrite.hpp"

#include <json.hpp>

namespace agr {

// Raised for any malformed or unresolvable part of a spec file; the message
// names the offending identifier.
struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MorphismRefs {
    std::string from, to;
    friend bool operator==(const MorphismRefs&, const MorphismRefs&) = default;
};

struct RuleRefs {
    std::string left, interface_name, right, to_left, to_right;
    friend bool operator==(const RuleRefs&, const RuleRefs&) = default;
};

// A fully resolved spec file: label alphabet plus named tables of graphs,
// morphisms, rules and annotated graphs. The *_refs tables remember the
// names used for cross-references so serialization round-trips.
struct SystemSpec {
    std::vector<std::string> labels;
    std::map<std::string, Graph> graphs;
    std::map<std::string, GraphMorphism> morphisms;
    std::map<std::string, Production> rules;
    std::map<std::string, AnnotatedGraph> annotated;
    std::map<std::string, MorphismRefs> morphism_refs;
    std::map<std::string, RuleRefs> rule_refs;
    std::map<std::string, std::string> annotated_graph_refs;

    const Graph& graph(const std::string& name) const;
    const GraphMorphism& morphism(const std::string& name) const;
    const Production& rule(const std::string& name) const;
    const AnnotatedGraph& annotated_graph(const std::string& name) const;
};

SystemSpec parse_system_spec(const nlohmann::json& j);
SystemSpec load_system_spec(const std::string& path);
nlohmann::json serialize_system_spec(const SystemSpec& spec);

nlohmann::json graph_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Node/edge maps only; endpoints travel separately as names.
nlohmann::json morphism_json(const GraphMorphism& f);

AnnotationFunctor functor_from_name(const std::string& name, int n);

// Multiplicity-style annotations serialize as {item: "value"} objects with
// "*" for the top element; path annotations as arrays of [src, tgt] pairs.
nlohmann::json annotation_json(const AnnotationFunctor& fun, const Graph& g, const Annotation& a);

// Unlisted items default to 0 on the lower side and * on the upper side.
Annotation annotation_from_json(const AnnotationFunctor& fun, const Graph& g,
                                const nlohmann::json& j, bool is_upper);

std::string render_dot(const Graph& g);

// Items outside the image of the given mono into g are drawn dashed.
std::string render_dot_highlighted(const Graph& g, const GraphMorphism& image);

// Every annotated item is labelled with its "[lo,hi]" interval.
std::string render_dot_annotated(const AnnotatedGraph& a);

} // namespace agr
