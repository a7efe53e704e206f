#pragma once

#include "agr/annotation.hpp"
#include "agr/materialization.hpp"

#include <functional>

namespace agr {

// A doubly annotated graph A[a1, a2]. No order between the bounds is
// imposed; crossing bounds just denote an empty language.
struct AnnotatedGraph {
    Graph graph;
    AnnotationFunctor functor;
    Annotation lower, upper;
};

// A[0, top]: bounds so loose that membership degenerates to hom existence.
AnnotatedGraph with_default_bounds(const Graph& g, const AnnotationFunctor& fun);

// Legal arrow psi: src[s1, s2] -> dst[d1, d2], i.e. psi: src.graph ->
// dst.graph with apply(psi, s1) >= d1 and apply(psi, s2) <= d2.
bool is_legal(const GraphMorphism& psi, const AnnotatedGraph& src, const AnnotatedGraph& dst);

// First legal arrow X[s_X, s_X] -> A[a1, a2] in enumeration order, if any.
// X is a member of A's language exactly when a witness exists.
std::optional<GraphMorphism> member(const Graph& x, const AnnotatedGraph& a);

// Canonical encodings of all language members within the budget.
std::set<std::string> annotated_language(const AnnotatedGraph& a, const EnumerationBudget& budget);

enum class StepMode { squiggle, hook };

struct AnnPair {
    Annotation lower, upper;
    friend bool operator==(const AnnPair&, const AnnPair&) = default;
};

// All maximal annotation pairs (a'1, a'2) on the rewritable materialization
// (the M set): legality of psi' plus, per mode, the standard-annotation
// constraint on the match image (squiggle) or the red-pinning (hook).
std::vector<AnnPair> annotated_materializations(const AnnotatedGraph& a,
                                                const RewritableMaterialization& rm,
                                                StepMode mode);

// One emitted step: the materialization pair it came from, the context
// annotations and the result annotations.
struct StepItem {
    AnnPair mat;
    AnnPair ctx;
    AnnPair result;
};

struct AbstractStep {
    RewritableMaterialization rm;
    DpoTrace trace;               // concrete DPO trace of rmat at the match n_L
    std::vector<AnnPair> mats;    // the M set on rm.rmat
    std::vector<StepItem> items;  // every (a', c, b) combination
    std::vector<AnnPair> post;    // antichain N of result pairs on trace.result
};

// The abstract rewriting step at phi: L -> A. The result graph B
// (trace.result) is the same for every annotation pair; only the pairs in N
// vary. Throws CapabilityAbsent for hook mode without a reduction.
AbstractStep abstract_step(const AnnotatedGraph& a, const Production& p,
                           const GraphMorphism& phi, StepMode mode);

// The strongest post-condition: the full antichain N of the hook-mode step;
// the union of L(B[b1, b2]) over N equals the set of one-step successors.
AbstractStep strongest_post(const AnnotatedGraph& a, const Production& p,
                            const GraphMorphism& phi);

struct VerifyReport {
    bool ok = true;
    bool refused = false;   // completeness only: property battery failed
    std::string detail;     // counterexample or refusal reason
};

// Test hook: replaces the computed post pairs of the step at phi, so tests
// can confirm that corrupted post-conditions are caught.
using PostOverride =
    std::function<std::vector<AnnPair>(const GraphMorphism& phi, const AbstractStep& step)>;

// For every X within budget with a legal arrow into a and every applicable
// match m_L with X => Y: some (b1, b2) in the step's post at phi = psi o m_L
// must have Y in L(B[b1, b2]).
VerifyReport verify_soundness(const AnnotatedGraph& a, const Production& p, StepMode mode,
                              const EnumerationBudget& budget, const PostOverride& override = {});

// Hook-mode completeness at one phi: first checks the full property battery
// (plus well-behaved subtraction) at battery_budget and refuses if any part
// fails; then checks that every Y within budget covered by some post pair is
// concretely reachable from a member of a's language via a match over phi.
VerifyReport verify_completeness(const AnnotatedGraph& a, const Production& p,
                                 const GraphMorphism& phi, const EnumerationBudget& budget,
                                 const EnumerationBudget& battery_budget);

// The cover check alone (no battery gate), in either mode; squiggle-mode
// covers can legitimately fail, which tests pin down as expected.
VerifyReport post_cover_check(const AnnotatedGraph& a, const Production& p,
                              const GraphMorphism& phi, const EnumerationBudget& budget,
                              StepMode mode);

// Both sides of the strongest-post equality at phi: abstract side = union of
// L(B[b1, b2]) over N; concrete side = all Y obtainable by rewriting a
// language member X at a match compatible with phi.
struct PostEquality {
    bool ok = true;
    std::vector<std::string> only_abstract;  // covered by N, not reachable
    std::vector<std::string> only_concrete;  // reachable, not covered by N
};

PostEquality strongest_post_equality(const AnnotatedGraph& a, const Production& p,
                                     const GraphMorphism& phi, const EnumerationBudget& budget);

} // namespace agr
