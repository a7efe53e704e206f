#pragma once

#include "agr/classifiers.hpp"
#include "agr/dpo.hpp"
#include "agr/oracle.hpp"

namespace agr {

// Materialization of an arrow phi : L -> A. The graph mat ("<phi>") contains
// L plus one bottom node per A-node and one optional edge per A-edge and
// compatible endpoint pair; eta embeds L and psi projects back onto A. It is
// the terminal factorization L >-> <phi> -> A of phi in which the embedded L
// is pulled back on the nose.
struct Materialization {
    GraphMorphism phi;  // L -> A
    Graph mat;          // <phi>
    GraphMorphism eta;  // L >-> <phi>
    GraphMorphism psi;  // <phi> -> A
    std::map<std::string, std::string> bottom_of;  // A-node -> bottom node id
};

Materialization materialize(const GraphMorphism& phi);

// Bounded check of terminality: every factorization L >-> X -> A of phi with
// X within the budget admits exactly one arrow into the materialization
// (commuting triangle over A plus pullback square over L).
bool materialization_terminal(const Materialization& mat, const EnumerationBudget& budget);

// Membership of a mono m : L >-> X in the language of a mono m0 : L >-> A0:
// a morphism psi : X -> A0 with psi o m = m0 such that the induced square is
// a pullback. Returns the first witness in search order.
std::optional<GraphMorphism> mono_language_member(const GraphMorphism& m0,
                                                  const GraphMorphism& m);

// Pullback condition for a commuting square over psi : X -> A: every item of
// X whose psi-image lies in the image of m0 must lie in the image of m.
bool preimage_exact(const GraphMorphism& psi, const GraphMorphism& m0, const GraphMorphism& m);

// The certified square <phi> = FPBC of L -phi-> A >-true_A-> A x Omega.
FpbcSquare materialization_square(const Materialization& mat,
                                  const std::vector<std::string>& labels);

// Rewritable materialization for a rule leg phi_l : I >-> L: restricts <phi>
// so that the embedded occurrence of L can be rewritten. F is the final
// pullback complement of I >-> L >-> <phi>; rmat is the pushout of L and F
// over I.
struct RewritableMaterialization {
    Materialization base;
    GraphMorphism phi_l;      // I >-> L
    FpbcResult fpbc;          // gamma : I >-> F, beta : F >-> <phi>
    Graph rmat;               // <phi, phi_l>
    GraphMorphism n_l;        // L >-> rmat
    GraphMorphism f_to_rmat;  // F >-> rmat
    GraphMorphism alpha;      // rmat -> <phi>
    GraphMorphism psi;        // rmat -> A
};

RewritableMaterialization rewritable_materialize(const GraphMorphism& phi,
                                                 const GraphMorphism& phi_l);

struct LanguageReport {
    bool ok = true;
    std::vector<std::string> mismatches;
};

// Language of eta : L >-> <phi> versus monos L >-> X through which phi
// factors, over all X within the budget.
LanguageReport materialization_language_check(const Materialization& mat,
                                              const EnumerationBudget& budget);

// Language of n_L : L >-> rmat versus monos through which phi factors and at
// which the rule applies.
LanguageReport rmat_language_check(const RewritableMaterialization& rm, const Production& p,
                                   const EnumerationBudget& budget);

// Canonical encoding of a pair (X, m : K >-> X), invariant under isos of X
// that commute with m.
std::string mono_pair_encoding(const GraphMorphism& m, const std::vector<std::string>& labels);

// All pairs (X, m) in the language of m0 : K >-> A0 with X within budget,
// as canonical pair encodings.
std::set<std::string> mono_pair_language(const GraphMorphism& m0,
                                         const EnumerationBudget& budget);

// Language of the co-match of rewriting cod(n_l) at n_l, versus the co-match
// pairs obtained by rewriting language members of n_l. Bounded in the result
// graph; host graphs are enumerated with slack so every bounded result is hit.
LanguageReport rewriting_match_language_check(const Production& p, const GraphMorphism& n_l,
                                              const EnumerationBudget& budget);

// Co-match language of the rewritable materialization of phi, versus co-match
// pairs obtained by rewriting matches through which phi factors.
LanguageReport comatch_language_check(const Production& p, const GraphMorphism& phi,
                                      const EnumerationBudget& budget);

} // namespace agr
