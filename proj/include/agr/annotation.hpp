#pragma once

#include "agr/oracle.hpp"

#include <array>
#include <cstdint>

namespace agr {

// The ordered monoid M_n = {0, ..., n, *}: addition saturates to * above n,
// subtraction truncates to 0 when the subtrahend dominates, and * absorbs
// addition. Star is encoded as n + 1.
class MnMonoid {
public:
    explicit MnMonoid(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("MnMonoid: n must be non-negative");
    }

    int n() const { return n_; }
    int star() const { return n_ + 1; }

    int plus(int a, int b) const {
        if (a == star() || b == star()) return star();
        return cap(a + b);
    }

    // Truncated subtraction: a - b = 0 whenever a <= b (in particular
    // * - * = 0, which keeps subtraction well-behaved), and * - b = * for
    // numeric b.
    int minus(int a, int b) const {
        if (leq(a, b)) return 0;
        if (a == star()) return star();
        return a - b;
    }

    bool leq(int a, int b) const {
        if (b == star()) return true;
        return a != star() && a <= b;
    }

    int cap(long long k) const { return k > n_ ? star() : static_cast<int>(k); }

    std::vector<int> carrier() const {
        std::vector<int> out;
        for (int v = 0; v <= star(); ++v) out.push_back(v);
        return out;
    }

    std::string render(int v) const {
        return v == star() ? "*" : std::to_string(v);
    }

    int parse(const std::string& s) const;

private:
    int n_;
};

// Value of an annotation functor at one graph. Multiplicity-style functors
// use one value per item (fixed order: nodes, then edges, both sorted by id);
// the path functor uses a set of node pairs packed into a bitmask with bit
// (i * |V| + j) for the pair (node i, node j).
struct Annotation {
    static constexpr int kMaxItems = 24;
    std::array<signed char, kMaxItems> v{};
    int size = 0;
    std::uint64_t paths = 0;

    int at(int i) const { return v[static_cast<std::size_t>(i)]; }
    void set(int i, int val) { v[static_cast<std::size_t>(i)] = static_cast<signed char>(val); }

    friend bool operator==(const Annotation&, const Annotation&) = default;
};

// Alternating-chain closure: all pairs (v0, vn) connected by a chain whose
// steps come alternately from p0 and p1, starting from either.
std::uint64_t path_plus(std::uint64_t p0, std::uint64_t p1, int nv);

// Transitive closure of the edge relation of g, as a packed pair set.
std::uint64_t path_closure(const Graph& g);

// Precomputed index form of a morphism: position of each domain item's image.
// For the path functor only node positions are used.
struct IndexedMorphism {
    std::vector<int> node_to;  // dom node position -> cod node position
    std::vector<int> edge_to;  // dom edge position -> cod edge position
    int cod_nodes = 0;
    int cod_edges = 0;
};

// The three annotation functors: mult ("B^n", multiplicities of nodes and
// edges, summed along morphisms, with reductions along monos), outdeg
// ("S^n", out-degree bounds on nodes, joined along morphisms) and path ("T",
// sets of connectivity pairs, imaged along morphisms).
class AnnotationFunctor {
public:
    enum class Kind { mult, outdeg, path };

    static AnnotationFunctor mult(int n) { return AnnotationFunctor(Kind::mult, n); }
    static AnnotationFunctor outdeg(int n) { return AnnotationFunctor(Kind::outdeg, n); }
    static AnnotationFunctor path() { return AnnotationFunctor(Kind::path, 0); }

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    std::string name() const;
    bool has_red() const { return kind_ == Kind::mult; }
    MnMonoid monoid() const { return MnMonoid(n_); }

    // Ids of the items annotated in g, in value order.
    std::vector<std::string> domain_items(const Graph& g) const;
    int domain_size(const Graph& g) const;

    Annotation zero(const Graph& g) const;
    Annotation top(const Graph& g) const;
    Annotation standard(const Graph& g) const;

    Annotation plus(const Graph& g, const Annotation& a, const Annotation& b) const;
    Annotation minus(const Graph& g, const Annotation& a, const Annotation& b) const;
    bool leq(const Graph& g, const Annotation& a, const Annotation& b) const;

    IndexedMorphism index(const GraphMorphism& f) const;
    Annotation apply_indexed(const IndexedMorphism& ix, const Annotation& a) const;
    Annotation red_indexed(const IndexedMorphism& ix, const Annotation& b) const;

    Annotation apply(const GraphMorphism& f, const Annotation& a) const;
    // Reduction along a mono; only the mult functor provides one.
    Annotation red(const GraphMorphism& f, const Annotation& b) const;

    // Every annotation of g; the carrier is finite for all three functors.
    std::vector<Annotation> enumerate(const Graph& g) const;

    friend bool operator==(const AnnotationFunctor&, const AnnotationFunctor&) = default;

private:
    AnnotationFunctor(Kind k, int n) : kind_(k), n_(n) {}

    Kind kind_;
    int n_;
};

// Raised when a reduction is requested from a functor that lacks one.
struct CapabilityAbsent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class AnnotationProperty {
    homomorphism,
    adjunction,
    pushout,
    pushout_standard,
    beck_chevalley,
    isomorphism,
};

std::string property_name(AnnotationProperty p);

// Human-readable form, e.g. "{u=1,e=*}" or "{(u,v),(v,v)}" for path sets.
std::string render_annotation(const AnnotationFunctor& fun, const Graph& g, const Annotation& a);

struct PropertyOutcome {
    enum class Status { pass, fail, capability_absent };
    Status status = Status::pass;
    std::string counterexample;  // empty on pass
};

// Exhaustive bounded test of one property over all monos / pushout squares /
// pullback squares among graphs within the budget (all square objects within
// bounds) and all annotations of the quantified objects.
PropertyOutcome check_property(const AnnotationFunctor& fun, AnnotationProperty prop,
                               const EnumerationBudget& budget);

// a - a = 0 and (a - b) + b = a for b <= a, over all annotations of graphs
// within the budget.
PropertyOutcome check_well_behaved_subtraction(const AnnotationFunctor& fun,
                                               const EnumerationBudget& budget);

} // namespace agr
