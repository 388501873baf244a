#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "comptype/complex.hpp"
#include "comptype/relative_cycles.hpp"

namespace comptype {

// Hypothesis fragment a link pair falls into. The decider only ever answers
// False inside the equivalence fragments (Dim0 via the cone graph, RelPure,
// LowDim); in AEOnly the cycle test is merely sufficient, and NotAE is out
// of scope entirely.
enum class FragmentKind { Dim0, RelPure, LowDim, AEOnly, NotAE };

struct FragmentClass {
    FragmentKind kind = FragmentKind::Dim0;
    int pure_dim = -1;  // the n of RelPure(n), -1 otherwise

    std::string to_string() const;
    bool operator==(const FragmentClass& o) const {
        return kind == o.kind && pure_dim == o.pure_dim;
    }
};

// A facet of L outside N means: a facet not contained in the N subcomplex
// (Tip and Empty markers contribute no simplices). These are the facets
// whose open cells the surjection test must cover.
// Precedence: Dim0 if dim L <= 0; RelPure(dim L) if every outside facet has
// dimension exactly dim L; LowDim if dim L <= 3 and every outside facet has
// dimension >= 1; AEOnly if every outside facet has dimension >= 1; NotAE
// otherwise.
FragmentClass classify_fragment(const Complex& l, const NMarker& n);

enum class Truth { True_, False_, Unknown };

std::string truth_to_string(Truth t);  // "TRUE" / "FALSE" / "UNKNOWN"

struct FacetWitness {
    Simplex facet;
    std::string reason;
};

// Outcome of the surjection test for one cone pair C(L, N). False and
// Unknown carry one witness per facet that failed (or, for NotAE, per facet
// breaking the hypothesis). witness_modulus is the largest modulus the
// torsion route needed for a passing facet, when the rational kernel alone
// was not enough anywhere on this link.
struct Verdict {
    Truth value = Truth::Unknown;
    FragmentClass fragment;
    std::vector<FacetWitness> witnesses;
    std::optional<Int> witness_modulus;
    long facets_tested = 0;
};

// Does every self-map of C L fixing L ∪ C N hit all of C L? Decided on the
// fragment routes; see the implementation for the route order.
Verdict cone_pair_surjection(const Complex& l, const NMarker& n);

struct LinkAnalysis {
    VertexId vertex;
    Verdict verdict;
};

// value aggregates the link verdicts: False if any link is False, True if
// all links are True, Unknown otherwise. links is in canonical vertex order
// and is identical whether or not the analysis ran in parallel.
struct TypeDecision {
    Truth value = Truth::Unknown;
    std::vector<LinkAnalysis> links;
};

// The pair (x, a) has computable type iff every vertex-link cone pair has
// the surjection property; x must be nonempty.
TypeDecision computable_type(const Pair& p, bool parallel = false);

// Combinatorial reference for 1-complexes: an edge qualifies iff it lies on
// a cycle or on an edge-simple path between two vertices of a. Exhaustive
// trail search, only suitable as a small-scale cross-check.
// Throws std::invalid_argument when g has dimension > 1 or a is not a
// subset of its vertices.
std::map<Simplex, bool, SimplexLess> graph_edge_criterion_oracle(
    const Complex& g, const std::vector<VertexId>& a);

// Independent cross-checks of the homological route on one pair:
//  - on every vertex link of dimension <= 1 (and on the cone graphs built
//    for 0-dimensional links), the circle-coefficient verdict per facet must
//    match graph_edge_criterion_oracle;
//  - per tested facet, membership over Z implies membership over the circle
//    group, a False circle verdict forces an empty kernel mod k for all
//    k <= 30, and a reported witness modulus must verify.
// Returns human-readable disagreement descriptions; empty means clean.
std::vector<std::string> oracle_disagreements(const Pair& p);

}  // namespace comptype
