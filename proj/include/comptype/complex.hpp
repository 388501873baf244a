#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace comptype {

// Interned vertex name. Copies are cheap; equality is pointer equality on
// the intern pool, ordering is lexicographic on the token so that every
// canonical order in the library is independent of interning history.
class VertexId {
  public:
    static VertexId of(std::string_view token);

    const std::string& token() const { return *tok_; }

    bool operator==(const VertexId& o) const { return tok_ == o.tok_; }
    bool operator!=(const VertexId& o) const { return tok_ != o.tok_; }
    bool operator<(const VertexId& o) const { return tok_ != o.tok_ && *tok_ < *o.tok_; }
    bool operator>(const VertexId& o) const { return o < *this; }
    bool operator<=(const VertexId& o) const { return !(o < *this); }
    bool operator>=(const VertexId& o) const { return !(*this < o); }

  private:
    explicit VertexId(const std::string* t) : tok_(t) {}
    const std::string* tok_;
};

// Sorted list of distinct vertices; dim = size - 1.
using Simplex = std::vector<VertexId>;

Simplex make_simplex(std::vector<VertexId> verts);  // sorts, rejects repeats
std::string simplex_to_string(const Simplex& s);

// Canonical simplex order: by dimension, then lexicographic on tokens.
// Every facet list, matrix labeling, and report in the library uses it.
struct SimplexLess {
    bool operator()(const Simplex& a, const Simplex& b) const;
};

class Complex {
  public:
    Complex() = default;

    // Face closure of the given facets. Input order is irrelevant.
    static Complex from_facets(const std::vector<Simplex>& facets);

    bool empty() const { return faces_.empty(); }
    int dim() const;  // -1 for the empty complex
    size_t size() const { return faces_.size(); }

    bool contains(const Simplex& s) const { return faces_.count(s) > 0; }
    bool contains_vertex(VertexId v) const;

    const std::set<Simplex, SimplexLess>& faces() const { return faces_; }
    std::vector<Simplex> facets() const;            // maximal simplices
    std::vector<Simplex> k_simplices(int k) const;  // dimension-k faces
    std::vector<VertexId> vertices() const;
    std::vector<long> f_vector() const;  // f[k] = number of k-simplices

    bool is_subcomplex_of(const Complex& other) const;

    bool operator==(const Complex& o) const { return faces_ == o.faces_; }

  private:
    std::set<Simplex, SimplexLess> faces_;
};

struct Pair {
    Complex x;
    Complex a;
};

// Throws std::invalid_argument naming the offending simplex when a is not a
// subcomplex of x.
void validate_pair(const Pair& p);

// Marker for the subcomplex slot of a link pair. Tip is the formal one-point
// pair base: the link of a vertex that lies in A but has no A-neighbours.
enum class NKind { Empty, Tip, Sub };

struct NMarker {
    NKind kind = NKind::Empty;
    Complex sub;  // nonempty exactly when kind == Sub

    static NMarker empty() { return {NKind::Empty, {}}; }
    static NMarker tip() { return {NKind::Tip, {}}; }
    static NMarker of(Complex c);  // Empty when c is empty, else Sub
    const Complex& simplices() const;  // Sub payload, empty complex otherwise
};

struct LinkPair {
    Complex link;
    NMarker n;
};

// Link of v in x paired with the induced marker: Sub(link of v in a) when v
// is an a-vertex with a-neighbours, Tip when v is isolated in a, Empty when
// v lies outside a.
LinkPair link_pair(const Pair& p, VertexId v);

// apex must not be a vertex of x; cone of the empty complex is {apex}.
Complex cone(const Complex& x, VertexId apex);

// Vertex sets must be disjoint. simplices(x * y) = {s ∪ t} over s in
// x ∪ {∅}, t in y ∪ {∅}, minus ∅; the empty complex is the join unit.
Complex join(const Complex& x, const Complex& y);

// Join with two fresh vertices.
Complex suspension(const Complex& x);

// Union over 0 <= n < dim k of the n-simplices lying in an odd number of
// (n+1)-dimensional facets of k, closed downward. Only maximal simplices
// are counted.
Complex odd_subcomplex(const Complex& k);

// Pair versions: cone_pair(x, a) = (Cx, x ∪ Ca) and the suspension acts on
// both members.
Pair cone_pair(const Pair& p, VertexId apex);
Pair suspension_pair(const Pair& p);

// Deterministic fresh vertex: base if unused, else base1, base2, ...
VertexId fresh_vertex(const Complex& x, std::string_view base);

}  // namespace comptype
