#pragma once

#include <optional>
#include <string>
#include <vector>

#include "comptype/complex.hpp"
#include "comptype/exact_linalg.hpp"

namespace comptype {

// Boundary matrix of the pair in one degree, with simplex labels in
// canonical order. Rows and columns belonging to A are deleted outright.
struct BoundaryMatrix {
    IntMatrix m;
    std::vector<Simplex> row_labels;  // (n-1)-simplices of X outside A
    std::vector<Simplex> col_labels;  // n-simplices of X outside A
};

// d[v0..vn] = sum_i (-1)^i [v0..^vi..vn] on sorted vertex lists. A degree
// with no simplices yields an empty matrix with the other side intact.
BoundaryMatrix relative_boundary_matrix(const Pair& p, int n);

// Finitely generated abelian group: Z^free_rank plus cyclic factors in a
// divisor chain (each > 1, each dividing the next).
struct GroupDescriptor {
    long free_rank = 0;
    std::vector<Int> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    std::string to_string() const;  // "0", "Z", "Z^2 + Z_2 + Z_4", ...
    bool operator==(const GroupDescriptor&) const = default;
};

// H_n(X, A; Z). Free rank and torsion come from the Smith forms of the
// degree-n and degree-(n+1) boundary matrices.
GroupDescriptor relative_homology(const Pair& p, int n);

// H_n(X, A; Z/k) as a finite abelian group (its invariant factors all
// divide k), assembled by universal coefficients from the integer data.
GroupDescriptor relative_homology_mod(const Pair& p, int n, const Int& k);

// Membership tests: does some relative n-cycle assign sigma a nonzero
// coefficient? sigma must be a maximal simplex of X, not a simplex of A,
// of dimension >= 1. Coefficients Z, Z/k, and the circle group.
bool cycle_membership_Z(const Pair& p, const Simplex& sigma);

// On success returns a witness chain over Z/k indexed by the column labels
// of the degree-n boundary matrix.
std::optional<std::vector<Int>> cycle_membership_mod(const Pair& p, const Simplex& sigma,
                                                     const Int& k);

struct TCycleResult {
    bool member = false;
    // Set exactly when membership was established through the torsion route
    // (step two); a modulus k >= 2 for which cycle_membership_mod succeeds.
    std::optional<Int> witness_modulus;
};

// Two steps. Step one: a rational kernel vector of the boundary matrix with
// nonzero sigma-coordinate settles membership over the circle group. Step
// two: otherwise e_sigma lies in the row space; with u^T D = e_sigma^T the
// achievable sigma-coefficients mod 1 are u^T g over the saturation basis
// g, so membership holds iff some u^T g is non-integral. The result does
// not depend on the choice of u: candidates differ by a left kernel vector,
// which kills every saturation vector.
TCycleResult cycle_membership_T(const Pair& p, const Simplex& sigma);

}  // namespace comptype
