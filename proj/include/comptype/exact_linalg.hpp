#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

namespace comptype {

// Arbitrary-precision integers and rationals. Rationals are always kept in
// reduced canonical form (gcd(num, den) = 1, den > 0).
using Int = mpz_class;
using Rat = mpq_class;

// Dense integer matrix, row-major. Zero-row and zero-column shapes are legal
// and preserve the other dimension.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {
        if (r < 0 || c < 0) throw std::invalid_argument("IntMatrix: negative shape");
    }

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMatrix identity(int n);

    bool operator==(const IntMatrix& o) const = default;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

// Smith normal form s = u * m * v with u, v unimodular (|det| = 1) and
// s diagonal with positive divisors d_1 | d_2 | ... | d_rank.
// u_inv satisfies u * u_inv = identity; it is tracked exactly during the
// reduction rather than inverted afterwards.
struct SmithResult {
    IntMatrix u;
    IntMatrix s;
    IntMatrix v;
    IntMatrix u_inv;
    int rank = 0;
    std::vector<Int> divisors;
};

// Pivot choice is deterministic: the nonzero entry of minimal absolute value
// in the working submatrix, ties broken by lowest row then lowest column.
SmithResult smith_normal_form(const IntMatrix& m);

// Basis of the lattice of integer points inside the real column span of m:
// the first rank(m) columns of u_inv. Vectors have length m.rows.
std::vector<std::vector<Int>> saturation_basis(const IntMatrix& m);

// Basis of the rational kernel {x : m x = 0}, computed by reduced row
// echelon form; one basis vector per free column, in column order.
std::vector<std::vector<Rat>> rational_kernel_basis(const IntMatrix& m);

// Rational u with u^T m = e_col^T, or nullopt when e_col is outside the row
// space of m. The returned u is the canonical echelon solution.
std::optional<std::vector<Rat>> solve_row_combination(const IntMatrix& m, int col);

// x in (Z/k)^cols with m x = 0 (mod k) and x[forced] != 0 (mod k), or
// nullopt when no such x exists. Exact for every modulus k >= 2: the
// solution subgroup is read off the integer Smith form of m, so composite k
// needs no special casing. Entries of the witness are reduced into [0, k).
std::optional<std::vector<Int>> kernel_mod_k(const IntMatrix& m, const Int& k, int forced);

}  // namespace comptype
