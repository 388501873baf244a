#include "comptype/relative_cycles.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace comptype {

BoundaryMatrix relative_boundary_matrix(const Pair& p, int n) {
    if (n < 0) throw std::invalid_argument("relative_boundary_matrix: degree must be >= 0");
    BoundaryMatrix b;
    for (const Simplex& s : p.x.k_simplices(n))
        if (!p.a.contains(s)) b.col_labels.push_back(s);
    if (n >= 1)
        for (const Simplex& s : p.x.k_simplices(n - 1))
            if (!p.a.contains(s)) b.row_labels.push_back(s);
    std::map<Simplex, int, SimplexLess> row_index;
    for (size_t i = 0; i < b.row_labels.size(); ++i) row_index[b.row_labels[i]] = static_cast<int>(i);
    b.m = IntMatrix(static_cast<int>(b.row_labels.size()), static_cast<int>(b.col_labels.size()));
    for (size_t j = 0; j < b.col_labels.size(); ++j) {
        const Simplex& s = b.col_labels[j];
        int sign = 1;
        for (size_t i = 0; i < s.size(); ++i) {
            Simplex face;
            face.reserve(s.size() - 1);
            for (size_t t = 0; t < s.size(); ++t)
                if (t != i) face.push_back(s[t]);
            auto it = row_index.find(face);
            if (it != row_index.end()) b.m.at(it->second, static_cast<int>(j)) = sign;
            sign = -sign;
        }
    }
    return b;
}

std::string GroupDescriptor::to_string() const {
    if (trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank > 0) {
        out << "Z";
        if (free_rank > 1) out << "^" << free_rank;
        first = false;
    }
    for (const Int& d : torsion) {
        if (!first) out << " + ";
        out << "Z_" << d.get_str();
        first = false;
    }
    return out.str();
}

GroupDescriptor relative_homology(const Pair& p, int n) {
    BoundaryMatrix dn = relative_boundary_matrix(p, n);
    const long m = static_cast<long>(dn.col_labels.size());
    if (m == 0) return {};
    long rank_n = 0;
    if (dn.m.rows > 0) rank_n = smith_normal_form(dn.m).rank;
    BoundaryMatrix dn1 = relative_boundary_matrix(p, n + 1);
    GroupDescriptor g;
    long rank_n1 = 0;
    if (dn1.m.rows > 0 && dn1.m.cols > 0) {
        SmithResult s = smith_normal_form(dn1.m);
        rank_n1 = s.rank;
        for (const Int& d : s.divisors)
            if (d > 1) g.torsion.push_back(d);
    }
    g.free_rank = m - rank_n - rank_n1;
    return g;
}

namespace {

// Invariant factors of a direct sum of cyclic groups of the given orders.
std::vector<Int> invariant_factors(std::vector<Int> orders) {
    orders.erase(std::remove_if(orders.begin(), orders.end(), [](const Int& x) { return x <= 1; }),
                 orders.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < orders.size() && !changed; ++i)
            for (size_t j = i + 1; j < orders.size() && !changed; ++j) {
                Int g, l;
                mpz_gcd(g.get_mpz_t(), orders[i].get_mpz_t(), orders[j].get_mpz_t());
                l = orders[i] / g * orders[j];
                if (g != orders[i] || l != orders[j]) {
                    orders[i] = g;
                    orders[j] = l;
                    changed = true;
                }
            }
        orders.erase(std::remove(orders.begin(), orders.end(), Int(1)), orders.end());
    }
    std::sort(orders.begin(), orders.end());
    return orders;
}

std::vector<Int> torsion_of_degree(const Pair& p, int n) {
    // Torsion of H_n comes from the Smith divisors of the degree-(n+1) map.
    BoundaryMatrix d = relative_boundary_matrix(p, n + 1);
    std::vector<Int> out;
    if (d.m.rows > 0 && d.m.cols > 0)
        for (const Int& x : smith_normal_form(d.m).divisors)
            if (x > 1) out.push_back(x);
    return out;
}

}  // namespace

GroupDescriptor relative_homology_mod(const Pair& p, int n, const Int& k) {
    if (k < 2) throw std::invalid_argument("relative_homology_mod: modulus must be >= 2");
    GroupDescriptor over_z = relative_homology(p, n);
    std::vector<Int> orders;
    for (long i = 0; i < over_z.free_rank; ++i) orders.push_back(k);
    for (const Int& d : over_z.torsion) {
        Int g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), k.get_mpz_t());
        orders.push_back(g);
    }
    if (n >= 1)
        for (const Int& d : torsion_of_degree(p, n - 1)) {
            Int g;
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), k.get_mpz_t());
            orders.push_back(g);
        }
    GroupDescriptor out;
    out.torsion = invariant_factors(std::move(orders));
    return out;
}

namespace {

int locate_column(const Pair& p, const Simplex& sigma, const BoundaryMatrix& b) {
    if (sigma.size() < 2)
        throw std::invalid_argument("cycle membership: simplex must have dimension >= 1");
    if (!p.x.contains(sigma))
        throw std::invalid_argument("cycle membership: " + simplex_to_string(sigma) +
                                    " is not a simplex of X");
    if (p.a.contains(sigma))
        throw std::invalid_argument("cycle membership: " + simplex_to_string(sigma) +
                                    " is a simplex of A");
    for (const Simplex& t : p.x.faces())
        if (t.size() > sigma.size() &&
            std::includes(t.begin(), t.end(), sigma.begin(), sigma.end()))
            throw std::invalid_argument("cycle membership: " + simplex_to_string(sigma) +
                                        " is not maximal in X");
    auto it = std::find(b.col_labels.begin(), b.col_labels.end(), sigma);
    if (it == b.col_labels.end())
        throw std::logic_error("cycle membership: column for sigma missing");
    return static_cast<int>(it - b.col_labels.begin());
}

}  // namespace

bool cycle_membership_Z(const Pair& p, const Simplex& sigma) {
    BoundaryMatrix b = relative_boundary_matrix(p, static_cast<int>(sigma.size()) - 1);
    int j = locate_column(p, sigma, b);
    for (const auto& v : rational_kernel_basis(b.m))
        if (v[j] != 0) return true;
    return false;
}

std::optional<std::vector<Int>> cycle_membership_mod(const Pair& p, const Simplex& sigma,
                                                     const Int& k) {
    BoundaryMatrix b = relative_boundary_matrix(p, static_cast<int>(sigma.size()) - 1);
    int j = locate_column(p, sigma, b);
    return kernel_mod_k(b.m, k, j);
}

TCycleResult cycle_membership_T(const Pair& p, const Simplex& sigma) {
    BoundaryMatrix b = relative_boundary_matrix(p, static_cast<int>(sigma.size()) - 1);
    int j = locate_column(p, sigma, b);

    for (const auto& v : rational_kernel_basis(b.m))
        if (v[j] != 0) return {true, std::nullopt};

    auto u = solve_row_combination(b.m, j);
    if (!u)
        throw std::logic_error(
            "cycle_membership_T: e_sigma outside the row space although the kernel "
            "vanishes at sigma");
    std::vector<std::vector<Int>> lattice = saturation_basis(b.m);

    // Candidate moduli in scan order: denominators of the non-integral
    // pairings. Each candidate is verified before being reported; the Smith
    // divisors form a provably sufficient reserve (d_j itself certifies a
    // column with d_j not dividing the pairing numerator), so the scan
    // cannot fall through when a non-integral pairing exists.
    bool any_nonintegral = false;
    std::vector<Int> candidates;
    for (const auto& g : lattice) {
        Rat val;
        for (int i = 0; i < b.m.rows; ++i) val += (*u)[i] * Rat(g[i]);
        val.canonicalize();
        if (val.get_den() != 1) {
            any_nonintegral = true;
            candidates.push_back(val.get_den());
        }
    }
    if (!any_nonintegral) return {false, std::nullopt};
    SmithResult snf = smith_normal_form(b.m);
    for (const Int& d : snf.divisors)
        if (d > 1) candidates.push_back(d);
    for (const Int& k : candidates) {
        if (kernel_mod_k(b.m, k, j)) return {true, k};
    }
    throw std::logic_error("cycle_membership_T: no verifiable witness modulus found");
}

}  // namespace comptype
