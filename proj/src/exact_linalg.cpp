#include "comptype/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace comptype {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    IntMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int t = 0; t < a.cols; ++t) {
            const Int& x = a.at(i, t);
            if (x == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += x * b.at(t, j);
        }
    return c;
}

namespace {

// In-place elementary operations applied consistently to s, the transforms,
// and the tracked inverse of u. Row ops multiply u on the left by E and
// u_inv on the right by E^-1; column ops multiply v on the right.
struct SnfState {
    IntMatrix s, u, v, u_inv;

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < s.cols; ++j) std::swap(s.at(a, j), s.at(b, j));
        for (int j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
        for (int i = 0; i < u_inv.rows; ++i) std::swap(u_inv.at(i, a), u_inv.at(i, b));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < s.rows; ++i) std::swap(s.at(i, a), s.at(i, b));
        for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    // row_a -= q * row_b
    void addmul_row(int a, int b, const Int& q) {
        if (q == 0) return;
        for (int j = 0; j < s.cols; ++j) s.at(a, j) -= q * s.at(b, j);
        for (int j = 0; j < u.cols; ++j) u.at(a, j) -= q * u.at(b, j);
        for (int i = 0; i < u_inv.rows; ++i) u_inv.at(i, b) += q * u_inv.at(i, a);
    }
    // col_a -= q * col_b
    void addmul_col(int a, int b, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < s.rows; ++i) s.at(i, a) -= q * s.at(i, b);
        for (int i = 0; i < v.rows; ++i) v.at(i, a) -= q * v.at(i, b);
    }
    void negate_row(int a) {
        for (int j = 0; j < s.cols; ++j) s.at(a, j) = -s.at(a, j);
        for (int j = 0; j < u.cols; ++j) u.at(a, j) = -u.at(a, j);
        for (int i = 0; i < u_inv.rows; ++i) u_inv.at(i, a) = -u_inv.at(i, a);
    }
};

// Minimal |nonzero| entry of s[t.., t..]; ties by lowest row, then column.
bool find_pivot(const IntMatrix& s, int t, int& pi, int& pj) {
    bool found = false;
    Int best;
    for (int i = t; i < s.rows; ++i)
        for (int j = t; j < s.cols; ++j) {
            const Int& x = s.at(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    SnfState st;
    st.s = m;
    st.u = IntMatrix::identity(m.rows);
    st.u_inv = IntMatrix::identity(m.rows);
    st.v = IntMatrix::identity(m.cols);

    const int bound = std::min(m.rows, m.cols);
    int t = 0;
    while (t < bound) {
        int pi, pj;
        if (!find_pivot(st.s, t, pi, pj)) break;
        for (;;) {
            st.swap_rows(t, pi);
            st.swap_cols(t, pj);
            if (st.s.at(t, t) < 0) st.negate_row(t);
            const Int p = st.s.at(t, t);
            bool dirty = false;
            for (int i = t + 1; i < st.s.rows; ++i) {
                const Int& x = st.s.at(i, t);
                if (x == 0) continue;
                Int q = x / p;  // truncated; remainder keeps |rem| < p
                st.addmul_row(i, t, q);
                if (st.s.at(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < st.s.cols; ++j) {
                const Int& x = st.s.at(t, j);
                if (x == 0) continue;
                Int q = x / p;
                st.addmul_col(j, t, q);
                if (st.s.at(t, j) != 0) dirty = true;
            }
            if (dirty) {
                find_pivot(st.s, t, pi, pj);
                continue;
            }
            // Divisor chain: the pivot must divide every remaining entry.
            int bi = -1;
            for (int i = t + 1; i < st.s.rows && bi < 0; ++i)
                for (int j = t + 1; j < st.s.cols; ++j)
                    if (st.s.at(i, j) % p != 0) {
                        bi = i;
                        break;
                    }
            if (bi >= 0) {
                st.addmul_row(t, bi, Int(-1));  // row_t += row_bi
                find_pivot(st.s, t, pi, pj);
                continue;
            }
            break;
        }
        ++t;
    }

    SmithResult res;
    res.rank = t;
    res.divisors.reserve(t);
    for (int i = 0; i < t; ++i) res.divisors.push_back(st.s.at(i, i));
    res.u = std::move(st.u);
    res.s = std::move(st.s);
    res.v = std::move(st.v);
    res.u_inv = std::move(st.u_inv);
    return res;
}

std::vector<std::vector<Int>> saturation_basis(const IntMatrix& m) {
    SmithResult r = smith_normal_form(m);
    std::vector<std::vector<Int>> basis(r.rank);
    for (int j = 0; j < r.rank; ++j) {
        basis[j].resize(m.rows);
        for (int i = 0; i < m.rows; ++i) basis[j][i] = r.u_inv.at(i, j);
    }
    return basis;
}

namespace {

// Reduced row echelon form over Q; returns pivot column per pivot row.
std::vector<int> rref(std::vector<std::vector<Rat>>& m) {
    std::vector<int> pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rr = 0;
    for (int col = 0; col < cols && rr < rows; ++col) {
        int sel = -1;
        for (int i = rr; i < rows; ++i)
            if (m[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[rr], m[sel]);
        Rat pv = m[rr][col];
        for (auto& x : m[rr]) x /= pv;
        for (int i = 0; i < rows; ++i) {
            if (i == rr || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (int j = 0; j < cols; ++j) m[i][j] -= f * m[rr][j];
        }
        pivots.push_back(col);
        ++rr;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Rat>> rational_kernel_basis(const IntMatrix& m) {
    const int cols = m.cols;
    if (cols == 0) return {};
    if (m.rows == 0) {
        std::vector<std::vector<Rat>> basis(cols, std::vector<Rat>(cols));
        for (int j = 0; j < cols; ++j) basis[j][j] = 1;
        return basis;
    }
    std::vector<std::vector<Rat>> w(m.rows, std::vector<Rat>(cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < cols; ++j) w[i][j] = Rat(m.at(i, j));
    std::vector<int> pivots = rref(w);
    std::vector<bool> is_pivot(cols, false);
    for (int pc : pivots) is_pivot[pc] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> vec(cols);
        vec[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) vec[pivots[r]] = -w[r][free];
        basis.push_back(std::move(vec));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve_row_combination(const IntMatrix& m, int col) {
    if (col < 0 || col >= m.cols) throw std::invalid_argument("solve_row_combination: bad column");
    // Solve m^T u = e_col on the augmented transpose.
    const int rows = m.cols;        // equations
    const int unknowns = m.rows;    // entries of u
    std::vector<std::vector<Rat>> w(rows, std::vector<Rat>(unknowns + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < unknowns; ++j) w[i][j] = Rat(m.at(j, i));
        w[i][unknowns] = (i == col) ? 1 : 0;
    }
    std::vector<int> pivots = rref(w);
    for (int pc : pivots)
        if (pc == unknowns) return std::nullopt;  // inconsistent
    std::vector<Rat> u(unknowns);
    for (size_t r = 0; r < pivots.size(); ++r) u[pivots[r]] = w[r][unknowns];
    return u;
}

std::optional<std::vector<Int>> kernel_mod_k(const IntMatrix& m, const Int& k, int forced) {
    if (k < 2) throw std::invalid_argument("kernel_mod_k: modulus must be >= 2");
    if (forced < 0 || forced >= m.cols) throw std::invalid_argument("kernel_mod_k: bad coordinate");
    const int cols = m.cols;
    if (m.rows == 0) {
        std::vector<Int> x(cols, 0);
        x[forced] = 1;
        return x;
    }
    // With s = u m v, the solutions of m x = 0 (mod k) are x = v y where
    // y_i is any multiple of k / gcd(d_i, k) for i < rank and free above the
    // rank. The forced coordinate over all solutions forms the subgroup of
    // Z/k generated by v[forced][i] * m_i, so a single generator suffices.
    SmithResult r = smith_normal_form(m);
    for (int i = 0; i < cols; ++i) {
        Int mult;
        if (i < r.rank) {
            Int g;
            mpz_gcd(g.get_mpz_t(), r.divisors[i].get_mpz_t(), k.get_mpz_t());
            mult = k / g;
        } else {
            mult = 1;
        }
        Int ci = (r.v.at(forced, i) * mult) % k;
        if (ci < 0) ci += k;
        if (ci == 0) continue;
        std::vector<Int> x(cols);
        for (int row = 0; row < cols; ++row) {
            x[row] = (r.v.at(row, i) * mult) % k;
            if (x[row] < 0) x[row] += k;
        }
        return x;
    }
    return std::nullopt;
}

}  // namespace comptype
