#include "comptype/complex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace comptype {

namespace {

// Intern pool. std::set guarantees stable addresses for the lifetime of the
// process; the mutex makes interning safe from worker threads.
std::set<std::string>& intern_pool() {
    static std::set<std::string> pool;
    return pool;
}
std::mutex& intern_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

VertexId VertexId::of(std::string_view token) {
    if (token.empty()) throw std::invalid_argument("vertex token must be nonempty");
    if (token.find_first_of(" \t\r\n") != std::string_view::npos)
        throw std::invalid_argument("vertex token must be whitespace-free: '" + std::string(token) + "'");
    std::lock_guard<std::mutex> lock(intern_mutex());
    auto [it, inserted] = intern_pool().insert(std::string(token));
    return VertexId(&*it);
}

Simplex make_simplex(std::vector<VertexId> verts) {
    std::sort(verts.begin(), verts.end());
    for (size_t i = 1; i < verts.size(); ++i)
        if (verts[i] == verts[i - 1])
            throw std::invalid_argument("repeated vertex in simplex: " + verts[i].token());
    return verts;
}

std::string simplex_to_string(const Simplex& s) {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out << " ";
        out << s[i].token();
    }
    out << "}";
    return out.str();
}

bool SimplexLess::operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Complex Complex::from_facets(const std::vector<Simplex>& facets) {
    Complex c;
    // Enumerate all nonempty subsets of each facet.
    for (const Simplex& f : facets) {
        if (f.empty()) throw std::invalid_argument("empty simplex is not a face");
        for (size_t i = 1; i + 1 < f.size(); ++i)
            if (f[i] == f[i + 1] || f[i] == f[i - 1])
                throw std::invalid_argument("facet vertices must be distinct");
        if (!std::is_sorted(f.begin(), f.end()))
            throw std::invalid_argument("facet vertices must be sorted");
        const size_t n = f.size();
        for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
            Simplex s;
            for (size_t i = 0; i < n; ++i)
                if (mask & (size_t(1) << i)) s.push_back(f[i]);
            c.faces_.insert(std::move(s));
        }
    }
    return c;
}

int Complex::dim() const {
    int d = -1;
    for (const Simplex& s : faces_) d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
}

bool Complex::contains_vertex(VertexId v) const {
    return faces_.count(Simplex{v}) > 0;
}

std::vector<Simplex> Complex::facets() const {
    std::vector<Simplex> out;
    for (const Simplex& s : faces_) {
        bool maximal = true;
        for (const Simplex& t : faces_) {
            if (t.size() <= s.size()) continue;
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

std::vector<Simplex> Complex::k_simplices(int k) const {
    std::vector<Simplex> out;
    for (const Simplex& s : faces_)
        if (static_cast<int>(s.size()) == k + 1) out.push_back(s);
    return out;
}

std::vector<VertexId> Complex::vertices() const {
    std::vector<VertexId> out;
    for (const Simplex& s : faces_)
        if (s.size() == 1) out.push_back(s[0]);
    return out;
}

std::vector<long> Complex::f_vector() const {
    std::vector<long> f(static_cast<size_t>(std::max(dim() + 1, 0)), 0);
    for (const Simplex& s : faces_) ++f[s.size() - 1];
    return f;
}

bool Complex::is_subcomplex_of(const Complex& other) const {
    for (const Simplex& s : faces_)
        if (!other.contains(s)) return false;
    return true;
}

void validate_pair(const Pair& p) {
    for (const Simplex& s : p.a.faces())
        if (!p.x.contains(s))
            throw std::invalid_argument("pair invalid: simplex " + simplex_to_string(s) +
                                        " of A is not a simplex of X");
}

NMarker NMarker::of(Complex c) {
    if (c.empty()) return empty();
    return {NKind::Sub, std::move(c)};
}

const Complex& NMarker::simplices() const {
    static const Complex none;
    return kind == NKind::Sub ? sub : none;
}

namespace {

Complex link_in(const Complex& c, VertexId v) {
    std::vector<Simplex> faces;
    for (const Simplex& s : c.faces()) {
        auto it = std::lower_bound(s.begin(), s.end(), v);
        if (it == s.end() || !(*it == v) || s.size() == 1) continue;
        Simplex t;
        t.reserve(s.size() - 1);
        for (const VertexId& w : s)
            if (!(w == v)) t.push_back(w);
        faces.push_back(std::move(t));
    }
    return Complex::from_facets(faces);
}

}  // namespace

LinkPair link_pair(const Pair& p, VertexId v) {
    if (!p.x.contains_vertex(v))
        throw std::invalid_argument("link_pair: " + v.token() + " is not a vertex of X");
    LinkPair lp;
    lp.link = link_in(p.x, v);
    if (!p.a.contains_vertex(v)) {
        lp.n = NMarker::empty();
    } else {
        Complex la = link_in(p.a, v);
        lp.n = la.empty() ? NMarker::tip() : NMarker::of(std::move(la));
    }
    return lp;
}

Complex cone(const Complex& x, VertexId apex) {
    if (x.contains_vertex(apex))
        throw std::invalid_argument("cone: apex " + apex.token() + " is already a vertex");
    std::vector<Simplex> facets;
    for (const Simplex& f : x.facets()) {
        Simplex g = f;
        g.push_back(apex);
        facets.push_back(make_simplex(std::move(g)));
    }
    if (facets.empty()) facets.push_back(Simplex{apex});
    return Complex::from_facets(facets);
}

Complex join(const Complex& x, const Complex& y) {
    for (VertexId v : x.vertices())
        if (y.contains_vertex(v))
            throw std::invalid_argument("join: vertex sets overlap at " + v.token());
    std::vector<Simplex> faces;
    auto xs = std::vector<Simplex>(x.faces().begin(), x.faces().end());
    auto ys = std::vector<Simplex>(y.faces().begin(), y.faces().end());
    xs.push_back({});
    ys.push_back({});
    for (const Simplex& s : xs)
        for (const Simplex& t : ys) {
            if (s.empty() && t.empty()) continue;
            Simplex u = s;
            u.insert(u.end(), t.begin(), t.end());
            std::sort(u.begin(), u.end());
            faces.push_back(std::move(u));
        }
    return Complex::from_facets(faces);
}

Complex suspension(const Complex& x) {
    VertexId s0 = fresh_vertex(x, "sp0");
    VertexId s1 = fresh_vertex(x, "sp1");
    Complex poles = Complex::from_facets({Simplex{s0}, Simplex{s1}});
    return join(x, poles);
}

Complex odd_subcomplex(const Complex& k) {
    std::vector<Simplex> odd;
    std::vector<Simplex> facets = k.facets();
    const int d = k.dim();
    for (int n = 0; n < d; ++n) {
        for (const Simplex& s : k.k_simplices(n)) {
            int count = 0;
            for (const Simplex& f : facets) {
                if (static_cast<int>(f.size()) != n + 2) continue;
                if (std::includes(f.begin(), f.end(), s.begin(), s.end())) ++count;
            }
            if (count % 2 == 1) odd.push_back(s);
        }
    }
    return Complex::from_facets(odd);
}

Pair cone_pair(const Pair& p, VertexId apex) {
    validate_pair(p);
    Pair out;
    out.x = cone(p.x, apex);
    std::vector<Simplex> a_facets;
    for (const Simplex& f : p.x.facets()) a_facets.push_back(f);
    // The cone over an empty A contributes nothing, so C(X, empty) is the
    // pair (CX, X): the cone over a closed manifold relative to its base.
    if (!p.a.empty())
        for (const Simplex& f : cone(p.a, apex).facets()) a_facets.push_back(f);
    out.a = Complex::from_facets(a_facets);
    return out;
}

Pair suspension_pair(const Pair& p) {
    validate_pair(p);
    VertexId s0 = fresh_vertex(p.x, "sp0");
    VertexId s1 = fresh_vertex(p.x, "sp1");
    Complex poles = Complex::from_facets({Simplex{s0}, Simplex{s1}});
    Pair out;
    out.x = join(p.x, poles);
    out.a = p.a.empty() ? Complex() : join(p.a, poles);
    return out;
}

VertexId fresh_vertex(const Complex& x, std::string_view base) {
    VertexId v = VertexId::of(base);
    if (!x.contains_vertex(v)) return v;
    for (int i = 1;; ++i) {
        VertexId w = VertexId::of(std::string(base) + std::to_string(i));
        if (!x.contains_vertex(w)) return w;
    }
}

}  // namespace comptype
