#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "comptype/complex.hpp"
#include "doctest.h"

using namespace comptype;

namespace {

VertexId v(const char* t) { return VertexId::of(t); }

Simplex sx(std::initializer_list<const char*> toks) {
    std::vector<VertexId> verts;
    for (const char* t : toks) verts.push_back(v(t));
    return make_simplex(std::move(verts));
}

std::vector<VertexId> pool(int n) {
    std::vector<VertexId> out;
    for (int i = 0; i < n; ++i) out.push_back(VertexId::of("v" + std::to_string(i)));
    return out;
}

// All (k+1)-subsets of n vertices, as facets.
std::vector<Simplex> subsets(const std::vector<VertexId>& verts, int k1) {
    std::vector<Simplex> out;
    std::vector<int> idx(k1);
    for (int i = 0; i < k1; ++i) idx[i] = i;
    const int n = static_cast<int>(verts.size());
    if (k1 > n || k1 <= 0) return out;
    while (true) {
        Simplex s;
        for (int i : idx) s.push_back(verts[i]);
        out.push_back(make_simplex(std::move(s)));
        int j = k1 - 1;
        while (j >= 0 && idx[j] == n - (k1 - j)) --j;
        if (j < 0) break;
        ++idx[j];
        for (int t = j + 1; t < k1; ++t) idx[t] = idx[t - 1] + 1;
    }
    return out;
}

Complex boundary_sphere(int n) { return Complex::from_facets(subsets(pool(n + 2), n + 1)); }

Complex random_complex(std::mt19937& rng, const std::string& prefix) {
    std::uniform_int_distribution<int> nf(0, 5), sz(1, 3), pick(0, 4);
    std::vector<VertexId> verts;
    for (int i = 0; i < 5; ++i) verts.push_back(VertexId::of(prefix + std::to_string(i)));
    std::vector<Simplex> facets;
    const int k = nf(rng);
    for (int f = 0; f < k; ++f) {
        std::set<VertexId> chosen;
        const int s = sz(rng);
        while (static_cast<int>(chosen.size()) < s) chosen.insert(verts[pick(rng)]);
        facets.push_back(make_simplex({chosen.begin(), chosen.end()}));
    }
    return Complex::from_facets(facets);
}

// f-vector padded with f[-1] = 1 at index 0 so join identities read cleanly.
std::vector<long> padded_f(const Complex& c, size_t len) {
    std::vector<long> f{1};
    for (long x : c.f_vector()) f.push_back(x);
    f.resize(len, 0);
    return f;
}

}  // namespace

TEST_CASE("make_simplex sorts and rejects repeats") {
    const Simplex s = make_simplex({v("c"), v("a"), v("b")});
    CHECK(s[0].token() == "a");
    CHECK(s[2].token() == "c");
    CHECK_THROWS_AS(make_simplex({v("a"), v("a")}), std::invalid_argument);
    CHECK(simplex_to_string(sx({"b", "a"})) == "{a b}");
}

TEST_CASE("canonical simplex order is dimension first, then lexicographic") {
    SimplexLess less;
    CHECK(less(sx({"z"}), sx({"a", "b"})));
    CHECK(less(sx({"a", "c"}), sx({"b", "c"})));
    CHECK_FALSE(less(sx({"a", "b"}), sx({"a", "b"})));
}

TEST_CASE("face closure of the full tetrahedron") {
    const Complex c = Complex::from_facets({sx({"a", "b", "c", "d"})});
    CHECK(c.f_vector() == std::vector<long>{4, 6, 4, 1});
    CHECK(c.dim() == 3);
    CHECK(c.size() == 15);
    CHECK(c.contains(sx({"a", "c"})));
    CHECK(c.contains_vertex(v("d")));
    CHECK_FALSE(c.contains_vertex(v("e")));
    CHECK(c.facets() == std::vector<Simplex>{sx({"a", "b", "c", "d"})});
}

TEST_CASE("from_facets ignores input order and redundant faces") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        const Complex c = random_complex(rng, "p");
        std::vector<Simplex> listing(c.faces().begin(), c.faces().end());
        std::shuffle(listing.begin(), listing.end(), rng);
        CHECK(Complex::from_facets(listing) == c);
        for (const Simplex& f : c.facets()) CHECK(c.contains(f));
    }
}

TEST_CASE("empty complex") {
    const Complex c;
    CHECK(c.empty());
    CHECK(c.dim() == -1);
    CHECK(c.f_vector().empty());
    CHECK(c.facets().empty());
    CHECK(Complex::from_facets({}) == c);
}

TEST_CASE("vertex links in boundary spheres") {
    for (int n = 0; n <= 3; ++n) {
        const Complex s = boundary_sphere(n + 1);
        const Pair p{s, Complex{}};
        for (VertexId w : s.vertices()) {
            const LinkPair lp = link_pair(p, w);
            CHECK(lp.n.kind == NKind::Empty);
            CHECK(lp.link.f_vector() == boundary_sphere(n).f_vector());
        }
    }
}

TEST_CASE("link pair markers along a path") {
    const Complex x = Complex::from_facets({sx({"0", "1"}), sx({"1", "2"})});

    SUBCASE("vertex isolated in the subcomplex gives the formal point base") {
        const Pair p{x, Complex::from_facets({sx({"0"})})};
        const LinkPair at0 = link_pair(p, v("0"));
        CHECK(at0.n.kind == NKind::Tip);
        CHECK(at0.link == Complex::from_facets({sx({"1"})}));
        const LinkPair at1 = link_pair(p, v("1"));
        CHECK(at1.n.kind == NKind::Empty);
        CHECK(at1.link == Complex::from_facets({sx({"0"}), sx({"2"})}));
    }

    SUBCASE("vertex with neighbours in the subcomplex gives the induced link") {
        const Pair p{x, Complex::from_facets({sx({"0", "1"})})};
        const LinkPair at0 = link_pair(p, v("0"));
        CHECK(at0.n.kind == NKind::Sub);
        CHECK(at0.n.simplices() == Complex::from_facets({sx({"1"})}));
        const LinkPair at2 = link_pair(p, v("2"));
        CHECK(at2.n.kind == NKind::Empty);
    }
}

TEST_CASE("marker constructors") {
    CHECK(NMarker::of(Complex{}).kind == NKind::Empty);
    CHECK(NMarker::of(Complex::from_facets({sx({"q"})})).kind == NKind::Sub);
    CHECK(NMarker::tip().simplices().empty());
}

TEST_CASE("join satisfies the face-count convolution") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 100; ++trial) {
        const Complex a = random_complex(rng, "a");
        const Complex b = random_complex(rng, "b");
        const Complex j = join(a, b);
        const size_t len = 12;
        const auto fa = padded_f(a, len), fb = padded_f(b, len), fj = padded_f(j, len);
        for (size_t k = 1; k < len; ++k) {
            long expect = 0;
            for (size_t i = 0; i <= k; ++i) expect += fa[i] * fb[k - i];
            CHECK(fj[k] == expect);
        }
        CHECK(join(a, Complex{}) == a);
        CHECK(join(Complex{}, b) == b);
    }
}

TEST_CASE("join of two point pairs is the four-cycle") {
    const Complex s0a = Complex::from_facets({sx({"a0"}), sx({"a1"})});
    const Complex s0b = Complex::from_facets({sx({"b0"}), sx({"b1"})});
    const Complex j = join(s0a, s0b);
    CHECK(j.f_vector() == std::vector<long>{4, 4});
    CHECK(j == Complex::from_facets({sx({"a0", "b0"}), sx({"a0", "b1"}), sx({"a1", "b0"}),
                                     sx({"a1", "b1"})}));
    CHECK_THROWS_AS(join(s0a, s0a), std::invalid_argument);
}

TEST_CASE("cone basics") {
    CHECK(cone(Complex{}, v("apex")) == Complex::from_facets({sx({"apex"})}));
    const Complex tri = Complex::from_facets({sx({"a", "b", "c"})});
    const Complex c = cone(tri, v("t"));
    CHECK(c.dim() == tri.dim() + 1);
    CHECK(c.contains(sx({"a", "b", "c", "t"})));
    CHECK_THROWS_AS(cone(tri, v("a")), std::invalid_argument);

    std::mt19937 rng(606);
    for (int trial = 0; trial < 40; ++trial) {
        const Complex x = random_complex(rng, "c");
        const Complex cx = cone(x, fresh_vertex(x, "apex"));
        const size_t len = 10;
        const auto fx = padded_f(x, len), fc = padded_f(cx, len);
        for (size_t k = 1; k < len; ++k) CHECK(fc[k] == fx[k] + fx[k - 1]);
    }
}

TEST_CASE("suspension of the two-point complex") {
    const Complex s0 = Complex::from_facets({sx({"p"}), sx({"q"})});
    CHECK(suspension(s0).f_vector() == std::vector<long>{4, 4});
}

TEST_CASE("odd subcomplex of the solid triangle is its boundary") {
    const Complex tri = Complex::from_facets({sx({"a", "b", "c"})});
    CHECK(odd_subcomplex(tri) ==
          Complex::from_facets({sx({"a", "b"}), sx({"a", "c"}), sx({"b", "c"})}));
}

TEST_CASE("odd subcomplex of the tetrahedron boundary is empty") {
    CHECK(odd_subcomplex(boundary_sphere(2)).empty());
}

TEST_CASE("odd subcomplex of two triangles sharing an edge") {
    const Complex k = Complex::from_facets({sx({"a", "b", "c"}), sx({"b", "c", "d"})});
    CHECK(odd_subcomplex(k) == Complex::from_facets({sx({"a", "b"}), sx({"a", "c"}),
                                                     sx({"b", "d"}), sx({"c", "d"})}));
}

TEST_CASE("odd subcomplex of a path keeps the odd-degree endpoints") {
    const Complex path =
        Complex::from_facets({sx({"0", "1"}), sx({"1", "2"}), sx({"2", "3"})});
    CHECK(odd_subcomplex(path) == Complex::from_facets({sx({"0"}), sx({"3"})}));
}

TEST_CASE("odd subcomplex never contains a maximal simplex") {
    std::mt19937 rng(1313);
    for (int trial = 0; trial < 100; ++trial) {
        const Complex k = random_complex(rng, "o");
        const Complex o = odd_subcomplex(k);
        CHECK(o.is_subcomplex_of(k));
        for (const Simplex& f : k.facets()) CHECK_FALSE(o.contains(f));
    }
}

TEST_CASE("cone pair keeps the base when the subcomplex is empty") {
    const Complex tri = Complex::from_facets({sx({"a", "b", "c"})});
    const Pair p{tri, Complex{}};
    const Pair cp = cone_pair(p, v("t"));
    CHECK(cp.x == cone(tri, v("t")));
    CHECK(cp.a == tri);
    validate_pair(cp);
}

TEST_CASE("cone pair unions the base with the coned subcomplex") {
    const Complex x = Complex::from_facets({sx({"a", "b"}), sx({"b", "c"})});
    const Complex a = Complex::from_facets({sx({"a", "b"})});
    const Pair cp = cone_pair({x, a}, v("t"));
    CHECK(cp.x == cone(x, v("t")));
    CHECK(cp.a.contains(sx({"a", "b", "t"})));
    CHECK(cp.a.contains(sx({"b", "c"})));
    CHECK_FALSE(cp.a.contains(sx({"b", "c", "t"})));
    validate_pair(cp);
}

TEST_CASE("suspension pair conventions") {
    const Complex x = Complex::from_facets({sx({"a", "b"})});

    SUBCASE("empty subcomplex stays empty") {
        const Pair sp = suspension_pair({x, Complex{}});
        CHECK(sp.a.empty());
        CHECK(sp.x.f_vector() == std::vector<long>{4, 5, 2});
        validate_pair(sp);
    }

    SUBCASE("nonempty subcomplex is suspended by the same fresh vertices") {
        const Complex a = Complex::from_facets({sx({"a"})});
        const Pair sp = suspension_pair({x, a});
        validate_pair(sp);
        CHECK(sp.a.dim() == a.dim() + 1);
        const size_t len = 8;
        const auto fa = padded_f(a, len), fs = padded_f(sp.a, len);
        for (size_t k = 1; k < len; ++k) CHECK(fs[k] == fa[k] + 2 * fa[k - 1]);
    }
}

TEST_CASE("validate_pair rejects a non-subcomplex") {
    const Pair bad{Complex::from_facets({sx({"a", "b"})}),
                   Complex::from_facets({sx({"a", "c"})})};
    CHECK_THROWS_AS(validate_pair(bad), std::invalid_argument);
    validate_pair({Complex::from_facets({sx({"a", "b"})}), Complex{}});
}

TEST_CASE("fresh vertex avoids collisions deterministically") {
    const Complex x = Complex::from_facets({sx({"apex"}), sx({"apex1"})});
    CHECK(fresh_vertex(x, "apex").token() == "apex2");
    CHECK(fresh_vertex(Complex{}, "apex").token() == "apex");
}
