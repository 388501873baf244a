#include "comptype/generators.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>

namespace comptype {

namespace {

VertexId num_token(long i, int width) {
    std::string s = std::to_string(i);
    while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
    return VertexId::of(s);
}

int label_width(long max_index) { return static_cast<int>(std::to_string(max_index).size()); }

long int_param(const std::vector<std::string>& params, size_t i, long lo, long hi,
               const std::string& name) {
    if (i >= params.size())
        throw std::invalid_argument("generate " + name + ": missing numeric parameter");
    long v = 0;
    size_t pos = 0;
    try {
        v = std::stol(params[i], &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("generate " + name + ": bad parameter '" + params[i] + "'");
    }
    if (pos != params[i].size() || v < lo || v > hi)
        throw std::invalid_argument("generate " + name + ": parameter '" + params[i] +
                                    "' out of range [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
    return v;
}

Simplex range_simplex(long from, long to, int width) {
    std::vector<VertexId> v;
    for (long i = from; i <= to; ++i) v.push_back(num_token(i, width));
    return make_simplex(std::move(v));
}

// All cardinality-k subsets of {0..n} as simplices.
std::vector<Simplex> subsets_of_size(long n, long k, int width) {
    std::vector<Simplex> out;
    std::vector<long> idx(k);
    for (long i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        std::vector<VertexId> v;
        for (long i : idx) v.push_back(num_token(i, width));
        out.push_back(make_simplex(std::move(v)));
        long j = k - 1;
        while (j >= 0 && idx[j] == n - (k - 1 - j)) --j;
        if (j < 0) break;
        ++idx[j];
        for (long t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
    return out;
}

std::vector<Simplex> int_triangles(const std::vector<std::array<int, 3>>& tris) {
    std::vector<Simplex> out;
    for (const auto& t : tris)
        out.push_back(make_simplex({num_token(t[0], 1), num_token(t[1], 1), num_token(t[2], 1)}));
    return out;
}

Complex torus7() {
    std::vector<std::array<int, 3>> tris;
    for (int i = 0; i < 7; ++i) {
        tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return Complex::from_facets(int_triangles(tris));
}

Complex rp2_6() {
    return Complex::from_facets(int_triangles({{1, 2, 4},
                                               {1, 2, 5},
                                               {1, 3, 4},
                                               {1, 3, 6},
                                               {1, 5, 6},
                                               {2, 3, 5},
                                               {2, 3, 6},
                                               {2, 4, 6},
                                               {3, 4, 5},
                                               {4, 5, 6}}));
}

Complex klein8() {
    return Complex::from_facets(int_triangles({{0, 1, 2},
                                               {0, 1, 3},
                                               {0, 2, 4},
                                               {0, 3, 4},
                                               {1, 2, 5},
                                               {1, 3, 6},
                                               {1, 4, 5},
                                               {1, 4, 6},
                                               {2, 4, 6},
                                               {2, 3, 5},
                                               {2, 3, 7},
                                               {2, 6, 7},
                                               {3, 4, 7},
                                               {3, 5, 6},
                                               {4, 5, 7},
                                               {5, 6, 7}}));
}

// 8-vertex dunce hat: a 9-gon with boundary word a a a^{-1} (corner classes
// 0, 1, 2) filled by a pentagon 3..7 fan.
Complex dunce_hat() {
    return Complex::from_facets(int_triangles({{0, 1, 3},
                                               {1, 2, 3},
                                               {0, 2, 4},
                                               {0, 1, 4},
                                               {1, 2, 5},
                                               {0, 2, 5},
                                               {0, 2, 6},
                                               {1, 2, 6},
                                               {0, 1, 7},
                                               {2, 3, 4},
                                               {1, 4, 5},
                                               {0, 5, 6},
                                               {1, 6, 7},
                                               {0, 3, 7},
                                               {3, 4, 5},
                                               {3, 5, 6},
                                               {3, 6, 7}}));
}

// Bing's house with two rooms on a 4x3 footprint, height 2: full outer shell,
// middle floor, a tunnel into the upper room through the roof and one into
// the lower room through the ground, each with its support wall attached to
// a side wall. Unit squares are split along the diagonal joining the
// lexicographically extreme corners.
Complex bing_house() {
    using P = std::array<int, 3>;
    std::set<std::array<P, 4>> squares;
    auto sq = [&](P a, P b, P c, P d) {
        std::array<P, 4> s{a, b, c, d};
        std::sort(s.begin(), s.end());
        squares.insert(s);
    };
    const int X = 4, Y = 3;
    const int s1x = 1, s1y = 1;  // roof tunnel, z in [1,2]
    const int s2x = 2, s2y = 1;  // ground tunnel, z in [0,1]
    for (int z = 0; z < 2; ++z) {
        for (int x = 0; x < X; ++x) {
            sq({x, 0, z}, {x + 1, 0, z}, {x, 0, z + 1}, {x + 1, 0, z + 1});
            sq({x, Y, z}, {x + 1, Y, z}, {x, Y, z + 1}, {x + 1, Y, z + 1});
        }
        for (int y = 0; y < Y; ++y) {
            sq({0, y, z}, {0, y + 1, z}, {0, y, z + 1}, {0, y + 1, z + 1});
            sq({X, y, z}, {X, y + 1, z}, {X, y, z + 1}, {X, y + 1, z + 1});
        }
    }
    for (int x = 0; x < X; ++x)
        for (int y = 0; y < Y; ++y) {
            if (!(x == s2x && y == s2y)) sq({x, y, 0}, {x + 1, y, 0}, {x, y + 1, 0}, {x + 1, y + 1, 0});
            if (!(x == s1x && y == s1y)) sq({x, y, 2}, {x + 1, y, 2}, {x, y + 1, 2}, {x + 1, y + 1, 2});
            if (!(x == s1x && y == s1y) && !(x == s2x && y == s2y))
                sq({x, y, 1}, {x + 1, y, 1}, {x, y + 1, 1}, {x + 1, y + 1, 1});
        }
    for (int z = 1; z < 2; ++z) {
        const int x = s1x, y = s1y;
        sq({x, y, z}, {x, y + 1, z}, {x, y, z + 1}, {x, y + 1, z + 1});
        sq({x + 1, y, z}, {x + 1, y + 1, z}, {x + 1, y, z + 1}, {x + 1, y + 1, z + 1});
        sq({x, y, z}, {x + 1, y, z}, {x, y, z + 1}, {x + 1, y, z + 1});
        sq({x, y + 1, z}, {x + 1, y + 1, z}, {x, y + 1, z + 1}, {x + 1, y + 1, z + 1});
    }
    for (int z = 0; z < 1; ++z) {
        const int x = s2x, y = s2y;
        sq({x, y, z}, {x, y + 1, z}, {x, y, z + 1}, {x, y + 1, z + 1});
        sq({x + 1, y, z}, {x + 1, y + 1, z}, {x + 1, y, z + 1}, {x + 1, y + 1, z + 1});
        sq({x, y, z}, {x + 1, y, z}, {x, y, z + 1}, {x + 1, y, z + 1});
        sq({x, y + 1, z}, {x + 1, y + 1, z}, {x, y + 1, z + 1}, {x + 1, y + 1, z + 1});
    }
    sq({0, 1, 1}, {1, 1, 1}, {0, 1, 2}, {1, 1, 2});
    sq({3, 2, 0}, {4, 2, 0}, {3, 2, 1}, {4, 2, 1});

    auto vid = [](const P& p) {
        return VertexId::of("g" + std::to_string(p[0]) + std::to_string(p[1]) +
                            std::to_string(p[2]));
    };
    std::vector<Simplex> tris;
    for (const auto& s : squares) {
        tris.push_back(make_simplex({vid(s[0]), vid(s[1]), vid(s[3])}));
        tris.push_back(make_simplex({vid(s[0]), vid(s[2]), vid(s[3])}));
    }
    return Complex::from_facets(tris);
}

}  // namespace

Pair generate(const std::string& name, const std::vector<std::string>& params) {
    auto no_params = [&]() {
        if (!params.empty())
            throw std::invalid_argument("generate " + name + ": takes no parameters");
    };
    if (name == "simplex") {
        const long n = int_param(params, 0, 0, 8, name);
        return {Complex::from_facets({range_simplex(0, n, label_width(n))}), {}};
    }
    if (name == "sphere") {
        const long n = int_param(params, 0, 0, 8, name);
        return {Complex::from_facets(subsets_of_size(n + 1, n + 1, label_width(n + 1))), {}};
    }
    if (name == "ball_pair") {
        const long n = int_param(params, 0, 0, 8, name);
        const int w = label_width(n);
        Complex x = Complex::from_facets({range_simplex(0, n, w)});
        Complex a =
            n == 0 ? Complex{} : Complex::from_facets(subsets_of_size(n, n, w));
        return {std::move(x), std::move(a)};
    }
    if (name == "path") {
        const long k = int_param(params, 0, 1, 10000, name);
        const int w = label_width(k);
        std::vector<Simplex> edges;
        for (long i = 0; i < k; ++i)
            edges.push_back(make_simplex({num_token(i, w), num_token(i + 1, w)}));
        return {Complex::from_facets(edges), {}};
    }
    if (name == "cycle") {
        const long k = int_param(params, 0, 3, 10000, name);
        const int w = label_width(k - 1);
        std::vector<Simplex> edges;
        for (long i = 0; i < k; ++i)
            edges.push_back(make_simplex({num_token(i, w), num_token((i + 1) % k, w)}));
        return {Complex::from_facets(edges), {}};
    }
    if (name == "torus7") {
        no_params();
        return {torus7(), {}};
    }
    if (name == "rp2_6") {
        no_params();
        return {rp2_6(), {}};
    }
    if (name == "klein8") {
        no_params();
        return {klein8(), {}};
    }
    if (name == "dunce_hat") {
        no_params();
        return {dunce_hat(), {}};
    }
    if (name == "bing_house") {
        no_params();
        return {bing_house(), {}};
    }
    if (name == "cone_of" || name == "suspension_of") {
        if (params.empty())
            throw std::invalid_argument("generate " + name + ": needs a nested generator name");
        const Pair inner =
            generate(params[0], {params.begin() + 1, params.end()});
        if (name == "cone_of") return cone_pair(inner, fresh_vertex(inner.x, "apex"));
        return suspension_pair(inner);
    }
    throw std::invalid_argument("generate: unknown generator '" + name + "'");
}

std::vector<std::string> generator_names() {
    return {"simplex",  "sphere", "ball_pair", "path",      "cycle",
            "torus7",   "rp2_6",  "klein8",    "dunce_hat", "bing_house",
            "cone_of",  "suspension_of"};
}

}  // namespace comptype
