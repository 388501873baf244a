#include "comptype/scx.hpp"

#include <sstream>
#include <vector>

namespace comptype {

Pair parse_pair_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<Simplex> x_facets;
    std::vector<std::pair<int, Simplex>> a_facets;
    while (std::getline(in, line)) {
        ++lineno;
        if (const size_t hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream tokens(line);
        std::string head;
        if (!(tokens >> head)) continue;
        if (head != "X" && head != "A")
            throw ParseError(lineno, "expected 'X' or 'A', got '" + head + "'");
        std::vector<VertexId> verts;
        std::string tok;
        while (tokens >> tok) verts.push_back(VertexId::of(tok));
        if (verts.empty()) throw ParseError(lineno, "facet line without vertices");
        Simplex s;
        try {
            s = make_simplex(std::move(verts));
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
        if (head == "X")
            x_facets.push_back(std::move(s));
        else
            a_facets.emplace_back(lineno, std::move(s));
    }
    if (x_facets.empty()) throw ParseError(lineno, "no X facet lines");
    Pair p;
    p.x = Complex::from_facets(x_facets);
    std::vector<Simplex> af;
    for (const auto& [ln, s] : a_facets) {
        if (!p.x.contains(s))
            throw ParseError(ln, "A facet " + simplex_to_string(s) + " is not a simplex of X");
        af.push_back(s);
    }
    p.a = Complex::from_facets(af);
    return p;
}

std::string serialize_pair(const Pair& p) {
    std::ostringstream out;
    auto emit = [&](const char* head, const Complex& c) {
        for (const Simplex& f : c.facets()) {
            out << head;
            for (const VertexId v : f) out << ' ' << v.token();
            out << '\n';
        }
    };
    emit("X", p.x);
    emit("A", p.a);
    return out.str();
}

}  // namespace comptype
