#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "comptype/decider.hpp"
#include "comptype/generators.hpp"
#include "comptype/report.hpp"
#include "comptype/scx.hpp"

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open '" + path + "'");
        ss << in.rdbuf();
    }
    return ss.str();
}

comptype::Pair load_pair(const std::string& path) {
    return comptype::parse_pair_text(read_input(path));
}

comptype::NMarker marker_of(const comptype::Complex& a) {
    return a.empty() ? comptype::NMarker::empty() : comptype::NMarker::of(a);
}

int run_check(const std::string& file, bool json, bool explain, bool oracle) {
    const comptype::Pair p = load_pair(file);
    const comptype::TypeDecision d = comptype::computable_type(p);
    if (oracle) {
        const std::vector<std::string> bad = comptype::oracle_disagreements(p);
        if (!bad.empty()) {
            for (const std::string& s : bad) std::cerr << "ORACLE DISAGREEMENT: " << s << "\n";
            return 3;
        }
    }
    if (json) {
        std::cout << comptype::report_json(p, d);
        return 0;
    }
    std::cout << "VERDICT: " << comptype::decision_word(d.value) << "\n";
    if (explain)
        std::cout << comptype::explain_text(p, d);
    return 0;
}

int run_cone_check(const std::string& file, bool json) {
    const comptype::Pair p = load_pair(file);
    const comptype::Verdict v = comptype::cone_pair_surjection(p.x, marker_of(p.a));
    if (json) {
        std::cout << comptype::cone_report_json(v);
        return 0;
    }
    std::cout << "SURJECTION: " << comptype::truth_to_string(v.value) << "\n";
    std::cout << "fragment: " << v.fragment.to_string() << "\n";
    if (v.witness_modulus)
        std::cout << "witness modulus: " << v.witness_modulus->get_str() << "\n";
    for (const comptype::FacetWitness& w : v.witnesses)
        std::cout << comptype::simplex_to_string(w.facet) << ": " << w.reason << "\n";
    return 0;
}

int run_homology(const std::string& file, int dim, long mod) {
    const comptype::Pair p = load_pair(file);
    if (mod == 0) {
        std::cout << "H_" << dim << "(X, A; Z) = "
                  << comptype::relative_homology(p, dim).to_string() << "\n";
    } else {
        std::cout << "H_" << dim << "(X, A; Z_" << mod << ") = "
                  << comptype::relative_homology_mod(p, dim, mod).to_string() << "\n";
    }
    return 0;
}

int run_odd(const std::string& file, bool emit_pair) {
    const comptype::Pair p = load_pair(file);
    const comptype::Complex odd = comptype::odd_subcomplex(p.x);
    if (emit_pair) {
        std::cout << comptype::serialize_pair({p.x, odd});
        return 0;
    }
    std::cout << "odd subcomplex: dim " << odd.dim() << ", " << odd.facets().size()
              << " facets\n";
    for (const comptype::Simplex& f : odd.facets())
        std::cout << comptype::simplex_to_string(f) << "\n";
    return 0;
}

int run_links(const std::string& file, const std::string& vertex) {
    const comptype::Pair p = load_pair(file);
    for (const comptype::VertexId v : p.x.vertices()) {
        if (!vertex.empty() && v.token() != vertex) continue;
        const comptype::LinkPair lp = comptype::link_pair(p, v);
        std::cout << v.token() << ": link dim " << lp.link.dim() << ", n-marker ";
        switch (lp.n.kind) {
            case comptype::NKind::Empty:
                std::cout << "empty";
                break;
            case comptype::NKind::Tip:
                std::cout << "tip";
                break;
            case comptype::NKind::Sub:
                std::cout << "sub(" << lp.n.sub.facets().size() << " facets)";
                break;
        }
        std::cout << ", fragment "
                  << comptype::classify_fragment(lp.link, lp.n).to_string() << ", f-vector [";
        const std::vector<long> fv = lp.link.f_vector();
        for (size_t i = 0; i < fv.size(); ++i) std::cout << (i ? " " : "") << fv[i];
        std::cout << "]\n";
    }
    if (!vertex.empty() && !p.x.contains_vertex(comptype::VertexId::of(vertex)))
        throw std::runtime_error("vertex '" + vertex + "' is not in X");
    return 0;
}

int run_generate(const std::string& name, const std::vector<std::string>& params) {
    std::cout << comptype::serialize_pair(comptype::generate(name, params));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decides whether a finite simplicial pair (X, A) has computable type"};
    app.require_subcommand(1);

    std::string file;
    bool json = false, explain = false, oracle = false;
    CLI::App* check = app.add_subcommand("check", "decide computable type of the pair");
    check->add_option("file", file, ".scx pair file, or - for stdin")->required();
    check->add_flag("--json", json, "print the JSON report only");
    check->add_flag("--explain", explain, "print per-link prose instead of JSON");
    check->add_flag("--oracle", oracle,
                    "cross-check the homological route against brute-force oracles");

    CLI::App* cone = app.add_subcommand(
        "cone-check", "treat the pair as (L, N) and report the cone-pair surjection verdict");
    cone->add_option("file", file, ".scx pair file, or - for stdin")->required();
    cone->add_flag("--json", json, "print the JSON verdict only");

    int dim = 0;
    long mod = 0;
    CLI::App* hom = app.add_subcommand("homology", "relative homology of the pair");
    hom->add_option("file", file, ".scx pair file, or - for stdin")->required();
    hom->add_option("--dim", dim, "homology degree")->required()->check(CLI::NonNegativeNumber);
    hom->add_option("--mod", mod, "coefficients Z_k instead of Z")->check(CLI::Range(2L, 1000000L));

    bool emit_pair = false;
    CLI::App* odd = app.add_subcommand("odd", "odd subcomplex of X (A lines are ignored)");
    odd->add_option("file", file, ".scx pair file, or - for stdin")->required();
    odd->add_flag("--emit-pair", emit_pair, "write the pair (X, odd X) as a pair file");

    std::string vertex;
    CLI::App* links = app.add_subcommand("links", "per-vertex link pair summary");
    links->add_option("file", file, ".scx pair file, or - for stdin")->required();
    links->add_option("--vertex", vertex, "restrict to one vertex");

    std::string gen_name;
    std::vector<std::string> gen_params;
    CLI::App* gen = app.add_subcommand("generate", "write a named corpus pair to stdout");
    gen->add_option("name", gen_name, "generator name")->required();
    gen->add_option("params", gen_params, "generator parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return run_check(file, json, explain, oracle);
        if (*cone) return run_cone_check(file, json);
        if (*hom) return run_homology(file, dim, mod);
        if (*odd) return run_odd(file, emit_pair);
        if (*links) return run_links(file, vertex);
        if (*gen) return run_generate(gen_name, gen_params);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
