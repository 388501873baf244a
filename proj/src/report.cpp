#include "comptype/report.hpp"

#include <sstream>

#include "json.hpp"

namespace comptype {

namespace {

using nlohmann::json;

json modulus_value(const Int& m) {
    if (m.fits_slong_p()) return json(m.get_si());
    return json(m.get_str());
}

json facet_array(const std::vector<FacetWitness>& ws) {
    json arr = json::array();
    for (const FacetWitness& w : ws) {
        json f = json::array();
        for (const VertexId v : w.facet) f.push_back(v.token());
        arr.push_back(std::move(f));
    }
    return arr;
}

json link_entry(const LinkAnalysis& la) {
    json e;
    e["vertex"] = la.vertex.token();
    e["fragment"] = la.verdict.fragment.to_string();
    e["verdict"] = truth_to_string(la.verdict.value);
    e["failing_facets"] = facet_array(la.verdict.witnesses);
    if (la.verdict.witness_modulus)
        e["witness_modulus"] = modulus_value(*la.verdict.witness_modulus);
    return e;
}

}  // namespace

std::string decision_word(Truth t) {
    switch (t) {
        case Truth::True_:
            return "YES";
        case Truth::False_:
            return "NO";
        case Truth::Unknown:
            return "UNKNOWN";
    }
    return "?";
}

std::string report_json(const Pair& p, const TypeDecision& d) {
    json doc;
    doc["verdict"] = decision_word(d.value);
    json links = json::array();
    for (const LinkAnalysis& la : d.links) links.push_back(link_entry(la));
    doc["links"] = std::move(links);
    doc["stats"] = {{"dim", p.x.dim()},
                    {"facets", static_cast<long>(p.x.facets().size())},
                    {"vertices", static_cast<long>(p.x.vertices().size())}};
    return doc.dump(2) + "\n";
}

std::string cone_report_json(const Verdict& v) {
    json doc;
    doc["surjection"] = truth_to_string(v.value);
    doc["fragment"] = v.fragment.to_string();
    doc["failing_facets"] = facet_array(v.witnesses);
    doc["facets_tested"] = v.facets_tested;
    if (v.witness_modulus) doc["witness_modulus"] = modulus_value(*v.witness_modulus);
    return doc.dump(2) + "\n";
}

std::string explain_text(const Pair& p, const TypeDecision& d) {
    std::ostringstream out;
    out << "pair: dim " << p.x.dim() << ", " << p.x.vertices().size() << " vertices, "
        << p.x.facets().size() << " facets of X, " << p.a.facets().size()
        << " facets of A\n";
    for (const LinkAnalysis& la : d.links) {
        const Verdict& v = la.verdict;
        out << "link of " << la.vertex.token() << ": fragment " << v.fragment.to_string()
            << ", surjection " << truth_to_string(v.value) << " (" << v.facets_tested
            << " facet" << (v.facets_tested == 1 ? "" : "s") << " tested";
        if (v.witness_modulus)
            out << ", torsion route needed modulus " << v.witness_modulus->get_str();
        out << ")\n";
        for (const FacetWitness& w : v.witnesses)
            out << "  " << simplex_to_string(w.facet) << ": " << w.reason << "\n";
    }
    out << "pair verdict: " << decision_word(d.value) << "\n";
    if (d.value == Truth::True_)
        out << "every vertex-link cone pair has the surjection property, so the pair has "
               "computable type.\n";
    else if (d.value == Truth::False_)
        out << "some vertex-link cone pair provably lacks the surjection property, so the "
               "pair does not have computable type.\n";
    else
        out << "no link refutes the surjection property, but at least one link falls "
               "outside the decidable fragments.\n";
    return out.str();
}

}  // namespace comptype
