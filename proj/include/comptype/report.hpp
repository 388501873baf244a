#pragma once

#include <string>

#include "comptype/decider.hpp"

namespace comptype {

// "YES" / "NO" / "UNKNOWN" for a whole-pair decision (link verdicts render
// as TRUE / FALSE / UNKNOWN via truth_to_string).
std::string decision_word(Truth t);

// Key-sorted JSON document for a whole-pair decision:
// {links: [{failing_facets, fragment, verdict, vertex, witness_modulus?}],
//  stats: {dim, facets, vertices}, verdict}. Byte-identical across runs on
// the same input.
std::string report_json(const Pair& p, const TypeDecision& d);

// Same shape for a single cone-pair verdict: {fragment, surjection,
// failing_facets, facets_tested, witness_modulus?}.
std::string cone_report_json(const Verdict& v);

// Human prose, one paragraph per link; no stability guarantee.
std::string explain_text(const Pair& p, const TypeDecision& d);

}  // namespace comptype
