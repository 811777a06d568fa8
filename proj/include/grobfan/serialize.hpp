#pragma once

// Text and JSON output.  Text: polynomials print their terms in the
// internal canonical (graded-lex) order descending; marked polynomials
// print the marked term first with a '!' prefix and the remaining terms
// ascending; bases print elements in their canonical order inside
// braces.  JSON: nlohmann ordered_json with every numeric leaf emitted
// as an exact decimal/rational string, so the output is byte-stable and
// tolerance-free.

#include <string>
#include <vector>

#include <json.hpp>

#include "grobfan/cone.hpp"
#include "grobfan/fan.hpp"
#include "grobfan/polynomial.hpp"

namespace grobfan {

using Json = nlohmann::ordered_json;

std::string polynomial_to_text(const Polynomial& f,
                               const std::vector<std::string>& variables);
std::string marked_to_text(const MarkedPolynomial& g,
                           const std::vector<std::string>& variables);
// "{!m1+..., !m2+...}"
std::string basis_to_text(const MarkedBasis& g,
                          const std::vector<std::string>& variables);

// "dimension:" line, then one "equation:"/"inequality:" line per vector.
std::string cone_to_text(const Cone& c);

Json vector_to_json(const IntVec& v);  // array of exact integer strings
Json basis_to_json(const MarkedBasis& g,
                   const std::vector<std::string>& variables);
Json cone_to_json(const Cone& c);

// {"maximal_cones":[{"basis":[...],"facets":[...],"rays":[...]},...],
//  "orbit_sizes": [...] or null, "total_cones": "...", "h": "...",
//  "f_vector": [...] or null, "counters": {...}, "warnings": [...]}
// Rays are the dimension-(h+1) faces of each cone, reduced modulo the
// homogeneity space to a primitive generator.  When the f-vector was
// not computed the field is null and a warning entry says so.
Json summary_to_json(const FanSummary& summary,
                     const std::vector<std::string>& variables);

Json counters_to_json(const RunStats& stats);

}  // namespace grobfan
