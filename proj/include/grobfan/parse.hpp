#pragma once

// Text input.  Ideal documents follow the grammar
//
//   document := 'Q' '[' ident (',' ident)* ']' '{' poly (',' poly)* '}'
//   poly     := ['+'|'-'] term (('+'|'-') term)*
//   term     := coeff ['*' factors] | factors
//   factors  := ident ['^' uint] ('*' ident ['^' uint])*
//   coeff    := uint ['/' uint]
//
// Whitespace is insignificant.  '*' between factors and '^' for powers
// are mandatory, so multi-character variable names (x11, p25, ...) are
// unambiguous.  Syntax errors carry line and column.

#include <string>
#include <vector>

#include "grobfan/fan.hpp"
#include "grobfan/polynomial.hpp"
#include "grobfan/term_order.hpp"

namespace grobfan {

// Parses a full ideal document.  Zero generators are dropped; a
// generator list that is empty or all zero is an error.
IdealInput parse_input(const std::string& text);

// One polynomial over the given variables (same term grammar).
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables);

// Order specs: lex | deglex | degrevlex with an optional ':v1,...,vn'
// priority permutation (declared order when omitted),
// 'weight:w1,...,wn;tiebreak=<spec>' and 'matrix:r11,...,r1n;r21,...'.
// Violations of the term-order criteria throw OrderError.
TermOrderMatrix parse_order(const std::string& spec,
                            const std::vector<std::string>& variables);

// Symmetry generators: comma lists of 1-based images separated by ';',
// e.g. "2,3,4,5,1".  Throws SymmetryError on malformed input.
std::vector<Permutation> parse_symmetry(const std::string& spec, size_t n);

// Round-trip of the text serialization "{!m+t1+t2, ...}": the '!' term
// is the marked one.
MarkedBasis parse_marked_basis(const std::string& text,
                               const std::vector<std::string>& variables);

}  // namespace grobfan
