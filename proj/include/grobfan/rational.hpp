#pragma once

// Exact arithmetic backend.  All coefficients and LP entries are GMP
// rationals; exponents stay machine ints (they are tiny), everything a
// weight vector touches is an arbitrary-precision integer.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace grobfan {

using Integer = mpz_class;
using Rational = mpq_class;

// Base class for everything user-visible that can go wrong.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input-document syntax or validation problem (exit code 1).
struct ParseError : Error {
  int line = 0, column = 0;
  ParseError(const std::string& what, int line_, int col_)
      : Error(what + " at line " + std::to_string(line_) + ", column " +
              std::to_string(col_)),
        line(line_), column(col_) {}
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Term-order specification is not a term order (exit code 2).
struct OrderError : Error {
  using Error::Error;
};

// Symmetry generators malformed or do not fix the ideal (exit code 3).
struct SymmetryError : Error {
  using Error::Error;
};

// Internal guard tripped: incoherent marking, step limit, broken
// invariant (exit code 4).
struct GuardError : Error {
  using Error::Error;
};

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// Parses "p" or "p/q"; rejects zero denominators.
inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace grobfan
