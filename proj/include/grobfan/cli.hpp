#pragma once

// Command dispatch, separated from main() so tests can drive the whole
// binary in-process with string streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace grobfan {

// args excludes the program name.  Returns the process exit code:
// 0 success, 1 parse/validation failure, 2 invalid term order,
// 3 invalid symmetry, 4 internal guard (incoherent marking).
int dispatch(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err);

}  // namespace grobfan
