#include "grobfan/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace grobfan {

namespace {

constexpr int kMaxExponent = 1 << 20;  // keeps int exponent arithmetic safe

// Character scanner with line/column tracking for error messages.
class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }
  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c || pos_ >= text_.size()) return false;
    advance();
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line_, col_);
  }

  bool ident_ahead() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  bool digit_ahead() { return std::isdigit(static_cast<unsigned char>(peek())); }

  std::string ident() {
    if (!ident_ahead()) fail("expected an identifier");
    std::string s;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') break;
      s += c;
      advance();
    }
    return s;
  }
  std::string digits() {
    if (!digit_ahead()) fail("expected a number");
    std::string s;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      s += text_[pos_];
      advance();
    }
    return s;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

int parse_exponent(Scanner& s) {
  std::string d = s.digits();
  if (d.size() > 6) s.fail("exponent too large");
  int e = std::stoi(d);
  if (e > kMaxExponent) s.fail("exponent too large");
  return e;
}

// term := coeff ['*' factors] | factors ; returns coefficient/exponent.
Term parse_term(Scanner& s, const std::map<std::string, size_t>& vars, size_t n) {
  Rational coeff = 1;
  ExpVec exp(n, 0);
  bool have_coeff = false;
  if (s.digit_ahead()) {
    std::string num = s.digits();
    std::string den;
    if (s.accept('/')) {
      den = s.digits();
      if (Integer(den) == 0) s.fail("zero denominator");
    }
    coeff = den.empty() ? Rational(num) : Rational(num + "/" + den);
    coeff.canonicalize();
    have_coeff = true;
    if (!s.accept('*')) return {coeff, exp};  // pure constant term
  }
  if (!s.ident_ahead()) {
    if (have_coeff) s.fail("expected a variable after '*'");
    s.fail("expected a term");
  }
  for (;;) {
    std::string name = s.ident();
    auto it = vars.find(name);
    if (it == vars.end()) s.fail("unknown variable '" + name + "'");
    int e = 1;
    if (s.accept('^')) e = parse_exponent(s);
    if (exp[it->second] > kMaxExponent - e) s.fail("exponent too large");
    exp[it->second] += e;
    if (!s.accept('*')) break;
    if (!s.ident_ahead()) s.fail("expected a variable after '*'");
  }
  return {coeff, exp};
}

Polynomial parse_poly(Scanner& s, const std::map<std::string, size_t>& vars,
                      size_t n) {
  std::vector<Term> terms;
  bool negative = false;
  if (s.accept('-')) negative = true;
  else s.accept('+');
  for (;;) {
    Term t = parse_term(s, vars, n);
    if (negative) t.coeff = -t.coeff;
    terms.push_back(std::move(t));
    if (s.accept('+')) negative = false;
    else if (s.accept('-')) negative = true;
    else break;
  }
  return Polynomial(n, std::move(terms));
}

std::map<std::string, size_t> index_variables(
    const std::vector<std::string>& variables) {
  std::map<std::string, size_t> vars;
  for (size_t i = 0; i < variables.size(); ++i) vars.emplace(variables[i], i);
  return vars;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Integer parse_integer_or(const std::string& s, const std::string& what) {
  if (s.empty() || (s.size() == 1 && (s[0] == '-' || s[0] == '+')) ||
      s.find_first_not_of("0123456789+-") != std::string::npos ||
      s.find_first_of("+-", 1) != std::string::npos)
    throw OrderError("malformed " + what + " '" + s + "'");
  return Integer(s);
}

// ':v1,...,vn' priority permutation; declared order when absent.
std::vector<size_t> parse_priority(const std::string& rest,
                                   const std::vector<std::string>& variables) {
  size_t n = variables.size();
  std::vector<size_t> priority(n);
  if (rest.empty()) {
    for (size_t i = 0; i < n; ++i) priority[i] = i;
    return priority;
  }
  auto vars = index_variables(variables);
  std::vector<std::string> names = split(rest, ',');
  if (names.size() != n)
    throw OrderError("order permutation must list all " + std::to_string(n) +
                     " variables");
  std::vector<bool> used(n, false);
  for (size_t i = 0; i < n; ++i) {
    auto it = vars.find(names[i]);
    if (it == vars.end())
      throw OrderError("unknown variable '" + names[i] + "' in order spec");
    if (used[it->second])
      throw OrderError("variable '" + names[i] + "' repeated in order spec");
    used[it->second] = true;
    priority[i] = it->second;
  }
  return priority;
}

}  // namespace

IdealInput parse_input(const std::string& text) {
  Scanner s(text);
  IdealInput doc;
  if (s.ident() != "Q") s.fail("input must start with the field tag 'Q'");
  s.expect('[', "'['");
  std::map<std::string, size_t> vars;
  do {
    std::string name = s.ident();
    if (!vars.emplace(name, doc.variables.size()).second)
      s.fail("duplicate variable '" + name + "'");
    doc.variables.push_back(std::move(name));
  } while (s.accept(','));
  s.expect(']', "']'");
  s.expect('{', "'{'");
  if (s.peek() == '}') s.fail("empty generator list");
  size_t n = doc.variables.size();
  do {
    Polynomial f = parse_poly(s, vars, n);
    if (!f.is_zero()) doc.generators.push_back(std::move(f));
  } while (s.accept(','));
  s.expect('}', "'}'");
  if (!s.eof()) s.fail("trailing input after '}'");
  if (doc.generators.empty()) s.fail("all generators are zero");
  return doc;
}

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables) {
  Scanner s(text);
  Polynomial f = parse_poly(s, index_variables(variables), variables.size());
  if (!s.eof()) s.fail("trailing input after polynomial");
  return f;
}

TermOrderMatrix parse_order(const std::string& spec,
                            const std::vector<std::string>& variables) {
  size_t n = variables.size();
  std::string kind = spec, rest;
  if (size_t colon = spec.find(':'); colon != std::string::npos) {
    kind = spec.substr(0, colon);
    rest = spec.substr(colon + 1);
  }
  if (kind == "lex") return TermOrderMatrix::lex(parse_priority(rest, variables));
  if (kind == "deglex")
    return TermOrderMatrix::deglex(parse_priority(rest, variables));
  if (kind == "degrevlex")
    return TermOrderMatrix::degrevlex(parse_priority(rest, variables));
  if (kind == "weight") {
    size_t semi = rest.find(";tiebreak=");
    if (semi == std::string::npos)
      throw OrderError("weight order needs ';tiebreak=<spec>'");
    std::vector<std::string> parts = split(rest.substr(0, semi), ',');
    if (parts.size() != n)
      throw OrderError("weight vector must have " + std::to_string(n) +
                       " entries");
    IntVec w(n);
    for (size_t i = 0; i < n; ++i) w[i] = parse_integer_or(parts[i], "weight");
    return TermOrderMatrix::weighted(
        w, parse_order(rest.substr(semi + 10), variables));
  }
  if (kind == "matrix") {
    std::vector<IntVec> rows;
    for (const std::string& row_text : split(rest, ';')) {
      std::vector<std::string> parts = split(row_text, ',');
      if (parts.size() != n)
        throw OrderError("matrix row must have " + std::to_string(n) +
                         " entries");
      IntVec row(n);
      for (size_t i = 0; i < n; ++i)
        row[i] = parse_integer_or(parts[i], "matrix entry");
      rows.push_back(std::move(row));
    }
    return TermOrderMatrix(std::move(rows), n);
  }
  throw OrderError("unknown order kind '" + kind + "'");
}

std::vector<Permutation> parse_symmetry(const std::string& spec, size_t n) {
  std::vector<Permutation> gens;
  for (const std::string& gen_text : split(spec, ';')) {
    std::vector<std::string> parts = split(gen_text, ',');
    if (parts.size() != n)
      throw SymmetryError("permutation must list " + std::to_string(n) +
                          " images");
    Permutation pi;
    pi.image.resize(n);
    std::vector<bool> hit(n, false);
    for (size_t i = 0; i < n; ++i) {
      const std::string& p = parts[i];
      if (p.empty() || p.size() > 9 ||
          p.find_first_not_of("0123456789") != std::string::npos)
        throw SymmetryError("malformed permutation image '" + p + "'");
      unsigned long v = std::stoul(p);
      if (v < 1 || v > n) throw SymmetryError("image " + p + " out of range");
      if (hit[v - 1])
        throw SymmetryError("permutation is not a bijection (image " + p +
                            " repeated)");
      hit[v - 1] = true;
      pi.image[i] = v - 1;
    }
    gens.push_back(std::move(pi));
  }
  return gens;
}

MarkedBasis parse_marked_basis(const std::string& text,
                               const std::vector<std::string>& variables) {
  Scanner s(text);
  auto vars = index_variables(variables);
  size_t n = variables.size();
  s.expect('{', "'{'");
  std::vector<MarkedPolynomial> elems;
  do {
    s.expect('!', "'!' before the marked term");
    bool negative = s.accept('-');
    Term marked = parse_term(s, vars, n);
    if (negative) marked.coeff = -marked.coeff;
    std::vector<Term> terms{marked};
    while (true) {
      if (s.accept('+')) negative = false;
      else if (s.accept('-')) negative = true;
      else break;
      Term t = parse_term(s, vars, n);
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
    }
    elems.emplace_back(Polynomial(n, std::move(terms)), marked.exp);
  } while (s.accept(','));
  s.expect('}', "'}'");
  if (!s.eof()) s.fail("trailing input after '}'");
  return MarkedBasis(n, std::move(elems));
}

}  // namespace grobfan
