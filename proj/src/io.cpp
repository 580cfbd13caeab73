#include "scfe/io.hpp"

#include <cstdio>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <vector>

#include "scfe/errors.hpp"

namespace scfe {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

long parse_int(const std::string& t, int line, const char* what) {
  static const std::regex re("[+-]?[0-9]{1,9}");
  if (!std::regex_match(t, re)) throw ParseError(line, std::string("expected ") + what + ", got '" + t + "'");
  return std::stol(t);
}

}  // namespace

Rational parse_rational(const std::string& token) {
  static const std::regex frac_re("([+-]?[0-9]+)/([0-9]+)");
  static const std::regex int_re("[+-]?[0-9]+");
  static const std::regex dec_re("([+-]?)([0-9]*)\\.([0-9]+)");
  std::smatch m;
  if (std::regex_match(token, m, frac_re)) {
    mpz_class den(m[2].str(), 10);
    if (den == 0) throw ParseError(0, "zero denominator in '" + token + "'");
    Rational r(mpz_class(m[1].str(), 10), den);
    r.canonicalize();
    return r;
  }
  if (std::regex_match(token, int_re)) return Rational(mpz_class(token, 10));
  if (std::regex_match(token, m, dec_re)) {
    std::string digits = m[2].str() + m[3].str();
    mpz_class num(digits.empty() ? "0" : digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, m[3].str().size());
    Rational r(m[1].str() == "-" ? mpz_class(-num) : num, den);
    r.canonicalize();
    return r;
  }
  throw ParseError(0, "not a rational number: '" + token + "'");
}

SignedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<VertexPair> pos, neg;
  std::set<VertexPair> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (n < 0) {
      if (tok.size() != 2 || tok[0] != "n") throw ParseError(lineno, "expected header 'n <count>'");
      n = static_cast<int>(parse_int(tok[1], lineno, "vertex count"));
      if (n < 1) throw ParseError(lineno, "vertex count must be at least 1");
      continue;
    }
    if (tok.size() != 3) throw ParseError(lineno, "expected '<u> <v> <+|->'");
    long u = parse_int(tok[0], lineno, "vertex id");
    long v = parse_int(tok[1], lineno, "vertex id");
    if (u < 1 || v < 1 || u > n || v > n) throw ParseError(lineno, "vertex id out of range 1.." + std::to_string(n));
    if (u >= v) throw ParseError(lineno, "expected u < v");
    if (tok[2] != "+" && tok[2] != "-") throw ParseError(lineno, "sign must be '+' or '-', got '" + tok[2] + "'");
    VertexPair p(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(p).second) throw ParseError(lineno, "pair " + tok[0] + " " + tok[1] + " listed twice");
    (tok[2] == "+" ? pos : neg).push_back(p);
  }
  if (n < 0) throw ParseError(lineno, "missing header 'n <count>'");
  return SignedGraph(n, pos, neg);
}

std::string format_graph(const SignedGraph& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (Vertex u = 1; u <= g.order(); ++u)
    for (Vertex v = u + 1; v <= g.order(); ++v) {
      auto s = g.sign(u, v);
      if (s) out << u << " " << v << " " << (*s == Sign::Positive ? "+" : "-") << "\n";
    }
  return out.str();
}

Drawing parse_drawing(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<std::pair<long, Angle>> entries;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok.size() < 2 || tok.size() > 3) throw ParseError(lineno, "expected '<id> <p>/<q> [radians]'");
    long id = parse_int(tok[0], lineno, "vertex id");
    if (tok[1].find('/') == std::string::npos) throw ParseError(lineno, "angle must be a fraction p/q");
    Rational t;
    try {
      t = parse_rational(tok[1]);
    } catch (const ParseError& e) {
      throw ParseError(lineno, e.what());
    }
    if (t < 0 || t >= 1) throw ParseError(lineno, "angle must lie in [0,1) turns");
    entries.emplace_back(id, Angle(t));
  }
  const long n = static_cast<long>(entries.size());
  Drawing d;
  d.pos.resize(n);
  std::vector<char> seen(n + 1, 0);
  for (const auto& [id, a] : entries) {
    if (id < 1 || id > n) throw ParseError(0, "vertex id " + std::to_string(id) + " out of range 1.." + std::to_string(n));
    if (seen[id]) throw ParseError(0, "vertex " + std::to_string(id) + " placed twice");
    seen[id] = 1;
    d.at(static_cast<Vertex>(id)) = a;
  }
  try {
    check_drawing(static_cast<int>(n), d);
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
  return d;
}

std::string format_drawing(const Drawing& d) {
  std::ostringstream out;
  for (Vertex v = 1; v <= d.order(); ++v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", d.at(v).radians());
    out << v << " " << d.at(v).str() << " " << buf << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(0, "cannot write " + path);
  out << content;
}

}  // namespace scfe
