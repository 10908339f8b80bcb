#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bernpos/certificate.hpp"

namespace bernpos {

/// Text documents for polynomials and certificates.
///
/// Both are line oriented. `#` starts a comment, blank lines are ignored.
/// Scalars are "key: value" lines; a key with an empty value opens a matrix
/// whose rows follow one per line as whitespace-separated rationals in
/// lowest terms ("n" or "n/d").
///
///   variables: 2          polynomial document; row i holds a_{i,0..n2}
///   coeffs:
///   1/8 0 1
///   0 -2 0
///   1 0 0
namespace doc {

struct Section {
  std::string key;
  std::string value;
  std::vector<std::vector<Rational>> matrix;
  bool is_matrix = false;
  std::size_t line = 0;
};

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<Rational> parse_row(const std::string& line, std::size_t lineno) {
  std::istringstream in(line);
  std::vector<Rational> row;
  std::string tok;
  while (in >> tok) {
    try {
      row.push_back(parse_rational(tok));
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return row;
}

inline std::vector<Section> parse_sections(std::istream& in) {
  std::vector<Section> out;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      if (out.empty() || !out.back().is_matrix)
        throw parse_error("line " + std::to_string(lineno) + ": matrix row outside a matrix section");
      out.back().matrix.push_back(parse_row(line, lineno));
      continue;
    }
    Section s;
    s.key = trim(line.substr(0, colon));
    s.value = trim(line.substr(colon + 1));
    s.is_matrix = s.value.empty();
    s.line = lineno;
    if (s.key.empty()) throw parse_error("line " + std::to_string(lineno) + ": empty key");
    for (const auto& prev : out)
      if (prev.key == s.key) throw parse_error("line " + std::to_string(lineno) + ": duplicate key '" + s.key + "'");
    out.push_back(std::move(s));
  }
  return out;
}

inline const Section* find(const std::vector<Section>& sections, std::string_view key) {
  for (const auto& s : sections)
    if (s.key == key) return &s;
  return nullptr;
}

inline const Section& require(const std::vector<Section>& sections, std::string_view key) {
  const Section* s = find(sections, key);
  if (s == nullptr) throw parse_error("missing key '" + std::string(key) + "'");
  return *s;
}

inline Degree parse_degree(const Section& s) {
  const Rational v = parse_rational(s.value);
  if (v < 0 || v.get_den() != 1) throw parse_error("line " + std::to_string(s.line) + ": '" + s.key + "' must be a non-negative integer");
  return to_degree(v.get_num());
}

inline Matrix<Rational> to_matrix(const Section& s) {
  if (!s.is_matrix || s.matrix.empty())
    throw parse_error("line " + std::to_string(s.line) + ": '" + s.key + "' needs at least one matrix row");
  const std::size_t cols = s.matrix.front().size();
  Matrix<Rational> m(s.matrix.size(), cols);
  for (std::size_t i = 0; i < s.matrix.size(); ++i) {
    if (s.matrix[i].size() != cols)
      throw parse_error("'" + s.key + "': row " + std::to_string(i) + " has " + std::to_string(s.matrix[i].size()) +
                        " entries, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = s.matrix[i][j];
  }
  return m;
}

inline std::vector<Rational> parse_list(const Section& s) { return parse_row(s.value, s.line); }

inline void write_matrix(std::ostream& out, const Matrix<Rational>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << to_string(m(i, j));
    out << '\n';
  }
}

inline std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + to_string(x);
  return s;
}

inline void reject_unknown(const std::vector<Section>& sections, std::initializer_list<std::string_view> known) {
  for (const auto& s : sections) {
    bool ok = false;
    for (auto k : known) ok = ok || s.key == k;
    if (!ok) throw parse_error("line " + std::to_string(s.line) + ": unknown key '" + s.key + "'");
  }
}

}  // namespace doc

struct PolynomialDocument {
  int variables = 2;
  BPoly poly;  ///< univariate documents are stored as polynomials in x1

  UPoly univariate() const { return poly.coefficient_cols().front(); }
};

inline PolynomialDocument parse_polynomial(std::istream& in) {
  const auto sections = doc::parse_sections(in);
  doc::reject_unknown(sections, {"variables", "coeffs"});
  PolynomialDocument d;
  const auto& vars = doc::require(sections, "variables");
  if (vars.value == "1")
    d.variables = 1;
  else if (vars.value == "2")
    d.variables = 2;
  else
    throw parse_error("line " + std::to_string(vars.line) + ": variables must be 1 or 2");
  Matrix<Rational> m = doc::to_matrix(doc::require(sections, "coeffs"));
  if (d.variables == 1) {
    if (m.rows() != 1) throw parse_error("univariate coeffs must be a single row a_0 .. a_n");
    Matrix<Rational> col(m.cols(), 1);
    for (std::size_t i = 0; i < m.cols(); ++i) col(i, 0) = m(0, i);
    m = std::move(col);
  }
  d.poly = BPoly(std::move(m));
  if (d.variables == 1 && d.poly.degree2() != 0) throw parse_error("univariate document with x2 terms");
  return d;
}

inline PolynomialDocument parse_polynomial(const std::string& text) {
  std::istringstream in(text);
  return parse_polynomial(in);
}

inline void write_polynomial(std::ostream& out, const PolynomialDocument& d) {
  out << "variables: " << d.variables << "\ncoeffs:\n";
  if (d.variables == 1) {
    const UPoly u = d.univariate();
    out << doc::join(u.coeffs()) << '\n';
  } else {
    doc::write_matrix(out, d.poly.coeffs());
  }
}

inline std::string to_text(const PolynomialDocument& d) {
  std::ostringstream out;
  write_polynomial(out, d);
  return out.str();
}

///   format: bernpos-certificate
///   tool_version: 0.1.0
///   method: nested | raise
///   convention: plain
///   q1: ..            q2: ..
///   report.<field>: .. (method specific)
///   C:
///   <q1+1 rows of q2+1 rationals>
struct CertificateDocument {
  PositivityCertificate cert;
  std::string tool_version;
};

inline constexpr const char* certificate_format = "bernpos-certificate";

inline CertificateDocument parse_certificate(std::istream& in) {
  const auto sections = doc::parse_sections(in);
  CertificateDocument d;
  if (doc::require(sections, "format").value != certificate_format)
    throw parse_error("not a certificate document (format must be " + std::string(certificate_format) + ")");
  d.tool_version = doc::require(sections, "tool_version").value;
  const std::string method = doc::require(sections, "method").value;
  if (doc::require(sections, "convention").value != "plain") throw parse_error("convention must be plain");
  auto& c = d.cert;
  c.convention = Convention::Plain;
  c.q1 = doc::parse_degree(doc::require(sections, "q1"));
  c.q2 = doc::parse_degree(doc::require(sections, "q2"));
  c.C = doc::to_matrix(doc::require(sections, "C"));
  if (c.C.rows() != c.q1 + 1 || c.C.cols() != c.q2 + 1)
    throw parse_error("C is " + std::to_string(c.C.rows()) + "x" + std::to_string(c.C.cols()) +
                      " but q1, q2 require " + std::to_string(c.q1 + 1) + "x" + std::to_string(c.q2 + 1));
  auto scalar = [&](std::string_view key) { return parse_rational(doc::require(sections, key).value); };
  auto degree = [&](std::string_view key) { return doc::parse_degree(doc::require(sections, key)); };
  if (method == "nested") {
    doc::reject_unknown(sections, {"format", "tool_version", "method", "convention", "q1", "q2", "C",
                                   "report.lambda_lower", "report.lambda_q1", "report.lambda_q2", "report.L_upper",
                                   "report.per_i_inf_lower", "report.per_i_maxB_upper"});
    c.method = Method::Nested;
    NestedDegreeReport r;
    r.q1 = c.q1;
    r.q2 = c.q2;
    r.lambda_lower = scalar("report.lambda_lower");
    r.lambda_q1 = degree("report.lambda_q1");
    r.lambda_q2 = degree("report.lambda_q2");
    r.L_upper = scalar("report.L_upper");
    r.per_i_inf_lower = doc::parse_list(doc::require(sections, "report.per_i_inf_lower"));
    r.per_i_maxB_upper = doc::parse_list(doc::require(sections, "report.per_i_maxB_upper"));
    c.report = std::move(r);
  } else if (method == "raise") {
    doc::reject_unknown(sections, {"format", "tool_version", "method", "convention", "q1", "q2", "C",
                                   "report.start_q1", "report.start_q2", "report.doublings", "report.c_min",
                                   "report.bound"});
    c.method = Method::DegreeRaise;
    RaiseReport r;
    r.start_q1 = degree("report.start_q1");
    r.start_q2 = degree("report.start_q2");
    r.doublings = degree("report.doublings");
    r.c_min = scalar("report.c_min");
    r.bound = scalar("report.bound");
    c.report = std::move(r);
  } else {
    throw parse_error("method must be nested or raise, got '" + method + "'");
  }
  return d;
}

inline CertificateDocument parse_certificate(const std::string& text) {
  std::istringstream in(text);
  return parse_certificate(in);
}

inline void write_certificate(std::ostream& out, const CertificateDocument& d) {
  const auto& c = d.cert;
  out << "format: " << certificate_format << '\n'
      << "tool_version: " << d.tool_version << '\n'
      << "method: " << to_string(c.method) << '\n'
      << "convention: plain\n"
      << "q1: " << c.q1 << '\n'
      << "q2: " << c.q2 << '\n';
  if (const auto* r = std::get_if<NestedDegreeReport>(&c.report)) {
    out << "report.lambda_lower: " << to_string(r->lambda_lower) << '\n'
        << "report.lambda_q1: " << r->lambda_q1 << '\n'
        << "report.lambda_q2: " << r->lambda_q2 << '\n'
        << "report.L_upper: " << to_string(r->L_upper) << '\n'
        << "report.per_i_inf_lower: " << doc::join(r->per_i_inf_lower) << '\n'
        << "report.per_i_maxB_upper: " << doc::join(r->per_i_maxB_upper) << '\n';
  } else if (const auto* r = std::get_if<RaiseReport>(&c.report)) {
    out << "report.start_q1: " << r->start_q1 << '\n'
        << "report.start_q2: " << r->start_q2 << '\n'
        << "report.doublings: " << r->doublings << '\n'
        << "report.c_min: " << to_string(r->c_min) << '\n'
        << "report.bound: " << to_string(r->bound) << '\n';
  }
  out << "C:\n";
  doc::write_matrix(out, c.form().to(Convention::Plain).coeffs);
}

inline std::string to_text(const CertificateDocument& d) {
  std::ostringstream out;
  write_certificate(out, d);
  return out.str();
}

}  // namespace bernpos
