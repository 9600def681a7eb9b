#include "opucmat/spec_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace opucmat {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("spec: " + msg); }

double number_at(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where + " must be a number");
  double x = v.get<double>();
  if (!std::isfinite(x)) fail(where + " must be finite");
  return x;
}

std::vector<double> number_list(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(number_at(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) fail("unknown field '" + where + it.key() + "'");
}

void parse_schur_kind(const json& j, MeasureSpec& spec) {
  check_keys(j, {"kind", "schur", "eps0"}, "");
  if (!j.contains("schur")) fail("kind \"schur\" requires a 'schur' array");
  const json& arr = j["schur"];
  if (!arr.is_array()) fail("'schur' must be an array of [re, im] pairs");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string where = "schur[" + std::to_string(i) + "]";
    const json& e = arr[i];
    if (!e.is_array() || e.size() != 2) fail(where + " must be a [re, im] pair");
    cplx a(number_at(e[0], where + "[0]"), number_at(e[1], where + "[1]"));
    if (std::abs(a) >= 1.0) fail(where + " must have modulus < 1");
    spec.schur.push_back(a);
  }
  if (j.contains("eps0")) {
    spec.eps0 = number_at(j["eps0"], "eps0");
    if (spec.eps0 <= 0.0) fail("eps0 must be positive");
  }
}

void parse_weight_kind(const json& j, MeasureSpec& spec) {
  check_keys(j, {"kind", "weight", "atoms"}, "");
  if (!j.contains("weight")) fail("kind \"weight\" requires a 'weight' object");
  const json& w = j["weight"];
  if (!w.is_object()) fail("'weight' must be an object");
  if (!w.contains("family") || !w["family"].is_string()) fail("weight.family must be a string");
  spec.family = w["family"].get<std::string>();
  if (spec.family == "lebesgue") {
    check_keys(w, {"family"}, "weight.");
  } else if (spec.family == "trig-poly") {
    check_keys(w, {"family", "cos", "sin"}, "weight.");
    if (w.contains("cos")) spec.cos_coeffs = number_list(w["cos"], "weight.cos");
    if (w.contains("sin")) spec.sin_coeffs = number_list(w["sin"], "weight.sin");
    if (spec.cos_coeffs.empty() && spec.sin_coeffs.empty())
      fail("weight family \"trig-poly\" requires 'cos' or 'sin' coefficients");
  } else if (spec.family == "table") {
    check_keys(w, {"family", "samples"}, "weight.");
    if (!w.contains("samples")) fail("weight family \"table\" requires a 'samples' array");
    spec.table = number_list(w["samples"], "weight.samples");
    if (spec.table.size() < 2) fail("weight.samples needs at least 2 entries");
  } else {
    fail("weight.family must be \"lebesgue\", \"trig-poly\", or \"table\"");
  }
  if (j.contains("atoms")) {
    const json& atoms = j["atoms"];
    if (!atoms.is_array()) fail("'atoms' must be an array");
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      std::string where = "atoms[" + std::to_string(i) + "]";
      const json& e = atoms[i];
      if (!e.is_object()) fail(where + " must be an object {theta, mass}");
      check_keys(e, {"theta", "mass"}, where + ".");
      if (!e.contains("theta") || !e.contains("mass"))
        fail(where + " must have 'theta' and 'mass'");
      CircleAtom atom{number_at(e["theta"], where + ".theta"),
                      number_at(e["mass"], where + ".mass")};
      if (atom.mass <= 0.0) fail(where + ".mass must be positive");
      atom.theta = std::fmod(atom.theta, two_pi);
      if (atom.theta < 0.0) atom.theta += two_pi;
      spec.atoms.push_back(atom);
    }
  }
}

}  // namespace

MeasureSpec parse_spec_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    std::size_t stop = e.byte == 0 ? 0 : e.byte - 1;
    for (std::size_t i = 0; i < stop && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  if (!j.is_object()) fail("top level must be an object");
  if (!j.contains("kind") || !j["kind"].is_string()) fail("'kind' must be a string");

  MeasureSpec spec;
  spec.kind = j["kind"].get<std::string>();
  if (spec.kind == "schur")
    parse_schur_kind(j, spec);
  else if (spec.kind == "weight")
    parse_weight_kind(j, spec);
  else
    fail("'kind' must be \"schur\" or \"weight\"");
  return spec;
}

MeasureSpec parse_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("spec: cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str());
}

CircleMeasure measure_from_spec(const MeasureSpec& spec, std::size_t nodes) {
  if (spec.kind == "schur")
    return bernstein_szego_measure(SchurSequence(spec.schur, spec.eps0), nodes);
  if (spec.family == "lebesgue")
    return CircleMeasure([](double) { return 1.0; }, spec.atoms, nodes);
  if (spec.family == "trig-poly") {
    auto c = spec.cos_coeffs;
    auto s = spec.sin_coeffs;
    auto w = [c, s](double t) {
      double v = 0.0;
      for (std::size_t k = 0; k < c.size(); ++k) v += c[k] * std::cos(double(k) * t);
      for (std::size_t k = 0; k < s.size(); ++k) v += s[k] * std::sin(double(k + 1) * t);
      return v;
    };
    return CircleMeasure(w, spec.atoms, nodes);
  }
  auto tab = spec.table;
  auto w = [tab](double t) {
    double u = std::fmod(t, two_pi) / two_pi;
    if (u < 0.0) u += 1.0;
    u *= double(tab.size());
    std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(u), tab.size() - 1);
    double frac = u - double(k);
    return tab[k] * (1.0 - frac) + tab[(k + 1) % tab.size()] * frac;
  };
  return CircleMeasure(w, spec.atoms, nodes);
}

SchurSequence head_from_spec(const MeasureSpec& spec, const CircleMeasure& m, std::size_t len) {
  if (spec.kind == "schur") return SchurSequence(spec.schur, spec.eps0);
  return schur_from_measure(m, len);
}

GenResult generate(const SchurSequence& schur, std::size_t n) {
  GenResult g;
  g.n = n;
  g.eps0 = schur.eps0;
  g.schur = schur.head;
  g.phi = szego_sequence(schur, n);
  g.h.reserve(n + 1);
  g.gram.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    g.h.push_back(schur_matrix(schur.a(k)));
    g.gram.push_back(gram_block(schur, k));
  }
  g.f = matrix_poly_recurrence(schur, n);
  g.p = orthogonal_matrix_polys(schur, n);
  auto q = orthonormal_matrix_polys(schur, n);
  g.q.reserve(q.size());
  for (auto& e : q) g.q.push_back(e.poly);
  return g;
}

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void put_real_poly(std::string& out, const RealPoly& p) {
  out += '[';
  int d = p.degree();
  for (int k = 0; k <= d; ++k) {
    if (k) out += ',';
    out += fmt(p.coeff(k));
  }
  out += ']';
}

void put_mat_poly(std::string& out, const MatPoly2& m) {
  out += "[[";
  put_real_poly(out, m(0, 0));
  out += ',';
  put_real_poly(out, m(0, 1));
  out += "],[";
  put_real_poly(out, m(1, 0));
  out += ',';
  put_real_poly(out, m(1, 1));
  out += "]]";
}

void put_mat(std::string& out, const Mat2& m) {
  out += "[[" + fmt(m(0, 0)) + ',' + fmt(m(0, 1)) + "],[" + fmt(m(1, 0)) + ',' + fmt(m(1, 1)) +
         "]]";
}

void put_complex_poly(std::string& out, const ComplexPoly& p) {
  out += '[';
  int d = p.degree();
  for (int k = 0; k <= d; ++k) {
    if (k) out += ',';
    out += '[' + fmt(p.coeff(k).real()) + ',' + fmt(p.coeff(k).imag()) + ']';
  }
  out += ']';
}

template <class T, class Put>
void put_list(std::string& out, const std::string& key, const std::vector<T>& v, Put put) {
  out += "  \"" + key + "\": [";
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    put(out, v[i]);
  }
  out += v.empty() ? "]" : "\n  ]";
}

}  // namespace

std::string to_json(const GenResult& g) {
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(g.n) + ",\n";
  out += "  \"eps0\": " + fmt(g.eps0) + ",\n";
  out += "  \"schur\": [";
  for (std::size_t i = 0; i < g.schur.size(); ++i) {
    if (i) out += ',';
    out += '[' + fmt(g.schur[i].real()) + ',' + fmt(g.schur[i].imag()) + ']';
  }
  out += "],\n";
  put_list(out, "phi", g.phi, put_complex_poly);
  out += ",\n";
  put_list(out, "h", g.h, put_mat);
  out += ",\n";
  put_list(out, "gram", g.gram, put_mat);
  out += ",\n";
  put_list(out, "f", g.f, put_mat_poly);
  out += ",\n";
  put_list(out, "p", g.p, put_mat_poly);
  out += ",\n";
  put_list(out, "q", g.q, put_mat_poly);
  out += "\n}\n";
  return out;
}

namespace {

[[noreturn]] void bad_gen(const std::string& msg) {
  throw std::invalid_argument("generated output: " + msg);
}

Mat2 mat_from(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_array() || v[0].size() != 2 ||
      !v[1].is_array() || v[1].size() != 2)
    bad_gen(where + " must be a 2x2 matrix");
  return Mat2(number_at(v[0][0], where), number_at(v[0][1], where), number_at(v[1][0], where),
              number_at(v[1][1], where));
}

RealPoly real_poly_from(const json& v, const std::string& where) {
  RealPoly p;
  p.c = number_list(v, where);
  return p;
}

MatPoly2 mat_poly_from(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_array() || v[0].size() != 2 ||
      !v[1].is_array() || v[1].size() != 2)
    bad_gen(where + " must be a 2x2 array of coefficient lists");
  MatPoly2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = real_poly_from(v[i][j], where);
  return m;
}

ComplexPoly complex_poly_from(const json& v, const std::string& where) {
  if (!v.is_array()) bad_gen(where + " must be an array of [re, im] pairs");
  ComplexPoly p;
  p.c.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_array() || e.size() != 2) bad_gen(where + " entries must be [re, im] pairs");
    p.c.emplace_back(number_at(e[0], where), number_at(e[1], where));
  }
  return p;
}

}  // namespace

GenResult gen_result_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad_gen(std::string("JSON syntax error: ") + e.what());
  }
  if (!j.is_object()) bad_gen("top level must be an object");
  for (const char* key : {"n", "eps0", "schur", "phi", "h", "gram", "f", "p", "q"})
    if (!j.contains(key)) bad_gen(std::string("missing field '") + key + "'");

  GenResult g;
  if (!j["n"].is_number_unsigned()) bad_gen("'n' must be a nonnegative integer");
  g.n = j["n"].get<std::size_t>();
  g.eps0 = number_at(j["eps0"], "eps0");
  for (const auto& e : j["schur"]) {
    if (!e.is_array() || e.size() != 2) bad_gen("schur entries must be [re, im] pairs");
    g.schur.emplace_back(number_at(e[0], "schur"), number_at(e[1], "schur"));
  }
  for (const auto& e : j["phi"]) g.phi.push_back(complex_poly_from(e, "phi"));
  for (const auto& e : j["h"]) g.h.push_back(mat_from(e, "h"));
  for (const auto& e : j["gram"]) g.gram.push_back(mat_from(e, "gram"));
  for (const auto& e : j["f"]) g.f.push_back(mat_poly_from(e, "f"));
  for (const auto& e : j["p"]) g.p.push_back(mat_poly_from(e, "p"));
  for (const auto& e : j["q"]) g.q.push_back(mat_poly_from(e, "q"));
  return g;
}

}  // namespace opucmat
