#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "opucmat/matrix_op.hpp"
#include "opucmat/measures.hpp"
#include "opucmat/opuc.hpp"
#include "opucmat/poly.hpp"

namespace opucmat {

// Parsed JSON description of a circle measure. Two kinds:
//   "schur"  - finite Schur parameter head (entries [re, im]) plus total mass
//              eps0; the measure is the matching Bernstein-Szego weight.
//   "weight" - explicit weight function: family "lebesgue" (w = 1),
//              "trig-poly" (cos/sin coefficient lists), or "table" (uniform
//              samples on [0, 2pi), periodic linear interpolation), with
//              optional point masses {theta, mass}.
struct MeasureSpec {
  std::string kind;                // "schur" | "weight"
  std::vector<cplx> schur;         // kind == "schur"
  double eps0 = two_pi;            // kind == "schur"
  std::string family;              // kind == "weight"
  std::vector<double> cos_coeffs;  // w += cos_coeffs[k] cos(k t), k from 0
  std::vector<double> sin_coeffs;  // w += sin_coeffs[k-1] sin(k t), k from 1
  std::vector<double> table;       // samples at t_j = j 2pi / size
  std::vector<CircleAtom> atoms;   // kind == "weight"
};

// Both throw std::invalid_argument naming the offending field; syntax errors
// report line and column. parse_spec additionally fails on unreadable files.
MeasureSpec parse_spec_text(const std::string& text);
MeasureSpec parse_spec(const std::string& path);

CircleMeasure measure_from_spec(const MeasureSpec& spec, std::size_t nodes = default_nodes);

// Schur head a_1..a_len for downstream pipelines: taken verbatim for kind
// "schur", recovered from the measure by quadrature otherwise (which throws
// std::domain_error for signed or degenerate measures).
SchurSequence head_from_spec(const MeasureSpec& spec, const CircleMeasure& m, std::size_t len);

// Everything the generation pipeline produces for indices 0..n: monic circle
// polynomials phi_k, reflection matrices H(a_k), Gram blocks, and the three
// matrix polynomial families (two-sided F_k, monic-type orthogonal P_k,
// orthonormal Q_k).
struct GenResult {
  std::size_t n = 0;
  double eps0 = two_pi;
  std::vector<cplx> schur;
  std::vector<ComplexPoly> phi;
  std::vector<Mat2> h;
  std::vector<Mat2> gram;
  std::vector<MatPoly2> f, p, q;
};

GenResult generate(const SchurSequence& schur, std::size_t n);

// Deterministic JSON with every number printed to 17 significant digits;
// parsing the output and re-serializing reproduces it byte for byte.
std::string to_json(const GenResult& g);
GenResult gen_result_from_json(const std::string& text);

}  // namespace opucmat
