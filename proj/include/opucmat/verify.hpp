#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "opucmat/measures.hpp"
#include "opucmat/opuc.hpp"

namespace opucmat {

struct CheckResult {
  std::string name;
  double residual = 0.0;  // normalized: relative to the total mass or unit scale
  double tol = 0.0;
  bool pass = false;
};

struct RunReport {
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  bool pass = true;

  void add(std::string name, double residual, double tol);
};

// Runs the invariant suite for indices 0..n against quadrature on m:
// positivity of the projected matrix measure (first; failure skips the rest),
// circle-polynomial norms, agreement of the two construction routes,
// quasi-orthogonality of the two-sided family, Gram blocks, orthogonality of
// the monic-type and orthonormal families, and connection-coefficient
// identities. Every check uses the same relative tolerance.
//
// The overload without a head recovers a_1..a_{2n+3} from the measure; a
// failed recovery (signed weight, too few effective moments) is reported as a
// failing check rather than thrown.
RunReport verify_measure(const CircleMeasure& m, const SchurSequence& schur, std::size_t n,
                         double tol);
RunReport verify_measure(const CircleMeasure& m, std::size_t n, double tol);

// Deterministic pseudo-random Schur head: len points uniform on the closed
// disk of the given radius, from a fixed bit-to-double mapping so results
// match across platforms.
std::vector<cplx> synthesized_head(std::uint64_t seed, std::size_t len = 8, double radius = 0.8);

}  // namespace opucmat
