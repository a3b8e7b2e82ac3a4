#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bandspec/recurrence.hpp"

namespace bandspec {

/// Inverse of the n x n principal section of B - lambda I (normalized
/// band entries) by forward substitution.  Lower triangular, returned
/// dense row-major; column 1 flattens the A pair sequence, column 2 the
/// B sequence, and column 2j-1 repeats column 1 shifted down 2(j-1).
std::vector<std::vector<Complex>> inverse_truncation(const OperatorParams& params, Complex lambda,
                                                     int n);

enum class OracleOutcome { InSpectrum, Resolvent, Inconclusive };

const char* to_string(OracleOutcome outcome);

struct OracleVerdict {
  Complex lambda;
  bool analytic = false;  // the closed-form membership predicate
  OracleOutcome numeric = OracleOutcome::Inconclusive;
  double growth_exponent = 0.0;  // per-pair growth factor of the column
  int n_used = 0;
};

/// Finite-section membership test, independent of the closed-form ratio:
/// runs the first inverse column to n entries with overflow-safe
/// rescaling and compares the l_p partial sums S_n against S_{n/2}.
/// Growth beyond 1 + band reads as InSpectrum, stagnation below
/// 1 + band/10 as Resolvent, anything between as Inconclusive (expected
/// only near the spectral boundary).
OracleVerdict membership_oracle(const OperatorParams& params, const SpaceIndex& space,
                                Complex lambda, int n = 400, double band = 0.05);

/// Nullspace dimension of the (n+2) x n band section at lambda = r1 or
/// r2 (the only candidate eigenvalues), by row reduction with a
/// scale-aware pivot threshold.  The two extra rows carry the
/// constraints a square section would cut off; a vector in this kernel
/// would be a finitely supported eigenvector.  Always 0 for valid
/// parameters.
int kernel_rank_check(const OperatorParams& params, Complex lambda, int n);

/// Norm estimate on the n-section.  p = 1: exact maximum column sum of
/// the band (equals the closed-form norm).  p > 1: best Rayleigh-style
/// quotient over basis vectors plus `trials` seeded random vectors;
/// always within the analytic [lower, upper] bracket.
double empirical_norm(const OperatorParams& params, const SpaceIndex& space, int n, int trials,
                      std::uint64_t seed = 0);

/// membership_oracle over a batch of points, parallelized over lambdas.
/// Every lambda must be distinct from r1 and r2.  The serial twin is the
/// reference implementation the parallel kernel is checked against.
std::vector<OracleVerdict> oracle_sweep(const OperatorParams& params, const SpaceIndex& space,
                                        const std::vector<Complex>& lambdas, int n = 400,
                                        double band = 0.05);
std::vector<OracleVerdict> oracle_sweep_serial(const OperatorParams& params,
                                               const SpaceIndex& space,
                                               const std::vector<Complex>& lambdas, int n = 400,
                                               double band = 0.05);

/// One JSON object per line: lambda, analytic, numeric, growth_exponent,
/// n_used.
void write_verdicts_jsonl(std::ostream& out, const std::vector<OracleVerdict>& verdicts);

}  // namespace bandspec
