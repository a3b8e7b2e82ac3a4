#pragma once

#include <array>
#include <utility>
#include <vector>

#include "bandspec/spectrum.hpp"

namespace bandspec {

using Pair = std::array<Complex, 2>;

enum class CompanionKind { A1, A2, C };

/// 2x2 matrix advancing consecutive pairs: A1 for the a-column of the
/// inverse, A2 for the b-column, C for the adjoint eigen-system (whose
/// characteristic polynomial is the reciprocal of A1's).
struct CompanionMatrix {
  Complex m11, m12, m21, m22;
  CompanionKind kind;

  Complex trace() const { return m11 + m22; }
  Complex det() const { return m11 * m22 - m12 * m21; }
};

CompanionMatrix companion(const OperatorParams& params, Complex lambda, CompanionKind kind);

enum class PairOrigin { InverseA, InverseB, Adjoint };

/// x_k = (a_{2k-1}, a_{2k}), the b-analogue, or the adjoint pairs
/// (x_{2k-1}, x_{2k}).
struct PairSequence {
  PairOrigin origin;
  std::vector<Pair> pairs;
};

enum class Column { A, B };

/// First K pairs of the selected inverse column by forward recurrence
/// from a1 = 1/(r1-l), a2 = -s1/P (b1 = 1/(r2-l), b2 = -s2/P).
PairSequence inverse_columns(const OperatorParams& params, Complex lambda, Column which, int K);

enum class SolutionMode { DistinctRoots, Jordan, TZeroDegenerate };

struct RecurrenceSolution {
  SolutionMode mode;
  CharRoots roots;
  Pair v1;  // eigenvector of alpha1 (Jordan: of the double root)
  Pair v2;  // eigenvector of alpha2 (Jordan: generalised eigenvector)
  Complex c1, c2;
};

/// Closed-form solution of the pair recurrence and the sequence it
/// generates; matches inverse_columns.  Modes: distinct roots
/// x_k = c1 v1 a1^k + c2 v2 a2^k; t = 0 single-root geometric; Jordan
/// x_k = c1 v1 a^k + c2 (v1 k a^{k-1} + v2 a^k).  In Jordan mode the
/// generalised eigenvector is the minimal-norm solution of
/// (A1 - aI)u = h with zero component along h, shifted by
/// jordan_gauge * h; the emitted sequence does not depend on the shift.
std::pair<RecurrenceSolution, PairSequence> closed_form(const OperatorParams& params,
                                                        Complex lambda, Column which, int K,
                                                        Complex jordan_gauge = Complex{0, 0});

/// exp of the least-squares slope of log max-norm over the tail half;
/// estimates |alpha1| for sequences with a dominant geometric factor.
double decay_rate(const PairSequence& seq);

/// Eigenvector of the transposed matrix at lambda, paired and scaled so
/// x1 = 1: (1, x2) * beta^{k-1} with beta = 1/alpha1; exact finite
/// vectors at lambda = r1 and r2.
PairSequence adjoint_eigenvector(const OperatorParams& params, const SpaceIndex& space,
                                 Complex lambda, int K);

/// max_j |(d_j - lambda) x_j + s_j x_{j+1} + t_j x_{j+2}| / max|x| over
/// the rows of the transposed action that lie fully inside the sample
/// (the last two rows are truncation edge and are skipped).
double adjoint_residual(const OperatorParams& params, Complex lambda, const PairSequence& x);

}  // namespace bandspec
