#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bandspec/types.hpp"

namespace bandspec {

/// Parameters of the period-2 lower-triangular triple-band operator
/// B(r1,r2;s1,s2;t1,t2).  The stored s-values are branch-normalized so
/// that principal_sqrt(s^2) == s holds for both; when the caller's pair
/// had to be negated (both at once, a diagonal-sign similarity that
/// leaves every spectral set unchanged), s_flipped records it and the
/// entrywise views restore the original sign.
struct OperatorParams {
  Complex r1, r2;
  Complex s1, s2;  // normalized
  Complex t1, t2;
  bool s_flipped = false;

  Complex s1_effective() const { return s_flipped ? -s1 : s1; }
  Complex s2_effective() const { return s_flipped ? -s2 : s2; }
  bool t_zero() const { return t1 == Complex{0.0, 0.0} && t2 == Complex{0.0, 0.0}; }
};

/// Validates and normalizes the six band parameters.
/// Throws std::invalid_argument when s1 or s2 is zero, when exactly one
/// of t1, t2 is zero, when any component is non-finite, or when the
/// branch condition fails for exactly one of s1, s2.
OperatorParams validate_params(Complex r1, Complex r2, Complex s1, Complex s2,
                               Complex t1, Complex t2);

/// The sequence-space index p (1 <= p < infinity) with its conjugate.
struct SpaceIndex {
  double p;
  double q;  // conjugate exponent, infinity when p == 1

  static SpaceIndex lp(double p);
  bool is_l1() const { return p == 1.0; }
};

struct NormBounds {
  double lower = 0.0;                 // attained column p-norm
  double upper = 0.0;                 // band-wise triangle bound
  std::optional<double> exact;        // populated only for p == 1
};

/// Leading n x n section of the operator, band storage, effective
/// (un-normalized) entries.
struct TruncatedOperator {
  int n = 0;
  std::vector<Complex> diag;     // size n
  std::vector<Complex> sub;      // size max(n-1,0), sub[i] = entry(i+2, i+1)
  std::vector<Complex> subsub;   // size max(n-2,0), subsub[i] = entry(i+3, i+1)

  Complex entry(int row, int col) const;
};

/// Matrix entry at 1-based (row, col) of the infinite operator.
Complex entry(const OperatorParams& params, int row, int col);

TruncatedOperator truncate(const OperatorParams& params, int n);

/// y = B x for a finitely supported vector x; the result has two extra
/// trailing components (rows len+1 and len+2 still see x).  Empty in,
/// empty out.
std::vector<Complex> apply(const OperatorParams& params, std::span<const Complex> x);

/// Norm bracket on l_p.  lower = max over the two column patterns of the
/// column p-norm, upper = sum of band-wise maxima; exact is the max
/// column l1-sum when p == 1.
NormBounds norm_bounds_lp(const OperatorParams& params, const SpaceIndex& space);

}  // namespace bandspec
