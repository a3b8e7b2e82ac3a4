#pragma once

#include <initializer_list>
#include <string>

#include "bandspec/operator.hpp"

namespace bandspec {

/// Discriminant of the characteristic equation of the pair-advance
/// recurrence:
///   chi = t1^2(r2-l)^2 + t2^2(r1-l)^2 + s1^2 s2^2
///         - 2 t1 t2 (r1-l)(r2-l) - 2 s1 s2 t1 (r2-l) - 2 s1 s2 t2 (r1-l).
Complex chi(const OperatorParams& params, Complex lambda);

/// Roots of f(a) = a^2 + (t1/(r1-l) + t2/(r2-l) - s1 s2/P) a + t1 t2/P,
/// P = (r1-l)(r2-l), ordered |alpha1| >= |alpha2|.
struct CharRoots {
  Complex alpha1, alpha2;
  Complex chi;
  bool discriminant_zero = false;  // Jordan case
  bool degenerate_lambda = false;  // lambda is r1 or r2; roots undefined
};

CharRoots char_roots(const OperatorParams& params, Complex lambda);

/// |2(r1-l)(r2-l)| / max(|D + sqrt(chi)|, |D - sqrt(chi)|) with
/// D = s1 s2 - t1(r2-l) - t2(r1-l); equals 1/|alpha1|.  Zero at
/// lambda in {r1, r2}; +infinity if the denominator vanishes while the
/// numerator does not (unreachable for valid parameters).
double membership_ratio(const OperatorParams& params, Complex lambda);

/// ratio <= 1; the same set for every p in [1, infinity).
bool in_spectrum(const OperatorParams& params, const SpaceIndex& space, Complex lambda);

enum class FineClass { Resolvent, Residual, Continuous };
const char* to_string(FineClass f);

enum class GoldbergLabel { A1, A2, A3, B1, B2, B3, C1, C2, C3 };
const char* to_string(GoldbergLabel l);

/// A Goldberg table state, or the set of candidates when only a
/// containment is known (resolvent points: {A1,B1}; lambda = r1 or r2:
/// {C1,C2}).
struct GoldbergState {
  unsigned candidates = 0;  // bitmask indexed by GoldbergLabel

  static GoldbergState exactly(GoldbergLabel l);
  static GoldbergState unresolved(std::initializer_list<GoldbergLabel> ls);

  bool contains(GoldbergLabel l) const { return candidates & (1u << static_cast<unsigned>(l)); }
  bool resolved() const;
  GoldbergLabel label() const;  // only when resolved()
  std::string str() const;      // "B2" or "unresolved{C1,C2}"
  bool operator==(const GoldbergState&) const = default;
};

struct SpectralClassification {
  double ratio = 0.0;
  bool in_spectrum = false;  // tol-banded: fine != Resolvent
  FineClass fine = FineClass::Resolvent;
  GoldbergState goldberg;
  Tri in_ap = Tri::unknown, in_delta = Tri::unknown, in_co = Tri::unknown;
  bool boundary_flag = false;  // |ratio - 1| <= tol
};

/// Full verdict at one lambda.  For p > 1 the spectrum splits into the
/// residual interior (ratio < 1) and continuous boundary (ratio = 1);
/// for p = 1 the whole spectrum is residual.  tol bands the boundary.
SpectralClassification fine_classify(const OperatorParams& params, const SpaceIndex& space,
                                     Complex lambda, double tol);

GoldbergState goldberg_classify(const OperatorParams& params, const SpaceIndex& space,
                                Complex lambda, double tol);

struct SubdivisionFlags {
  Tri in_ap, in_delta, in_co;
};

/// Membership in the approximate-point / defect / compression
/// subdivisions; unknown exactly where only containments are stated
/// (lambda in {r1, r2} for sigma_ap).
SubdivisionFlags subdivision_flags(const OperatorParams& params, const SpaceIndex& space,
                                   Complex lambda, double tol);

/// Point spectrum of the adjoint on the dual space: ratio < 1 for
/// p > 1, ratio <= 1 for p = 1.  Exact comparison, no banding.
bool adjoint_point_spectrum_contains(const OperatorParams& params, const SpaceIndex& space,
                                     Complex lambda);

}  // namespace bandspec
