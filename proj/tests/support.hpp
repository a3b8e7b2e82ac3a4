#pragma once

// Shared helpers for the test binaries: seeded random parameter draws,
// complex comparison, and small algebraic oracles that are independent
// of the library code they check.

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "bandspec/operator.hpp"

namespace testsup {

using bandspec::Complex;

inline double rel_err(Complex got, Complex want) {
  double scale = std::max(1.0, std::abs(want));
  return std::abs(got - want) / scale;
}

inline bool close(Complex got, Complex want, double tol = 1e-12) {
  return rel_err(got, want) <= tol;
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(unsigned long long seed) : eng(seed) {}

  double real(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(eng);
  }
  Complex cplx(double radius = 2.0) { return {real(-radius, radius), real(-radius, radius)}; }

  // A complex value on the principal branch (sqrt(s^2) == s), bounded
  // away from zero so it is a legal s-parameter.
  Complex branch_ok_nonzero(double radius = 2.0) {
    for (;;) {
      Complex z = cplx(radius);
      if (z.real() < 0.0) z = -z;
      if (std::abs(z) > 0.2 && z.real() > 1e-3) return z;
    }
  }
  Complex nonzero(double radius = 2.0) {
    for (;;) {
      Complex z = cplx(radius);
      if (std::abs(z) > 0.2) return z;
    }
  }

  bandspec::OperatorParams params(bool with_t = true) {
    Complex t1{}, t2{};
    if (with_t) {
      t1 = nonzero();
      t2 = nonzero();
    }
    return bandspec::validate_params(cplx(), cplx(), branch_ok_nonzero(), branch_ok_nonzero(), t1, t2);
  }

  std::vector<Complex> vec(int len, double radius = 1.0) {
    std::vector<Complex> v(len);
    for (auto& z : v) z = cplx(radius);
    return v;
  }
};

inline double lp_norm(const std::vector<Complex>& v, double p) {
  double acc = 0.0;
  for (auto z : v) acc += std::pow(std::abs(z), p);
  return std::pow(acc, 1.0 / p);
}

// Frozen parameter sets used across the suites. exam1/exam2 are the two
// worked examples; delta_op is the first-difference operator.
inline bandspec::OperatorParams exam1() {
  return bandspec::validate_params({1, 0}, {0, 1}, {2, 0}, {1, 0}, {0, -1}, {1, 0});
}
inline bandspec::OperatorParams exam2() {
  return bandspec::validate_params({0, 1}, {2, 0}, {1, 1}, {1, 0}, {0, 0}, {0, 0});
}
inline bandspec::OperatorParams delta_op() {
  return bandspec::validate_params({1, 0}, {1, 0}, {-1, 0}, {-1, 0}, {0, 0}, {0, 0});
}

// Parameter set with an exact double characteristic root at `lambda`.
// Built from Gaussian integers so every term of the discriminant is
// exactly representable and the cancellation to zero happens in exact
// integer arithmetic: u = 1, v = w^2, t = (1,1), s1 s2 = (w + sign)^2
// makes chi = (s1 s2 - u - v)^2 - 4uv = 4w^2 - 4w^2 = 0.  The double
// root is alpha = sign/w, so the membership ratio is |w|.
struct JordanPoint {
  bandspec::OperatorParams params;
  Complex lambda;
  Complex alpha;
};

inline JordanPoint engineered_jordan(Complex w, Complex g, double sign = 1.0) {
  const Complex ss = (w + sign) * (w + sign);
  auto ok = [](Complex z) { return z.real() > 0.0 || (z.real() == 0.0 && z.imag() >= 0.0); };
  Complex s1{1, 0}, s2 = ss;
  if (!ok(s2)) {  // rotate the factorization by a unit
    s1 = {0, 1};
    s2 = Complex{0, -1} * ss;
    if (!ok(s2)) throw std::invalid_argument("no principal-branch factorization");
  }
  const Complex r1 = g + Complex{1, 0};
  const Complex r2 = g + w * w;
  return {bandspec::validate_params(r1, r2, s1, s2, {1, 0}, {1, 0}), g, sign / w};
}

// Ready-made double-root instances covering decaying (|alpha| < 1) and
// boundary (|alpha| = 1) behaviour at several base points.
inline std::vector<JordanPoint> jordan_points() {
  return {
      engineered_jordan({1, 1}, {0, 0}),
      engineered_jordan({2, 0}, {1, 1}),
      engineered_jordan({0, 1}, {-2, 3}),
      engineered_jordan({1, -1}, {0, -1}),
      engineered_jordan({2, 1}, {3, 0}),
      engineered_jordan({1, 2}, {-1, -1}),
      engineered_jordan({3, 0}, {0, 0}, -1.0),
  };
}

}  // namespace testsup
