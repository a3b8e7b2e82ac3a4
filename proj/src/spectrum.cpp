#include "bandspec/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace bandspec {

namespace {

struct PointData {
  Complex u, v;   // r1 - lambda, r2 - lambda
  Complex P;      // u * v
  Complex D;      // s1 s2 - t1 v - t2 u
  Complex chi;    // D^2 - 4 P t1 t2, expanded form
  bool at_r;      // lambda == r1 or lambda == r2 exactly
};

PointData point_data(const OperatorParams& p, Complex lambda) {
  PointData d;
  d.u = p.r1 - lambda;
  d.v = p.r2 - lambda;
  d.P = d.u * d.v;
  const Complex ss = p.s1 * p.s2;
  d.D = ss - p.t1 * d.v - p.t2 * d.u;
  d.chi = p.t1 * p.t1 * d.v * d.v + p.t2 * p.t2 * d.u * d.u + ss * ss -
          2.0 * p.t1 * p.t2 * d.P - 2.0 * ss * p.t1 * d.v - 2.0 * ss * p.t2 * d.u;
  d.at_r = (lambda == p.r1) || (lambda == p.r2);
  return d;
}

bool jordan_case(const OperatorParams& p, const PointData& d) {
  const double scale = 1.0 + std::norm(p.s1 * p.s2) + std::norm(p.t1 * d.v) + std::norm(p.t2 * d.u);
  return std::abs(d.chi) <= 1e-12 * scale;
}

// Larger-modulus numerator among D +- sqrt(chi); the displayed formula
// keeps the + branch, which agrees whenever the implicit factoring
// sqrt(chi)/D = sqrt(chi/D^2) is valid, and a tie keeps + as well.
Complex dominant_numerator(const PointData& d) {
  const Complex root = principal_sqrt(d.chi);
  const Complex plus = d.D + root;
  const Complex minus = d.D - root;
  return std::abs(plus) >= std::abs(minus) ? plus : minus;
}

double ratio_from(const OperatorParams& p, const PointData& d) {
  if (d.at_r) return 0.0;
  const double num = std::abs(2.0 * d.P);
  const double den = std::abs(dominant_numerator(d));
  if (den == 0.0) {
    return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return num / den;
}

constexpr unsigned bit(GoldbergLabel l) { return 1u << static_cast<unsigned>(l); }

}  // namespace

Complex chi(const OperatorParams& params, Complex lambda) {
  return point_data(params, lambda).chi;
}

CharRoots char_roots(const OperatorParams& params, Complex lambda) {
  const PointData d = point_data(params, lambda);
  CharRoots out;
  out.chi = d.chi;
  out.discriminant_zero = jordan_case(params, d);
  out.degenerate_lambda = d.at_r;
  if (d.at_r) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out.alpha1 = out.alpha2 = Complex{nan, nan};
    return out;
  }
  const Complex big = dominant_numerator(d);
  out.alpha1 = big / (2.0 * d.P);
  // Vieta: alpha1 * alpha2 = t1 t2 / P.  Dividing out the dominant root
  // avoids the cancellation in the small numerator D -+ sqrt(chi).
  out.alpha2 = (params.t1 * params.t2 / d.P) / out.alpha1;
  return out;
}

double membership_ratio(const OperatorParams& params, Complex lambda) {
  return ratio_from(params, point_data(params, lambda));
}

bool in_spectrum(const OperatorParams& params, const SpaceIndex&, Complex lambda) {
  return membership_ratio(params, lambda) <= 1.0;
}

const char* to_string(FineClass f) {
  switch (f) {
    case FineClass::Resolvent: return "resolvent";
    case FineClass::Residual: return "residual";
    default: return "continuous";
  }
}

const char* to_string(GoldbergLabel l) {
  static const char* names[] = {"A1", "A2", "A3", "B1", "B2", "B3", "C1", "C2", "C3"};
  return names[static_cast<unsigned>(l)];
}

GoldbergState GoldbergState::exactly(GoldbergLabel l) { return GoldbergState{bit(l)}; }

GoldbergState GoldbergState::unresolved(std::initializer_list<GoldbergLabel> ls) {
  GoldbergState g;
  for (auto l : ls) g.candidates |= bit(l);
  return g;
}

bool GoldbergState::resolved() const { return std::popcount(candidates) == 1; }

GoldbergLabel GoldbergState::label() const {
  if (!resolved()) throw std::logic_error("Goldberg state is unresolved");
  return static_cast<GoldbergLabel>(std::countr_zero(candidates));
}

std::string GoldbergState::str() const {
  if (resolved()) return to_string(label());
  std::string s = "unresolved{";
  bool first = true;
  for (unsigned i = 0; i < 9; ++i) {
    if (!(candidates & (1u << i))) continue;
    if (!first) s += ',';
    s += to_string(static_cast<GoldbergLabel>(i));
    first = false;
  }
  return s + '}';
}

GoldbergState goldberg_classify(const OperatorParams& params, const SpaceIndex& space,
                                Complex lambda, double tol) {
  const PointData d = point_data(params, lambda);
  if (d.at_r) return GoldbergState::unresolved({GoldbergLabel::C1, GoldbergLabel::C2});
  const double ratio = ratio_from(params, d);
  if (ratio > 1.0 + tol) return GoldbergState::unresolved({GoldbergLabel::A1, GoldbergLabel::B1});
  if (space.is_l1()) return GoldbergState::exactly(GoldbergLabel::C2);
  if (std::abs(ratio - 1.0) <= tol) return GoldbergState::exactly(GoldbergLabel::B2);
  return GoldbergState::exactly(GoldbergLabel::C2);
}

SubdivisionFlags subdivision_flags(const OperatorParams& params, const SpaceIndex& space,
                                   Complex lambda, double tol) {
  const PointData d = point_data(params, lambda);
  const double ratio = ratio_from(params, d);
  const bool leq_one = !(ratio > 1.0 + tol);
  const bool lt_one = ratio < 1.0 - tol;

  SubdivisionFlags f{};
  f.in_delta = leq_one ? Tri::yes : Tri::no;
  if (space.is_l1()) {
    f.in_co = leq_one ? Tri::yes : Tri::no;
  } else {
    f.in_co = lt_one ? Tri::yes : Tri::no;
  }
  if (d.at_r) {
    f.in_ap = Tri::unknown;
  } else {
    f.in_ap = leq_one ? Tri::yes : Tri::no;
  }
  return f;
}

SpectralClassification fine_classify(const OperatorParams& params, const SpaceIndex& space,
                                     Complex lambda, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  const PointData d = point_data(params, lambda);
  SpectralClassification c;
  c.ratio = ratio_from(params, d);
  c.boundary_flag = std::isfinite(c.ratio) && std::abs(c.ratio - 1.0) <= tol;
  if (c.ratio > 1.0 + tol) {
    c.fine = FineClass::Resolvent;
  } else if (space.is_l1()) {
    c.fine = FineClass::Residual;  // sigma_c is empty on l_1
  } else {
    c.fine = c.boundary_flag ? FineClass::Continuous : FineClass::Residual;
  }
  c.in_spectrum = c.fine != FineClass::Resolvent;
  c.goldberg = goldberg_classify(params, space, lambda, tol);
  const SubdivisionFlags f = subdivision_flags(params, space, lambda, tol);
  c.in_ap = f.in_ap;
  c.in_delta = f.in_delta;
  c.in_co = f.in_co;
  return c;
}

bool adjoint_point_spectrum_contains(const OperatorParams& params, const SpaceIndex& space,
                                     Complex lambda) {
  const double ratio = membership_ratio(params, lambda);
  return space.is_l1() ? ratio <= 1.0 : ratio < 1.0;
}

}  // namespace bandspec
