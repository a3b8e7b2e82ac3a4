#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>

#include "bandspec/recurrence.hpp"
#include "support.hpp"

using namespace bandspec;
using testsup::close;
using testsup::delta_op;
using testsup::exam1;
using testsup::exam2;

namespace {

double pnorm(const Pair& x) { return std::max(std::abs(x[0]), std::abs(x[1])); }

// Re-runs the two-term update one step at a time and reports the worst
// mismatch; independent check that a sequence actually satisfies the
// recurrence it claims to solve.
double step_residual(const OperatorParams& p, Complex lam, Column which, const PairSequence& s) {
  const Complex u = p.r1 - lam, v = p.r2 - lam;
  const Complex ta = (which == Column::A) ? p.t1 : p.t2;
  const Complex tb = (which == Column::A) ? p.t2 : p.t1;
  const Complex sa = (which == Column::A) ? p.s2 : p.s1;
  const Complex sb = (which == Column::A) ? p.s1 : p.s2;
  const Complex da = (which == Column::A) ? u : v;
  const Complex db = (which == Column::A) ? v : u;
  double worst = 0.0;
  for (size_t k = 0; k + 1 < s.pairs.size(); ++k) {
    const Complex odd = -(ta * s.pairs[k][0] + sa * s.pairs[k][1]) / da;
    const Complex even = -(tb * s.pairs[k][1] + sb * odd) / db;
    const double scale = std::max(1.0, pnorm(s.pairs[k + 1]));
    worst = std::max(worst, std::abs(odd - s.pairs[k + 1][0]) / scale);
    worst = std::max(worst, std::abs(even - s.pairs[k + 1][1]) / scale);
  }
  return worst;
}

// Eigenvalues of a 2x2 matrix straight from trace and determinant.
std::array<Complex, 2> eig2(const CompanionMatrix& M) {
  const Complex tr = M.trace();
  const Complex d = principal_sqrt(tr * tr - 4.0 * M.det());
  return {(tr + d) / 2.0, (tr - d) / 2.0};
}

}  // namespace

TEST_CASE("companion matrices: pinned entries") {
  const auto p = exam1();
  const Complex l{0, 0};
  const Complex i{0, 1};

  const auto a1 = companion(p, l, CompanionKind::A1);
  CHECK(close(a1.m11, i));
  CHECK(close(a1.m12, {-1, 0}));
  CHECK(close(a1.m21, {-2, 0}));
  CHECK(close(a1.m22, -i));
  CHECK(close(a1.trace(), {0, 0}));
  CHECK(close(a1.det(), {-1, 0}));

  const auto a2 = companion(p, l, CompanionKind::A2);
  CHECK(close(a2.m11, i));
  CHECK(close(a2.m12, {0, 2}));
  CHECK(close(a2.m21, -i));
  CHECK(close(a2.m22, -i));
  CHECK(close(a2.trace(), a1.trace()));
  CHECK(close(a2.det(), a1.det()));

  const auto c = companion(p, l, CompanionKind::C);
  CHECK(close(c.m11, -i));
  CHECK(close(c.m12, {0, -2}));
  CHECK(close(c.m21, i));
  CHECK(close(c.m22, i));
  CHECK(close(c.det(), {-1, 0}));  // P / (t1 t2)

  // zero t: the a-column matrix loses its first column
  const auto d0 = companion(delta_op(), {3, 0}, CompanionKind::A1);
  CHECK(close(d0.m11, {0, 0}));
  CHECK(close(d0.m12, {0.5, 0}));
  CHECK(close(d0.m21, {0, 0}));
  CHECK(close(d0.m22, {0.25, 0}));
}

TEST_CASE("companion matrices: errors") {
  const auto p = exam1();
  CHECK_THROWS_AS(companion(p, p.r1, CompanionKind::A1), std::invalid_argument);
  CHECK_THROWS_AS(companion(p, p.r2, CompanionKind::C), std::invalid_argument);
  CHECK_THROWS_AS(companion(delta_op(), {3, 0}, CompanionKind::C), std::invalid_argument);
}

TEST_CASE("companion trace and determinant match the characteristic roots") {
  testsup::Rng rng(0xC0FFEE01);
  int done = 0;
  while (done < 40) {
    const auto p = rng.params(true);
    const Complex lam = rng.cplx(3.0);
    if (std::abs(lam - p.r1) < 0.05 || std::abs(lam - p.r2) < 0.05) continue;
    const auto roots = char_roots(p, lam);
    const auto a1 = companion(p, lam, CompanionKind::A1);
    const auto a2 = companion(p, lam, CompanionKind::A2);
    CHECK(close(a1.trace(), roots.alpha1 + roots.alpha2));
    CHECK(close(a1.det(), roots.alpha1 * roots.alpha2));
    CHECK(close(a2.trace(), a1.trace()));
    CHECK(close(a2.det(), a1.det()));
    ++done;
  }
}

TEST_CASE("inverse columns: pinned sequences") {
  // first-difference operator, resolvent point
  const auto d = inverse_columns(delta_op(), {3, 0}, Column::A, 2);
  CHECK(d.origin == PairOrigin::InverseA);
  REQUIRE(d.pairs.size() == 2);
  CHECK(close(d.pairs[0][0], {-0.5, 0}));
  CHECK(close(d.pairs[0][1], {-0.25, 0}));
  CHECK(close(d.pairs[1][0], {-0.125, 0}));
  CHECK(close(d.pairs[1][1], {-0.0625, 0}));

  const auto db = inverse_columns(delta_op(), {3, 0}, Column::B, 2);
  CHECK(db.origin == PairOrigin::InverseB);
  CHECK(close(db.pairs[0][0], {-0.5, 0}));
  CHECK(close(db.pairs[0][1], {-0.25, 0}));

  // triple-band example at lambda = 0; both columns are 4-periodic
  const auto a = inverse_columns(exam1(), {0, 0}, Column::A, 3);
  CHECK(close(a.pairs[0][0], {1, 0}));
  CHECK(close(a.pairs[0][1], {0, 2}));
  CHECK(close(a.pairs[1][0], {0, -1}));
  CHECK(close(a.pairs[1][1], {0, 0}));
  CHECK(close(a.pairs[2][0], {1, 0}));
  CHECK(close(a.pairs[2][1], {0, 2}));

  const auto b = inverse_columns(exam1(), {0, 0}, Column::B, 3);
  CHECK(close(b.pairs[0][0], {0, -1}));
  CHECK(close(b.pairs[0][1], {0, 1}));
  CHECK(close(b.pairs[1][0], {-1, 0}));
  CHECK(close(b.pairs[1][1], {0, 0}));
  CHECK(close(b.pairs[2][0], {0, -1}));
  CHECK(close(b.pairs[2][1], {0, 1}));
}

TEST_CASE("inverse columns: errors") {
  CHECK_THROWS_AS(inverse_columns(exam1(), {1, 0}, Column::A, 4), std::invalid_argument);
  CHECK_THROWS_AS(inverse_columns(exam1(), {0, 1}, Column::B, 4), std::invalid_argument);
  CHECK_THROWS_AS(inverse_columns(exam1(), {5, 0}, Column::A, 0), std::invalid_argument);
}

TEST_CASE("closed form: zero-t mode") {
  // second worked example, resolvent point
  const auto p = exam2();
  const Complex lam{5, 0};
  auto [sa, qa] = closed_form(p, lam, Column::A, 8);
  CHECK(sa.mode == SolutionMode::TZeroDegenerate);
  CHECK(sa.roots.alpha2 == Complex{0, 0});
  CHECK(close(sa.c1, {-1.5, 1.5}));  // (r2 - l) / (s1 s2)
  CHECK(sa.c2 == Complex{0, 0});
  CHECK(sa.v2[0] == Complex{1, 0});
  CHECK(sa.v2[1] == Complex{0, 0});

  auto [sb, qb] = closed_form(p, lam, Column::B, 8);
  CHECK(close(sb.c1, {-2, 3}));  // (r1 - l) / (s1 s2)

  // first-difference operator: alpha1 = 1/4, c1 = -2, v1 = (1, 1/2)
  auto [sd, qd] = closed_form(delta_op(), {3, 0}, Column::A, 8);
  CHECK(sd.mode == SolutionMode::TZeroDegenerate);
  CHECK(close(sd.roots.alpha1, {0.25, 0}));
  CHECK(close(sd.c1, {-2, 0}));
  CHECK(close(sd.v1[1], {0.5, 0}));

  CHECK(step_residual(p, lam, Column::A, qa) <= 1e-12);
  CHECK(step_residual(p, lam, Column::B, qb) <= 1e-12);
  CHECK(step_residual(delta_op(), {3, 0}, Column::A, qd) <= 1e-12);
}

TEST_CASE("closed form: distinct roots, pinned") {
  // lambda = 3 for the first example: alpha1 = 1/2, alpha2 = 1/10 - 3i/10
  auto [sol, seq] = closed_form(exam1(), {3, 0}, Column::A, 20);
  CHECK(sol.mode == SolutionMode::DistinctRoots);
  CHECK(close(sol.roots.alpha1, {0.5, 0}));
  CHECK(close(sol.roots.alpha2, {0.1, -0.3}));
  CHECK(std::abs(sol.c1) > 0.0);
  CHECK(std::abs(sol.c2) > 0.0);
  CHECK(step_residual(exam1(), {3, 0}, Column::A, seq) <= 1e-12);

  const auto fwd = inverse_columns(exam1(), {3, 0}, Column::A, 20);
  for (int k = 0; k < 20; ++k) {
    CHECK(std::abs(seq.pairs[k][0] - fwd.pairs[k][0]) <= 1e-12);
    CHECK(std::abs(seq.pairs[k][1] - fwd.pairs[k][1]) <= 1e-12);
  }
}

TEST_CASE("closed form: engineered double roots") {
  const auto points = testsup::jordan_points();
  REQUIRE(points.size() >= 5);
  for (const auto& jp : points) {
    CAPTURE(jp.lambda.real());
    CAPTURE(jp.lambda.imag());
    for (auto which : {Column::A, Column::B}) {
      auto [sol, seq] = closed_form(jp.params, jp.lambda, which, 50);
      REQUIRE(sol.mode == SolutionMode::Jordan);
      CHECK(close(sol.roots.alpha1, jp.alpha, 1e-14));
      CHECK(membership_ratio(jp.params, jp.lambda) == doctest::Approx(std::abs(jp.alpha) == 0.0
                                                                          ? 0.0
                                                                          : 1.0 / std::abs(jp.alpha))
                                                          .epsilon(1e-12));
      const auto fwd = inverse_columns(jp.params, jp.lambda, which, 50);
      for (int k = 0; k < 50; ++k) {
        const double scale = std::max(1.0, pnorm(fwd.pairs[k]));
        CHECK(std::abs(seq.pairs[k][0] - fwd.pairs[k][0]) <= 1e-9 * scale);
        CHECK(std::abs(seq.pairs[k][1] - fwd.pairs[k][1]) <= 1e-9 * scale);
      }
      CHECK(step_residual(jp.params, jp.lambda, which, seq) <= 1e-9);
    }
  }
}

TEST_CASE("closed form: double root of the first example") {
  // chi(1+i) cancels exactly; the double root is -i, on the unit circle
  const Complex star{1, 1};
  auto [sol, seq] = closed_form(exam1(), star, Column::A, 50);
  REQUIRE(sol.mode == SolutionMode::Jordan);
  CHECK(close(sol.roots.alpha1, {0, -1}, 1e-14));
  CHECK(membership_ratio(exam1(), star) == doctest::Approx(1.0).epsilon(1e-12));
  const auto fwd = inverse_columns(exam1(), star, Column::A, 50);
  for (int k = 0; k < 50; ++k) {
    const double scale = std::max(1.0, pnorm(fwd.pairs[k]));
    CHECK(std::abs(seq.pairs[k][0] - fwd.pairs[k][0]) <= 1e-9 * scale);
    CHECK(std::abs(seq.pairs[k][1] - fwd.pairs[k][1]) <= 1e-9 * scale);
  }
}

TEST_CASE("closed form: Jordan gauge shifts the representation, not the sequence") {
  const auto jp = testsup::engineered_jordan({1, 1}, {0, 0});
  auto [s0, q0] = closed_form(jp.params, jp.lambda, Column::A, 30);
  auto [s1, q1] = closed_form(jp.params, jp.lambda, Column::A, 30, Complex{0.7, -0.3});
  REQUIRE(s0.mode == SolutionMode::Jordan);
  CHECK(std::abs(s1.v2[0] - s0.v2[0]) + std::abs(s1.v2[1] - s0.v2[1]) > 1e-3);
  CHECK(close(s1.c2, s0.c2));  // coefficient of the k a^{k-1} term
  for (int k = 0; k < 30; ++k) {
    const double scale = std::max(1.0, pnorm(q0.pairs[k]));
    CHECK(std::abs(q1.pairs[k][0] - q0.pairs[k][0]) <= 1e-12 * scale);
    CHECK(std::abs(q1.pairs[k][1] - q0.pairs[k][1]) <= 1e-12 * scale);
  }
}

TEST_CASE("closed form reproduces the forward recurrence at random points") {
  testsup::Rng rng(0x52EC5EED);
  int done = 0, attempts = 0;
  while (done < 200 && attempts < 6000) {
    ++attempts;
    const auto p = rng.params(true);
    const Complex lam = rng.cplx(4.0);
    if (std::abs(lam - p.r1) < 0.05 || std::abs(lam - p.r2) < 0.05) continue;
    const auto roots = char_roots(p, lam);
    const double a1m = std::abs(roots.alpha1);
    if (!(a1m >= 0.05 && a1m <= 10.0)) continue;
    if (std::abs(roots.alpha2) < 0.005) continue;
    const double ratio = membership_ratio(p, lam);
    if (ratio > 0.95 && ratio < 1.05) continue;
    if (!roots.discriminant_zero &&
        std::abs(roots.alpha1 - roots.alpha2) < 0.02 * std::max(1.0, a1m)) {
      continue;
    }
    for (auto which : {Column::A, Column::B}) {
      const auto fwd = inverse_columns(p, lam, which, 50);
      auto [sol, seq] = closed_form(p, lam, which, 50);
      CHECK(close(seq.pairs[0][0], fwd.pairs[0][0]));
      CHECK(close(seq.pairs[0][1], fwd.pairs[0][1]));
      for (int k = 0; k < 50; ++k) {
        const double scale = std::max(1.0, pnorm(fwd.pairs[k]));
        REQUIRE(std::abs(seq.pairs[k][0] - fwd.pairs[k][0]) <= 1e-9 * scale);
        REQUIRE(std::abs(seq.pairs[k][1] - fwd.pairs[k][1]) <= 1e-9 * scale);
      }
      if (sol.mode == SolutionMode::DistinctRoots) {
        CHECK(std::abs(sol.c1) > 0.0);
        CHECK(std::abs(sol.c2) > 0.0);
      }
    }
    ++done;
  }
  CHECK(done == 200);
}

TEST_CASE("reciprocal spectra: C eigenvalues vs characteristic roots") {
  testsup::Rng rng(0xBEEF0002);
  int done = 0;
  while (done < 60) {
    const auto p = rng.params(true);
    const Complex lam = rng.cplx(3.0);
    if (std::abs(lam - p.r1) < 0.05 || std::abs(lam - p.r2) < 0.05) continue;
    const auto roots = char_roots(p, lam);
    if (roots.discriminant_zero) continue;
    if (std::abs(roots.alpha2) < 1e-3) continue;
    const auto ev = eig2(companion(p, lam, CompanionKind::C));
    const Complex b1 = 1.0 / roots.alpha1, b2 = 1.0 / roots.alpha2;
    auto err = [](Complex got, Complex want) {
      return std::abs(got - want) / std::max(1.0, std::abs(want));
    };
    const double straight = std::max(err(ev[0], b1), err(ev[1], b2));
    const double crossed = std::max(err(ev[0], b2), err(ev[1], b1));
    CHECK(std::min(straight, crossed) <= 1e-10);
    ++done;
  }
}

TEST_CASE("inverse columns: summable outside the spectrum, divergent inside") {
  testsup::Rng rng(0xD1C07031);
  int out_done = 0, in_done = 0, attempts = 0;
  while ((out_done < 25 || in_done < 25) && attempts < 20000) {
    ++attempts;
    const auto p = rng.params(true);
    const Complex lam = rng.cplx(4.0);
    if (std::abs(lam - p.r1) < 0.05 || std::abs(lam - p.r2) < 0.05) continue;
    const double ratio = membership_ratio(p, lam);
    for (auto which : {Column::A, Column::B}) {
      if (ratio >= 1.2 && ratio <= 10.0 && out_done < 25) {
        const auto seq = inverse_columns(p, lam, which, 200);
        double head = 0.0;
        for (int k = 0; k < 10; ++k) head = std::max(head, pnorm(seq.pairs[k]));
        CHECK(pnorm(seq.pairs.back()) <= 1e-8 * head);
        ++out_done;
      } else if (ratio >= 0.1 && ratio <= 0.9 && in_done < 25) {
        auto [sol, seq] = closed_form(p, lam, which, 1);
        if (std::abs(sol.c1) < 1e-6) continue;  // dominant branch unexcited
        const auto fwd = inverse_columns(p, lam, which, 200);
        double head = 0.0, tail = 0.0;
        for (int k = 0; k < 10; ++k) head += pnorm(fwd.pairs[k]);
        for (int k = 190; k < 200; ++k) tail += pnorm(fwd.pairs[k]);
        CHECK(tail >= 1e3 * head);
        ++in_done;
      }
    }
  }
  CHECK(out_done >= 25);
  CHECK(in_done >= 25);
}

TEST_CASE("decay rate") {
  // pure single-branch geometric: exact
  const auto d = inverse_columns(delta_op(), {3, 0}, Column::A, 40);
  CHECK(decay_rate(d) == doctest::Approx(0.25).epsilon(1e-9));

  // dominant branch 1/2 with a subdominant |alpha2| = sqrt(0.1)
  const auto a = inverse_columns(exam1(), {3, 0}, Column::A, 60);
  CHECK(decay_rate(a) == doctest::Approx(0.5).epsilon(0.005));

  // hand-built geometric sequence
  PairSequence geo{PairOrigin::InverseA, {}};
  Complex z{1, 0};
  for (int k = 0; k < 16; ++k) {
    z *= 0.5;
    geo.pairs.push_back({z, Complex{0, 0}});
  }
  CHECK(decay_rate(geo) == doctest::Approx(0.5).epsilon(1e-9));

  PairSequence tiny{PairOrigin::InverseA, {}};
  tiny.pairs.assign(7, Pair{Complex{1, 0}, Complex{0, 0}});
  CHECK_THROWS_AS(decay_rate(tiny), std::invalid_argument);

  PairSequence dead{PairOrigin::InverseA, {}};
  dead.pairs.assign(12, Pair{Complex{1, 0}, Complex{0, 0}});
  dead.pairs[9] = {Complex{0, 0}, Complex{0, 0}};
  CHECK_THROWS_AS(decay_rate(dead), std::domain_error);
}

TEST_CASE("adjoint eigenvector: pinned values") {
  const auto two = SpaceIndex::lp(2.0);

  const auto d = adjoint_eigenvector(delta_op(), two, {1.5, 0}, 4);
  CHECK(d.origin == PairOrigin::Adjoint);
  CHECK(close(d.pairs[0][0], {1, 0}));
  CHECK(close(d.pairs[0][1], {0.5, 0}));
  CHECK(close(d.pairs[1][0], {0.25, 0}));
  CHECK(close(d.pairs[1][1], {0.125, 0}));
  CHECK(decay_rate(adjoint_eigenvector(delta_op(), two, {1.5, 0}, 16)) ==
        doctest::Approx(0.25).epsilon(1e-9));

  // lambda at the diagonal values: exact finite vectors
  const auto p = exam1();
  const auto e1 = adjoint_eigenvector(p, two, p.r1, 3);
  CHECK(e1.pairs[0][0] == Complex{1, 0});
  CHECK(e1.pairs[0][1] == Complex{0, 0});
  CHECK(pnorm(e1.pairs[1]) == 0.0);
  const auto e2 = adjoint_eigenvector(p, two, p.r2, 3);
  CHECK(close(e2.pairs[0][1], {-0.5, 0.5}));  // -(r1 - r2)/s1
  CHECK(pnorm(e2.pairs[1]) == 0.0);
  CHECK(adjoint_residual(p, p.r1, e1) <= 1e-14);
  CHECK(adjoint_residual(p, p.r2, e2) <= 1e-14);
}

TEST_CASE("adjoint eigenvector: membership gate") {
  const auto two = SpaceIndex::lp(2.0);
  const auto one = SpaceIndex::lp(1.0);
  CHECK_THROWS_AS(adjoint_eigenvector(exam2(), two, {5, 0}, 8), std::domain_error);
  // ratio exactly 1: inside for the dual of l1 only
  CHECK_THROWS_AS(adjoint_eigenvector(exam1(), two, {0, 0}, 8), std::domain_error);
  const auto bd = adjoint_eigenvector(exam1(), one, {0, 0}, 8);
  CHECK(std::abs(pnorm(bd.pairs[7]) - pnorm(bd.pairs[0])) <= 1e-12);  // |beta| = 1
  CHECK_THROWS_AS(adjoint_eigenvector(exam1(), two, {0, 0}, 1), std::invalid_argument);
}

TEST_CASE("adjoint eigenvector: residual is tiny at random interior points") {
  testsup::Rng rng(0xAD301017);
  const auto two = SpaceIndex::lp(2.0);
  int done = 0;
  while (done < 50) {
    const auto p = rng.params(rng.real(0, 1) < 0.7);
    const Complex lam = rng.cplx(4.0);
    if (lam == p.r1 || lam == p.r2) continue;
    const double ratio = membership_ratio(p, lam);
    if (!(ratio <= 0.9)) continue;
    const auto x = adjoint_eigenvector(p, two, lam, 30);
    CHECK(adjoint_residual(p, lam, x) <= 1e-10);
    ++done;
  }
}

TEST_CASE("adjoint residual: basis vector and degenerate input") {
  const auto p = exam1();
  PairSequence e1{PairOrigin::Adjoint, {}};
  e1.pairs.assign(3, Pair{Complex{0, 0}, Complex{0, 0}});
  e1.pairs[0][0] = {1, 0};
  CHECK(adjoint_residual(p, p.r1, e1) == 0.0);
  CHECK(adjoint_residual(p, p.r1 + Complex{1, 0}, e1) == doctest::Approx(1.0));

  PairSequence zero{PairOrigin::Adjoint, {}};
  zero.pairs.assign(4, Pair{Complex{0, 0}, Complex{0, 0}});
  CHECK(adjoint_residual(p, {0.3, 0.3}, zero) == 0.0);
  PairSequence empty{PairOrigin::Adjoint, {}};
  CHECK_THROWS_AS(adjoint_residual(p, {0.3, 0.3}, empty), std::invalid_argument);
}
