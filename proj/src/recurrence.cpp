#include "bandspec/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bandspec {

namespace {

void require_nondegenerate(const OperatorParams& p, Complex lambda) {
  if (lambda == p.r1 || lambda == p.r2) {
    throw std::invalid_argument("lambda coincides with r1 or r2");
  }
}

Pair initial_pair(const OperatorParams& p, Complex lambda, Column which) {
  const Complex u = p.r1 - lambda, v = p.r2 - lambda, P = u * v;
  if (which == Column::A) return {1.0 / u, -p.s1 / P};
  return {1.0 / v, -p.s2 / P};
}

// Eigenvector (1, *) of a companion matrix for eigenvalue a; the upper
// right entry is -s/(r-l) and never vanishes for valid parameters.
Pair eigvec(const CompanionMatrix& M, Complex a) { return {Complex{1, 0}, (a - M.m11) / M.m12}; }

// Solve [col1 col2] c = rhs by Cramer's rule.
std::pair<Complex, Complex> solve2(Pair col1, Pair col2, Pair rhs) {
  const Complex det = col1[0] * col2[1] - col1[1] * col2[0];
  if (det == Complex{0, 0}) throw std::domain_error("degenerate 2x2 system");
  const Complex c1 = (rhs[0] * col2[1] - rhs[1] * col2[0]) / det;
  const Complex c2 = (col1[0] * rhs[1] - col1[1] * rhs[0]) / det;
  return {c1, c2};
}

double pair_norm(const Pair& x) { return std::max(std::abs(x[0]), std::abs(x[1])); }

}  // namespace

CompanionMatrix companion(const OperatorParams& p, Complex lambda, CompanionKind kind) {
  require_nondegenerate(p, lambda);
  const Complex u = p.r1 - lambda, v = p.r2 - lambda, P = u * v;
  const Complex ss = p.s1 * p.s2;
  switch (kind) {
    case CompanionKind::A1:
      return {-p.t1 / u, -p.s2 / u, p.s1 * p.t1 / P, -p.t2 / v + ss / P, kind};
    case CompanionKind::A2:
      return {-p.t2 / v, -p.s1 / v, p.s2 * p.t2 / P, -p.t1 / u + ss / P, kind};
    default: {
      if (p.t_zero()) throw std::invalid_argument("companion C requires t1, t2 nonzero");
      const Complex tt = p.t1 * p.t2;
      return {-u / p.t1, -p.s1 / p.t1, p.s2 * u / tt, -v / p.t2 + ss / tt, kind};
    }
  }
}

PairSequence inverse_columns(const OperatorParams& p, Complex lambda, Column which, int K) {
  require_nondegenerate(p, lambda);
  if (K < 1) throw std::invalid_argument("K must be positive");
  const Complex u = p.r1 - lambda, v = p.r2 - lambda;

  // The two interleaved update rules; Column B swaps the roles of the
  // odd and even band entries.
  const Complex ta = (which == Column::A) ? p.t1 : p.t2;
  const Complex tb = (which == Column::A) ? p.t2 : p.t1;
  const Complex sa = (which == Column::A) ? p.s2 : p.s1;
  const Complex sb = (which == Column::A) ? p.s1 : p.s2;
  const Complex da = (which == Column::A) ? u : v;
  const Complex db = (which == Column::A) ? v : u;

  PairSequence seq{which == Column::A ? PairOrigin::InverseA : PairOrigin::InverseB, {}};
  seq.pairs.reserve(K);
  Pair x = initial_pair(p, lambda, which);
  seq.pairs.push_back(x);
  for (int k = 1; k < K; ++k) {
    const Complex odd = -(ta * x[0] + sa * x[1]) / da;
    const Complex even = -(tb * x[1] + sb * odd) / db;
    x = {odd, even};
    seq.pairs.push_back(x);
  }
  return seq;
}

std::pair<RecurrenceSolution, PairSequence> closed_form(const OperatorParams& p, Complex lambda,
                                                        Column which, int K,
                                                        Complex jordan_gauge) {
  require_nondegenerate(p, lambda);
  if (K < 1) throw std::invalid_argument("K must be positive");
  const CompanionMatrix M =
      companion(p, lambda, which == Column::A ? CompanionKind::A1 : CompanionKind::A2);
  const Pair x1 = initial_pair(p, lambda, which);

  RecurrenceSolution sol;
  sol.roots = char_roots(p, lambda);
  PairSequence seq{which == Column::A ? PairOrigin::InverseA : PairOrigin::InverseB, {}};
  seq.pairs.reserve(K);

  if (p.t_zero()) {
    sol.mode = SolutionMode::TZeroDegenerate;
    const Complex a1 = sol.roots.alpha1;
    sol.v1 = eigvec(M, a1);
    sol.v2 = eigvec(M, Complex{0, 0});
    sol.c1 = x1[0] / a1;  // first component of v1 is 1
    sol.c2 = Complex{0, 0};
    for (int k = 1; k <= K; ++k) {
      const Complex w = sol.c1 * std::pow(a1, k);
      seq.pairs.push_back({w * sol.v1[0], w * sol.v1[1]});
    }
    return {sol, seq};
  }

  if (sol.roots.discriminant_zero) {
    sol.mode = SolutionMode::Jordan;
    // Exact double root of the pair-advance matrix.
    const Complex a = M.trace() / 2.0;
    const Pair h = eigvec(M, a);
    // Least-norm row solution of (M - aI)u = h, then remove the
    // h-component; any multiple of h may be added back (gauge).
    const Complex g11 = M.m11 - a, g12 = M.m12, g21 = M.m21, g22 = M.m22 - a;
    const double n1 = std::norm(g11) + std::norm(g12);
    const double n2 = std::norm(g21) + std::norm(g22);
    Pair u;
    if (n1 >= n2) {
      const Complex f = h[0] / n1;
      u = {std::conj(g11) * f, std::conj(g12) * f};
    } else {
      const Complex f = h[1] / n2;
      u = {std::conj(g21) * f, std::conj(g22) * f};
    }
    const Complex hh = std::norm(h[0]) + std::norm(h[1]);
    const Complex uh = u[0] * std::conj(h[0]) + u[1] * std::conj(h[1]);
    const Complex shift = jordan_gauge - uh / hh;
    u = {u[0] + shift * h[0], u[1] + shift * h[1]};

    // x1 = c1 h a + c2 (h + u a)
    auto [c1, c2] = solve2({h[0] * a, h[1] * a}, {h[0] + u[0] * a, h[1] + u[1] * a}, x1);
    sol.v1 = h;
    sol.v2 = u;
    sol.c1 = c1;
    sol.c2 = c2;
    for (int k = 1; k <= K; ++k) {
      const Complex ak = std::pow(a, k);
      const Complex akm1 = std::pow(a, k - 1) * static_cast<double>(k);
      seq.pairs.push_back({c1 * h[0] * ak + c2 * (h[0] * akm1 + u[0] * ak),
                           c1 * h[1] * ak + c2 * (h[1] * akm1 + u[1] * ak)});
    }
    return {sol, seq};
  }

  sol.mode = SolutionMode::DistinctRoots;
  const Complex a1 = sol.roots.alpha1, a2 = sol.roots.alpha2;
  sol.v1 = eigvec(M, a1);
  sol.v2 = eigvec(M, a2);
  auto [c1, c2] = solve2({sol.v1[0] * a1, sol.v1[1] * a1}, {sol.v2[0] * a2, sol.v2[1] * a2}, x1);
  sol.c1 = c1;
  sol.c2 = c2;
  for (int k = 1; k <= K; ++k) {
    const Complex w1 = c1 * std::pow(a1, k);
    const Complex w2 = c2 * std::pow(a2, k);
    seq.pairs.push_back({w1 * sol.v1[0] + w2 * sol.v2[0], w1 * sol.v1[1] + w2 * sol.v2[1]});
  }
  return {sol, seq};
}

double decay_rate(const PairSequence& seq) {
  const int K = static_cast<int>(seq.pairs.size());
  if (K < 8) throw std::invalid_argument("need at least 8 pairs");
  const int from = K / 2;  // 0-based start of the tail half
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (int i = from; i < K; ++i) {
    const double norm = pair_norm(seq.pairs[i]);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw std::domain_error("tail contains zero or non-finite pairs");
    }
    const double x = static_cast<double>(i + 1);  // pair index k
    const double y = std::log(norm);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return std::exp(slope);
}

PairSequence adjoint_eigenvector(const OperatorParams& p, const SpaceIndex& space, Complex lambda,
                                 int K) {
  if (K < 2) throw std::invalid_argument("K must be at least 2");
  if (!adjoint_point_spectrum_contains(p, space, lambda)) {
    throw std::domain_error("lambda is not in the adjoint point spectrum");
  }
  PairSequence seq{PairOrigin::Adjoint, {}};
  seq.pairs.assign(K, Pair{Complex{0, 0}, Complex{0, 0}});
  if (lambda == p.r1) {
    seq.pairs[0] = {Complex{1, 0}, Complex{0, 0}};
    return seq;
  }
  if (lambda == p.r2) {
    seq.pairs[0] = {Complex{1, 0}, -(p.r1 - p.r2) / p.s1};
    return seq;
  }
  const Complex beta = 1.0 / char_roots(p, lambda).alpha1;
  const Complex x2 = -((p.r1 - lambda) + beta * p.t1) / p.s1;
  Complex scale{1, 0};
  for (int k = 0; k < K; ++k) {
    seq.pairs[k] = {scale, scale * x2};
    scale *= beta;
  }
  return seq;
}

double adjoint_residual(const OperatorParams& p, Complex lambda, const PairSequence& x) {
  if (x.pairs.empty()) throw std::invalid_argument("empty sequence");
  const int len = 2 * static_cast<int>(x.pairs.size());
  auto at = [&x](int j) {  // 1-based component access
    return x.pairs[(j - 1) / 2][(j - 1) % 2];
  };
  double norm = 0.0;
  for (const auto& pr : x.pairs) norm = std::max(norm, pair_norm(pr));
  if (norm == 0.0) return 0.0;
  double worst = 0.0;
  for (int j = 1; j + 2 <= len; ++j) {
    const bool odd = (j % 2 == 1);
    const Complex d = odd ? p.r1 : p.r2;
    const Complex s = odd ? p.s1 : p.s2;
    const Complex t = odd ? p.t1 : p.t2;
    const Complex res = (d - lambda) * at(j) + s * at(j + 1) + t * at(j + 2);
    worst = std::max(worst, std::abs(res));
  }
  return worst / norm;
}

}  // namespace bandspec
