#include "bandspec/operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bandspec {

namespace {

// principal_sqrt(s*s) == s exactly when s already lies on the principal
// branch; test that directly instead of round-tripping through sqrt.
bool branch_ok(Complex s) {
  return s.real() > 0.0 || (s.real() == 0.0 && s.imag() >= 0.0);
}

}  // namespace

OperatorParams validate_params(Complex r1, Complex r2, Complex s1, Complex s2,
                               Complex t1, Complex t2) {
  for (Complex z : {r1, r2, s1, s2, t1, t2}) {
    if (!is_finite(z)) throw std::invalid_argument("band parameters must be finite");
  }
  if (s1 == Complex{} ) throw std::invalid_argument("s1 must be non-zero");
  if (s2 == Complex{} ) throw std::invalid_argument("s2 must be non-zero");
  const bool t1_zero = (t1 == Complex{});
  const bool t2_zero = (t2 == Complex{});
  if (t1_zero != t2_zero) {
    throw std::invalid_argument("t1 and t2 must be both zero or both non-zero");
  }

  OperatorParams p{r1, r2, s1, s2, t1, t2, false};
  const bool ok1 = branch_ok(s1);
  const bool ok2 = branch_ok(s2);
  if (!ok1 && !ok2) {
    // Negating the whole s-band is conjugation by diag(1,-1,1,-1,...),
    // which fixes the r- and t-bands, so every spectral set is unchanged.
    p.s1 = -s1;
    p.s2 = -s2;
    p.s_flipped = true;
  } else if (ok1 != ok2) {
    throw std::invalid_argument(
        "branch normalization would flip only one of s1, s2; negate both "
        "s-parameters (a sign similarity) or adjust them so that "
        "sqrt(s^2) == s holds for both");
  }
  return p;
}

SpaceIndex SpaceIndex::lp(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("p must satisfy 1 <= p < infinity");
  }
  return SpaceIndex{p, p > 1.0 ? p / (p - 1.0) : std::numeric_limits<double>::infinity()};
}

Complex entry(const OperatorParams& params, int row, int col) {
  if (row < 1 || col < 1) throw std::invalid_argument("indices are 1-based");
  const int d = row - col;
  const bool row_odd = (row % 2 == 1);
  switch (d) {
    case 0: return row_odd ? params.r1 : params.r2;
    case 1: return row_odd ? params.s2_effective() : params.s1_effective();
    case 2: return row_odd ? params.t1 : params.t2;
    default: return Complex{};
  }
}

Complex TruncatedOperator::entry(int row, int col) const {
  if (row < 1 || col < 1 || row > n || col > n) {
    throw std::invalid_argument("index out of range");
  }
  const int d = row - col;
  if (d == 0) return diag[row - 1];
  if (d == 1) return sub[row - 2];
  if (d == 2) return subsub[row - 3];
  return Complex{};
}

TruncatedOperator truncate(const OperatorParams& params, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  TruncatedOperator T;
  T.n = n;
  T.diag.resize(n);
  T.sub.resize(n > 1 ? n - 1 : 0);
  T.subsub.resize(n > 2 ? n - 2 : 0);
  for (int i = 1; i <= n; ++i) T.diag[i - 1] = entry(params, i, i);
  for (int i = 2; i <= n; ++i) T.sub[i - 2] = entry(params, i, i - 1);
  for (int i = 3; i <= n; ++i) T.subsub[i - 3] = entry(params, i, i - 2);
  return T;
}

std::vector<Complex> apply(const OperatorParams& params, std::span<const Complex> x) {
  if (x.empty()) return {};
  const int len = static_cast<int>(x.size());
  std::vector<Complex> y(len + 2);
  // Row n reads x_{n-2}, x_{n-1}, x_n with two virtual zeros in front.
  for (int row = 1; row <= len + 2; ++row) {
    Complex acc{};
    if (row <= len) acc += entry(params, row, row) * x[row - 1];
    if (row >= 2 && row - 1 <= len) acc += entry(params, row, row - 1) * x[row - 2];
    if (row >= 3 && row - 2 <= len) acc += entry(params, row, row - 2) * x[row - 3];
    y[row - 1] = acc;
  }
  return y;
}

NormBounds norm_bounds_lp(const OperatorParams& params, const SpaceIndex& space) {
  const double p = space.p;
  const double a1 = std::abs(params.r1), a2 = std::abs(params.r2);
  const double b1 = std::abs(params.s1), b2 = std::abs(params.s2);
  const double c1 = std::abs(params.t1), c2 = std::abs(params.t2);

  NormBounds nb;
  const double col_odd = std::pow(std::pow(a1, p) + std::pow(b1, p) + std::pow(c1, p), 1.0 / p);
  const double col_even = std::pow(std::pow(a2, p) + std::pow(b2, p) + std::pow(c2, p), 1.0 / p);
  nb.lower = std::max(col_odd, col_even);
  nb.upper = std::max(a1, a2) + std::max(b1, b2) + std::max(c1, c2);
  if (space.is_l1()) nb.exact = std::max(a1 + b1 + c1, a2 + b2 + c2);
  return nb;
}

}  // namespace bandspec
