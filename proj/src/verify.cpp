#include "bandspec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace bandspec {

namespace {

// Normalized band entries by column parity.
Complex band_d(const OperatorParams& p, int col) { return col % 2 == 1 ? p.r1 : p.r2; }
Complex band_s(const OperatorParams& p, int col) { return col % 2 == 1 ? p.s1 : p.s2; }
Complex band_t(const OperatorParams& p, int col) { return col % 2 == 1 ? p.t1 : p.t2; }

}  // namespace

std::vector<std::vector<Complex>> inverse_truncation(const OperatorParams& params, Complex lambda,
                                                     int n) {
  if (lambda == params.r1 || lambda == params.r2) {
    throw std::invalid_argument("lambda coincides with r1 or r2");
  }
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<std::vector<Complex>> inv(n, std::vector<Complex>(n, Complex{0, 0}));
  for (int j = 1; j <= n; ++j) {
    for (int i = j; i <= n; ++i) {
      Complex rhs = (i == j) ? Complex{1, 0} : Complex{0, 0};
      if (i - 1 >= j) rhs -= band_s(params, i - 1) * inv[i - 2][j - 1];
      if (i - 2 >= j) rhs -= band_t(params, i - 2) * inv[i - 3][j - 1];
      inv[i - 1][j - 1] = rhs / (band_d(params, i) - lambda);
    }
  }
  return inv;
}

const char* to_string(OracleOutcome outcome) {
  switch (outcome) {
    case OracleOutcome::InSpectrum: return "InSpectrum";
    case OracleOutcome::Resolvent: return "Resolvent";
    default: return "Inconclusive";
  }
}

OracleVerdict membership_oracle(const OperatorParams& params, const SpaceIndex& space,
                                Complex lambda, int n, double band) {
  if (lambda == params.r1 || lambda == params.r2) {
    throw std::invalid_argument("degenerate lambda: in the spectrum by definition");
  }
  if (n < 8 || n % 2 != 0) throw std::invalid_argument("n must be even and at least 8");
  if (!(band > 0.0)) throw std::invalid_argument("band must be positive");

  const Complex u = params.r1 - lambda, v = params.r2 - lambda;
  const int pairs = n / 2;
  Pair x = {1.0 / u, -params.s1 / (u * v)};
  double logscale = 0.0;
  std::vector<double> logabs;   // log |a_k| for the flattened column
  std::vector<double> logpair;  // log of the pair max-norms
  logabs.reserve(n);
  logpair.reserve(pairs);
  for (int k = 0; k < pairs; ++k) {
    if (k > 0) {
      const Complex odd = -(params.t1 * x[0] + params.s2 * x[1]) / u;
      const Complex even = -(params.t2 * x[1] + params.s1 * odd) / v;
      x = {odd, even};
    }
    const double norm = std::max(std::abs(x[0]), std::abs(x[1]));
    logabs.push_back(std::log(std::abs(x[0])) + logscale);
    logabs.push_back(std::log(std::abs(x[1])) + logscale);
    logpair.push_back(std::log(norm) + logscale);
    if (norm > 1e150 || norm < 1e-150) {  // keep the recurrence in range
      x = {x[0] / norm, x[1] / norm};
      logscale += std::log(norm);
    }
  }

  auto logsum = [&](int upto) {  // log of sum_{k <= upto} |a_k|^p
    double mx = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < upto; ++k) mx = std::max(mx, space.p * logabs[k]);
    double acc = 0.0;
    for (int k = 0; k < upto; ++k) acc += std::exp(space.p * logabs[k] - mx);
    return mx + std::log(acc);
  };
  const double excess = logsum(n) - logsum(n / 2);

  OracleVerdict verdict;
  verdict.lambda = lambda;
  verdict.analytic = in_spectrum(params, space, lambda);
  verdict.n_used = n;
  if (excess > std::log1p(band)) {
    verdict.numeric = OracleOutcome::InSpectrum;
  } else if (excess < std::log1p(band / 10.0)) {
    verdict.numeric = OracleOutcome::Resolvent;
  } else {
    verdict.numeric = OracleOutcome::Inconclusive;
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (int k = pairs / 2; k < pairs; ++k) {
    const double xk = static_cast<double>(k + 1);
    sx += xk;
    sy += logpair[k];
    sxx += xk * xk;
    sxy += xk * logpair[k];
    ++m;
  }
  verdict.growth_exponent = std::exp((m * sxy - sx * sy) / (m * sxx - sx * sx));
  return verdict;
}

int kernel_rank_check(const OperatorParams& params, Complex lambda, int n) {
  if (n < 6 || n % 2 != 0) throw std::invalid_argument("n must be even and at least 6");
  if (!(lambda == params.r1 || lambda == params.r2)) {
    throw std::invalid_argument("only r1 and r2 can carry eigenvectors");
  }
  // Rows 1..n+2 restricted to the first n coordinates: a kernel vector
  // here is a finitely supported eigenvector of the full operator.
  const int rows = n + 2;
  std::vector<std::vector<Complex>> M(rows, std::vector<Complex>(n, Complex{0, 0}));
  for (int row = 1; row <= rows; ++row) {
    for (int col = std::max(1, row - 2); col <= std::min(n, row); ++col) {
      Complex val;
      if (row == col) {
        val = band_d(params, col) - lambda;
      } else if (row - col == 1) {
        val = band_s(params, col);
      } else {
        val = band_t(params, col);
      }
      M[row - 1][col - 1] = val;
    }
  }
  double scale = 0.0;
  for (const auto& r : M) {
    for (auto z : r) scale = std::max(scale, std::abs(z));
  }
  const double tol = 1e-10 * scale;
  int rank = 0, lead = 0;
  for (int col = 0; col < n && lead < rows; ++col) {
    int piv = lead;
    for (int r = lead + 1; r < rows; ++r) {
      if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
    }
    if (std::abs(M[piv][col]) <= tol) continue;
    std::swap(M[piv], M[lead]);
    for (int r = lead + 1; r < rows; ++r) {
      const Complex f = M[r][col] / M[lead][col];
      if (f == Complex{0, 0}) continue;
      for (int c = col; c < n; ++c) M[r][c] -= f * M[lead][c];
    }
    ++rank;
    ++lead;
  }
  return n - rank;
}

double empirical_norm(const OperatorParams& params, const SpaceIndex& space, int n, int trials,
                      std::uint64_t seed) {
  if (n < 8) throw std::invalid_argument("n must be at least 8");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  std::vector<Complex> x(n, Complex{0, 0});
  double best = 0.0;
  for (int j = 0; j < n; ++j) {
    x.assign(n, Complex{0, 0});
    x[j] = {1, 0};
    const auto col = bandspec::apply(params, x);
    double acc = 0.0;
    for (auto z : col) acc += std::pow(std::abs(z), space.p);
    best = std::max(best, std::pow(acc, 1.0 / space.p));
  }
  if (space.is_l1()) return best;  // column sums are exact and attained

  auto lp = [&](const std::vector<Complex>& y) {
    double acc = 0.0;
    for (auto z : y) acc += std::pow(std::abs(z), space.p);
    return std::pow(acc, 1.0 / space.p);
  };
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    for (auto& z : x) z = {dist(rng), dist(rng)};
    best = std::max(best, lp(bandspec::apply(params, x)) / lp(x));
  }
  return best;
}

std::vector<OracleVerdict> oracle_sweep(const OperatorParams& params, const SpaceIndex& space,
                                        const std::vector<Complex>& lambdas, int n, double band) {
  for (auto lam : lambdas) {
    if (lam == params.r1 || lam == params.r2) {
      throw std::invalid_argument("sweep points must avoid r1 and r2");
    }
  }
  std::vector<OracleVerdict> out(lambdas.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(lambdas.size()); ++i) {
    out[i] = membership_oracle(params, space, lambdas[i], n, band);
  }
  return out;
}

std::vector<OracleVerdict> oracle_sweep_serial(const OperatorParams& params,
                                               const SpaceIndex& space,
                                               const std::vector<Complex>& lambdas, int n,
                                               double band) {
  std::vector<OracleVerdict> out;
  out.reserve(lambdas.size());
  for (auto lam : lambdas) out.push_back(membership_oracle(params, space, lam, n, band));
  return out;
}

void write_verdicts_jsonl(std::ostream& out, const std::vector<OracleVerdict>& verdicts) {
  for (const auto& v : verdicts) {
    nlohmann::json j{
        {"lambda", {{"re", v.lambda.real()}, {"im", v.lambda.imag()}}},
        {"analytic", v.analytic},
        {"numeric", to_string(v.numeric)},
        {"growth_exponent", v.growth_exponent},
        {"n_used", v.n_used},
    };
    out << j.dump() << '\n';
  }
}

}  // namespace bandspec
