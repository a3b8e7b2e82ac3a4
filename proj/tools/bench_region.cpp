// Times the parallel scan kernels against their serial reference
// implementations and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <vector>

#include "bandspec/presets.hpp"
#include "bandspec/region.hpp"
#include "bandspec/verify.hpp"

using namespace bandspec;

namespace {

template <typename F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s < best) best = s;
  }
  return best;
}

void report(const char* name, double serial_s, double parallel_s, bool same) {
  std::printf("%-28s serial %8.1f ms   parallel %8.1f ms   speedup %4.2fx   %s\n", name,
              serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s,
              same ? "outputs identical" : "OUTPUTS DIFFER");
}

}  // namespace

int main() {
  const auto space = SpaceIndex::lp(2);

  {
    const auto params = preset("paper-ex1");
    const Window w{-3.5, 3.5, -3.5, 3.5, 512, 512};
    RegionGrid gp, gs;
    const double ts = best_of(3, [&] { gs = scan_region_serial(params, space, w, 1e-9); });
    const double tp = best_of(3, [&] { gp = scan_region(params, space, w, 1e-9); });
    report("region scan 512x512", ts, tp, gp.codes == gs.codes && gp.ratios == gs.ratios);
  }

  {
    const auto params = preset("paper-ex2");
    const double b = norm_bounds_lp(params, space).upper;
    std::vector<Complex> lambdas;
    for (int iy = 0; iy < 101; ++iy)
      for (int ix = 0; ix < 101; ++ix) {
        const Complex lam{-b + 2.0 * b * ix / 100.0, -b + 2.0 * b * iy / 100.0};
        if (lam == params.r1 || lam == params.r2) continue;
        lambdas.push_back(lam);
      }
    std::vector<OracleVerdict> vp, vs;
    const double ts = best_of(3, [&] { vs = oracle_sweep_serial(params, space, lambdas, 2000); });
    const double tp = best_of(3, [&] { vp = oracle_sweep(params, space, lambdas, 2000); });
    bool same = vp.size() == vs.size();
    for (std::size_t i = 0; same && i < vp.size(); ++i)
      same = vp[i].numeric == vs[i].numeric && vp[i].analytic == vs[i].analytic &&
             vp[i].growth_exponent == vs[i].growth_exponent;
    report("oracle sweep 101x101 n=2000", ts, tp, same);
  }

  return 0;
}
