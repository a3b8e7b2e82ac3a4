#include "bandspec/region.hpp"

#include <cstddef>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "bandspec/types.hpp"

namespace bandspec {

void validate_window(const Window& w) {
  if (!(w.re_min < w.re_max) || !(w.im_min < w.im_max))
    throw std::invalid_argument("window extents must satisfy re_min < re_max, im_min < im_max");
  if (w.nx <= 0 || w.ny <= 0) throw std::invalid_argument("window resolution must be positive");
  if (static_cast<long long>(w.nx) * w.ny > 100000000LL)
    throw std::invalid_argument("window resolution exceeds 1e8 cells");
}

Complex cell_center(const Window& w, int ix, int iy) {
  const double dre = (w.re_max - w.re_min) / w.nx;
  const double dim = (w.im_max - w.im_min) / w.ny;
  return {w.re_min + (ix + 0.5) * dre, w.im_max - (iy + 0.5) * dim};
}

const char* to_string(RegionCode code) {
  switch (code) {
    case RegionCode::Resolvent: return "RESOLVENT";
    case RegionCode::Residual: return "RESIDUAL";
    case RegionCode::ContinuousBoundary: return "CONTINUOUS_BOUNDARY";
    case RegionCode::UnresolvedR1R2: return "UNRESOLVED_R1R2";
  }
  return "?";
}

unsigned char pgm_value(RegionCode code) {
  switch (code) {
    case RegionCode::Resolvent: return 255;
    case RegionCode::Residual: return 64;
    case RegionCode::ContinuousBoundary: return 128;
    case RegionCode::UnresolvedR1R2: return 0;
  }
  return 0;
}

namespace {

RegionCode classify_cell(const OperatorParams& params, const SpaceIndex& space, Complex lambda,
                         double tol) {
  const SpectralClassification c = fine_classify(params, space, lambda, tol);
  if (c.goldberg == GoldbergState::unresolved({GoldbergLabel::C1, GoldbergLabel::C2}))
    return RegionCode::UnresolvedR1R2;
  switch (c.fine) {
    case FineClass::Resolvent: return RegionCode::Resolvent;
    case FineClass::Residual: return RegionCode::Residual;
    case FineClass::Continuous: return RegionCode::ContinuousBoundary;
  }
  return RegionCode::UnresolvedR1R2;
}

RegionGrid prepare_grid(const OperatorParams& params, const SpaceIndex& space, const Window& w,
                        double tol) {
  validate_window(w);
  RegionGrid grid;
  grid.window = w;
  grid.params = params;
  grid.p = space.p;
  grid.tol = tol;
  grid.tool = kToolVersion;
  grid.codes.resize(static_cast<std::size_t>(w.nx) * w.ny);
  grid.ratios.resize(grid.codes.size());
  return grid;
}

}  // namespace

RegionGrid scan_region(const OperatorParams& params, const SpaceIndex& space, const Window& w,
                       double tol) {
  RegionGrid grid = prepare_grid(params, space, w, tol);
  const std::ptrdiff_t cells = static_cast<std::ptrdiff_t>(grid.codes.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < cells; ++i) {
    const int iy = static_cast<int>(i / w.nx);
    const int ix = static_cast<int>(i % w.nx);
    const Complex lambda = cell_center(w, ix, iy);
    grid.codes[i] = classify_cell(params, space, lambda, tol);
    grid.ratios[i] = membership_ratio(params, lambda);
  }
  return grid;
}

RegionGrid scan_region_serial(const OperatorParams& params, const SpaceIndex& space,
                              const Window& w, double tol) {
  RegionGrid grid = prepare_grid(params, space, w, tol);
  std::size_t i = 0;
  for (int iy = 0; iy < w.ny; ++iy)
    for (int ix = 0; ix < w.nx; ++ix, ++i) {
      const Complex lambda = cell_center(w, ix, iy);
      grid.codes[i] = classify_cell(params, space, lambda, tol);
      grid.ratios[i] = membership_ratio(params, lambda);
    }
  return grid;
}

namespace {

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string emit_csv(const RegionGrid& g) {
  std::string out = "re,im,code,ratio\n";
  std::size_t i = 0;
  for (int iy = 0; iy < g.window.ny; ++iy)
    for (int ix = 0; ix < g.window.nx; ++ix, ++i) {
      const Complex z = cell_center(g.window, ix, iy);
      out += fmt_double(z.real());
      out += ',';
      out += fmt_double(z.imag());
      out += ',';
      out += to_string(g.codes[i]);
      out += ',';
      out += fmt_double(g.ratios[i]);
      out += '\n';
    }
  return out;
}

std::string emit_json(const RegionGrid& g) {
  nlohmann::json meta;
  meta["params"] = {{"r1", {g.params.r1.real(), g.params.r1.imag()}},
                    {"r2", {g.params.r2.real(), g.params.r2.imag()}},
                    {"s1", {g.params.s1_effective().real(), g.params.s1_effective().imag()}},
                    {"s2", {g.params.s2_effective().real(), g.params.s2_effective().imag()}},
                    {"t1", {g.params.t1.real(), g.params.t1.imag()}},
                    {"t2", {g.params.t2.real(), g.params.t2.imag()}}};
  meta["p"] = g.p;
  meta["tol"] = g.tol;
  meta["tool"] = g.tool;
  meta["window"] = {{"re_min", g.window.re_min}, {"re_max", g.window.re_max},
                    {"im_min", g.window.im_min}, {"im_max", g.window.im_max},
                    {"nx", g.window.nx},         {"ny", g.window.ny}};
  nlohmann::json codes = nlohmann::json::array();
  for (const RegionCode c : g.codes) codes.push_back(to_string(c));
  nlohmann::json doc;
  doc["meta"] = meta;
  doc["codes"] = std::move(codes);
  return doc.dump();
}

std::string emit_pgm(const RegionGrid& g) {
  std::ostringstream header;
  header << "P5\n" << g.window.nx << " " << g.window.ny << "\n255\n";
  std::string out = header.str();
  out.reserve(out.size() + g.codes.size());
  for (const RegionCode c : g.codes) out.push_back(static_cast<char>(pgm_value(c)));
  return out;
}

}  // namespace

std::string emit(const RegionGrid& grid, EmitFormat format) {
  if (grid.codes.size() != static_cast<std::size_t>(grid.window.nx) * grid.window.ny ||
      grid.ratios.size() != grid.codes.size())
    throw std::invalid_argument("grid storage does not match its window resolution");
  switch (format) {
    case EmitFormat::Csv: return emit_csv(grid);
    case EmitFormat::Json: return emit_json(grid);
    case EmitFormat::Pgm: return emit_pgm(grid);
  }
  throw std::invalid_argument("unknown emit format");
}

}  // namespace bandspec
