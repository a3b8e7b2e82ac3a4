#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bandspec/spectrum.hpp"

namespace bandspec {

struct Window {
  double re_min = 0, re_max = 0, im_min = 0, im_max = 0;
  int nx = 0, ny = 0;
};

/// Throws unless re_min < re_max, im_min < im_max, nx, ny > 0 and
/// nx * ny <= 1e8.
void validate_window(const Window& w);

/// Center of cell (ix, iy); iy counts rows from the top (im_max side),
/// matching the emitted raster order.
Complex cell_center(const Window& w, int ix, int iy);

enum class RegionCode : std::uint8_t { Resolvent, Residual, ContinuousBoundary, UnresolvedR1R2 };

const char* to_string(RegionCode code);
unsigned char pgm_value(RegionCode code);  // 255 / 64 / 128 / 0

struct RegionGrid {
  Window window;
  OperatorParams params;
  double p = 2.0;
  double tol = 1e-9;
  std::string tool;
  std::vector<RegionCode> codes;  // row-major, top row first
  std::vector<double> ratios;
};

/// Classify every cell center.  Deterministic: the parallel scan and
/// its serial reference produce identical grids.
RegionGrid scan_region(const OperatorParams& params, const SpaceIndex& space, const Window& w,
                       double tol);
RegionGrid scan_region_serial(const OperatorParams& params, const SpaceIndex& space,
                              const Window& w, double tol);

enum class EmitFormat { Csv, Json, Pgm };

/// csv: `re,im,code,ratio` rows in storage order; json: meta object
/// plus the flat code array; pgm: binary P5, maxval 255, one byte per
/// cell, rows top-to-bottom from im_max to im_min.
std::string emit(const RegionGrid& grid, EmitFormat format);

}  // namespace bandspec
