#pragma once

// Hermite-Gaussian, Laguerre-Gaussian and diagonal Hermite-Gaussian
// transverse modes sampled on 2D grids, in position or wavevector
// representation.

#include "nlv/field.hpp"

namespace nlv {

struct ModeIndex {
  int n = 0;
  int m = 0;
  int order() const { return n + m; }
};

struct LGIndex {
  int p = 0;
  int l = 0;
  int order() const { return 2 * p + std::abs(l); }
};

// HG_nm carries orbital angular momentum l = n - m when combined on the
// diagonal basis; the radial index is the smaller of the two.
LGIndex lg_from_hg(ModeIndex idx);
ModeIndex hg_from_lg(LGIndex idx);

struct BeamParams {
  double wavelength = 0.0;
  double waist = 0.0;
  double gouy_phase = 0.0;
};

// Physicists' Hermite polynomial H_n and generalized Laguerre L_p^alpha.
double hermite_poly(int n, double x);
double laguerre_poly(int p, int alpha, double x);

// Waist of the matching Gaussian in the axis representation: w in position
// space, 2/w in wavevector space.
double representation_waist(AxisKind kind, double waist);

// Normalized 1D Hermite-Gaussian profile with waist w, no Gouy factor.
double hg_profile_1d(int n, double x, double waist);

// All mode fields carry the frozen Gouy factor exp(-i (order + 1) gouy_phase)
// and are rescaled to unit L2 norm on their grid.
Field2D hg_field(ModeIndex idx, const BeamParams& beam, const Axis& axis_a, const Axis& axis_b);
Field2D lg_field(LGIndex idx, const BeamParams& beam, const Axis& axis_a, const Axis& axis_b);
Field2D dhg_field(ModeIndex idx, const BeamParams& beam, const Axis& axis_a, const Axis& axis_b);

} // namespace nlv
