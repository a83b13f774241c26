#pragma once

// Exact expansion algebra between the HG, diagonal-HG and LG families, the
// numerical decomposition of sampled fields, and the unitary Fourier
// transform with waist-matched output grids.

#include <map>

#include "nlv/modes.hpp"

namespace nlv {

// Coefficients over the fixed-order HG ladder; entry j multiplies HG_{N-j,j}.
struct ExpansionCoeffs {
  std::vector<cplx> coeffs;
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  double squared_norm() const;
};

// Expansion weight of HG_{N-j,j} in the diagonal mode of index (n, m),
// N = n + m. Exact rational-surd arithmetic, unit-norm rows.
double b_coeff(int n, int m, int j);

ExpansionCoeffs dhg_expansion(ModeIndex idx);

// The LG expansion differs from the diagonal one by the ladder phases i^j.
ExpansionCoeffs lg_expansion(ModeIndex idx);
ExpansionCoeffs mode_converter_phases(const ExpansionCoeffs& diag);

struct Decomposition {
  std::map<std::pair<int, int>, cplx> coeffs;
  double residual = 0.0;
};

// Overlap coefficients of the field against the HG basis of the given beam,
// all orders n + m <= max_order; residual is the norm of the remainder.
Decomposition decompose(const Field2D& field, const BeamParams& beam, int max_order);

// Axis carrying the conjugate variable, sample-matched so the transform of
// a waist-w mode lands exactly on the grid q_i = 2 x_i / w^2 (and back).
Axis conjugate_axis(const Axis& axis, double waist);

std::vector<cplx> fourier_transform_1d(const std::vector<cplx>& in, const Axis& in_axis,
                                       const Axis& out_axis);

// Unitary transform with kernel exp(+i q x) / sqrt(2 pi) along both axes,
// or along axis_b only. HG_n maps to i^n HG_n on the conjugate grid.
Field2D fourier_transform(const Field2D& field, double waist);
Field2D fourier_transform_axis_b(const Field2D& field, double waist);

} // namespace nlv
