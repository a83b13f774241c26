#pragma once

// Single-threaded reference implementations of the parallel kernels. Kept
// deliberately plain; tests compare them against the OpenMP versions and the
// benchmark times both.

#include "nlv/biphoton.hpp"

namespace nlv::serial {

Field2D hg_field(ModeIndex idx, const BeamParams& beam, const Axis& axis_a, const Axis& axis_b);
Field2D lg_field(LGIndex idx, const BeamParams& beam, const Axis& axis_a, const Axis& axis_b);
Field2D dhg_field(ModeIndex idx, const BeamParams& beam, const Axis& axis_a, const Axis& axis_b);

Field2D fourier_transform_axis_b(const Field2D& field, double waist);

Decomposition decompose(const Field2D& field, const BeamParams& beam, int max_order);

double full_4d_crosscheck(const PumpSpec& pump, const CrystalSpec& crystal,
                          const Axis& q1, const Axis& q2);

} // namespace nlv::serial
