#pragma once

// Two-photon transverse state of collinear degenerate down-conversion with a
// structured pump: separable x/y factors on (photon 1, photon 2) grids, the
// distributed mode converter acting on photon 2 only, and a direct 4D
// cross-check of the factorized construction.

#include "nlv/mode_algebra.hpp"

namespace nlv {

struct PumpSpec {
  ModeIndex mode;
  double wavelength = 0.0;
  double waist = 0.0;
};

enum class PhaseMatchingModel { exact_sinc, gaussian_approx };

struct CrystalSpec {
  double length = 0.0;
  PhaseMatchingModel model = PhaseMatchingModel::gaussian_approx;
};

// Longitudinal phase-matching amplitude at transverse wavevector (qx, qy).
double phase_matching(double qx, double qy, const CrystalSpec& crystal,
                      double pump_wavelength);

// Width of the least-squares Gaussian fit to the exact sinc over the
// half-maximum core of its central lobe.
double phase_matching_sigma(const CrystalSpec& crystal, double pump_wavelength);

// Relative L2 mismatch between the fitted Gaussian and the exact sinc over
// the support where the sinc exceeds 1/2.
double phase_matching_fit_mismatch(const CrystalSpec& crystal, double pump_wavelength);

enum class Plane { x, y };

// Down-converted photons inherit twice the pump wavelength and sqrt(2) times
// the pump waist. Each factor lives on (axis photon 1, axis photon 2); the
// converter turns photon 2's axis into the conjugate position axis.
struct BiphotonState {
  Field2D factor_x;
  Field2D factor_y;
  bool converted = false;
  BeamParams down_params;
  PumpSpec pump;
  CrystalSpec crystal;
};

BiphotonState build_state(const PumpSpec& pump, const CrystalSpec& crystal,
                          const Axis& q1, const Axis& q2);

BiphotonState apply_nonlocal_converter(const BiphotonState& state);

// Joint detection probabilities |factor|^2 in one plane, normalized to unit
// sum over the grid.
Field2D coincidence_map(const BiphotonState& state, Plane plane);

// Largest pointwise residual between the factorized state and the directly
// evaluated pump-envelope times collection-envelope amplitude over the full
// 4D grid, after peak normalization of both routes.
double full_4d_crosscheck(const PumpSpec& pump, const CrystalSpec& crystal,
                          const Axis& q1, const Axis& q2);

} // namespace nlv
