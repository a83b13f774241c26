#pragma once

// Vortex witnesses: topological winding number, radial intensity profile,
// and the conditional double-slit interference experiment with fringe-shift
// extraction.

#include "nlv/biphoton.hpp"

namespace nlv {

struct WindingResult {
  int charge = 0;
  double residual = 0.0;
};

// Accumulated phase of the field around the origin-centred ellipse with the
// given semi-axes, in units of 2 pi. Throws SignalError when the loop runs
// through near-zero amplitude and WindingError when the accumulated phase is
// not close to an integer multiple of 2 pi.
WindingResult winding_number(const Field2D& field, double radius_a, double radius_b);
WindingResult winding_number(const Field2D& field, double radius);

struct RadialBin {
  double radius = 0.0;
  double mean_value = 0.0;
};

// Azimuthal average of |field| in equal-width radius bins, after scaling the
// axes by scale_a, scale_b (so mixed-representation planes can be made
// isotropic). Covers radii up to the largest fully enclosed circle.
std::vector<RadialBin> radial_profile(const Field2D& field, int bins,
                                      double scale_a = 1.0, double scale_b = 1.0);

struct SlitSpec {
  double separation = 0.0;
  double width = 0.0;
  Plane orientation = Plane::x;
};

struct FringeScan {
  std::vector<double> position;
  std::vector<double> counts;
  double detector2 = 0.0;
};

// Far-field fringe pattern of photon 1 behind a double slit, conditioned on
// detecting photon 2 at the given transverse position. The slit plane is the
// waist-matched position image of photon 1's axis; detection is at distance
// 1 m behind the slits.
FringeScan double_slit_fringes(const BiphotonState& state, const SlitSpec& slits,
                               double detector2, int scan_samples = 481);

struct FringeFit {
  double amplitude = 0.0;
  double envelope_rate = 0.0;
  double visibility = 0.0;
  double wavenumber = 0.0;
  double phase = 0.0;
};

// Least-squares fit of A sinc^2(g x) (1 + V cos(k x + phi)) to one scan.
FringeFit fit_fringe_model(const FringeScan& scan);

// Fitted phase difference phi_a - phi_b wrapped to (-pi, pi]. Throws
// VisibilityError if either scan has visibility below 0.1 and GridError if
// the scans do not share the same detector-1 axis.
double fringe_shift(const FringeScan& a, const FringeScan& b);

} // namespace nlv
