#pragma once

// Uniform grid axes and complex scalar fields sampled on them.

#include <complex>
#include <stdexcept>
#include <vector>

namespace nlv {

using cplx = std::complex<double>;

// Failure kinds the CLI maps to exit codes: ConfigError -> 2, IoError -> 3,
// anything else derived from std::exception -> 1.
struct ConfigError : std::runtime_error { using std::runtime_error::runtime_error; };
struct IoError : std::runtime_error { using std::runtime_error::runtime_error; };
struct GridError : std::runtime_error { using std::runtime_error::runtime_error; };
struct RepresentationError : std::runtime_error { using std::runtime_error::runtime_error; };
struct StateError : std::runtime_error { using std::runtime_error::runtime_error; };
struct SignalError : std::runtime_error { using std::runtime_error::runtime_error; };
struct VisibilityError : std::runtime_error { using std::runtime_error::runtime_error; };
struct ResourceError : std::runtime_error { using std::runtime_error::runtime_error; };
struct WindingError : std::runtime_error { using std::runtime_error::runtime_error; };

enum class AxisKind { position, wavevector };

// Uniformly sampled closed interval [lo, hi], at least two samples.
struct Axis {
  AxisKind kind = AxisKind::position;
  int samples = 0;
  double lo = 0.0;
  double hi = 0.0;

  double step() const { return (hi - lo) / (samples - 1); }
  double value(int i) const { return lo + step() * i; }
  bool congruent(const Axis& o) const {
    return kind == o.kind && samples == o.samples && lo == o.lo && hi == o.hi;
  }
};

// Symmetric axes centred on the origin.
Axis position_axis(double half_span, int samples);
Axis wavevector_axis(double half_span, int samples);

void validate_axis(const Axis& axis);

// Complex field on the tensor grid of two axes, row-major in axis_a.
struct Field2D {
  Axis axis_a;
  Axis axis_b;
  std::vector<cplx> values;

  Field2D() = default;
  Field2D(const Axis& a, const Axis& b);

  cplx& at(int ia, int ib) { return values[std::size_t(ia) * axis_b.samples + ib]; }
  const cplx& at(int ia, int ib) const { return values[std::size_t(ia) * axis_b.samples + ib]; }

  double cell_area() const { return axis_a.step() * axis_b.step(); }
  double norm() const;
  double peak_abs() const;
  void scale(cplx factor);
  // Rescales to unit L2 norm; throws GridError on an identically zero field.
  void normalize();
};

// Deterministic inner product <a, b> = sum conj(a) * b * cell_area.
cplx inner_product(const Field2D& a, const Field2D& b);

// Largest |value| together with its flat index.
std::pair<double, std::size_t> peak_abs_index(const Field2D& field);

Field2D transpose(const Field2D& field);

// Bilinear interpolation of the field at fractional axis coordinates.
cplx interpolate(const Field2D& field, double a, double b);

} // namespace nlv
