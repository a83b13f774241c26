// Times the OpenMP kernels against their serial reference implementations.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#include "nlv/serial_ref.hpp"

namespace {

volatile double sink = 0.0;

double time_ms(const std::function<double()>& work, int reps) {
  std::vector<double> runs;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    sink = work();
    const auto stop = std::chrono::steady_clock::now();
    runs.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::sort(runs.begin(), runs.end());
  return runs[runs.size() / 2];
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-24s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

} // namespace

int main() {
  using namespace nlv;
  const BeamParams beam{810e-9, 283e-6, 0.0};
  const PumpSpec pump{{2, 1}, 405e-9, 200e-6};
  const CrystalSpec crystal{2e-3, PhaseMatchingModel::gaussian_approx};
  const double wc = std::sqrt(2.0) * pump.waist;

  std::printf("%-24s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    const Axis pos = position_axis(5.0 * beam.waist, 769);
    report("diagonal mode fill",
           time_ms([&] { return serial::dhg_field({3, 2}, beam, pos, pos).peak_abs(); }, 3),
           time_ms([&] { return dhg_field({3, 2}, beam, pos, pos).peak_abs(); }, 3));
  }
  {
    const Axis q = wavevector_axis(10.0 / wc, 385);
    const BiphotonState state = build_state(pump, crystal, q, q);
    report("photon-2 transform",
           time_ms([&] {
             return serial::fourier_transform_axis_b(state.factor_x, wc).peak_abs();
           }, 3),
           time_ms([&] {
             return fourier_transform_axis_b(state.factor_x, wc).peak_abs();
           }, 3));
  }
  {
    const Axis pos = position_axis(5.0 * beam.waist, 385);
    const Field2D probe = dhg_field({2, 1}, beam, pos, pos);
    report("mode decomposition",
           time_ms([&] { return serial::decompose(probe, beam, 4).residual; }, 3),
           time_ms([&] { return decompose(probe, beam, 4).residual; }, 3));
  }
  {
    const Axis q = wavevector_axis(9.0 / wc, 20);
    report("direct 4d residual",
           time_ms([&] { return serial::full_4d_crosscheck(pump, crystal, q, q); }, 3),
           time_ms([&] { return full_4d_crosscheck(pump, crystal, q, q); }, 3));
  }
  return 0;
}
