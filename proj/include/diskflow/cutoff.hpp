#pragma once

// Smooth convex cutoff profile chi_delta on [0, infinity), built from the
// standard smooth step
//
//   psi(t) = e^{-1/(1-t)} / (e^{-1/(1-t)} + e^{-1/t}),  psi = 1 for t <= 0,
//   psi = 0 for t >= 1, strictly decreasing in between,
//
// by prescribing the slope chi'(s) = -psi((s - (1 - 2 delta)) / (2 delta))
// and integrating from the right, chi(s) = integral_s^inf psi(...).
// Consequences used throughout:
//
//   chi(s) = 1 - delta - s          on [0, 1 - 2 delta]   (affine plateau)
//   chi(s) = 0                      for s >= 1            (compact support)
//   -1 <= chi' <= 0,  chi'' >= 0                          (convexity)
//   max(1 - delta - s, 0) <= chi(s) <= max((1-delta)(1-s), 0)
//   0 <= chi - s chi' <= 1 - delta, equal to 1 - delta on the plateau
//   -(1 - delta) chi' <= chi - s chi' <= -chi'
//
// The antiderivative of psi is precomputed once into a dense table with
// Hermite interpolation (node derivatives are -psi exactly); the table is
// shared by every delta since only the argument rescales.

namespace diskflow {

double smooth_step(double t);        // psi
double smooth_step_deriv(double t);  // psi'

class CutoffProfile {
  public:
    // Requires 0 < delta < 1/2; throws std::invalid_argument otherwise.
    explicit CutoffProfile(double delta);

    double delta() const { return delta_; }
    double chi(double s) const;
    double dchi(double s) const;
    double d2chi(double s) const;

    // chi(s) - s * chi'(s), the combination entering action values.
    double chi_minus_s_dchi(double s) const { return chi(s) - s * dchi(s); }

  private:
    double delta_;
};

}  // namespace diskflow
