#include "diskflow/cutoff.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace diskflow {

double smooth_step(double t) {
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    const double a = std::exp(-1.0 / (1.0 - t));
    const double b = std::exp(-1.0 / t);
    return a / (a + b);
}

double smooth_step_deriv(double t) {
    // psi' = -a b (1/(1-t)^2 + 1/t^2) / (a+b)^2.  Near the endpoints one of
    // the exponentials underflows faster than the rational factor grows, so
    // the derivative is zero to double precision well before t reaches 0 or 1.
    if (t <= 1e-3 || t >= 1.0 - 1e-3) return 0.0;
    const double a = std::exp(-1.0 / (1.0 - t));
    const double b = std::exp(-1.0 / t);
    const double u = 1.0 / ((1.0 - t) * (1.0 - t)) + 1.0 / (t * t);
    const double s = a + b;
    return -(a / s) * (b / s) * u;
}

namespace {

// Tail antiderivative W(t) = integral_t^1 psi, tabulated on a uniform grid.
// Node values come from per-cell 5-point Gauss-Legendre accumulated from the
// right; evaluation is cubic Hermite with exact node derivatives W' = -psi.
class StepIntegralTable {
  public:
    static constexpr int kCells = 4096;

    StepIntegralTable() : w_(kCells + 1) {
        static constexpr double xs[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                         0.5384693101056831, 0.9061798459386640};
        static constexpr double ws[5] = {0.2369268850561891, 0.4786286704993665,
                                         0.5688888888888889, 0.4786286704993665,
                                         0.2369268850561891};
        const double h = 1.0 / kCells;
        w_[kCells] = 0.0;
        for (int i = kCells - 1; i >= 0; --i) {
            const double a = i * h, b = a + h;
            double cell = 0.0;
            for (int g = 0; g < 5; ++g)
                cell += ws[g] * smooth_step(0.5 * (a + b) + 0.5 * h * xs[g]);
            w_[i] = w_[i + 1] + 0.5 * h * cell;
        }
    }

    double eval(double t) const {
        if (t <= 0.0) return w_[0] - t;  // psi = 1 left of the grid
        if (t >= 1.0) return 0.0;
        const double x = t * kCells;
        int i = static_cast<int>(x);
        if (i >= kCells) i = kCells - 1;
        const double u = x - i;
        const double h = 1.0 / kCells;
        const double y0 = w_[i], y1 = w_[i + 1];
        const double d0 = -smooth_step(i * h) * h, d1 = -smooth_step((i + 1) * h) * h;
        const double u2 = u * u, u3 = u2 * u;
        const double v = (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * d0 +
                         (-2 * u3 + 3 * u2) * y1 + (u3 - u2) * d1;
        // W integrates a nonnegative function; the cubic can undershoot zero
        // in the far tail where the node values underflow.
        return v > 0.0 ? v : 0.0;
    }

    double half_area() const { return w_[0]; }  // integral_0^1 psi = 1/2

  private:
    std::vector<double> w_;
};

const StepIntegralTable& step_table() {
    static const StepIntegralTable table;
    return table;
}

}  // namespace

CutoffProfile::CutoffProfile(double delta) : delta_(delta) {
    if (!(delta > 0.0) || !(delta < 0.5))
        throw std::invalid_argument("CutoffProfile: delta must lie in (0, 1/2)");
}

double CutoffProfile::chi(double s) const {
    if (s >= 1.0) return 0.0;
    const double edge = 1.0 - 2.0 * delta_;
    if (s <= edge) return 1.0 - delta_ - s;
    return 2.0 * delta_ * step_table().eval((s - edge) / (2.0 * delta_));
}

double CutoffProfile::dchi(double s) const {
    if (s >= 1.0) return 0.0;
    const double edge = 1.0 - 2.0 * delta_;
    if (s <= edge) return -1.0;
    return -smooth_step((s - edge) / (2.0 * delta_));
}

double CutoffProfile::d2chi(double s) const {
    if (s >= 1.0) return 0.0;
    const double edge = 1.0 - 2.0 * delta_;
    if (s <= edge) return 0.0;
    return -smooth_step_deriv((s - edge) / (2.0 * delta_)) / (2.0 * delta_);
}

}  // namespace diskflow
