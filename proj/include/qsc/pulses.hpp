// Zero-area control pulse families, the Bessel-zero amplitude condition,
// grid sampling with c_max, and the flat-text pulse serialization.
#pragma once

#include <string>
#include <vector>

namespace qsc {

enum class PulseFamily { None, IdealSine, PiecewiseSine, FourierCombo };

// c(t) families over [0, t_total], all built on the segment grid
// dt = t_total/N with base angular frequency w = 2*pi/dt:
//   None:          c = 0
//   IdealSine:     c = (I / gap(t)) sin(w t), gap the closed-form level gap
//   PiecewiseSine: c = I_k sin(w t) on segment k
//   FourierCombo:  c = sum_i I_i sin((i+1) w t)
struct PulseSpec {
    PulseFamily family = PulseFamily::None;
    int segments = 5;                  // N
    double base_amplitude = 0.0;       // IdealSine amplitude I
    std::vector<double> intensities;   // PiecewiseSine (N values) / FourierCombo (M values)

    static PulseSpec none();
    static PulseSpec ideal_sine(int segments, double amplitude);
    static PulseSpec piecewise_sine(std::vector<double> intensities);
    static PulseSpec fourier_combo(std::vector<double> intensities, int base_segments);
};

void validate_pulse(const PulseSpec& p);
bool operator==(const PulseSpec& a, const PulseSpec& b);

// zeroth-order Bessel function of the first kind, power series
double bessel_j0(double x);

// first positive zero of J0, bisected on [2, 3] to 1e-12
double bessel_j0_first_root();

// amplitude satisfying J0(I*tau/pi) = 0 for the half pulse period
// tau = t_total/(2N)
double ideal_amplitude(int segments, double t_total);

double eval_pulse(const PulseSpec& p, double t, double t_total);

struct ControlGrid {
    std::vector<double> values;
    double c_max = 0.0;  // max |c| over the grid
};

ControlGrid control_grid(const PulseSpec& p, const std::vector<double>& grid, double t_total);

// max over pulse periods of |integral of c dt| (trapezoidal), each period
// sampled with `samples_per_period` intervals
double zero_area_residual(const PulseSpec& p, double t_total, int samples_per_period = 2000);

// canonical flat text, e.g. "family=piecewise; N=5; I=25.185,25.185,..."
std::string format_pulse(const PulseSpec& p);
PulseSpec parse_pulse(const std::string& text);

}  // namespace qsc
