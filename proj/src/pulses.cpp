#include "qsc/pulses.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsc {

namespace {

constexpr double kPi = std::numbers::pi;

void check_time(double t, double t_total) {
    const double slack = 1e-12 * t_total;
    if (!(t >= -slack && t <= t_total + slack)) {
        throw std::invalid_argument("pulse time " + std::to_string(t) + " outside [0, " + std::to_string(t_total) + "]");
    }
}

// closed-form gap of the linear qutrit drive (omega0 = 1 units)
double drive_gap(double t, double t_total) {
    const double T = t_total;
    return std::sqrt(T * T - 2.0 * T * t + 2.0 * t * t) / T;
}

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw std::invalid_argument("bad numeric value '" + s + "'");
    }
    return v;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

}  // namespace

PulseSpec PulseSpec::none() { return PulseSpec{}; }

PulseSpec PulseSpec::ideal_sine(int segments, double amplitude) {
    PulseSpec p;
    p.family = PulseFamily::IdealSine;
    p.segments = segments;
    p.base_amplitude = amplitude;
    validate_pulse(p);
    return p;
}

PulseSpec PulseSpec::piecewise_sine(std::vector<double> intensities) {
    PulseSpec p;
    p.family = PulseFamily::PiecewiseSine;
    p.segments = static_cast<int>(intensities.size());
    p.intensities = std::move(intensities);
    validate_pulse(p);
    return p;
}

PulseSpec PulseSpec::fourier_combo(std::vector<double> intensities, int base_segments) {
    PulseSpec p;
    p.family = PulseFamily::FourierCombo;
    p.segments = base_segments;
    p.intensities = std::move(intensities);
    validate_pulse(p);
    return p;
}

void validate_pulse(const PulseSpec& p) {
    if (p.segments < 1) throw std::invalid_argument("pulse: segment count must be >= 1");
    for (double v : p.intensities)
        if (!std::isfinite(v)) throw std::invalid_argument("pulse: non-finite intensity");
    switch (p.family) {
        case PulseFamily::None:
            break;
        case PulseFamily::IdealSine:
            if (!std::isfinite(p.base_amplitude)) throw std::invalid_argument("pulse: non-finite amplitude");
            break;
        case PulseFamily::PiecewiseSine:
            if (static_cast<int>(p.intensities.size()) != p.segments) {
                throw std::invalid_argument("pulse: piecewise needs exactly N intensities");
            }
            break;
        case PulseFamily::FourierCombo:
            if (p.intensities.empty()) throw std::invalid_argument("pulse: Fourier combination needs >= 1 component");
            break;
    }
}

bool operator==(const PulseSpec& a, const PulseSpec& b) {
    return a.family == b.family && a.segments == b.segments && a.base_amplitude == b.base_amplitude &&
           a.intensities == b.intensities;
}

double bessel_j0(double x) {
    // alternating series sum_k (-1)^k (x^2/4)^k / (k!)^2; ample for |x| <= 9
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 40; ++k) {
        term *= -q / (static_cast<double>(k) * k);
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

double bessel_j0_first_root() {
    double lo = 2.0, hi = 3.0;
    double flo = bessel_j0(lo);
    for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = bessel_j0(mid);
        if ((flo <= 0.0) == (fm <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double ideal_amplitude(int segments, double t_total) {
    if (segments < 1) throw std::invalid_argument("ideal_amplitude: N must be >= 1");
    if (!(t_total > 0.0)) throw std::invalid_argument("ideal_amplitude: t_total must be > 0");
    const double tau = t_total / (2.0 * segments);
    return bessel_j0_first_root() * kPi / tau;
}

double eval_pulse(const PulseSpec& p, double t, double t_total) {
    validate_pulse(p);
    check_time(t, t_total);
    if (p.family == PulseFamily::None) return 0.0;

    const double dt = t_total / p.segments;
    const double w = 2.0 * kPi / dt;
    switch (p.family) {
        case PulseFamily::IdealSine:
            return p.base_amplitude / drive_gap(t, t_total) * std::sin(w * t);
        case PulseFamily::PiecewiseSine: {
            const int k = std::min(static_cast<int>(t / dt), p.segments - 1);
            return p.intensities[static_cast<size_t>(k)] * std::sin(w * t);
        }
        case PulseFamily::FourierCombo: {
            double c = 0.0;
            for (size_t i = 0; i < p.intensities.size(); ++i) {
                c += p.intensities[i] * std::sin((static_cast<double>(i) + 1.0) * w * t);
            }
            return c;
        }
        default:
            return 0.0;
    }
}

ControlGrid control_grid(const PulseSpec& p, const std::vector<double>& grid, double t_total) {
    ControlGrid g;
    g.values.reserve(grid.size());
    for (double t : grid) {
        const double c = eval_pulse(p, t, t_total);
        g.values.push_back(c);
        g.c_max = std::max(g.c_max, std::abs(c));
    }
    return g;
}

double zero_area_residual(const PulseSpec& p, double t_total, int samples_per_period) {
    validate_pulse(p);
    if (p.family == PulseFamily::None) return 0.0;
    if (samples_per_period < 2) throw std::invalid_argument("zero_area_residual: need >= 2 samples per period");

    const int n_periods = p.segments;
    const double dt = t_total / n_periods;
    double worst = 0.0;
    for (int k = 0; k < n_periods; ++k) {
        const double t0 = k * dt;
        double acc = 0.0;
        double prev = eval_pulse(p, t0, t_total);
        for (int j = 1; j <= samples_per_period; ++j) {
            const double t = t0 + dt * j / samples_per_period;
            const double cur = eval_pulse(p, std::min(t, t_total), t_total);
            acc += 0.5 * (prev + cur);
            prev = cur;
        }
        worst = std::max(worst, std::abs(acc * dt / samples_per_period));
    }
    return worst;
}

std::string format_pulse(const PulseSpec& p) {
    validate_pulse(p);
    switch (p.family) {
        case PulseFamily::None:
            return "family=none";
        case PulseFamily::IdealSine:
            return "family=ideal; N=" + std::to_string(p.segments) + "; I=" + format_double(p.base_amplitude);
        case PulseFamily::PiecewiseSine:
        case PulseFamily::FourierCombo: {
            std::string s = (p.family == PulseFamily::PiecewiseSine) ? "family=piecewise" : "family=fourier";
            s += "; N=" + std::to_string(p.segments) + "; I=";
            for (size_t i = 0; i < p.intensities.size(); ++i) {
                if (i > 0) s += ",";
                s += format_double(p.intensities[i]);
            }
            return s;
        }
    }
    throw std::invalid_argument("format_pulse: unknown family");
}

PulseSpec parse_pulse(const std::string& text) {
    std::string family;
    int segments = -1;
    std::vector<double> values;
    bool have_values = false;

    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find(';', pos);
        if (end == std::string::npos) end = text.size();
        const std::string field = trim(text.substr(pos, end - pos));
        pos = end + 1;
        if (field.empty()) continue;
        const size_t eq = field.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("pulse text: expected key=value in '" + field + "'");
        const std::string key = trim(field.substr(0, eq));
        const std::string val = trim(field.substr(eq + 1));
        if (key == "family") {
            family = val;
        } else if (key == "N") {
            segments = static_cast<int>(parse_double(val));
        } else if (key == "I") {
            have_values = true;
            size_t vp = 0;
            while (vp <= val.size()) {
                size_t ve = val.find(',', vp);
                if (ve == std::string::npos) ve = val.size();
                const std::string item = trim(val.substr(vp, ve - vp));
                if (!item.empty()) values.push_back(parse_double(item));
                vp = ve + 1;
            }
        } else {
            throw std::invalid_argument("pulse text: unknown key '" + key + "'");
        }
    }

    if (family == "none") return PulseSpec::none();
    if (family == "ideal") {
        if (segments < 1 || values.size() != 1) throw std::invalid_argument("pulse text: ideal needs N and a single I");
        return PulseSpec::ideal_sine(segments, values[0]);
    }
    if (family == "piecewise") {
        if (!have_values) throw std::invalid_argument("pulse text: piecewise needs I=...");
        if (segments >= 1 && segments != static_cast<int>(values.size())) {
            throw std::invalid_argument("pulse text: piecewise N does not match intensity count");
        }
        return PulseSpec::piecewise_sine(std::move(values));
    }
    if (family == "fourier") {
        if (segments < 1 || !have_values) throw std::invalid_argument("pulse text: fourier needs N and I=...");
        return PulseSpec::fourier_combo(std::move(values), segments);
    }
    throw std::invalid_argument("pulse text: unknown family '" + family + "'");
}

}  // namespace qsc
