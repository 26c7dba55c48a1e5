#include "qsc/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsc {

namespace {

void check_model(const SystemModel& m) {
    if (!(m.t_total > 0.0)) throw std::invalid_argument("SystemModel: t_total must be > 0");
    if (!(m.omega0 > 0.0)) throw std::invalid_argument("SystemModel: omega0 must be > 0");
}

void check_time(double t, const SystemModel& m) {
    const double slack = 1e-12 * m.t_total;
    if (!(t >= -slack && t <= m.t_total + slack)) {
        throw std::invalid_argument("time " + std::to_string(t) + " outside [0, " + std::to_string(m.t_total) + "]");
    }
}

}  // namespace

JOperators j_operators() {
    const double r2 = std::sqrt(2.0);
    JOperators ops{ComplexMatrix(3), ComplexMatrix(3), ComplexMatrix(3)};
    ops.jz(0, 0) = -1.0;
    ops.jz(2, 2) = 1.0;
    ops.jx(0, 1) = ops.jx(1, 0) = ops.jx(1, 2) = ops.jx(2, 1) = 1.0 / r2;
    ops.jminus(0, 1) = ops.jminus(1, 2) = r2;
    return ops;
}

ComplexMatrix lindblad_operator(LindbladChoice choice) {
    const JOperators ops = j_operators();
    switch (choice) {
        case LindbladChoice::Jminus: return ops.jminus;
        case LindbladChoice::Jx: return ops.jx;
        case LindbladChoice::Jz: return ops.jz;
    }
    throw std::invalid_argument("unknown Lindblad choice");
}

const char* lindblad_name(LindbladChoice choice) {
    switch (choice) {
        case LindbladChoice::Jminus: return "jminus";
        case LindbladChoice::Jx: return "jx";
        case LindbladChoice::Jz: return "jz";
    }
    return "?";
}

ComplexMatrix hamiltonian(double t, const SystemModel& m) {
    check_model(m);
    check_time(t, m);
    const JOperators ops = j_operators();
    const double s = t / m.t_total;
    return m.omega0 * (1.0 - s) * ops.jz + m.omega0 * s * ops.jx;
}

ComplexMatrix controlled_hamiltonian(double t, const SystemModel& m, double c) {
    if (!std::isfinite(c)) throw std::invalid_argument("control value must be finite");
    return (1.0 + c) * hamiltonian(t, m);
}

double gap_delta_e10(double t, const SystemModel& m) {
    check_model(m);
    check_time(t, m);
    const double T = m.t_total;
    return m.omega0 * std::sqrt(T * T - 2.0 * T * t + 2.0 * t * t) / T;
}

StateVec instantaneous_ground_state(double t, const SystemModel& m, const StateVec* previous) {
    const EigenSystem es = herm_eig(hamiltonian(t, m));
    StateVec v(3);
    for (int r = 0; r < 3; ++r) v[r] = es.vectors(r, 0);

    cplx anchor = 0.0;
    if (previous != nullptr) {
        for (int r = 0; r < 3; ++r) anchor += std::conj((*previous)[r]) * v[r];
    }
    if (std::abs(anchor) < 1e-12) {
        // no usable previous overlap: pin the dominant component real positive
        int imax = 0;
        for (int r = 1; r < 3; ++r)
            if (std::abs(v[r]) > std::abs(v[imax])) imax = r;
        anchor = v[imax];
    }
    const cplx phase = std::conj(anchor) / std::abs(anchor);
    for (auto& x : v) x *= phase;
    return v;
}

cplx overlap(const StateVec& a, const StateVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("overlap: size mismatch");
    cplx s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

}  // namespace qsc
