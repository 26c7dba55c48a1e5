// Driven qutrit model: spin-1 operators, time-dependent Hamiltonian,
// controlled Hamiltonian, energy gap and tracked instantaneous ground state.
#pragma once

#include <optional>
#include <vector>

#include "qsc/qmat.hpp"

namespace qsc {

enum class LindbladChoice { Jminus, Jx, Jz };

struct SystemModel {
    double omega0 = 1.0;   // initial level spacing (energy scale)
    double t_total = 3.0;  // total evolution time
    LindbladChoice lindblad = LindbladChoice::Jminus;
};

struct JOperators {
    ComplexMatrix jz;      // |2><2| - |0><0|
    ComplexMatrix jx;      // (|2><1| + |1><2| + |1><0| + |0><1|)/sqrt(2)
    ComplexMatrix jminus;  // sqrt(2)(|0><1| + |1><2|)
};

JOperators j_operators();
ComplexMatrix lindblad_operator(LindbladChoice choice);
const char* lindblad_name(LindbladChoice choice);

// H(t) = omega0 [(1 - t/T) Jz + (t/T) Jx]; t must lie in [0, t_total]
ComplexMatrix hamiltonian(double t, const SystemModel& m);

// (1 + c) H(t)
ComplexMatrix controlled_hamiltonian(double t, const SystemModel& m, double c);

// gap between ground and first excited level:
// omega0 sqrt(T^2 - 2 T t + 2 t^2) / T
double gap_delta_e10(double t, const SystemModel& m);

using StateVec = std::vector<cplx>;

// Lowest-eigenvalue eigenvector of H(t). The global phase is fixed so the
// overlap with `previous` (when given) is real positive; without a previous
// vector the largest-magnitude component is made real positive, which at
// t = 0 pins <0|E(0)> > 0.
StateVec instantaneous_ground_state(double t, const SystemModel& m,
                                    const StateVec* previous = nullptr);

cplx overlap(const StateVec& a, const StateVec& b);

}  // namespace qsc
