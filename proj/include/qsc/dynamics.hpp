// Propagation of the open-system state: the non-Markovian master equation
// with its two auxiliary memory operators co-integrated by fixed-step RK4,
// plus the memoryless (Lindblad) propagator.
#pragma once

#include <optional>
#include <vector>

#include "qsc/model.hpp"
#include "qsc/pulses.hpp"
#include "qsc/qmat.hpp"

namespace qsc {

struct BathParams {
    double coupling_strength = 0.0;  // Gamma >= 0
    double memory_rate = 1.0;        // gamma > 0; environmental memory time = 1/gamma
    double temperature = 0.0;        // T >= 0
};

struct DynamicState {
    double t = 0.0;
    ComplexMatrix rho;     // density matrix
    ComplexMatrix obar_z;  // memory operator, z channel
    ComplexMatrix obar_w;  // memory operator, w channel
};

struct TrajectoryStats {
    double max_trace_drift = 0.0;      // max |tr(rho) - 1| seen over all steps
    double max_herm_residual = 0.0;    // max pre-symmetrization residual per step
    double min_rho_eigenvalue = 0.0;   // monitored at stored points, never enforced
};

struct Trajectory {
    std::vector<double> times;          // stored grid points (downsampled)
    std::vector<DynamicState> states;   // aligned with times
    std::vector<double> controls;       // c(t) at stored points
    double c_max_grid = 0.0;            // max |c| over the full integration grid
    TrajectoryStats stats;
};

struct EvolveOptions {
    bool control_in_obar = true;   // substitute the controlled Hamiltonian into the
                                   // memory-operator equations as well
    double trace_tol = 1e-3;       // integration-diverged threshold on |tr rho - 1|
    bool monitor_positivity = true;
    std::optional<ComplexMatrix> initial_rho;  // defaults to |0><0|
};

struct QsdDerivative {
    ComplexMatrix d_rho;
    ComplexMatrix d_obar_z;
    ComplexMatrix d_obar_w;
};

// Right-hand side of the coupled equations at state `s` under control value c:
//   d rho = -i[H, rho] + [L, rho Oz^dag] - [L^dag, Oz rho]
//                       + [L^dag, rho Ow^dag] - [L, Ow rho]
//   d Oz  = (G T g/2 - i G g^2/2) L - g Oz + [-iH - (L^dag Oz + L Ow), Oz]
//   d Ow  = (G T g/2) L^dag        - g Ow + [-iH - (L^dag Oz + L Ow), Ow]
// with G the coupling strength, g the memory rate, T the temperature and
// H = (1 + c) H_s(t) (everywhere, unless control_in_obar is off).
QsdDerivative qsd_derivative(const DynamicState& s, const BathParams& bath, const SystemModel& m,
                             double control, const EvolveOptions& opts = {});

// RK4 co-integration from rho(0) = |0><0|, Oz(0) = Ow(0) = 0 on the fixed grid
// t_total/n_steps, storing every `store_every` steps plus the final point.
Trajectory evolve_qsd(const SystemModel& m, const BathParams& bath, const PulseSpec& pulse,
                      int n_steps = 10000, int store_every = 10, const EvolveOptions& opts = {});

// Memoryless limit: d rho = -i[H, rho]
//   + (G T/2) [(2 L rho L^dag - L^dag L rho - rho L^dag L)
//            + (2 L^dag rho L - L L^dag rho - rho L L^dag)].
// Stored states carry the constant Oz = (G T/2) L, Ow = (G T/2) L^dag.
Trajectory evolve_lindblad(const SystemModel& m, const BathParams& bath, const PulseSpec& pulse,
                           int n_steps = 10000, int store_every = 10, const EvolveOptions& opts = {});

}  // namespace qsc
