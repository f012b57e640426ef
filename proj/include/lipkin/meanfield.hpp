#pragma once

#include <vector>

#include "lipkin/model.hpp"

/// Heisenberg-Weyl coherent-state mean field of the Lipkin Hamiltonian.
namespace lipkin::meanfield {

/// Minimiser (rho_c, phi_c) of the energy surface.
///
/// An empty `phi_c` means the phase is undetermined (rho_c = 0, or a surface
/// that does not depend on phi). `degenerate` is set when more than one phase
/// minimises the surface, which for the analytic solution is exactly {0, pi}.
struct CriticalPoint {
    double rho_c = 0.0;
    std::vector<double> phi_c;
    bool degenerate = false;

    bool phase_undetermined() const noexcept { return phi_c.empty(); }
};

/// Intensive thermodynamic-limit observables: energy per atom and excited fraction.
struct MeanFieldObservables {
    double e_gs = 0.0;
    double n_e = 0.0;
};

/// <alpha|H|alpha> for alpha = rho e^{i phi}, with the square-root factor
/// replaced by its coherent-state value. Throws DomainError if rho^2 > N or rho < 0.
double energy_surface(const ModelParams& p, double rho, double phi);

/// Closed-form minimiser. Region I and its boundaries give rho_c = 0 with an
/// undetermined phase; region II gives rho_c = sqrt(N/2 (1 - gamma_c/gamma_x)), phi in {0, pi}.
/// Throws DomainError for region III input (canonicalize first).
CriticalPoint critical_point(const ModelParams& p);

/// Energy per atom and excited fraction at the closed-form minimiser, including
/// the 1/N correction of the energy.
MeanFieldObservables mf_observables(const ModelParams& p);

/// The order-N part of energy_surface: the constant (gamma_x + gamma_y)/4 (1 - rho^2/N)
/// is dropped. Its minimiser is exactly the closed-form rho_c.
double energy_surface_extensive(const ModelParams& p, double rho, double phi);

/// Which surface minimize_surface_numeric works on. The full surface carries an
/// order-one term that moves the minimiser to rho^2 = rho_c^2 - (gamma_x + gamma_y)/(8 gamma_x)
/// in region II, so only the extensive surface reproduces the closed form at finite N.
enum class SurfaceOrder { Extensive, Full };

struct MinimizerOptions {
    SurfaceOrder surface = SurfaceOrder::Extensive;
    int rho_steps = 200;
    int phi_steps = 64;
    double tolerance = 1e-8;
    int max_sweeps = 200;
};

/// Grid search over [0, sqrt N] x [0, 2 pi) followed by alternating golden-section
/// refinement. Independent of the closed form; used to check it.
/// Throws ConvergenceError if a refinement does not settle within `max_sweeps`.
CriticalPoint minimize_surface_numeric(const ModelParams& p, MinimizerOptions opts = {});

}  // namespace lipkin::meanfield
