#pragma once

#include "lipkin/model.hpp"
#include "lipkin/spectrum.hpp"

/// Three independent evaluators of the fidelity susceptibility with respect to
/// gamma_x (perturbation Jx^2 / N). All work inside the ground state's parity
/// block: Jx^2 preserves parity, so the other block contributes nothing.
namespace lipkin::exact {

/// Sum over the full eigendecomposition of the ground block:
/// sum_{k != 0} |<k|Jx^2/N|0>|^2 / (E_k - E_0)^2.
/// Throws CapExceeded when N > limits.sum_cap; use chi_f_resolvent instead.
double chi_f_sum(const ModelParams& p, const Limits& limits = {});

/// ||x||^2 with (H - E0) x = Q (Jx^2/N) psi0 and Q the projector off psi0,
/// solved with one pivoted tridiagonal factorisation and a refinement pass.
/// O(N). Throws IllConditioned if the in-block gap is below 1e-13.
double chi_f_resolvent(const ModelParams& p, const Limits& limits = {});

struct FiniteDifference {
    /// 2 (1 - sqrt F) / delta^2 from ground states at gamma_x -+ delta/2.
    double chi = 0.0;
    /// Same with delta/2.
    double chi_half = 0.0;
    /// (4 chi_half - chi) / 3.
    double richardson = 0.0;
    /// |chi - chi_half| / chi.
    double consistency = 0.0;
    double delta = 0.0;
};

/// Default step 1e-4 * max(1, |gamma_x|).
double default_fd_step(const ModelParams& p) noexcept;

/// Central finite-difference estimate from ground-state overlaps. The
/// overlap defect is computed as ||psi+ - psi-||^2 / 2 rather than 1 - |<psi+|psi->|,
/// which keeps full relative precision. Throws ParityMismatch if the ground
/// block changes across the stencil.
FiniteDifference chi_f_finite_difference(const ModelParams& p, double delta, const Limits& limits = {});

}  // namespace lipkin::exact
