#pragma once

#include "lipkin/model.hpp"

/// Truncated Holstein-Primakoff Hamiltonian H^(t) = A + B c'c + C (c'^2 + c^2),
/// its Bogoliubov diagonalisation, and the analytic observables built on it.
///
/// All functions accept region I, region II and their boundaries; region III
/// must be canonicalised by the caller. Region II quantities are assembled from
/// real building blocks (rho_c^2, B, C, the gap) so no square root ever sees a
/// negative argument; the literal closed forms are provided separately as
/// cross-checks.
namespace lipkin::bogoliubov {

struct Coefficients {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

/// How the gap is evaluated: the closed two-branch expression or sqrt(B^2 - 4C^2)
/// from the coefficients. The two agree algebraically.
enum class GapForm { Closed, Coefficient };

struct TruncatedOptions {
    /// Formulas are rejected when |gamma_x - gamma_c| (and, in region I,
    /// |gamma_y - gamma_c|) falls below this width.
    double singular_guard = 1e-12;
    GapForm gap_form = GapForm::Closed;
};

struct TruncatedSolution {
    double a_coef = 0.0;
    double b_coef = 0.0;
    double c_coef = 0.0;
    /// Bogoliubov angle, atanh(-2C/B). Infinite at the transition.
    double theta = 0.0;
    double gap = 0.0;
    double e_gs_t = 0.0;
    double n_e_t = 0.0;
    /// [A + (gap - B)/2] / N, the constant term of the diagonal form per atom.
    double e_gs_from_coefficients = 0.0;
};

struct ChiCoefficients {
    double j3_sq = 0.0;
    double j4 = 0.0;
    double one_boson_energy = 0.0;
    double two_boson_energy = 0.0;
};

Coefficients truncated_coefficients(const ModelParams& p);

/// Coefficient of (c' + c) at order N^{1/2} for displacement rho:
/// rho (eps + gamma_x (1 - 2 rho^2 / N)). Vanishes at the mean-field rho_c.
double linear_coefficient(const ModelParams& p, double rho);

double gap(const ModelParams& p, GapForm form = GapForm::Closed);

/// Full truncated solution. Throws SingularPoint inside the guard and at
/// gamma_x = gamma_y in region II, where the gap closes.
TruncatedSolution truncated_solution(const ModelParams& p, TruncatedOptions opts = {});

/// The excited fraction in its literal closed form, with the i*i = -1
/// cancellation of region II made explicit.
double n_e_closed_form(const ModelParams& p);

ChiCoefficients chi_coefficients(const ModelParams& p, TruncatedOptions opts = {});

/// Perturbative fidelity susceptibility of the truncated ground state with
/// respect to gamma_x: j3^2 / (N Delta)^2 + 2 j4^2 / (N 2 Delta)^2.
double chi_f_truncated(const ModelParams& p, TruncatedOptions opts = {});

/// Two-term closed form of the deformed-phase susceptibility (region II only),
/// evaluated branch-resolved. Cross-check for chi_f_truncated.
double chi_f_deformed_closed_form(const ModelParams& p);

enum class SpecialLineForm {
    /// -N gamma_c^2 / (4 gamma_x^3 Delta), strictly positive.
    RealForm,
    /// The literal closed-form expression evaluated with plain real arithmetic. Its factor
    /// 1/(gamma_x - gamma_c) makes it negative; kept for inspection only.
    Literal,
};

/// Susceptibility along gamma_y = gamma_c, gamma_x < gamma_c. Throws DomainError off that line.
double chi_f_special_line(const ModelParams& p, SpecialLineForm form = SpecialLineForm::RealForm,
                          double line_tolerance = 0.0);

}  // namespace lipkin::bogoliubov
