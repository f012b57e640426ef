#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lipkin/model.hpp"
#include "lipkin/spectrum.hpp"

/// Finite-size scaling: renormalisation of singular truncated observables,
/// susceptibility peak searches, log2-log2 power-law fits and data collapse.
namespace lipkin::scaling {

/// Singularity N^beta (gamma - gamma_c)^-alpha renormalised with exponent nu
/// scales as N^(beta + alpha nu).
struct ScalingExponents {
    double alpha = 0.0;
    double beta = 0.0;
    double nu = 0.0;
    double combined = 0.0;
};

ScalingExponents make_exponents(double alpha, double beta, double nu) noexcept;

/// value * |N^nu (gamma - gamma_c)|^alpha. Throws DomainError at gamma = gamma_c
/// with alpha != 0.
double renormalize(double value, double gamma, double gamma_c, double n, double alpha, double nu);

/// Exact energy per atom minus the regular region-I part gamma_c/2 + gamma_c/(2N).
double singular_energy(const ModelParams& p, double exact_e_gs);

/// Exact excited fraction minus the mean-field value (region III is canonicalised).
double singular_ne(const ModelParams& p, double exact_ne);

struct Window {
    double lo = 0.0;
    double hi = 0.0;
    /// The upper end is excluded (one-sided approach to gamma_c from below).
    bool open_hi = false;
};

enum class Spacing {
    Uniform,
    /// Distances to `hi` spaced geometrically down to `geometric_floor`.
    GeometricToHi,
};

struct PeakOptions {
    int coarse_points = 64;
    double tolerance = 1e-8;
    Spacing spacing = Spacing::Uniform;
    double geometric_floor = 1e-6;
    /// Threads for the coarse grid; 1 runs the serial reference path.
    int jobs = 0;
};

struct Peak {
    double gamma_star = 0.0;
    double value = 0.0;
    /// The coarse maximum sat on the first or last grid point.
    bool at_edge = false;
};

/// Coarse grid followed by golden-section refinement of the bracket around the
/// best grid point. Deterministic for a deterministic f.
Peak find_maximum(const std::function<double(double)>& f, const Window& window, const PeakOptions& opts = {});

/// [gamma_c - 0.5, gamma_c + 0.5], or [gamma_c - 0.5, gamma_c) on the special line.
Window default_window(const ModelParams& base, bool special_line);

/// Options used for a campaign at size N: geometric spacing with floor 0.05/N
/// on the special line, uniform otherwise.
PeakOptions campaign_options(std::int64_t n, bool special_line, int jobs);

/// Maximum over gamma_x of the resolvent susceptibility at fixed epsilon, gamma_y.
/// Without a window, gamma_y == gamma_c selects the one-sided special-line window.
Peak find_chi_max(const ModelParams& base, std::int64_t n, const std::optional<Window>& window,
                  const PeakOptions& opts, const exact::Limits& limits = {});

struct SizedValue {
    double n = 0.0;
    double value = 0.0;
};

struct FitResult {
    double slope = 0.0;
    double intercept_log2 = 0.0;
    double prefactor = 0.0;
    double r_squared = 0.0;
    std::size_t n_points = 0;
};

struct FitOptions {
    /// Discard the point with the smallest N before fitting.
    bool drop_smallest = false;
};

/// Unweighted least squares of log2(value) against log2(N).
/// Throws FitError for fewer than 3 points or non-positive entries.
FitResult fit_power_law(std::span<const SizedValue> points, FitOptions opts = {});

struct Universality {
    double nu = 0.0;
    /// Exponent of the susceptibility peak, 2 nu.
    double peak_exponent = 0.0;
    ScalingExponents normal;
    ScalingExponents deformed;
};

/// Equates the normal-side (alpha 2, beta 0) and deformed-side (alpha 1/2,
/// beta 1) renormalised susceptibility exponents and solves for nu.
Universality solve_universality_exponent();

struct CampaignPoint {
    std::int64_t n = 0;
    double gamma_x = 0.0;
    double chi = 0.0;
};

struct CollapsePoint {
    double x = 0.0;
    double y = 0.0;
    std::int64_t n = 0;
};

/// (N^x_exp (gamma_x - gamma_c), chi / N^y_exp, N) for every campaign point.
std::vector<CollapsePoint> collapse_data(std::span<const CampaignPoint> campaign, double x_scale_exp,
                                         double y_scale_exp, double gamma_c);

struct CampaignRow {
    std::int64_t n = 0;
    Peak peak;
};

/// find_chi_max for every N, in input order.
std::vector<CampaignRow> peak_campaign(const ModelParams& base, std::span<const std::int64_t> sizes,
                                       bool special_line, int jobs, const exact::Limits& limits = {});

}  // namespace lipkin::scaling
