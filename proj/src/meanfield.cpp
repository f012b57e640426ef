#include "lipkin/meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lipkin/error.hpp"

namespace lipkin::meanfield {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Golden-section search for a minimum of f on [a, b].
template <class F>
double golden_min(F&& f, double a, double b, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    // Endpoints are legitimate minima (rho = 0 in the normal phase).
    const double mid = 0.5 * (a + b);
    const double fa = f(a), fm = f(mid), fb = f(b);
    if (fa < fm && fa <= fb) return a;
    return fb < fm ? b : mid;
}

double wrap_phase(double phi) {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w -= kTwoPi;
    return w;
}

struct Refined {
    double rho;
    double phi;
    double energy;
};

}  // namespace

double energy_surface(const ModelParams& p, double rho, double phi) {
    validate(p);
    const double n = p.n();
    const double r2 = rho * rho;
    if (rho < 0.0 || r2 > n * (1.0 + 1e-15)) {
        throw DomainError("energy_surface: rho^2 = " + std::to_string(r2) + " outside [0, N]");
    }
    const double depletion = 1.0 - r2 / n;
    return p.epsilon * (r2 - 0.5 * n) + 0.25 * (p.gamma_x + p.gamma_y) * depletion * (1.0 + 2.0 * r2) +
           0.5 * (p.gamma_x - p.gamma_y) * depletion * r2 * std::cos(2.0 * phi);
}

double energy_surface_extensive(const ModelParams& p, double rho, double phi) {
    validate(p);
    const double n = p.n();
    const double r2 = rho * rho;
    if (rho < 0.0 || r2 > n * (1.0 + 1e-15)) {
        throw DomainError("energy_surface_extensive: rho^2 = " + std::to_string(r2) + " outside [0, N]");
    }
    const double depletion = 1.0 - r2 / n;
    return p.epsilon * (r2 - 0.5 * n) + 0.5 * (p.gamma_x + p.gamma_y) * depletion * r2 +
           0.5 * (p.gamma_x - p.gamma_y) * depletion * r2 * std::cos(2.0 * phi);
}

CriticalPoint critical_point(const ModelParams& p) {
    const PhaseRegion region = classify_phase(p);
    if (is_normal_branch(region)) return {0.0, {}, false};
    if (region == PhaseRegion::DeformedIII) {
        throw DomainError("critical_point: region III input, canonicalize first");
    }
    const double rho2 = 0.5 * p.n() * (1.0 - p.gamma_c() / p.gamma_x);
    return {std::sqrt(rho2), {0.0, std::numbers::pi}, true};
}

MeanFieldObservables mf_observables(const ModelParams& p) {
    const PhaseRegion region = classify_phase(p);
    const double gc = p.gamma_c();
    const double gx = p.gamma_x;
    const double gy = p.gamma_y;
    const double n = p.n();
    if (is_normal_branch(region)) {
        return {gc / 2.0 + (gx + gy) / (4.0 * n), 0.0};
    }
    if (region == PhaseRegion::DeformedIII) {
        throw DomainError("mf_observables: region III input, canonicalize first");
    }
    return {(gc * gc + gx * gx) / (4.0 * gx) + (gx + gc) * (gy + gx) / (8.0 * n * gx), 1.0 - gc / gx};
}

CriticalPoint minimize_surface_numeric(const ModelParams& p, MinimizerOptions opts) {
    validate(p);
    const auto surface = [&](double rho, double phi) {
        return opts.surface == SurfaceOrder::Full ? energy_surface(p, rho, phi) : energy_surface_extensive(p, rho, phi);
    };
    if (opts.rho_steps < 2 || opts.phi_steps < 4) throw DomainError("minimizer grid too coarse");

    const double rho_max = std::sqrt(p.n());
    const int nr = opts.rho_steps + 1;
    const int nphi = opts.phi_steps;
    const double drho = rho_max / opts.rho_steps;
    const double dphi = kTwoPi / nphi;

    std::vector<double> grid(static_cast<std::size_t>(nr) * nphi);
    auto at = [&](int i, int k) -> double& { return grid[static_cast<std::size_t>(i) * nphi + k]; };
    for (int i = 0; i < nr; ++i) {
        const double rho = std::min(i * drho, rho_max);
        for (int k = 0; k < nphi; ++k) at(i, k) = surface(rho, k * dphi);
    }

    // Local minima of the grid, periodic in phi.
    std::vector<std::pair<int, int>> seeds;
    for (int i = 0; i < nr; ++i) {
        for (int k = 0; k < nphi; ++k) {
            const double e = at(i, k);
            bool is_min = true;
            for (int di = -1; di <= 1 && is_min; ++di) {
                const int ii = i + di;
                if (ii < 0 || ii >= nr) continue;
                for (int dk = -1; dk <= 1; ++dk) {
                    if (di == 0 && dk == 0) continue;
                    if (at(ii, (k + dk + nphi) % nphi) < e) {
                        is_min = false;
                        break;
                    }
                }
            }
            if (is_min) seeds.emplace_back(i, k);
        }
    }

    const double inner_tol = opts.tolerance * 1e-2;
    std::vector<Refined> refined;
    refined.reserve(seeds.size());
    for (auto [i, k] : seeds) {
        double rho = std::min(i * drho, rho_max);
        double phi = k * dphi;
        double e_prev = surface(rho, phi);
        for (int sweep = 0;; ++sweep) {
            if (sweep >= opts.max_sweeps) {
                throw ConvergenceError("minimize_surface_numeric: refinement exceeded " +
                                       std::to_string(opts.max_sweeps) + " sweeps");
            }
            const double lo = std::max(0.0, rho - drho);
            const double hi = std::min(rho_max, rho + drho);
            const double new_rho = golden_min([&](double r) { return surface(r, phi); }, lo, hi, inner_tol);
            const double new_phi =
                golden_min([&](double f) { return surface(new_rho, f); }, phi - dphi, phi + dphi, inner_tol);
            // Arc length, so a phase that is free at small rho does not count as motion.
            const double moved = std::abs(new_rho - rho) + new_rho * std::abs(new_phi - phi);
            const double e_new = surface(new_rho, new_phi);
            const bool stalled = std::abs(e_new - e_prev) <= 1e-14 * std::max(1.0, std::abs(e_new)) && sweep > 0;
            rho = new_rho;
            phi = new_phi;
            e_prev = e_new;
            if (moved <= opts.tolerance || stalled) break;
        }
        refined.push_back({rho, wrap_phase(phi), surface(rho, phi)});
    }

    double best = refined.front().energy;
    for (const auto& r : refined) best = std::min(best, r.energy);
    const double e_tol = 1e-9 * std::max(1.0, std::abs(best));
    std::vector<Refined> minima;
    for (const auto& r : refined)
        if (r.energy <= best + e_tol) minima.push_back(r);
    std::sort(minima.begin(), minima.end(), [](const Refined& a, const Refined& b) {
        return a.rho != b.rho ? a.rho < b.rho : a.phi < b.phi;
    });

    CriticalPoint cp;
    cp.rho_c = minima.front().rho;
    if (cp.rho_c <= 1e-6) return cp;

    // A surface flat in phi along the minimum circle leaves the phase undetermined.
    double e_lo = surface(cp.rho_c, 0.0);
    double e_hi = e_lo;
    for (int k = 1; k < nphi; ++k) {
        const double e = surface(cp.rho_c, k * dphi);
        e_lo = std::min(e_lo, e);
        e_hi = std::max(e_hi, e);
    }
    if (e_hi - e_lo <= e_tol) return cp;

    for (const auto& m : minima) {
        const bool seen = std::any_of(cp.phi_c.begin(), cp.phi_c.end(), [&](double f) {
            const double d = std::abs(f - m.phi);
            return std::min(d, kTwoPi - d) < 1e-4;
        });
        if (!seen) cp.phi_c.push_back(m.phi);
    }
    std::sort(cp.phi_c.begin(), cp.phi_c.end());
    cp.degenerate = cp.phi_c.size() > 1;
    return cp;
}

}  // namespace lipkin::meanfield
