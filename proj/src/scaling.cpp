#include "lipkin/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lipkin/error.hpp"
#include "lipkin/grid.hpp"
#include "lipkin/meanfield.hpp"
#include "lipkin/susceptibility.hpp"

namespace lipkin::scaling {

ScalingExponents make_exponents(double alpha, double beta, double nu) noexcept {
    return {alpha, beta, nu, beta + alpha * nu};
}

double renormalize(double value, double gamma, double gamma_c, double n, double alpha, double nu) {
    if (alpha == 0.0) return value;
    if (gamma == gamma_c) throw DomainError("renormalize: gamma = gamma_c with alpha != 0");
    return value * std::pow(std::abs(std::pow(n, nu) * (gamma - gamma_c)), alpha);
}

double singular_energy(const ModelParams& p, double exact_e_gs) {
    validate(p);
    const double gc = p.gamma_c();
    return exact_e_gs - (gc / 2.0 + gc / (2.0 * p.n()));
}

double singular_ne(const ModelParams& p, double exact_ne) {
    return exact_ne - meanfield::mf_observables(canonicalize(p).params).n_e;
}

namespace {

std::vector<double> coarse_grid(const Window& w, const PeakOptions& opts) {
    const auto k = static_cast<std::size_t>(opts.coarse_points);
    if (opts.spacing == Spacing::Uniform) {
        if (!w.open_hi) return grid::linspace(w.lo, w.hi, k);
        std::vector<double> g(k);
        for (std::size_t i = 0; i < k; ++i) g[i] = w.lo + (w.hi - w.lo) * static_cast<double>(i) / static_cast<double>(k);
        return g;
    }
    // Geometric in the distance to hi, from (hi - lo) down to the floor.
    const double span = w.hi - w.lo;
    const double floor = std::min(opts.geometric_floor, 0.5 * span);
    std::vector<double> g(k);
    const double ratio = std::log(floor / span) / static_cast<double>(k - 1);
    for (std::size_t i = 0; i < k; ++i) g[i] = w.hi - span * std::exp(ratio * static_cast<double>(i));
    g.front() = w.lo;
    if (!w.open_hi) g.back() = w.hi;
    return g;
}

}  // namespace

Peak find_maximum(const std::function<double(double)>& f, const Window& window, const PeakOptions& opts) {
    if (!(window.hi > window.lo)) throw DomainError("find_maximum: empty window");
    if (opts.coarse_points < 3) throw DomainError("find_maximum: need at least 3 coarse points");

    const std::vector<double> xs = coarse_grid(window, opts);
    const std::vector<double> ys = grid::map(std::span<const double>(xs), f, opts.jobs);
    const std::size_t best = static_cast<std::size_t>(std::max_element(ys.begin(), ys.end()) - ys.begin());

    Peak peak;
    peak.at_edge = best == 0 || best + 1 == xs.size();
    double a = xs[best == 0 ? 0 : best - 1];
    double b = xs[std::min(best + 1, xs.size() - 1)];
    peak.gamma_star = xs[best];
    peak.value = ys[best];

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > opts.tolerance) {
        if (fc >= fd) {
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
    const double x = fc >= fd ? c : d;
    const double fx = std::max(fc, fd);
    if (fx > peak.value) {
        peak.gamma_star = x;
        peak.value = fx;
    }
    return peak;
}

Window default_window(const ModelParams& base, bool special_line) {
    const double gc = base.gamma_c();
    if (special_line) return {gc - 0.5, gc, true};
    return {gc - 0.5, gc + 0.5, false};
}

PeakOptions campaign_options(std::int64_t n, bool special_line, int jobs) {
    PeakOptions opts;
    opts.jobs = jobs;
    if (special_line) {
        opts.spacing = Spacing::GeometricToHi;
        opts.geometric_floor = 0.05 / static_cast<double>(n);
        opts.coarse_points = 96;
    }
    return opts;
}

Peak find_chi_max(const ModelParams& base, std::int64_t n, const std::optional<Window>& window,
                  const PeakOptions& opts, const exact::Limits& limits) {
    const ModelParams at_n = base.with_n(n);
    validate(at_n);
    const Window w = window.value_or(default_window(at_n, at_n.gamma_y == at_n.gamma_c()));
    return find_maximum([&](double gx) { return exact::chi_f_resolvent(at_n.with_gamma_x(gx), limits); }, w, opts);
}

FitResult fit_power_law(std::span<const SizedValue> points, FitOptions opts) {
    std::vector<SizedValue> pts(points.begin(), points.end());
    for (const auto& p : pts) {
        if (!(p.n > 0.0) || !(p.value > 0.0) || !std::isfinite(p.value)) {
            throw FitError("fit_power_law: N and values must be positive and finite");
        }
    }
    if (opts.drop_smallest && !pts.empty()) {
        pts.erase(std::min_element(pts.begin(), pts.end(),
                                   [](const SizedValue& a, const SizedValue& b) { return a.n < b.n; }));
    }
    if (pts.size() < 3) {
        throw FitError("fit_power_law: need at least 3 points, got " + std::to_string(pts.size()));
    }

    const double m = static_cast<double>(pts.size());
    double sx = 0.0, sy = 0.0;
    for (const auto& p : pts) {
        sx += std::log2(p.n);
        sy += std::log2(p.value);
    }
    const double mx = sx / m;
    const double my = sy / m;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& p : pts) {
        const double dx = std::log2(p.n) - mx;
        const double dy = std::log2(p.value) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw FitError("fit_power_law: all N identical");

    FitResult fit;
    fit.slope = sxy / sxx;
    fit.intercept_log2 = my - fit.slope * mx;
    fit.prefactor = std::exp2(fit.intercept_log2);
    double ss_res = 0.0;
    for (const auto& p : pts) {
        const double r = std::log2(p.value) - (fit.intercept_log2 + fit.slope * std::log2(p.n));
        ss_res += r * r;
    }
    fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    fit.n_points = pts.size();
    return fit;
}

Universality solve_universality_exponent() {
    // Renormalised exponents beta + alpha nu of the two sides must coincide.
    constexpr double alpha_n = 2.0, beta_n = 0.0;
    constexpr double alpha_d = 0.5, beta_d = 1.0;
    const double nu = (beta_d - beta_n) / (alpha_n - alpha_d);
    Universality u;
    u.nu = nu;
    u.normal = make_exponents(alpha_n, beta_n, nu);
    u.deformed = make_exponents(alpha_d, beta_d, nu);
    u.peak_exponent = u.normal.combined;
    return u;
}

std::vector<CollapsePoint> collapse_data(std::span<const CampaignPoint> campaign, double x_scale_exp,
                                         double y_scale_exp, double gamma_c) {
    std::vector<CollapsePoint> out;
    out.reserve(campaign.size());
    for (const auto& c : campaign) {
        const double n = static_cast<double>(c.n);
        out.push_back({std::pow(n, x_scale_exp) * (c.gamma_x - gamma_c), c.chi / std::pow(n, y_scale_exp), c.n});
    }
    return out;
}

std::vector<CampaignRow> peak_campaign(const ModelParams& base, std::span<const std::int64_t> sizes,
                                       bool special_line, int jobs, const exact::Limits& limits) {
    std::vector<CampaignRow> rows;
    rows.reserve(sizes.size());
    for (std::int64_t n : sizes) {
        ModelParams p = base.with_n(n);
        if (special_line) p.gamma_y = p.gamma_c();
        const Window w = default_window(p, special_line);
        rows.push_back({n, find_chi_max(p, n, w, campaign_options(n, special_line, jobs), limits)});
    }
    return rows;
}

}  // namespace lipkin::scaling
