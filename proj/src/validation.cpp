#include "lipkin/validation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "lipkin/dense.hpp"
#include "lipkin/grid.hpp"
#include "lipkin/meanfield.hpp"
#include "lipkin/model.hpp"
#include "lipkin/spectrum.hpp"
#include "lipkin/susceptibility.hpp"

namespace lipkin::validation {

namespace {

class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    std::int64_t integer(std::int64_t a, std::int64_t b) {
        return std::uniform_int_distribution<std::int64_t>(a, b)(rng_);
    }

    // Region I or II, at least `margin` from gamma_x = gamma_c, with gamma_y
    // kept above gamma_c + 0.2 so the special line is avoided.
    ModelParams normal_or_deformed(std::int64_t n, double margin) {
        const double eps = uniform(0.5, 2.0);
        const double gc = -eps;
        double gx;
        do {
            gx = uniform(-3.0, 3.0);
        } while (std::abs(gx - gc) < margin);
        const double gy = uniform(gc + 0.2, 3.0);
        return make_params(eps, gx, gy, n);
    }

private:
    std::mt19937_64 rng_;
};

double max_of(const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); }

Check finish(std::string name, const std::vector<double>& deviations, double tol) {
    Check c;
    c.name = std::move(name);
    c.samples = static_cast<int>(deviations.size());
    c.max_deviation = max_of(deviations);
    c.tolerance = tol;
    c.pass = c.max_deviation <= tol;
    return c;
}

double block_vs_dense(const ModelParams& p) {
    const exact::ParityBlocks blocks = exact::build_blocks(p);
    std::vector<double> merged;
    for (exact::Parity parity : {exact::Parity::Even, exact::Parity::Odd}) {
        const auto t = blocks.block(parity).hamiltonian();
        for (std::size_t k = 0; k < t.size(); ++k) merged.push_back(tridiag::eigenvalue(t, k));
    }
    std::sort(merged.begin(), merged.end());
    const std::vector<double> ref = dense::eigenvalues(p);
    double dev = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) dev = std::max(dev, std::abs(ref[i] - merged[i]));
    return dev;
}

}  // namespace

CompareReport run_compare(const CompareConfig& cfg) {
    Draw draw(cfg.seed);
    CompareReport report;
    report.seed = cfg.seed;

    std::vector<ModelParams> dense_draws;
    for (int i = 0; i < cfg.dense_sets; ++i) {
        const std::int64_t n = draw.integer(1, cfg.dense_max_n);
        const double eps = draw.uniform(0.5, 2.0);
        dense_draws.push_back(make_params(eps, draw.uniform(-3.0, 3.0), draw.uniform(-3.0, 3.0), n));
    }
    std::vector<ModelParams> chi_draws;
    for (int i = 0; i < cfg.chi_sets; ++i) chi_draws.push_back(draw.normal_or_deformed(cfg.chi_n, 0.05));
    std::vector<ModelParams> mf_draws;
    for (int i = 0; i < cfg.minimizer_sets; ++i) mf_draws.push_back(draw.normal_or_deformed(draw.integer(10, 200), 0.05));

    const auto eig_dev = grid::map(std::span<const ModelParams>(dense_draws), block_vs_dense, cfg.jobs);
    report.checks.push_back(finish("dense_vs_block_eigenvalues", eig_dev, cfg.tol_eigen));

    const auto comm = grid::map(std::span<const ModelParams>(dense_draws),
                                [](const ModelParams& p) { return dense::parity_commutator_norm(p); }, cfg.jobs);
    report.checks.push_back(finish("parity_commutator", comm, 0.0));

    struct ChiTriple {
        double sum = 0.0, resolvent = 0.0, fd = 0.0;
    };
    const exact::Limits limits;
    const auto chis = grid::map(
        std::span<const ModelParams>(chi_draws),
        [&](const ModelParams& p) {
            return ChiTriple{exact::chi_f_sum(p, limits), exact::chi_f_resolvent(p, limits),
                             exact::chi_f_finite_difference(p, cfg.fd_delta, limits).chi};
        },
        cfg.jobs);
    std::vector<double> sum_dev, fd_dev;
    for (const auto& c : chis) {
        sum_dev.push_back(std::abs(c.sum - c.resolvent) / std::abs(c.sum));
        fd_dev.push_back(std::abs(c.fd - c.resolvent) / std::abs(c.resolvent));
    }
    report.checks.push_back(finish("chi_sum_vs_resolvent", sum_dev, cfg.tol_chi_sum));
    report.checks.push_back(finish("chi_finite_difference_vs_resolvent", fd_dev, cfg.tol_chi_fd));

    const auto rho_dev = grid::map(
        std::span<const ModelParams>(mf_draws),
        [](const ModelParams& p) {
            const double analytic = meanfield::critical_point(p).rho_c;
            const double numeric = meanfield::minimize_surface_numeric(p).rho_c;
            return std::abs(analytic - numeric) / std::sqrt(p.n());
        },
        cfg.jobs);
    report.checks.push_back(finish("meanfield_rho_analytic_vs_numeric", rho_dev, cfg.tol_rho));

    // Full surface, deep in region II, against its own finite-N stationary point.
    std::vector<ModelParams> full_draws;
    for (int i = 0; i < cfg.minimizer_sets; ++i) {
        const double eps = draw.uniform(0.5, 2.0);
        const double gx = draw.uniform(-3.0, -eps - 0.3);
        const double gy = draw.uniform(gx + 0.2, 3.0);
        full_draws.push_back(make_params(eps, gx, gy, draw.integer(10, 200)));
    }
    const auto full_dev = grid::map(
        std::span<const ModelParams>(full_draws),
        [](const ModelParams& p) {
            const double rc = meanfield::critical_point(p).rho_c;
            const double expected = std::sqrt(rc * rc - (p.gamma_x + p.gamma_y) / (8.0 * p.gamma_x));
            meanfield::MinimizerOptions opts;
            opts.surface = meanfield::SurfaceOrder::Full;
            const double numeric = meanfield::minimize_surface_numeric(p, opts).rho_c;
            return std::abs(expected - numeric) / std::sqrt(p.n());
        },
        cfg.jobs);
    report.checks.push_back(finish("meanfield_rho_full_surface_vs_finite_n", full_dev, cfg.tol_rho));
    return report;
}

}  // namespace lipkin::validation
