#include "lipkin/susceptibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lipkin/error.hpp"

namespace lipkin::exact {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void project_out(std::span<double> x, std::span<const double> psi) {
    const double c = dot(x, psi);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * psi[i];
}

struct GroundBlock {
    Parity parity;
    std::vector<double> vector;
};

GroundBlock ground_with_parity(const ModelParams& p, const Limits& limits) {
    const ParityBlocks blocks = build_blocks(p, limits);
    const double e_even = block_ground_energy(blocks, Parity::Even);
    const double e_odd = block_ground_energy(blocks, Parity::Odd);
    const Parity parity = ground_parity(e_even, e_odd);
    return {parity, block_ground_vector(blocks, parity, parity == Parity::Even ? e_even : e_odd)};
}

double overlap_defect_chi(const ModelParams& p, double delta, const Limits& limits) {
    const GroundBlock lo = ground_with_parity(p.with_gamma_x(p.gamma_x - 0.5 * delta), limits);
    const GroundBlock hi = ground_with_parity(p.with_gamma_x(p.gamma_x + 0.5 * delta), limits);
    if (lo.parity != hi.parity) {
        throw ParityMismatch("chi_f_finite_difference: ground parity flips between gamma_x = " +
                             std::to_string(p.gamma_x - 0.5 * delta) + " and " +
                             std::to_string(p.gamma_x + 0.5 * delta));
    }
    const double sign = dot(lo.vector, hi.vector) < 0.0 ? -1.0 : 1.0;
    double dist2 = 0.0;
    for (std::size_t i = 0; i < lo.vector.size(); ++i) {
        const double d = hi.vector[i] - sign * lo.vector[i];
        dist2 += d * d;
    }
    // 2 (1 - |<lo|hi>|) == ||hi - lo||^2 for unit vectors.
    return dist2 / (delta * delta);
}

}  // namespace

double chi_f_sum(const ModelParams& p, const Limits& limits) {
    validate(p);
    if (p.n_atoms > limits.sum_cap) {
        throw CapExceeded("chi_f_sum: N=" + std::to_string(p.n_atoms) + " exceeds the full-decomposition cap " +
                          std::to_string(limits.sum_cap) + "; use chi_f_resolvent");
    }
    const ParityBlocks blocks = build_blocks(p, limits);
    const Block& b = blocks.block(ground_block(blocks));
    if (b.size() == 1) return 0.0;

    tridiag::Eigensystem es;
    try {
        es = tridiag::full_eigensystem(b.hamiltonian());
    } catch (const ConvergenceError& err) {
        throw ConvergenceError(std::string(err.what()) + " [block " + std::string(to_string(b.parity)) +
                               ", N=" + std::to_string(p.n_atoms) + "]");
    }
    const auto psi0 = es.vector(0);
    std::vector<double> h(b.size());
    tridiag::multiply(b.interaction(), psi0, h);

    double chi = 0.0;
    for (std::size_t k = 1; k < b.size(); ++k) {
        const double amp = dot(es.vector(k), h);
        const double de = es.values[k] - es.values[0];
        chi += amp * amp / (de * de);
    }
    return chi;
}

double chi_f_resolvent(const ModelParams& p, const Limits& limits) {
    const ParityBlocks blocks = build_blocks(p, limits);
    const Parity parity = ground_block(blocks);
    const Block& b = blocks.block(parity);
    if (b.size() == 1) return 0.0;

    const auto t = b.hamiltonian();
    const double e0 = block_ground_energy(blocks, parity);
    const double e1 = tridiag::eigenvalue(t, 1);
    const double floor = std::max(1e-13, 64.0 * std::numeric_limits<double>::epsilon() * std::abs(e0));
    if (e1 - e0 < floor) {
        throw IllConditioned("chi_f_resolvent: in-block gap " + std::to_string(e1 - e0) + " below " +
                             std::to_string(floor) + " [block " + std::string(to_string(parity)) +
                             ", N=" + std::to_string(p.n_atoms) + "]");
    }
    const std::vector<double> psi = block_ground_vector(blocks, parity, e0);

    const std::size_t n = b.size();
    std::vector<double> rhs(n);
    tridiag::multiply(b.interaction(), psi, rhs);
    project_out(rhs, psi);

    const tridiag::ShiftedFactor lu(t, e0);
    std::vector<double> x = rhs;
    lu.solve(x);
    project_out(x, psi);

    // One refinement pass against the deflated system.
    std::vector<double> r(n);
    tridiag::multiply(t, x, r);
    for (std::size_t i = 0; i < n; ++i) r[i] = rhs[i] - (r[i] - e0 * x[i]);
    lu.solve(r);
    project_out(r, psi);
    for (std::size_t i = 0; i < n; ++i) x[i] += r[i];

    return dot(x, x);
}

double default_fd_step(const ModelParams& p) noexcept { return 1e-4 * std::max(1.0, std::abs(p.gamma_x)); }

FiniteDifference chi_f_finite_difference(const ModelParams& p, double delta, const Limits& limits) {
    validate(p);
    if (!(delta > 0.0)) throw DomainError("chi_f_finite_difference: delta must be > 0");
    FiniteDifference fd;
    fd.delta = delta;
    fd.chi = overlap_defect_chi(p, delta, limits);
    fd.chi_half = overlap_defect_chi(p, 0.5 * delta, limits);
    fd.richardson = (4.0 * fd.chi_half - fd.chi) / 3.0;
    fd.consistency = fd.chi != 0.0 ? std::abs(fd.chi - fd.chi_half) / fd.chi : 0.0;
    return fd;
}

}  // namespace lipkin::exact
