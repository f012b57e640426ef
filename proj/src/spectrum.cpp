#include "lipkin/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>

#include "lipkin/error.hpp"

namespace lipkin::exact {

namespace {

std::string context(const ParityBlocks& blocks, Parity parity) {
    return " [block " + std::string(to_string(parity)) + ", N=" + std::to_string(blocks.n_atoms) + "]";
}

Block make_block(const ModelParams& p, Parity parity) {
    const double n = p.n();
    const double j = p.spin();
    const double jj = j * (j + 1.0);
    const std::int64_t offset = parity == Parity::Even ? 0 : 1;
    const std::int64_t count = (p.n_atoms - offset) / 2 + 1;

    Block b;
    b.parity = parity;
    b.first_m = -j + static_cast<double>(offset);
    b.diag.resize(static_cast<std::size_t>(count));
    b.coupling_diag.resize(b.diag.size());
    b.off.resize(b.diag.size() - 1);
    b.coupling_off.resize(b.off.size());

    const double sym = (p.gamma_x + p.gamma_y) / (2.0 * n);
    const double anti = (p.gamma_x - p.gamma_y) / (4.0 * n);
    for (std::size_t i = 0; i < b.diag.size(); ++i) {
        const double m = b.m(i);
        // (j - m)(j + m) == jj - m^2 - j, written to stay exact for integer and half-integer m.
        const double transverse = jj - m * m;
        b.diag[i] = p.epsilon * m + sym * transverse;
        b.coupling_diag[i] = transverse / (2.0 * n);
        if (i + 1 < b.diag.size()) {
            // <m+2| J+^2 |m> in product form so no intermediate exceeds O(N^2).
            const double s = std::sqrt((j - m) * (j + m + 1.0)) * std::sqrt((j - m - 1.0) * (j + m + 2.0));
            b.off[i] = anti * s;
            b.coupling_off[i] = s / (4.0 * n);
        }
    }
    return b;
}

SpectrumResult assemble(const ParityBlocks& blocks, std::size_t k) {
    SpectrumResult out;
    double lowest[2] = {0.0, 0.0};
    for (Parity parity : {Parity::Even, Parity::Odd}) {
        const Block& b = blocks.block(parity);
        const std::size_t take = std::min(std::max<std::size_t>(k, 1), b.size());
        for (std::size_t i = 0; i < take; ++i) {
            double e;
            try {
                e = tridiag::eigenvalue(b.hamiltonian(), i);
            } catch (const ConvergenceError& err) {
                throw ConvergenceError(err.what() + context(blocks, parity));
            }
            if (i == 0) lowest[parity == Parity::Even ? 0 : 1] = e;
            out.levels.push_back({e, parity});
        }
    }
    std::stable_sort(out.levels.begin(), out.levels.end(),
                     [](const Level& a, const Level& b) { return a.energy < b.energy; });
    if (out.levels.size() > k) out.levels.resize(k);

    // levels stay sorted by energy; an exact tie only affects which block supplies the vector.
    out.ground_parity = ground_parity(lowest[0], lowest[1]);
    const double e0 = lowest[out.ground_parity == Parity::Even ? 0 : 1];
    out.ground_vector = block_ground_vector(blocks, out.ground_parity, e0);
    out.ground_first_m = blocks.block(out.ground_parity).first_m;
    return out;
}

}  // namespace

std::string_view to_string(Parity p) noexcept { return p == Parity::Even ? "even" : "odd"; }

ParityBlocks build_blocks(const ModelParams& p, const Limits& limits) {
    validate(p);
    if (p.n_atoms > limits.max_n) {
        throw CapExceeded("N=" + std::to_string(p.n_atoms) + " exceeds the configured maximum " +
                          std::to_string(limits.max_n));
    }
    ParityBlocks blocks;
    blocks.n_atoms = p.n_atoms;
    blocks.j = p.spin();
    blocks.even = make_block(p, Parity::Even);
    blocks.odd = make_block(p, Parity::Odd);
    return blocks;
}

Parity ground_parity(double e_even, double e_odd) noexcept {
    const double tie = 1e-12 * std::max(1.0, std::abs(e_even));
    return e_odd < e_even - tie ? Parity::Odd : Parity::Even;
}

double block_ground_energy(const ParityBlocks& blocks, Parity parity) {
    try {
        return tridiag::eigenvalue(blocks.block(parity).hamiltonian(), 0);
    } catch (const ConvergenceError& err) {
        throw ConvergenceError(err.what() + context(blocks, parity));
    }
}

Parity ground_block(const ParityBlocks& blocks) {
    return ground_parity(block_ground_energy(blocks, Parity::Even), block_ground_energy(blocks, Parity::Odd));
}

std::vector<double> block_ground_vector(const ParityBlocks& blocks, Parity parity, double energy) {
    try {
        return tridiag::eigenvector(blocks.block(parity).hamiltonian(), energy);
    } catch (const ConvergenceError& err) {
        throw ConvergenceError(err.what() + context(blocks, parity));
    }
}

SpectrumResult ground_state(const ModelParams& p, const Limits& limits) {
    return assemble(build_blocks(p, limits), 1);
}

SpectrumResult low_spectrum(const ModelParams& p, std::size_t k, const Limits& limits) {
    return assemble(build_blocks(p, limits), k);
}

ExcitationGaps excitation_gaps(const ModelParams& p, const Limits& limits) {
    if (p.n_atoms < 2) throw DomainError("excitation_gaps requires N >= 2");
    const SpectrumResult s = low_spectrum(p, 3, limits);
    const auto& l = s.levels;
    return {l[1].energy - l[0].energy, l[2].energy - l[0].energy, l[1].parity, l[2].parity};
}

double n_e_exact(const ModelParams& p, const Limits& limits) {
    const SpectrumResult s = ground_state(p, limits);
    double jz = 0.0;
    for (std::size_t i = 0; i < s.ground_vector.size(); ++i) {
        const double m = s.ground_first_m + 2.0 * static_cast<double>(i);
        jz += m * s.ground_vector[i] * s.ground_vector[i];
    }
    return 2.0 * jz / p.n() + 1.0;
}

double fidelity(const ModelParams& p, double dgamma_x, const Limits& limits) {
    const SpectrumResult a = ground_state(p, limits);
    const SpectrumResult b = ground_state(p.with_gamma_x(p.gamma_x + dgamma_x), limits);
    if (a.ground_parity != b.ground_parity) {
        throw ParityMismatch("fidelity: ground parity changes from " + std::string(to_string(a.ground_parity)) +
                             " to " + std::string(to_string(b.ground_parity)));
    }
    const double overlap =
        std::inner_product(a.ground_vector.begin(), a.ground_vector.end(), b.ground_vector.begin(), 0.0);
    return overlap * overlap;
}

void write_dump(std::ostream& os, const ParityBlocks& blocks, const SpectrumResult& ground) {
    const auto precision = os.precision(17);
    for (Parity parity : {Parity::Even, Parity::Odd}) {
        const Block& b = blocks.block(parity);
        os << "# " << blocks.n_atoms << ' ' << blocks.j << ' ' << to_string(parity) << " diag\n";
        for (std::size_t i = 0; i < b.size(); ++i) os << b.m(i) << ' ' << b.diag[i] << '\n';
        os << "# " << blocks.n_atoms << ' ' << blocks.j << ' ' << to_string(parity) << " offdiag\n";
        for (std::size_t i = 0; i < b.off.size(); ++i) os << b.m(i) << ' ' << b.off[i] << '\n';
    }
    os << "# " << blocks.n_atoms << ' ' << blocks.j << ' ' << to_string(ground.ground_parity) << " ground\n";
    for (std::size_t i = 0; i < ground.ground_vector.size(); ++i) {
        os << ground.ground_first_m + 2.0 * static_cast<double>(i) << ' ' << ground.ground_vector[i] << '\n';
    }
    os.precision(precision);
}

}  // namespace lipkin::exact
