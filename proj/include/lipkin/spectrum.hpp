#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "lipkin/model.hpp"
#include "lipkin/tridiagonal.hpp"

/// Exact diagonalisation of the Lipkin Hamiltonian in the maximal-spin sector
/// j = N/2. Jx^2 and Jy^2 change m by 0 or +-2, so the (N+1)-dimensional
/// matrix splits into two real symmetric tridiagonal parity blocks.
namespace lipkin::exact {

/// Parity of m + j. The even block contains m = -j (all atoms down).
enum class Parity { Even, Odd };

std::string_view to_string(Parity p) noexcept;

/// One parity block of H together with the matching block of dH/dgamma_x = Jx^2 / N.
struct Block {
    Parity parity = Parity::Even;
    /// m of entry 0; entry i has m = first_m + 2 i.
    double first_m = 0.0;
    std::vector<double> diag;
    std::vector<double> off;
    std::vector<double> coupling_diag;
    std::vector<double> coupling_off;

    std::size_t size() const noexcept { return diag.size(); }
    double m(std::size_t i) const noexcept { return first_m + 2.0 * static_cast<double>(i); }
    tridiag::SymTridiag hamiltonian() const noexcept { return {diag, off}; }
    tridiag::SymTridiag interaction() const noexcept { return {coupling_diag, coupling_off}; }
};

struct ParityBlocks {
    std::int64_t n_atoms = 0;
    double j = 0.0;
    Block even;
    Block odd;

    const Block& block(Parity p) const noexcept { return p == Parity::Even ? even : odd; }
};

struct Limits {
    /// Largest N accepted by build_blocks.
    std::int64_t max_n = std::int64_t{1} << 17;
    /// Largest N for which chi_f_sum performs a full block decomposition.
    std::int64_t sum_cap = 4096;
};

/// Throws CapExceeded if N > limits.max_n.
ParityBlocks build_blocks(const ModelParams& p, const Limits& limits = {});

struct Level {
    double energy = 0.0;
    Parity parity = Parity::Even;
};

struct SpectrumResult {
    /// Ascending, merged over both blocks.
    std::vector<Level> levels;
    /// Unit ground vector over the ground block's basis (m ascending from -j).
    std::vector<double> ground_vector;
    Parity ground_parity = Parity::Even;
    double ground_first_m = 0.0;
};

/// Block holding the ground state. Ground energies that coincide to within
/// 1e-12 relative (region II quasi-degeneracy) resolve to the even block, so
/// the choice is deterministic.
Parity ground_parity(double e_even, double e_odd) noexcept;

/// Parity of the block containing the ground state of `blocks`.
Parity ground_block(const ParityBlocks& blocks);

/// Lowest eigenvalue of a single block (bisection). Throws ConvergenceError
/// tagged with the block and N.
double block_ground_energy(const ParityBlocks& blocks, Parity parity);

/// Unit ground vector of a single block, sign-fixed so its largest component is positive.
std::vector<double> block_ground_vector(const ParityBlocks& blocks, Parity parity, double energy);

/// Lowest level, its parity and its eigenvector.
SpectrumResult ground_state(const ModelParams& p, const Limits& limits = {});

/// Lowest `k` levels of the combined spectrum plus the ground vector.
SpectrumResult low_spectrum(const ModelParams& p, std::size_t k, const Limits& limits = {});

struct ExcitationGaps {
    double first = 0.0;
    double second = 0.0;
    Parity first_parity = Parity::Even;
    Parity second_parity = Parity::Even;
};

/// E1 - E0 and E2 - E0 of the combined spectrum. Requires N >= 2.
ExcitationGaps excitation_gaps(const ModelParams& p, const Limits& limits = {});

/// 2 <Jz> / N + 1 in the exact ground state.
double n_e_exact(const ModelParams& p, const Limits& limits = {});

/// |<psi0(gamma_x)|psi0(gamma_x + dgamma_x)>|^2.
/// Throws ParityMismatch when the two ground states lie in different blocks.
double fidelity(const ModelParams& p, double dgamma_x, const Limits& limits = {});

/// Writes blocks and ground vector in the line format
/// `# N j parity kind` followed by `m value` lines, kind in {diag, offdiag, ground}.
void write_dump(std::ostream& os, const ParityBlocks& blocks, const SpectrumResult& ground);

}  // namespace lipkin::exact
