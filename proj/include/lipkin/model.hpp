#pragma once

#include <cstdint>
#include <string_view>

namespace lipkin {

/// Couplings of H = eps Jz + (gx/N) Jx^2 + (gy/N) Jy^2 and the atom count N.
///
/// The critical coupling gamma_c = -epsilon is derived on demand and never
/// stored, so an inconsistent (epsilon, gamma_c) pair cannot exist.
struct ModelParams {
    double epsilon = 1.0;
    double gamma_x = 0.0;
    double gamma_y = 0.0;
    std::int64_t n_atoms = 1;

    double gamma_c() const noexcept { return -epsilon; }
    /// Total quasi-spin j = N/2.
    double spin() const noexcept { return 0.5 * static_cast<double>(n_atoms); }
    double n() const noexcept { return static_cast<double>(n_atoms); }

    ModelParams with_gamma_x(double gx) const noexcept {
        ModelParams p = *this;
        p.gamma_x = gx;
        return p;
    }
    ModelParams with_n(std::int64_t n) const noexcept {
        ModelParams p = *this;
        p.n_atoms = n;
        return p;
    }
};

/// Throws InvalidParams unless epsilon > 0, N >= 1 and all couplings are finite.
void validate(const ModelParams& p);

/// Validating constructor.
ModelParams make_params(double epsilon, double gamma_x, double gamma_y, std::int64_t n_atoms);

enum class PhaseRegion {
    NormalI,
    DeformedII,
    DeformedIII,
    BoundaryI_II,
    BoundaryI_III,
    TriplePoint,
};

std::string_view to_string(PhaseRegion r) noexcept;

struct ClassifyOptions {
    /// Half-width of the band around gamma_c treated as equality. Zero means exact comparison.
    double tolerance = 0.0;
};

PhaseRegion classify_phase(const ModelParams& p, ClassifyOptions opts = {});

/// True for the tags whose mean-field minimum is rho_c = 0 (region I and its boundaries).
constexpr bool is_normal_branch(PhaseRegion r) noexcept {
    return r == PhaseRegion::NormalI || r == PhaseRegion::BoundaryI_II ||
           r == PhaseRegion::BoundaryI_III || r == PhaseRegion::TriplePoint;
}

struct Canonical {
    ModelParams params;
    bool swapped = false;
};

/// Maps region III onto region II by exchanging gamma_x and gamma_y (Jx <-> Jy).
/// Every other region is returned unchanged.
Canonical canonicalize(const ModelParams& p, ClassifyOptions opts = {});

}  // namespace lipkin
