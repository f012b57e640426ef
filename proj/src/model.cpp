#include "lipkin/model.hpp"

#include <cmath>
#include <string>

#include "lipkin/error.hpp"

namespace lipkin {

void validate(const ModelParams& p) {
    if (!std::isfinite(p.epsilon) || !(p.epsilon > 0.0)) {
        throw InvalidParams("epsilon must be finite and > 0, got " + std::to_string(p.epsilon));
    }
    if (!std::isfinite(p.gamma_x) || !std::isfinite(p.gamma_y)) {
        throw InvalidParams("couplings must be finite");
    }
    if (p.n_atoms < 1) {
        throw InvalidParams("n_atoms must be >= 1, got " + std::to_string(p.n_atoms));
    }
}

ModelParams make_params(double epsilon, double gamma_x, double gamma_y, std::int64_t n_atoms) {
    ModelParams p{epsilon, gamma_x, gamma_y, n_atoms};
    validate(p);
    return p;
}

std::string_view to_string(PhaseRegion r) noexcept {
    switch (r) {
        case PhaseRegion::NormalI: return "NormalI";
        case PhaseRegion::DeformedII: return "DeformedII";
        case PhaseRegion::DeformedIII: return "DeformedIII";
        case PhaseRegion::BoundaryI_II: return "BoundaryI_II";
        case PhaseRegion::BoundaryI_III: return "BoundaryI_III";
        case PhaseRegion::TriplePoint: return "TriplePoint";
    }
    return "?";
}

PhaseRegion classify_phase(const ModelParams& p, ClassifyOptions opts) {
    validate(p);
    const double gc = p.gamma_c();
    const double tol = opts.tolerance;
    const bool x_at = std::abs(p.gamma_x - gc) <= tol;
    const bool y_at = std::abs(p.gamma_y - gc) <= tol;
    const bool x_below = p.gamma_x < gc - tol;
    const bool y_below = p.gamma_y < gc - tol;

    if (x_at && y_at) return PhaseRegion::TriplePoint;
    if (x_below && p.gamma_x <= p.gamma_y) return PhaseRegion::DeformedII;
    if (y_below && p.gamma_x > p.gamma_y) return PhaseRegion::DeformedIII;
    if (x_at) return PhaseRegion::BoundaryI_II;
    if (y_at) return PhaseRegion::BoundaryI_III;
    return PhaseRegion::NormalI;
}

Canonical canonicalize(const ModelParams& p, ClassifyOptions opts) {
    if (classify_phase(p, opts) != PhaseRegion::DeformedIII) return {p, false};
    ModelParams q = p;
    q.gamma_x = p.gamma_y;
    q.gamma_y = p.gamma_x;
    return {q, true};
}

}  // namespace lipkin
