#include "lipkin/bogoliubov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lipkin/error.hpp"
#include "lipkin/meanfield.hpp"

namespace lipkin::bogoliubov {

namespace {

// Normal branch (rho_c = 0) or region II; anything else is rejected.
bool normal_branch(const ModelParams& p, const char* who) {
    const PhaseRegion region = classify_phase(p);
    if (region == PhaseRegion::DeformedIII) {
        throw DomainError(std::string(who) + ": region III input, canonicalize first");
    }
    return is_normal_branch(region);
}

double rho_c_squared(const ModelParams& p, bool normal) {
    return normal ? 0.0 : 0.5 * p.n() * (1.0 - p.gamma_c() / p.gamma_x);
}

void guard(const ModelParams& p, bool normal, double width, const char* who) {
    const double gc = p.gamma_c();
    if (std::abs(p.gamma_x - gc) <= width) {
        throw SingularPoint(std::string(who) + ": singular at transition gamma_x = gamma_c");
    }
    if (normal && std::abs(p.gamma_y - gc) <= width) {
        throw SingularPoint(std::string(who) + ": gap closes at gamma_y = gamma_c in region I");
    }
    if (!normal && std::abs(p.gamma_x - p.gamma_y) <= width) {
        throw SingularPoint(std::string(who) + ": gap closes at gamma_x = gamma_y in region II");
    }
}

double closed_gap(const ModelParams& p, bool normal) {
    const double gc = p.gamma_c();
    const double gx = p.gamma_x;
    if (normal) return std::sqrt(std::max(0.0, (gx - gc) * (p.gamma_y - gc)));
    return std::sqrt(std::max(0.0, (gx * gx - gc * gc) * (gx - p.gamma_y) / gx));
}

}  // namespace

Coefficients truncated_coefficients(const ModelParams& p) {
    const bool normal = normal_branch(p, "truncated_coefficients");
    const double n = p.n();
    const double r2 = rho_c_squared(p, normal);
    const double gc = p.gamma_c();
    const double gx = p.gamma_x;
    const double gy = p.gamma_y;
    Coefficients k;
    k.a = -gc * (r2 - n / 2.0) + gx / (4.0 * n) * (n - 3.0 * r2 + 4.0 * r2 * (n - r2)) + gy / (4.0 * n) * (n - r2);
    k.b = -gc + (n - 7.0 * r2) * gx / (2.0 * n) + (n - r2) * gy / (2.0 * n);
    k.c = (n - 5.0 * r2) * gx / (4.0 * n) - (n - r2) * gy / (4.0 * n);
    return k;
}

double linear_coefficient(const ModelParams& p, double rho) {
    validate(p);
    return rho * (p.epsilon + p.gamma_x * (1.0 - 2.0 * rho * rho / p.n()));
}

double gap(const ModelParams& p, GapForm form) {
    const bool normal = normal_branch(p, "gap");
    if (form == GapForm::Closed) return closed_gap(p, normal);
    const Coefficients k = truncated_coefficients(p);
    return std::sqrt(std::max(0.0, k.b * k.b - 4.0 * k.c * k.c));
}

TruncatedSolution truncated_solution(const ModelParams& p, TruncatedOptions opts) {
    const bool normal = normal_branch(p, "truncated_solution");
    guard(p, normal, opts.singular_guard, "truncated_solution");

    const double n = p.n();
    const double gc = p.gamma_c();
    const double gx = p.gamma_x;
    const Coefficients k = truncated_coefficients(p);

    TruncatedSolution s;
    s.a_coef = k.a;
    s.b_coef = k.b;
    s.c_coef = k.c;
    s.gap = gap(p, opts.gap_form);
    s.theta = std::atanh(-2.0 * k.c / k.b);

    // cosh(Theta) = |B| / Delta avoids evaluating Theta itself near the transition.
    const double cosh_theta = std::abs(k.b) / s.gap;
    const double sinh_half_sq = 0.5 * (cosh_theta - 1.0);
    s.n_e_t = 2.0 / n * (rho_c_squared(p, normal) + sinh_half_sq);

    if (normal) {
        s.e_gs_t = gc / 2.0 + gc / (2.0 * n) + s.gap / (2.0 * n);
    } else {
        s.e_gs_t = (gc * gc + gx * gx) / (4.0 * gx) + gx / (2.0 * n) + s.gap / (2.0 * n);
    }
    s.e_gs_from_coefficients = (k.a + 0.5 * (s.gap - k.b)) / n;
    return s;
}

double n_e_closed_form(const ModelParams& p) {
    const bool normal = normal_branch(p, "n_e_closed_form");
    guard(p, normal, 0.0, "n_e_closed_form");
    const double n = p.n();
    const double gc = p.gamma_c();
    const double gx = p.gamma_x;
    const double gy = p.gamma_y;
    if (normal) {
        return (gx + gy - 2.0 * gc) / (2.0 * n * std::sqrt((gx - gc) * (gy - gc))) - 1.0 / n;
    }
    // sqrt(gx - gc) * sqrt(gx (gc + gx)(gx - gy)) = (i)(i) sqrt(|.| |.|)
    const double num = gc * gy + gx * (3.0 * gc - 5.0 * gx + gy);
    const double den = std::sqrt((gc - gx) * (-gx * (gc + gx) * (gx - gy)));
    return (gx - gc) / gx - num / (4.0 * n * den) - 1.0 / n;
}

ChiCoefficients chi_coefficients(const ModelParams& p, TruncatedOptions opts) {
    const bool normal = normal_branch(p, "chi_coefficients");
    guard(p, normal, opts.singular_guard, "chi_coefficients");
    const double n = p.n();
    const double gc = p.gamma_c();
    const double gx = p.gamma_x;
    const double gy = p.gamma_y;
    const double delta = gap(p, opts.gap_form);

    ChiCoefficients j;
    j.one_boson_energy = delta;
    j.two_boson_energy = 2.0 * delta;
    if (normal) {
        j.j3_sq = 0.0;
        j.j4 = n / 4.0 * std::sqrt((gy - gc) / (gx - gc));
        return j;
    }
    j.j3_sq = -n * n * n * gc * gc / (4.0 * gx * gx * gx) * delta;
    const double num = gc * gc * (5.0 * gx - 3.0 * gy) - gc * gx * (gy + 3.0 * gx) + 2.0 * gx * gx * gy;
    j.j4 = -n * num / (8.0 * gx * std::sqrt(gx * (gx * gx - gc * gc) * (gx - gy)));
    return j;
}

double chi_f_truncated(const ModelParams& p, TruncatedOptions opts) {
    const ChiCoefficients j = chi_coefficients(p, opts);
    const double n = p.n();
    const double e1 = j.one_boson_energy;
    const double e2 = j.two_boson_energy;
    // <1|a'+a|0> = 1, <2|a'^2 + a^2|0> = sqrt(2).
    return j.j3_sq / (n * n * e1 * e1) + 2.0 * j.j4 * j.j4 / (n * n * e2 * e2);
}

double chi_f_deformed_closed_form(const ModelParams& p) {
    if (normal_branch(p, "chi_f_deformed_closed_form")) {
        throw DomainError("chi_f_deformed_closed_form: region II only");
    }
    guard(p, false, 0.0, "chi_f_deformed_closed_form");
    const double n = p.n();
    const double gc = p.gamma_c();
    const double gx = p.gamma_x;
    const double gy = p.gamma_y;
    // Both square roots carry a factor i; their ratio is real.
    const double leading = -n * gc * gc / (4.0 * gx * gx * gx) *
                           std::sqrt(-gx / ((gc + gx) * (gx - gy))) / std::sqrt(gc - gx);
    const double bracket = gc * gx * (-5.0 * gc + 3.0 * gx) + (3.0 * gc - 2.0 * gx) * (gc + gx) * gy;
    const double sub = bracket * bracket / ((gc - gx) * (gc - gx) * 128.0 * gx * gx * (gc + gx) * (gc + gx) *
                                            (gx - gy) * (gx - gy));
    return leading + sub;
}

double chi_f_special_line(const ModelParams& p, SpecialLineForm form, double line_tolerance) {
    validate(p);
    const double gc = p.gamma_c();
    const double gx = p.gamma_x;
    if (std::abs(p.gamma_y - gc) > line_tolerance) {
        throw DomainError("chi_f_special_line: requires gamma_y = gamma_c");
    }
    if (!(gx < gc)) throw DomainError("chi_f_special_line: requires gamma_x < gamma_c");
    const double n = p.n();
    if (form == SpecialLineForm::Literal) {
        return -n / (gx - gc) * gc * gc / (4.0 * gx * gx * gx) * std::sqrt(gx / (gx + gc));
    }
    const double delta = std::sqrt((gx * gx - gc * gc) * (gx - gc) / gx);
    return -n * gc * gc / (4.0 * gx * gx * gx * delta);
}

}  // namespace lipkin::bogoliubov
