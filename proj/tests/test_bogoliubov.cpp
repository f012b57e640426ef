#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <vector>

#include "lipkin/bogoliubov.hpp"
#include "lipkin/error.hpp"
#include "lipkin/meanfield.hpp"

using namespace lipkin;
using namespace lipkin::bogoliubov;

namespace {

struct FockGround {
    double energy;
    double occupation;
};

// A + B n + C (c'^2 + c^2) on a truncated Fock space, diagonalised densely.
FockGround fock_ground(const Coefficients& k, int levels) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(levels, levels);
    for (int n = 0; n < levels; ++n) {
        h(n, n) = k.a + k.b * n;
        if (n + 2 < levels) {
            h(n + 2, n) = h(n, n + 2) = k.c * std::sqrt((n + 1.0) * (n + 2.0));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    const Eigen::VectorXd v = es.eigenvectors().col(0);
    double occ = 0.0;
    for (int n = 0; n < levels; ++n) occ += n * v(n) * v(n);
    return {es.eigenvalues()(0), occ};
}

ModelParams draw_region(std::mt19937_64& rng, bool deformed, double margin = 0.05) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double eps = 0.5 + 1.5 * u(rng);
    const double gc = -eps;
    const std::int64_t n = 10 + static_cast<std::int64_t>(990 * u(rng));
    if (!deformed) return {eps, gc + margin + 3.0 * u(rng), gc + margin + 3.0 * u(rng), n};
    const double gx = gc - margin - 2.5 * u(rng);
    return {eps, gx, gx + margin + 3.0 * u(rng), n};
}

}  // namespace

TEST_SUITE("bogoliubov") {

TEST_CASE("coefficient examples") {
    auto k = truncated_coefficients({1, 0, 1, 10});
    CHECK(k.a == doctest::Approx(-4.75));
    CHECK(k.b == doctest::Approx(1.5));
    CHECK(k.c == doctest::Approx(-0.25));
    k = truncated_coefficients({1, 0.4, 0.4, 10});
    CHECK(k.c == 0.0);
    k = truncated_coefficients({1, -2, 1, 100});
    CHECK(k.b == doctest::Approx(2.125));
    CHECK(k.c == doctest::Approx(-0.0625));
    CHECK_THROWS_AS(truncated_coefficients({1, 1, -2, 100}), DomainError);
}

TEST_CASE("gap examples") {
    CHECK(gap({1, 1, 1, 10}) == doctest::Approx(2.0));
    CHECK(gap({1, -1, 1, 10}) == 0.0);
    CHECK(gap({1, -2, 1, 10}) == doctest::Approx(std::sqrt(4.5)));
    CHECK(gap({1, -2, 1, 10}, GapForm::Coefficient) == doctest::Approx(std::sqrt(4.5)));
}

TEST_CASE("truncated observables examples") {
    auto s = truncated_solution({1, 0, 1, 10});
    CHECK(s.e_gs_t == doctest::Approx(-0.5 - 0.05 + std::sqrt(2.0) / 20.0).epsilon(1e-14));
    CHECK(s.n_e_t == doctest::Approx(3.0 / (20.0 * std::sqrt(2.0)) - 0.1).epsilon(1e-13));
    CHECK(s.e_gs_from_coefficients == doctest::Approx(s.e_gs_t).epsilon(1e-14));

    // cosh(Theta) = B / Delta = 2.125 / sqrt(4.5); n_e = 0.5 + (cosh - 1) / 100.
    s = truncated_solution({1, -2, 1, 100});
    const double cosh_theta = 2.125 / std::sqrt(4.5);
    CHECK(s.n_e_t == doctest::Approx(0.5 + (cosh_theta - 1.0) / 100.0).epsilon(1e-14));
    CHECK(s.n_e_t == doctest::Approx(0.5000173).epsilon(1e-7));
    CHECK(std::tanh(s.theta) == doctest::Approx(-2.0 * s.c_coef / s.b_coef));

    CHECK_THROWS_AS(truncated_solution({1, -1, 1, 10}), SingularPoint);
    CHECK_THROWS_AS(truncated_solution({1, -1 + 1e-13, 1, 10}), SingularPoint);
    CHECK_NOTHROW(truncated_solution({1, -1 + 1e-9, 1, 10}));
    TruncatedOptions wide;
    wide.singular_guard = 1e-6;
    CHECK_THROWS_AS(truncated_solution({1, -1 + 1e-9, 1, 10}, wide), SingularPoint);
}

TEST_CASE("large N approaches the mean-field values") {
    for (const ModelParams base : {ModelParams{1, 0.5, 1, 1}, ModelParams{1, -2.5, 1, 1}}) {
        const auto p = base.with_n(std::int64_t{1} << 40);
        const auto s = truncated_solution(p);
        const auto mf = meanfield::mf_observables(p);
        CHECK(s.e_gs_t == doctest::Approx(mf.e_gs).epsilon(1e-10));
        CHECK(s.n_e_t == doctest::Approx(mf.n_e).epsilon(1e-10));
    }
}

TEST_CASE("oracle: truncated Fock-space diagonalisation") {
    std::mt19937_64 rng(31);
    for (bool deformed : {false, true}) {
        for (int i = 0; i < 20; ++i) {
            // Margin keeps the squeezing moderate so 400 Fock levels converge.
            const ModelParams p = draw_region(rng, deformed, 0.5);
            TruncatedOptions opts;
            opts.gap_form = GapForm::Coefficient;
            const auto s = truncated_solution(p, opts);
            const auto f = fock_ground({s.a_coef, s.b_coef, s.c_coef}, 400);
            CHECK(f.energy / p.n() == doctest::Approx(s.e_gs_from_coefficients).epsilon(1e-10));
            const double ne = 2.0 / p.n() * (meanfield::critical_point(p).rho_c * meanfield::critical_point(p).rho_c + f.occupation);
            CHECK(ne == doctest::Approx(s.n_e_t).epsilon(1e-9));
        }
    }
}

TEST_CASE("property: energy identity and closed-form excited fraction") {
    std::mt19937_64 rng(32);
    for (bool deformed : {false, true}) {
        for (int i = 0; i < 100; ++i) {
            const ModelParams p = draw_region(rng, deformed);
            const auto s = truncated_solution(p);
            CHECK(s.e_gs_from_coefficients == doctest::Approx(s.e_gs_t).epsilon(1e-12));
            CHECK(n_e_closed_form(p) == doctest::Approx(s.n_e_t).epsilon(1e-10));
            CHECK(std::abs(2.0 * s.c_coef) <= std::abs(s.b_coef));
            CHECK(std::isfinite(s.theta));
        }
    }
}

TEST_CASE("property: the linear term vanishes at rho_c") {
    std::mt19937_64 rng(33);
    for (bool deformed : {false, true}) {
        for (int i = 0; i < 100; ++i) {
            const ModelParams p = draw_region(rng, deformed);
            const double rho = meanfield::critical_point(p).rho_c;
            CHECK(std::abs(linear_coefficient(p, rho)) <= 1e-12 * std::max(1.0, rho * std::abs(p.gamma_x)));
        }
    }
}

TEST_CASE("oracle: linear term is half the slope of the extensive surface") {
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const ModelParams p = draw_region(rng, i % 2 == 0);
        const double rho = (0.1 + 0.8 * u(rng)) * std::sqrt(p.n());
        const double h = 1e-5 * std::sqrt(p.n());
        const double slope = (meanfield::energy_surface_extensive(p, rho + h, 0.0) -
                              meanfield::energy_surface_extensive(p, rho - h, 0.0)) /
                             (2.0 * h);
        CHECK(linear_coefficient(p, rho) == doctest::Approx(0.5 * slope).epsilon(1e-6).scale(1e-3));
    }
}

TEST_CASE("property: closed and coefficient gaps agree at large N") {
    std::mt19937_64 rng(35);
    for (bool deformed : {false, true}) {
        for (int i = 0; i < 50; ++i) {
            const ModelParams p = draw_region(rng, deformed).with_n(100000000);
            CHECK(gap(p, GapForm::Closed) == doctest::Approx(gap(p, GapForm::Coefficient)).epsilon(1e-10));
        }
    }
}

TEST_CASE("property: gap closes with exponent 1/2") {
    for (double side : {1.0, -1.0}) {
        std::vector<double> xs, ys;
        for (double d = 1e-6; d <= 1e-2 * 1.0001; d *= 10.0) {
            xs.push_back(std::log(d));
            ys.push_back(std::log(gap({1, -1 + side * d, 1, 100})));
        }
        const double slope = (ys.back() - ys.front()) / (xs.back() - xs.front());
        CHECK(slope == doctest::Approx(0.5).epsilon(0.02));
        for (std::size_t i = 1; i < xs.size(); ++i)
            CHECK((ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]) == doctest::Approx(0.5).epsilon(0.02));
    }
}

TEST_CASE("susceptibility coefficients") {
    auto j = chi_coefficients({1, 0, 1, 4});
    CHECK(j.j3_sq == 0.0);
    CHECK(j.j4 == doctest::Approx(std::sqrt(2.0)));
    j = chi_coefficients({1, -2, 1, 2});
    CHECK(j.j3_sq == doctest::Approx(0.25 * std::sqrt(4.5)));
    CHECK(j.two_boson_energy == doctest::Approx(2.0 * j.one_boson_energy));
    CHECK_THROWS_AS(chi_coefficients({1, -2, -2, 2}), SingularPoint);
}

TEST_CASE("truncated susceptibility examples") {
    CHECK(chi_f_truncated({1, 0, 1, 10}) == doctest::Approx(1.0 / 32.0).epsilon(1e-14));
    CHECK(chi_f_truncated({1, 0, 1, 12345}) == doctest::Approx(1.0 / 32.0).epsilon(1e-14));
    CHECK(chi_f_truncated({1, 1, 1, 10}) == doctest::Approx(1.0 / 128.0).epsilon(1e-14));
    for (std::int64_t n : {10, 100, 1000}) {
        const double expected = static_cast<double>(n) / (32.0 * std::sqrt(4.5)) + 25.0 / 41472.0;
        CHECK(chi_f_truncated({1, -2, 1, n}) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(chi_f_deformed_closed_form({1, -2, 1, n}) == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(1.0 / (32.0 * std::sqrt(4.5)) == doctest::Approx(0.0147314).epsilon(1e-6));
}

TEST_CASE("property: region I reduction and region II closed form") {
    std::mt19937_64 rng(36);
    for (int i = 0; i < 100; ++i) {
        const ModelParams p = draw_region(rng, false);
        const double d = p.gamma_x - p.gamma_c();
        CHECK(chi_f_truncated(p) == doctest::Approx(1.0 / (32.0 * d * d)).epsilon(1e-12));
    }
    for (int i = 0; i < 100; ++i) {
        const ModelParams p = draw_region(rng, true);
        CHECK(chi_f_deformed_closed_form(p) == doctest::Approx(chi_f_truncated(p)).epsilon(1e-10));
        CHECK(chi_f_truncated(p) > 0.0);
    }
}

TEST_CASE("special line") {
    const ModelParams p{1, -2, -1, 100};
    CHECK(chi_f_special_line(p) == doctest::Approx(100.0 / (32.0 * std::sqrt(1.5))).epsilon(1e-14));
    CHECK(chi_f_special_line(p) == doctest::Approx(2.552).epsilon(1e-3));
    CHECK(chi_f_special_line(p, SpecialLineForm::Literal) == doctest::Approx(-chi_f_special_line(p)).epsilon(1e-14));
    CHECK(chi_f_special_line(p.with_n(200)) == doctest::Approx(2.0 * chi_f_special_line(p)));
    for (double gx = -1.01; gx > -5.0; gx -= 0.1) CHECK(chi_f_special_line({1, gx, -1, 50}) > 0.0);
    CHECK_THROWS_AS(chi_f_special_line({1, -2, 1, 100}), DomainError);
    CHECK_THROWS_AS(chi_f_special_line({1, -0.5, -1, 100}), DomainError);
    CHECK_NOTHROW(chi_f_special_line({1, -2, -1 + 1e-12, 100}, SpecialLineForm::RealForm, 1e-10));
}

}  // TEST_SUITE
