#include <doctest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "lipkin/bogoliubov.hpp"
#include "lipkin/dense.hpp"
#include "lipkin/error.hpp"
#include "lipkin/spectrum.hpp"

using namespace lipkin;
using namespace lipkin::exact;

namespace {

ModelParams random_params(std::mt19937_64& rng, std::int64_t max_n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return {0.5 + 1.5 * u(rng), -3 + 6 * u(rng), -3 + 6 * u(rng), 1 + static_cast<std::int64_t>(u(rng) * max_n)};
}

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("block examples") {
    auto b = build_blocks({1, 1, 1, 2});
    REQUIRE(b.even.size() == 2);
    REQUIRE(b.odd.size() == 1);
    CHECK(b.even.diag[0] == doctest::Approx(-0.5));
    CHECK(b.even.diag[1] == doctest::Approx(1.5));
    CHECK(b.odd.diag[0] == doctest::Approx(1.0));
    CHECK(b.even.m(0) == -1.0);
    CHECK(b.even.m(1) == 1.0);
    CHECK(b.odd.m(0) == 0.0);
    CHECK(b.even.off[0] == 0.0);

    b = build_blocks({1, -2, 0, 2});
    CHECK(b.even.diag[0] == doctest::Approx(-1.5));
    CHECK(b.even.diag[1] == doctest::Approx(0.5));
    CHECK(b.even.off[0] == doctest::Approx(-0.5));

    b = build_blocks({1, 0.7, 0.7, 9});
    for (double x : b.even.off) CHECK(x == 0.0);
    for (double x : b.odd.off) CHECK(x == 0.0);
}

TEST_CASE("block structure") {
    for (std::int64_t n : {1, 2, 5, 10, 101}) {
        const auto b = build_blocks({1, -1.3, 0.4, n});
        CHECK(b.even.size() + b.odd.size() == static_cast<std::size_t>(n + 1));
        CHECK(b.even.m(0) == -0.5 * static_cast<double>(n));
        CHECK(b.odd.m(0) == -0.5 * static_cast<double>(n) + 1.0);
        CHECK(b.even.off.size() + 1 == b.even.size());
    }
    Limits small;
    small.max_n = 64;
    CHECK_THROWS_AS(build_blocks({1, 0, 0, 65}, small), CapExceeded);
    CHECK_NOTHROW(build_blocks({1, 0, 0, 64}, small));
}

TEST_CASE("ground state examples") {
    auto g = ground_state({1, 1, 1, 2});
    CHECK(g.levels[0].energy == doctest::Approx(-0.5));
    CHECK(g.ground_parity == Parity::Even);
    CHECK(g.ground_vector[0] == doctest::Approx(1.0));

    g = ground_state({1, -2, 0, 2});
    CHECK(std::abs(g.levels[0].energy - (-1.0 - std::sqrt(5.0)) / 2.0) <= 1e-12);

    double previous = 1.0;
    for (std::int64_t n : {10, 100, 1000, 10000}) {
        const double dev = std::abs(ground_state({1, 0, 1, n}).levels[0].energy / static_cast<double>(n) + 0.5);
        CHECK(dev < previous);
        previous = dev;
    }
    CHECK(previous < 1e-4);
}

TEST_CASE("excitation gap examples") {
    const auto gaps = excitation_gaps({1, 1, 1, 2});
    CHECK(gaps.first == doctest::Approx(1.5));
    CHECK(gaps.second == doctest::Approx(2.0));
    CHECK_THROWS(excitation_gaps({1, 1, 1, 1}));

    // Region II: quasi-degenerate doublet, second gap tracks Delta.
    const ModelParams deformed{1, -2, 1, 1000};
    const auto d = excitation_gaps(deformed);
    CHECK(d.first < 1e-6);
    CHECK(std::abs(d.second - bogoliubov::gap(deformed)) / bogoliubov::gap(deformed) <= 0.05);

    // Region I away from gamma_c: first gap tracks Delta.
    const ModelParams normal{1, 1, 1, 1000};
    CHECK(std::abs(excitation_gaps(normal).first - 2.0) / 2.0 <= 0.02);
}

TEST_CASE("property: region II doublet closes with N") {
    double previous = 1e300;
    for (std::int64_t n = 20; n <= 200; n += 20) {
        const double g = excitation_gaps({1, -2, 1, n}).first;
        // Below the roundoff floor of E0 ~ N the splitting is noise.
        const double floor = 64.0 * 2.2e-16 * static_cast<double>(n);
        CHECK((g < previous || g <= floor));
        previous = g;
    }
    CHECK(previous < 1e-6);
}

TEST_CASE("property: second gap has its minimum near gamma_c at N = 40") {
    // E1 - E0 itself decreases into region II, where it closes; the gap that
    // stays open on both sides is E2 - E0.
    double best = 1e300, arg = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double gx = -2.0 + 0.01 * i;
        const double g = excitation_gaps({1, gx, 1, 40}).second;
        if (g < best) {
            best = g;
            arg = gx;
        }
    }
    CHECK(std::abs(arg - (-1.0)) <= 0.3);
}

TEST_CASE("excited fraction examples") {
    CHECK(std::abs(n_e_exact({1, 1, 1, 2})) <= 1e-15);
    for (std::int64_t n : {1, 2, 7, 50}) CHECK(n_e_exact({1, 0, 0, n}) == 0.0);
    CHECK(std::abs(n_e_exact({1, -2, 1, 40}) - 0.5) <= 0.05);
}

TEST_CASE("fidelity") {
    const ModelParams p{1, -0.4, 1, 60};
    CHECK(fidelity(p, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fidelity(p, 0.01) == doctest::Approx(fidelity(p.with_gamma_x(-0.39), -0.01)).epsilon(1e-12));
    CHECK(fidelity(p, 0.01) < 1.0);

    // The dip is deepest near the transition.
    double worst = 2.0, arg = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double gx = -0.01 * i;
        const double f = fidelity({1, gx, 1, 100}, -0.01);
        if (f < worst) {
            worst = f;
            arg = gx;
        }
    }
    CHECK(std::abs(arg - (-1.0)) <= 0.1);
}

TEST_CASE("fidelity across a parity switch is reported") {
    // On gamma_y = gamma_c the ground block alternates below gamma_c.
    const ModelParams a{1, -1.0 - 2.0 / 512, -1, 512};
    const ModelParams b{1, -1.0 - 2.4 / 512, -1, 512};
    REQUIRE(ground_state(a).ground_parity != ground_state(b).ground_parity);
    CHECK_THROWS_AS(fidelity(a, b.gamma_x - a.gamma_x), ParityMismatch);
}

TEST_CASE("property: blocks reproduce the dense spectrum") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 50; ++i) {
        const ModelParams p = random_params(rng, 12);
        const auto ref = dense::eigenvalues(p);
        const auto s = low_spectrum(p, static_cast<std::size_t>(p.n_atoms + 1));
        REQUIRE(s.levels.size() == ref.size());
        for (std::size_t k = 0; k < ref.size(); ++k) CHECK(std::abs(s.levels[k].energy - ref[k]) <= 1e-10);
        CHECK(dense::parity_commutator_norm(p) == 0.0);
    }
}

TEST_CASE("oracle: dense matrix from spin matrices") {
    // J+ built independently here; H assembled as eps Jz + gx/N Jx^2 + gy/N Jy^2.
    const ModelParams p{1.3, -0.7, 2.1, 7};
    const double j = p.spin();
    const int d = static_cast<int>(p.n_atoms) + 1;
    Eigen::MatrixXcd jp = Eigen::MatrixXcd::Zero(d, d), jz = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const double m = -j + i;
        jz(i, i) = m;
        if (i + 1 < d) jp(i + 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
    }
    const Eigen::MatrixXcd jx = 0.5 * (jp + jp.adjoint());
    const Eigen::MatrixXcd jy = std::complex<double>(0, -0.5) * (jp - jp.adjoint());
    const Eigen::MatrixXcd h = p.epsilon * jz + p.gamma_x / p.n() * jx * jx + p.gamma_y / p.n() * jy * jy;
    const Eigen::VectorXd ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h).eigenvalues();
    const auto s = low_spectrum(p, 8);
    for (int k = 0; k < d; ++k) CHECK(std::abs(s.levels[static_cast<std::size_t>(k)].energy - ref(k)) <= 1e-12);
}

TEST_CASE("property: ground vector is normalised and sign-fixed") {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 30; ++i) {
        const ModelParams p = random_params(rng, 400);
        const auto g = ground_state(p);
        double norm = 0.0, biggest = 0.0;
        for (double x : g.ground_vector) {
            norm += x * x;
            if (std::abs(x) > std::abs(biggest)) biggest = x;
        }
        CHECK(std::abs(std::sqrt(norm) - 1.0) <= 1e-12);
        CHECK(biggest > 0.0);
        const auto s = low_spectrum(p, 5);
        for (std::size_t k = 1; k < s.levels.size(); ++k) CHECK(s.levels[k - 1].energy <= s.levels[k].energy);
    }
}

TEST_CASE("ground block tie rule") {
    CHECK(ground_parity(-1.0, -1.0) == Parity::Even);
    CHECK(ground_parity(-1.0, -1.0 - 1e-14) == Parity::Even);
    CHECK(ground_parity(-1.0, -1.0 - 1e-9) == Parity::Odd);
    CHECK(ground_parity(-1.0, -0.5) == Parity::Even);
}

TEST_CASE("dump format") {
    const ModelParams p{1, -2, 0, 2};
    std::ostringstream os;
    write_dump(os, build_blocks(p), ground_state(p));
    const std::string text = os.str();
    CHECK(text.rfind("# 2 1 even diag\n-1 -1.5\n1 0.5\n", 0) == 0);
    CHECK(text.find("# 2 1 even offdiag\n-1 -0.5") != std::string::npos);
    CHECK(text.find("# 2 1 odd diag\n0 ") != std::string::npos);
    CHECK(text.find("# 2 1 even ground\n-1 ") != std::string::npos);
}

}  // TEST_SUITE
