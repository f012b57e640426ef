#pragma once

#include <cstdint>
#include <string>
#include <vector>

/// Cross-evaluator consistency checks over seeded random parameter draws.
namespace lipkin::validation {

struct CompareConfig {
    std::uint64_t seed = 1;
    std::int64_t dense_max_n = 12;
    int dense_sets = 50;
    std::int64_t chi_n = 200;
    int chi_sets = 10;
    int minimizer_sets = 10;
    double fd_delta = 1e-4;

    double tol_eigen = 1e-10;
    double tol_chi_sum = 1e-8;
    double tol_chi_fd = 1e-3;
    /// In units of sqrt(N).
    double tol_rho = 1e-5;

    int jobs = 0;
};

struct Check {
    std::string name;
    int samples = 0;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct CompareReport {
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    bool all_pass() const noexcept {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Dense vs parity-block eigenvalues, the parity commutator, chi_F sum vs
/// resolvent vs finite difference, and analytic vs numeric mean-field rho_c.
CompareReport run_compare(const CompareConfig& cfg);

}  // namespace lipkin::validation
