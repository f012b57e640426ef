#pragma once

#include <cstddef>
#include <span>
#include <vector>

/// Real symmetric tridiagonal kernels: Sturm-sequence bisection, inverse
/// iteration, pivoted shifted solves and a full implicit-QL decomposition.
namespace lipkin::tridiag {

/// Non-owning view; off.size() == diag.size() - 1 (or both empty).
struct SymTridiag {
    std::span<const double> diag;
    std::span<const double> off;

    std::size_t size() const noexcept { return diag.size(); }
};

/// Number of eigenvalues strictly below x.
std::size_t count_below(const SymTridiag& t, double x);

/// Gershgorin enclosure [lo, hi] of the spectrum.
std::pair<double, double> gershgorin(const SymTridiag& t);

/// k-th smallest eigenvalue (0-based) by bisection to machine precision.
double eigenvalue(const SymTridiag& t, std::size_t k);

/// Unit eigenvector for an accurate eigenvalue `lambda`, by inverse iteration.
/// Sign convention: the largest-magnitude component is positive.
/// Throws ConvergenceError if the residual stays large.
std::vector<double> eigenvector(const SymTridiag& t, double lambda);

/// y = T x
void multiply(const SymTridiag& t, std::span<const double> x, std::span<double> y);

/// LU factorisation with partial pivoting of (T - shift I). Exactly zero pivots
/// are replaced by eps * ||T|| so a shift sitting on an eigenvalue still yields
/// a usable (large along the eigenvector) solution.
class ShiftedFactor {
public:
    ShiftedFactor(const SymTridiag& t, double shift);

    /// Overwrites rhs with (T - shift)^{-1} rhs.
    void solve(std::span<double> rhs) const;

    std::size_t size() const noexcept { return d_.size(); }

private:
    std::vector<double> dl_, d_, du_, du2_;
    std::vector<unsigned char> swapped_;
};

struct Eigensystem {
    std::size_t n = 0;
    /// Ascending.
    std::vector<double> values;
    /// Column-major: eigenvector k occupies [k*n, (k+1)*n).
    std::vector<double> vectors;

    std::span<const double> vector(std::size_t k) const { return {vectors.data() + k * n, n}; }
};

/// All eigenpairs via implicit QL with Wilkinson shifts. O(n^2) memory.
Eigensystem full_eigensystem(const SymTridiag& t);

}  // namespace lipkin::tridiag
