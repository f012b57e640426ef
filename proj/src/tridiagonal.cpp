#include "lipkin/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "lipkin/error.hpp"

namespace lipkin::tridiag {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double pivot_floor(const SymTridiag& t) {
    double emax = 1.0;
    for (double e : t.off) emax = std::max(emax, e * e);
    return std::numeric_limits<double>::min() * emax;
}

double inf_norm(const SymTridiag& t) {
    const std::size_t n = t.size();
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::abs(t.diag[i]);
        if (i > 0) row += std::abs(t.off[i - 1]);
        if (i + 1 < n) row += std::abs(t.off[i]);
        norm = std::max(norm, row);
    }
    return norm;
}

void check_shape(const SymTridiag& t) {
    if (t.diag.empty()) throw DomainError("tridiagonal matrix is empty");
    if (t.off.size() + 1 != t.diag.size()) throw DomainError("tridiagonal off-diagonal has wrong length");
}

// Deterministic start vector with no special symmetry.
std::vector<double> start_vector(std::size_t n) {
    std::vector<double> x(n);
    std::uint64_t s = 0x9E3779B97F4A7C15ull;
    for (auto& v : x) {
        s ^= s >> 33;
        s *= 0xFF51AFD7ED558CCDull;
        s ^= s >> 29;
        v = 0.5 + static_cast<double>(s >> 11) * 0x1.0p-53;
    }
    return x;
}

double normalize(std::span<double> x) {
    const double nrm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    for (auto& v : x) v /= nrm;
    return nrm;
}

}  // namespace

std::size_t count_below(const SymTridiag& t, double x) {
    check_shape(t);
    const double pivmin = pivot_floor(t);
    std::size_t count = 0;
    double q = t.diag[0] - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < t.size(); ++i) {
        q = t.diag[i] - x - t.off[i - 1] * t.off[i - 1] / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

std::pair<double, double> gershgorin(const SymTridiag& t) {
    check_shape(t);
    const std::size_t n = t.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(t.off[i - 1]);
        if (i + 1 < n) radius += std::abs(t.off[i]);
        lo = std::min(lo, t.diag[i] - radius);
        hi = std::max(hi, t.diag[i] + radius);
    }
    const double pad = 2.0 * kEps * std::max(std::abs(lo), std::abs(hi)) + pivot_floor(t);
    return {lo - pad, hi + pad};
}

double eigenvalue(const SymTridiag& t, std::size_t k) {
    check_shape(t);
    if (k >= t.size()) throw DomainError("eigenvalue index " + std::to_string(k) + " out of range");
    auto [lo, hi] = gershgorin(t);
    const double pivmin = pivot_floor(t);
    // Invariant: count_below(lo) <= k < count_below(hi).
    for (int iter = 0; iter < 256; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 2.0 * kEps * std::max(std::abs(lo), std::abs(hi)) + pivmin || mid == lo || mid == hi) {
            return mid;
        }
        if (count_below(t, mid) > k) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    throw ConvergenceError("bisection did not converge");
}

void multiply(const SymTridiag& t, std::span<const double> x, std::span<double> y) {
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i) {
        double acc = t.diag[i] * x[i];
        if (i > 0) acc += t.off[i - 1] * x[i - 1];
        if (i + 1 < n) acc += t.off[i] * x[i + 1];
        y[i] = acc;
    }
}

ShiftedFactor::ShiftedFactor(const SymTridiag& t, double shift) {
    check_shape(t);
    const std::size_t n = t.size();
    dl_.assign(t.off.begin(), t.off.end());
    du_.assign(t.off.begin(), t.off.end());
    d_.resize(n);
    for (std::size_t i = 0; i < n; ++i) d_[i] = t.diag[i] - shift;
    du2_.assign(n > 2 ? n - 2 : 0, 0.0);
    swapped_.assign(n > 1 ? n - 1 : 0, 0);

    const double tiny = kEps * std::max(inf_norm(t), std::abs(shift)) + std::numeric_limits<double>::min();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d_[i]) >= std::abs(dl_[i])) {
            if (std::abs(d_[i]) < tiny) d_[i] = tiny;
            const double fact = dl_[i] / d_[i];
            dl_[i] = fact;
            d_[i + 1] -= fact * du_[i];
        } else {
            const double fact = d_[i] / dl_[i];
            d_[i] = dl_[i];
            dl_[i] = fact;
            const double tmp = du_[i];
            du_[i] = d_[i + 1];
            d_[i + 1] = tmp - fact * d_[i + 1];
            if (i + 2 < n) {
                du2_[i] = du_[i + 1];
                du_[i + 1] = -fact * du_[i + 1];
            }
            swapped_[i] = 1;
        }
    }
    if (std::abs(d_[n - 1]) < tiny) d_[n - 1] = tiny;
}

void ShiftedFactor::solve(std::span<double> b) const {
    const std::size_t n = d_.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (swapped_[i]) {
            const double tmp = b[i] - dl_[i] * b[i + 1];
            b[i] = b[i + 1];
            b[i + 1] = tmp;
        } else {
            b[i + 1] -= dl_[i] * b[i];
        }
    }
    b[n - 1] /= d_[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
    for (std::size_t i = n - 2; i-- > 0;) {
        b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
    }
}

std::vector<double> eigenvector(const SymTridiag& t, double lambda) {
    check_shape(t);
    const std::size_t n = t.size();
    std::vector<double> x = start_vector(n);
    if (n == 1) return {1.0};

    const ShiftedFactor lu(t, lambda);
    normalize(x);
    std::vector<double> prev(n);
    for (int iter = 0; iter < 8; ++iter) {
        prev = x;
        lu.solve(x);
        normalize(x);
        const double overlap = std::inner_product(x.begin(), x.end(), prev.begin(), 0.0);
        if (overlap < 0.0)
            for (auto& v : x) v = -v;
        if (iter >= 1 && std::abs(std::abs(overlap) - 1.0) < 1e-15) break;
    }

    std::vector<double> r(n);
    multiply(t, x, r);
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(r[i] - lambda * x[i]));
    const double scale = std::max(1.0, inf_norm(t));
    if (!(res <= 1e-9 * scale)) {
        throw ConvergenceError("inverse iteration residual " + std::to_string(res) + " too large (n=" +
                               std::to_string(n) + ")");
    }

    const auto big = std::max_element(x.begin(), x.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
    if (*big < 0.0)
        for (auto& v : x) v = -v;
    return x;
}

Eigensystem full_eigensystem(const SymTridiag& t) {
    check_shape(t);
    const std::size_t n = t.size();
    std::vector<double> d(t.diag.begin(), t.diag.end());
    std::vector<double> e(n, 0.0);
    std::copy(t.off.begin(), t.off.end(), e.begin());
    std::vector<double> z(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= kEps * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw ConvergenceError("implicit QL: too many iterations");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (std::size_t i = m; i-- > l;) {
                    const double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    double* zi = z.data() + i * n;
                    double* zi1 = z.data() + (i + 1) * n;
                    for (std::size_t k = 0; k < n; ++k) {
                        const double fk = zi1[k];
                        zi1[k] = s * zi[k] + c * fk;
                        zi[k] = c * zi[k] - s * fk;
                    }
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    Eigensystem out;
    out.n = n;
    out.values.resize(n);
    out.vectors.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = d[order[k]];
        std::copy_n(z.begin() + static_cast<std::ptrdiff_t>(order[k] * n), n,
                    out.vectors.begin() + static_cast<std::ptrdiff_t>(k * n));
    }
    return out;
}

}  // namespace lipkin::tridiag
