#include "lipkin/dense.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace lipkin::dense {

namespace {

Eigen::MatrixXd build(const ModelParams& p) {
    validate(p);
    const Eigen::Index dim = p.n_atoms + 1;
    const double j = p.spin();
    Eigen::MatrixXd jz = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd jplus = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        const double m = -j + static_cast<double>(k);
        jz(k, k) = m;
        if (k + 1 < dim) jplus(k + 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
    const Eigen::MatrixXd jminus = jplus.transpose();
    const Eigen::MatrixXd jx = 0.5 * (jplus + jminus);
    // Jy = (J+ - J-) / 2i, so Jy^2 = -(J+ - J-)^2 / 4 is real.
    const Eigen::MatrixXd diff = jplus - jminus;
    const Eigen::MatrixXd jy2 = -0.25 * diff * diff;
    const double n = p.n();
    return p.epsilon * jz + (p.gamma_x / n) * (jx * jx) + (p.gamma_y / n) * jy2;
}

}  // namespace

std::vector<double> hamiltonian(const ModelParams& p) {
    const Eigen::MatrixXd h = build(p);
    std::vector<double> out(static_cast<std::size_t>(h.size()));
    Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(out.data(), h.rows(),
                                                                                        h.cols()) = h;
    return out;
}

std::vector<double> eigenvalues(const ModelParams& p) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(build(p), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& v = solver.eigenvalues();
    return {v.data(), v.data() + v.size()};
}

double parity_commutator_norm(const ModelParams& p) {
    const Eigen::MatrixXd h = build(p);
    Eigen::VectorXd sign(h.rows());
    for (Eigen::Index k = 0; k < h.rows(); ++k) sign(k) = (k % 2 == 0) ? 1.0 : -1.0;
    const Eigen::MatrixXd parity = sign.asDiagonal();
    return (h * parity - parity * h).cwiseAbs().maxCoeff();
}

}  // namespace lipkin::dense
