#pragma once

#include <vector>

#include "lipkin/model.hpp"

/// Dense (N+1) x (N+1) reference built from explicit angular-momentum
/// matrices. Validation only; cost is O(N^3).
namespace lipkin::dense {

/// Row-major H in the |j, m> basis, m ascending from -j.
std::vector<double> hamiltonian(const ModelParams& p);

/// All eigenvalues of the dense matrix, ascending.
std::vector<double> eigenvalues(const ModelParams& p);

/// max |[H, P]| with P = diag((-1)^(m+j)).
double parity_commutator_norm(const ModelParams& p);

}  // namespace lipkin::dense
