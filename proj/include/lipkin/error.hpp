#pragma once

#include <stdexcept>
#include <string>

namespace lipkin {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameters violate ModelParams invariants (epsilon <= 0, N < 1, non-finite couplings).
class InvalidParams : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of a formula (region III input, rho^2 > N, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Truncated-Hamiltonian formula evaluated inside its singular guard.
class SingularPoint : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Ground states at two parameter points live in different parity blocks.
class ParityMismatch : public Error {
public:
    using Error::Error;
};

/// Requested size exceeds a configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Near-degenerate same-parity levels make the resolvent solve unreliable.
class IllConditioned : public Error {
public:
    using Error::Error;
};

class FitError : public Error {
public:
    using Error::Error;
};

}  // namespace lipkin
