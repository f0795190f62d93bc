#pragma once

#include <stdexcept>
#include <string>

namespace hd {

// Bad argument or parameter set (maps to exit code 2 in the CLI).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Quantum numbers that the counting-number convention cannot handle.
class InvalidState : public DomainError {
public:
    using DomainError::DomainError;
};

// The requested energy does not describe a normalizable bound state.
class NotBoundState : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shooting found no eigenvalue with the requested node count.
class NoEigenvalue : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The integrator produced non-finite values.
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hd
