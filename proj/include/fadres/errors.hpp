#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fadres {

// Base class for every deliberate failure raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid argument outside the documented domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Iteration or subdivision budget exhausted before the tolerance was met.
struct NonConvergence : Error {
    using Error::Error;
};

struct PoleOutsideInterval : DomainError {
    using DomainError::DomainError;
};

struct NoSignChange : DomainError {
    using DomainError::DomainError;
};

struct DerivativeVanished : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

// Closed-form loop integral evaluated outside its principal branch,
// Re(1 - i*t0) <= 0.
struct BranchError : DomainError {
    using DomainError::DomainError;
};

struct NoPoleFound : Error {
    using Error::Error;
};

// Real-axis pole of the two-body amplitude: |1 + lambda*I(t0)| below threshold.
class EtaPole : public Error {
public:
    explicit EtaPole(double t0)
        : Error("two-body amplitude pole at t0 = " + std::to_string(t0)),
          t0_(t0) {}
    double t0() const { return t0_; }

private:
    double t0_;
};

// det(I - K*eta) below threshold: the scan hit an exact three-body resonance.
class ResonanceSingularity : public Error {
public:
    ResonanceSingularity(double t0, double rho)
        : Error("three-body resonance singularity at t0 = " + std::to_string(t0)
                + ", rho = " + std::to_string(rho)),
          t0_(t0), rho_(rho) {}
    double t0() const { return t0_; }
    double rho() const { return rho_; }

private:
    double t0_;
    double rho_;
};

// Aggregate integration path crossed too many singular t0 nodes.
class SingularPath : public Error {
public:
    explicit SingularPath(std::vector<double> nodes)
        : Error("singular t0 nodes on integration path ("
                + std::to_string(nodes.size()) + " hits)"),
          nodes_(std::move(nodes)) {}
    const std::vector<double>& nodes() const { return nodes_; }

private:
    std::vector<double> nodes_;
};

} // namespace fadres
