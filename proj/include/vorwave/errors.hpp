#pragma once

#include <stdexcept>
#include <string>

namespace vorwave {

/// Base class for all domain errors thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The surface slope parameter of the uniform stream vanishes; the trivial
/// solution would be identically zero and carries no Bernoulli data.
class DegenerateLambda : public Error {
public:
    using Error::Error;
};

/// The ODE step controller could not reach the requested accuracy.
class IntegrationFailure : public Error {
public:
    IntegrationFailure(const std::string& msg, double where)
        : Error(msg), location(where) {}
    double location; ///< y-coordinate at which integration broke down
};

/// Eigenvalue bracketing or root bracketing failed.
class SolverFailure : public Error {
public:
    using Error::Error;
};

/// tau^2 coincides (within the guard band) with the negative of a
/// nonpositive eigenvalue, where the normalized profile is undefined.
class ResonantTau : public Error {
public:
    using Error::Error;
};

/// The dispersion function has no positive root for this stream.
class NoBifurcation : public Error {
public:
    using Error::Error;
};

/// Amplitude outside the first-order validity window.
class AmplitudeTooLarge : public Error {
public:
    using Error::Error;
};

/// Evaluation point outside the stream's extended interval.
class OutOfRange : public Error {
public:
    using Error::Error;
};

/// Evaluation point outside the closed fluid domain.
class OutOfDomain : public Error {
public:
    using Error::Error;
};

/// Surface elevation dips to (or below) the bed.
class SurfaceTouchesBed : public Error {
public:
    using Error::Error;
};

/// Conformal map gradient falls below the invertibility floor.
class DegenerateMap : public Error {
public:
    using Error::Error;
};

/// Periodic Hilbert transform input must have zero average.
class NonzeroMean : public Error {
public:
    using Error::Error;
};

/// The nodal checker received a field with psi_x identically zero.
class DegenerateField : public Error {
public:
    using Error::Error;
};

/// Newton iteration failed to converge or hit a singular Jacobian.
class NewtonFailure : public Error {
public:
    using Error::Error;
};

/// Configuration file is malformed or carries unknown keys.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace vorwave
