#pragma once

#include <stdexcept>
#include <string>

namespace radspec {

/// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad run configuration: unknown keys, missing fields, unparsable values.
class config_error : public error {
public:
    using error::error;
};

/// A numerical procedure failed to converge or was given an unusable bracket.
class solver_error : public error {
public:
    using error::error;
};

/// The request is outside the mathematical domain of the operation.
class domain_error : public error {
public:
    using error::error;
};

/// Requested bound level does not exist; carries the largest valid index
/// (-1 when the well holds no bound state at all).
class no_bound_state : public domain_error {
public:
    no_bound_state(const std::string& what, int max_level)
        : domain_error(what), max_level(max_level) {}
    int max_level;
};

/// Energy bracket does not isolate the requested node count.
class bracket_error : public solver_error {
public:
    bracket_error(const std::string& what, int nodes_lo, int nodes_hi)
        : solver_error(what), nodes_lo(nodes_lo), nodes_hi(nodes_hi) {}
    int nodes_lo;
    int nodes_hi;
};

/// The second indicial branch needs a logarithmic term; a pure power series
/// cannot represent the solution.
class log_resonance : public domain_error {
public:
    log_resonance(const std::string& what, int ell, double residual)
        : domain_error(what), ell(ell), residual(residual) {}
    int ell;
    double residual;
};

/// No classically allowed region at the requested energy.
class no_classical_region : public domain_error {
public:
    using domain_error::domain_error;
};

/// The model cannot support the requested operation.
class unsupported_model : public domain_error {
public:
    using domain_error::domain_error;
};

/// Evaluation at a point where the expression is singular.
class singularity_error : public domain_error {
public:
    using domain_error::domain_error;
};

} // namespace radspec
