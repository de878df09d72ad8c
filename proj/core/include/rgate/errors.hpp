#pragma once

#include <stdexcept>
#include <string>

namespace rgate {

// Base class for all domain errors raised by the library. Callers that only
// need the exit-code mapping can catch this.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violations (bad arguments, wrong figure, non-presentation input).
struct precondition_violated : domain_error {
    using domain_error::domain_error;
};

struct not_homology_sphere : precondition_violated {
    using precondition_violated::precondition_violated;
};

struct coprimality_violation : precondition_violated {
    using precondition_violated::precondition_violated;
};

struct too_few_fibers : precondition_violated {
    using precondition_violated::precondition_violated;
};

struct unsupported_fiber_count : precondition_violated {
    using precondition_violated::precondition_violated;
};

struct reducible_data : precondition_violated {
    using precondition_violated::precondition_violated;
};

struct infinite_order : precondition_violated {
    using precondition_violated::precondition_violated;
};

struct mixed_figure : precondition_violated {
    using precondition_violated::precondition_violated;
};

struct target_out_of_range : precondition_violated {
    using precondition_violated::precondition_violated;
};

struct invalid_representation : precondition_violated {
    using precondition_violated::precondition_violated;
};

// Numerical failures: the sought object exists (or may exist) but the solver
// did not reach it within its budget.
struct computation_failure : domain_error {
    using domain_error::domain_error;
};

struct synthesis_failed : computation_failure {
    using computation_failure::computation_failure;
};

struct solver_exhausted : computation_failure {
    using computation_failure::computation_failure;
};

// Input files/strings that do not parse against the documented schemas.
struct parse_error : domain_error {
    using domain_error::domain_error;
};

}  // namespace rgate
