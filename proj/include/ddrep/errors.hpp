#pragma once

#include <stdexcept>
#include <string>

namespace ddrep {

// Bad parameters to a constructor or query (wrong l, weight outside I_l, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero in cyclotomic field") {}
};

struct SizeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedOperation : std::logic_error {
    using std::logic_error::logic_error;
};

// A check that cannot fail on well-formed input failed anyway.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace ddrep
