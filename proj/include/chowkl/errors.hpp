#ifndef CHOWKL_ERRORS_HPP
#define CHOWKL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chowkl {

// Bad argument values (wrong ranges, malformed input).
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A documented precondition does not hold (loops where forbidden, etc.).
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

struct NotPalindromicError : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

struct NonUnitError : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

struct EmptyBasisFamilyError : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

struct MixedCardinalityError : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

struct ExchangeAxiomError : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

// Two computations that must agree did not.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace chowkl

#endif
