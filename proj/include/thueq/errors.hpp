#pragma once

#include <stdexcept>
#include <string>

namespace thueq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct DivisionError : Error { using Error::Error; };
struct UndefinedKappa : Error { using Error::Error; };
struct Indeterminate : Error { using Error::Error; };
struct DegeneratePade : Error { using Error::Error; };
struct ContractViolation : Error { using Error::Error; };
struct VerificationFailure : Error { using Error::Error; };
struct TieError : Error { using Error::Error; };
struct DependencyError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct SearchCapError : Error { using Error::Error; };
struct IntegralityViolation : Error { using Error::Error; };

}  // namespace thueq
