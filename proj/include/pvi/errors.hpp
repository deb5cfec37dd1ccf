#pragma once

#include <stdexcept>
#include <string>

namespace pvi {

// All library failures derive from Error so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleError : Error { using Error::Error; };
struct ParamError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct BranchError : Error { using Error::Error; };
struct SingularityError : Error { using Error::Error; };
struct SingularDenominator : Error { using Error::Error; };
struct DenominatorZero : Error { using Error::Error; };
struct FamilyConstraintError : Error { using Error::Error; };
struct GaugeError : Error { using Error::Error; };
struct DegenerateSystem : Error { using Error::Error; };
struct CaseConstraintError : Error { using Error::Error; };
struct LogCaseUnsupported : Error { using Error::Error; };
struct StepUnderflow : Error { using Error::Error; };
struct PoleEncountered : Error {
    PoleEncountered(const std::string& msg, std::complex<double> where)
        : Error(msg), location(where) {}
    std::complex<double> location;
};
struct ConditioningError : Error { using Error::Error; };
struct IllConditioned : Error { using Error::Error; };
struct NoSolution : Error { using Error::Error; };
struct UnsupportedSymmetry : Error { using Error::Error; };
struct UnsupportedTransport : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct InconsistentFlags : Error { using Error::Error; };

}  // namespace pvi
