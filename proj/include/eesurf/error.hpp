#pragma once

#include <stdexcept>
#include <string>

namespace eesurf {

enum class ErrorKind {
    NotSquarefree,
    BadConductor,
    RingMismatch,
    NotAUnit,
    NotIntegral,
    NotInvertibleInR,
    DetNotUnit,
    GroupExceedsCap,
    InfiniteOrderGenerator,
    NotInCatalog,
    AmbiguousLabel,
    NotRealizable,
    TorsionConstraintViolated,
    BadParameter,
    PreconditionViolated,
    ParseError,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

    ErrorKind kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace eesurf
