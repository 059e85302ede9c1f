#pragma once

#include <stdexcept>
#include <string>

namespace ztri {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct SizeLimit : Error { using Error::Error; };
struct NotZMatrix : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct OrderingViolation : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct DegenerateEye : Error { using Error::Error; };
struct PreconditionViolation : Error { using Error::Error; };
struct Reducible : Error { using Error::Error; };
struct WrongReducibilityClass : Error { using Error::Error; };
struct InfeasibleSize : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace ztri
