#pragma once

#include <stdexcept>
#include <string>

namespace sbd {

enum class ErrorKind {
    DivisionByZero,
    InvalidPoint,
    DimensionMismatch,
    IndexRange,
    CenterProjection,
    NonMonotone,
    BadEndpoints,
    OutOfDomain,
    DomainMismatch,
    CrossMismatch,
    BadDomain,
    EndpointNotFixed,
    BadLevels,
    CrossPropertyViolation,
    WrongSlotValue,
    NotOnFace,
    UnsupportedL,
    DimensionCap,
    RingMismatch,
    Parse,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sbd
