#pragma once

#include <stdexcept>
#include <string>

namespace motivic {

// Thrown when a requested operation received arguments outside its domain
// (wrong parity, out-of-range size, missing/superfluous orthogonal type, ...).
struct InvalidParameter : std::runtime_error {
    explicit InvalidParameter(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroInverse : std::runtime_error {
    ZeroInverse() : std::runtime_error("inverse of zero in F_p") {}
};

struct NotSquare : std::runtime_error {
    NotSquare() : std::runtime_error("matrix is not square") {}
};

struct NotSymmetric : std::runtime_error {
    NotSymmetric() : std::runtime_error("matrix is not symmetric") {}
};

struct NotAlternating : std::runtime_error {
    NotAlternating() : std::runtime_error("matrix is not alternating (skew with zero diagonal)") {}
};

struct OddSize : std::runtime_error {
    OddSize() : std::runtime_error("alternating matrix has odd size") {}
};

struct DegreeOverflow : std::runtime_error {
    explicit DegreeOverflow(int degree)
        : std::runtime_error("polynomial degree " + std::to_string(degree) + " exceeds cap") {}
};

}  // namespace motivic
