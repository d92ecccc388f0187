#pragma once

#include <stdexcept>
#include <string>

namespace dsym {

// Domain errors thrown by library operations.  Each corresponds to a
// violated precondition or an internal consistency failure that callers
// may want to distinguish by type.

struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct NotLinear : std::runtime_error {
    explicit NotLinear(const std::string& what) : std::runtime_error(what) {}
};

struct MissingIndex : std::runtime_error {
    explicit MissingIndex(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateSpec : std::runtime_error {
    explicit DegenerateSpec(const std::string& what) : std::runtime_error(what) {}
};

struct NotSymmetric : std::runtime_error {
    explicit NotSymmetric(const std::string& what) : std::runtime_error(what) {}
};

struct TruncationTooSmall : std::runtime_error {
    explicit TruncationTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct ColumnBoundViolated : std::runtime_error {
    explicit ColumnBoundViolated(const std::string& what) : std::runtime_error(what) {}
};

struct WrongBasis : std::runtime_error {
    explicit WrongBasis(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dsym
