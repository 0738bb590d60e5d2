#pragma once

#include <stdexcept>
#include <string>

namespace qmock {

// Error taxonomy shared by the whole library.  All inherit from
// std::runtime_error so callers can catch broadly or by kind.

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

struct NotInvertible : std::runtime_error {
    explicit NotInvertible(const std::string& what) : std::runtime_error(what) {}
};

struct BeyondTruncation : std::runtime_error {
    explicit BeyondTruncation(const std::string& what) : std::runtime_error(what) {}
};

struct NotFormallySummable : std::runtime_error {
    explicit NotFormallySummable(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateFactor : std::runtime_error {
    explicit DegenerateFactor(const std::string& what) : std::runtime_error(what) {}
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownName : std::runtime_error {
    explicit UnknownName(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qmock
