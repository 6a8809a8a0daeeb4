// Error types thrown across the library. All derive from std::runtime_error
// so callers can catch agol failures uniformly.
#pragma once

#include <stdexcept>
#include <string>

namespace agol {

struct FieldMismatch : std::runtime_error {
    explicit FieldMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidCF : std::runtime_error {
    explicit InvalidCF(const std::string& what) : std::runtime_error(what) {}
};

struct NotInIn : std::runtime_error {
    explicit NotInIn(const std::string& what) : std::runtime_error(what) {}
};

struct BadIndex : std::runtime_error {
    explicit BadIndex(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateSplit : std::runtime_error {
    explicit DegenerateSplit(const std::string& what) : std::runtime_error(what) {}
};

struct NoCycleFound : std::runtime_error {
    explicit NoCycleFound(const std::string& what) : std::runtime_error(what) {}
};

struct EncodingError : std::runtime_error {
    explicit EncodingError(const std::string& what) : std::runtime_error(what) {}
};

struct NonPositiveWeight : std::runtime_error {
    explicit NonPositiveWeight(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace agol
