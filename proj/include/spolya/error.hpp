#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spolya {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed user input: bad JSON, bad rational literal, unknown symbol.
class InputError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Raised by the Cox certifier when conv(A) is not a product of simplices.
class SimplexProductRequired : public Error {
public:
    explicit SimplexProductRequired(std::string condition)
        : Error("polytope is not a product of simplices: " + condition),
          condition_(std::move(condition)) {}

    const std::string& condition() const { return condition_; }

private:
    std::string condition_;
};

}  // namespace spolya
