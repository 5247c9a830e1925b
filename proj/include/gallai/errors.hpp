#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gallai {

// Precondition violated by the caller (bad vertex, bad parameters).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operation is only defined for Gallai colorings.
class NotGallai : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Input is valid but exceeds the size this operation is willing to handle.
class UnsupportedSize : public std::length_error {
public:
    using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error("at offset " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace gallai
