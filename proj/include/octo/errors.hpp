#pragma once

#include <stdexcept>
#include <string>

namespace octo {

/// Operands belong to different fields, or a value is outside its domain.
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// Inversion of a non-invertible element (zero, or zero-norm octonion).
struct not_invertible_error : domain_error {
    explicit not_invertible_error(const std::string& what) : domain_error(what) {}
};

/// An enumeration or degree bound was exceeded.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Text input did not conform to a literal grammar.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

} // namespace octo
