#pragma once

#include <stdexcept>
#include <string>

namespace bubblegrid {

// A violated precondition or an input outside the model's domain.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (configuration files, rationals, flags).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bubblegrid
