#pragma once

#include <stdexcept>
#include <string>

namespace lpadic {

// Violated mathematical precondition (non-unit, bad prime, level overflow, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Requested output precision cannot be certified.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed JSON input or wrong field types.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lpadic
