#pragma once

#include <stdexcept>
#include <string>

namespace homlab {

// Raised when an internal algebraic identity that must hold by construction
// fails (d∘d != 0, a chain that should lie in Ω does not, ...).
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// Raised when a generator count exceeds the configured cap.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace homlab
