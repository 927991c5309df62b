#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gnc {

/// An argument lies outside the operation's domain (foreign vertex, bad order).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A family generator was asked for parameters that violate its constraints.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A generator could not realise a structure it was asked for.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The requested computation exceeds a brute-force cost guard.
class RefusedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset)
    {
    }

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace gnc
