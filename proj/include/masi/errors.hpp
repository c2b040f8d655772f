#pragma once

#include <stdexcept>
#include <string>

namespace masi {

/// Malformed or schema-violating input (files, config, identifiers).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structurally valid input that violates a state invariant
/// (non-Hermitian, trace far from one, negative spectrum, ...).
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace masi
