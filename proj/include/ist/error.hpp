#pragma once

#include <stdexcept>
#include <string>

namespace ist {

/// Thrown when an operation is called outside its stated domain
/// (e.g. |cos| > 1, p < 2, mismatched label bases, CHSH integrality).
class PreconditionError : public std::domain_error {
public:
    explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed textual input (unparseable rational, bad digit list, ...).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ist
