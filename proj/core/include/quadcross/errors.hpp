#pragma once

#include <stdexcept>
#include <string>

namespace quadcross {

// Base class for everything this library throws on bad input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (diagram codes, polynomial strings, catalog lines).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

// Structurally invalid diagram data.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error("invalid diagram: " + msg) {}
};

// Valid but disconnected diagram, reported distinctly because the span-based
// machinery assumes non-splittable inputs.
class DisconnectedError : public ValidationError {
public:
    DisconnectedError() : ValidationError("diagram is disconnected (split)") {}
};

// An operation was called outside its declared domain.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error("precondition: " + msg) {}
};

} // namespace quadcross
