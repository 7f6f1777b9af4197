#pragma once

#include <stdexcept>
#include <string>

namespace gridsentry {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument or precondition violation (empty series, h < 1, k < 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed trace/profile file. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, long line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    explicit ParseError(const std::string& what) : Error(what), line_(0) {}
    long line() const noexcept { return line_; }

private:
    long line_;
};

// Adaptive weight scheme queried with a call name absent from its table.
class UnknownCallError : public Error {
public:
    using Error::Error;
};

// Simulator session could not run on the requested transport.
class SessionError : public Error {
public:
    using Error::Error;
};

// Learning input mixes traces from different device classes.
class ClassMismatchError : public Error {
public:
    using Error::Error;
};

// Profile database file exists but cannot be loaded. Message names the file.
class LoadError : public Error {
public:
    using Error::Error;
};

// GTP lacks the stored call lists needed for the requested source.
class ProfileIncompleteError : public Error {
public:
    using Error::Error;
};

// No GTP stored for the unknown device's class.
class NoProfileError : public Error {
public:
    using Error::Error;
};

// Filesystem failure outside the parse/load categories above.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace gridsentry
