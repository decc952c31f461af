#pragma once

#include <stdexcept>
#include <string>

namespace partdim {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Self-loop or endpoint outside [0, n).
class InvalidEdge : public Error {
public:
    using Error::Error;
};

/// The standing assumption (connected input) does not hold.
class Disconnected : public Error {
public:
    Disconnected() : Error("graph is not connected") {}
    using Error::Error;
};

class UnknownFamily : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

/// Text input could not be parsed; carries the 1-based offending line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class InvalidPartition : public Error {
public:
    using Error::Error;
};

class InvalidPair : public Error {
public:
    using Error::Error;
};

class InvalidSet : public Error {
public:
    using Error::Error;
};

/// k is outside the feasible window [1, min_pair_distinguishers(g)].
class InfeasibleK : public Error {
public:
    using Error::Error;
};

/// Instance exceeds the configured exhaustive-search limit.
class TooLarge : public Error {
public:
    using Error::Error;
};

class NotATree : public Error {
public:
    using Error::Error;
};

/// Paths carry no exterior major vertex, so no tree profile exists.
class PathHasNoProfile : public Error {
public:
    using Error::Error;
};

class NoExteriorMajorVertex : public Error {
public:
    using Error::Error;
};

class UnsupportedConstruction : public Error {
public:
    using Error::Error;
};

} // namespace partdim
