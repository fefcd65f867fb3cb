#pragma once

#include <stdexcept>
#include <string>

namespace adr {

class Error : public std::runtime_error {
public:
    explicit Error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// Input / syntax errors (CLI exit code 65).
class ParseError : public Error {
public:
    ParseError(std::string msg, int line = 0, int col = 0)
        : Error(line > 0 ? std::to_string(line) + ":" + std::to_string(col) + ": " + msg
                         : std::move(msg)),
          line(line), col(col) {}
    int line = 0;
    int col = 0;
};

class NonParallelRelation : public Error {
public:
    using Error::Error;
};

class RelationTooShort : public Error {
public:
    using Error::Error;
};

class NotAdmissibleWithinCap : public Error {
public:
    using Error::Error;
};

// Precondition violations on operations (CLI exit code 1 unless noted).
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotASubmodule : public Error {
public:
    using Error::Error;
};

class NotLocal : public Error {
public:
    using Error::Error;
};

class NonSplitEndomorphism : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class LoewyLengthOne : public Error {
public:
    using Error::Error;
};

class SearchBoundExceeded : public Error {
public:
    using Error::Error;
};

// Invariant violations: these signal a soundness bug or a broken theorem,
// never a bad user input (CLI exit code 2).
class NonTerminatingLayer : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class EquivalenceViolation : public Error {
public:
    using Error::Error;
};

class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace adr
