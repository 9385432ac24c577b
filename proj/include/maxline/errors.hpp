#pragma once

#include <stdexcept>
#include <string>

namespace maxline {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LoopArcError : public Error {
public:
    using Error::Error;
};

class DuplicateArcError : public Error {
public:
    using Error::Error;
};

class VertexOutOfRangeError : public Error {
public:
    using Error::Error;
};

class ArcNotPresentError : public Error {
public:
    using Error::Error;
};

class InvalidSizeError : public Error {
public:
    using Error::Error;
};

class InvalidSpecError : public Error {
public:
    using Error::Error;
};

class TooLargeError : public Error {
public:
    using Error::Error;
};

// A digraph beat the closed-form arc bound during verification. Signals an
// implementation bug (or a disproof); never expected on a healthy build.
class BoundViolatedError : public Error {
public:
    using Error::Error;
};

class InternalInconsistencyError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error("parse error at line " + std::to_string(line) + ": " + reason),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace maxline
