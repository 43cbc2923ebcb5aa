#pragma once

#include <stdexcept>
#include <string>

namespace diffcolor {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (bad graph, bad labeling, wrong class).
class ValidationError : public Error {
public:
    using Error::Error;
};

class ParseError : public ValidationError {
public:
    ParseError(int line, const std::string& what)
        : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A labeling scheme produced something its construction rules out. Always a bug.
class SchemeError : public Error {
public:
    using Error::Error;
};

/// The exact solver refused an instance above its configured size limit.
class OracleLimitError : public Error {
public:
    using Error::Error;
};

/// The exact solver ran out of time. [lower, upper] brackets the true value.
class OracleTimeout : public Error {
public:
    OracleTimeout(int lower, int upper)
        : Error("exact search timed out; value in [" + std::to_string(lower) + ", " +
                std::to_string(upper) + "]"),
          lower_(lower), upper_(upper) {}

    int lower() const noexcept { return lower_; }
    int upper() const noexcept { return upper_; }

private:
    int lower_;
    int upper_;
};

}  // namespace diffcolor
