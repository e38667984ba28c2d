#pragma once

#include <stdexcept>
#include <string>

namespace twistcode {

// Error categories map 1:1 onto CLI exit codes (see tools/twistcode.cpp).
enum class ErrorKind {
    InvalidArgument,   // bad user input, precondition violation
    Parse,             // data file syntax errors
    Validation,        // data fails integrity checks (tables, generators)
    CapExceeded,       // conductor / group size / dimension caps
    InternalConsistency, // two routes that must agree disagreed
    Numerical,         // float-side failure (rank, eigenvalue recognition)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    static Error invalid(const std::string& w) { return {ErrorKind::InvalidArgument, w}; }
    static Error parse(const std::string& w) { return {ErrorKind::Parse, w}; }
    static Error validation(const std::string& w) { return {ErrorKind::Validation, w}; }
    static Error cap(const std::string& w) { return {ErrorKind::CapExceeded, w}; }
    static Error inconsistent(const std::string& w) { return {ErrorKind::InternalConsistency, w}; }
    static Error numerical(const std::string& w) { return {ErrorKind::Numerical, w}; }

private:
    ErrorKind kind_;
};

} // namespace twistcode
