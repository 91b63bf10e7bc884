#pragma once

#include <stdexcept>
#include <string>

namespace carp {

// Error categories; values line up with the CLI exit codes and the
// carp_status codes of the C API.
enum class ErrorCode {
    internal = 1,
    parse = 2,
    infeasible = 3,
    size_cap = 4,
    verification = 5,
    invalid_argument = 6,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorCode::parse, what) {}
};

struct InfeasibleError : Error {
    explicit InfeasibleError(const std::string& what) : Error(ErrorCode::infeasible, what) {}
};

struct SizeCapError : Error {
    explicit SizeCapError(const std::string& what) : Error(ErrorCode::size_cap, what) {}
};

struct InvalidArgumentError : Error {
    explicit InvalidArgumentError(const std::string& what) : Error(ErrorCode::invalid_argument, what) {}
};

}  // namespace carp
