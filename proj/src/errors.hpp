#pragma once

#include <stdexcept>
#include <string>

namespace dcconv {

enum class ErrKind {
    Param,     // invalid argument or unsatisfiable parameters
    Data,      // malformed input data (files, streams, mismatched headers)
    Io,        // filesystem failure
    Limit,     // enumeration or size cap exceeded
    Decode,    // decode failure surfaced in strict mode
    Internal,  // broken invariant; indicates a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrKind kind() const { return kind_; }

private:
    ErrKind kind_;
};

[[noreturn]] inline void raise(ErrKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace dcconv
