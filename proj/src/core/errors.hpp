#pragma once

#include <stdexcept>
#include <string>

namespace ecoclust {

// Error taxonomy maps 1:1 onto process exit codes, so every failure a caller
// can trigger carries one of these three codes. Code 1 is reserved for
// internal faults (bugs) and never thrown deliberately.
enum class ErrorCode : int {
    ok = 0,
    input = 2,        // malformed files, bad config, contract violations
    degenerate = 3,   // constant series, zero dispersion, p out of [0,1]
    insufficient = 4, // not enough years / windows / points for the operation
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline Error input_error(const std::string& msg) { return Error(ErrorCode::input, msg); }
inline Error degenerate_error(const std::string& msg) { return Error(ErrorCode::degenerate, msg); }
inline Error insufficient_error(const std::string& msg) { return Error(ErrorCode::insufficient, msg); }

} // namespace ecoclust
