#pragma once

#include <stdexcept>
#include <string>

namespace curalight {

// Exit-code contract: validation/config/parse problems -> 2, everything else -> 3.

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Defender call failed after all retries; carries the candidate it was arguing for.
struct DefenseUnavailable : std::runtime_error {
    std::string candidate_id;
    DefenseUnavailable(std::string candidate, const std::string& msg)
        : std::runtime_error(msg), candidate_id(std::move(candidate)) {}
};

// Consensus call failed after all retries; callers fall back to pure-RL priorities.
struct DeliberationUnavailable : std::runtime_error {
    explicit DeliberationUnavailable(const std::string& msg) : std::runtime_error(msg) {}
};

inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ValidationError*>(&e) ||
        dynamic_cast<const ConfigError*>(&e)) {
        return 2;
    }
    return 3;
}

} // namespace curalight
