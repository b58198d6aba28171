#ifndef CHAINSPACE_CONTRACTS_HPP
#define CHAINSPACE_CONTRACTS_HPP

#include <stdexcept>
#include <string>

namespace chainspace {

// Thrown when an operation's stated precondition is violated.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const char* what) : std::logic_error(what) {}
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool condition, const char* message) {
    if (!condition) throw ContractViolation(message);
}

inline void require(bool condition, const std::string& message) {
    if (!condition) throw ContractViolation(message);
}

/// Outcome of re-verifying a certificate: ok, or a human-readable reason.
struct CheckResult {
    bool ok = false;
    std::string diagnostic;
    explicit operator bool() const { return ok; }
};

}  // namespace chainspace

#endif
