#ifndef CHAINSPACE_VERIFY_HPP
#define CHAINSPACE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chainspace/dual_ramsey.hpp"
#include "chainspace/random_gen.hpp"
#include "chainspace/witness.hpp"

namespace chainspace {

/// Knobs for the invariant suites.  A fixed options value pins the entire
/// run: every random draw flows from the seed through one generator.
struct VerifyOptions {
    int max_leaves = 5;
    std::uint64_t seed = 1;
    int random_cases = 200;
};

struct SuiteCheck {
    std::string name;
    std::uint64_t cases = 0;
    bool ok = true;
    std::string detail;  // first failure, or empty
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteCheck> checks;

    bool ok() const;
    std::uint64_t cases() const;
};

/// One suite per library module, each asserting that module's laws on a mix
/// of exhaustive small instances and seeded random ones.
SuiteResult verify_partitions(const VerifyOptions& options);
SuiteResult verify_cantor(const VerifyOptions& options);
SuiteResult verify_chains(const VerifyOptions& options);
SuiteResult verify_symbolic(const VerifyOptions& options);
SuiteResult verify_dynamics(const VerifyOptions& options);
SuiteResult verify_ramsey(const VerifyOptions& options);
SuiteResult verify_factor(const VerifyOptions& options);

std::vector<SuiteResult> verify_all(const VerifyOptions& options);

}  // namespace chainspace

#endif
