#ifndef CHAINSPACE_RANDOM_GEN_HPP
#define CHAINSPACE_RANDOM_GEN_HPP

#include <cstdint>
#include <random>

#include "chainspace/chain.hpp"
#include "chainspace/symbolic.hpp"

namespace chainspace {

/// Deterministic generator for every randomized object in the test and
/// verification suites.  All randomness flows through the single engine, so
/// a seed pins down an entire run.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::mt19937_64& engine() { return engine_; }

    /// Uniform on the inclusive range [lo, hi].
    int uniform_int(int lo, int hi);

    Word random_word(int length);
    PrefixCode random_code(int leaves);
    ChainApprox random_chain(int leaves);
    PrefixMap random_map(int leaves);
    Permutation random_permutation(int k);
    ClopenSet random_clopen(int leaves);
    OrderedPartition random_partition(int parts, int leaves);
    Table random_table(int k);

private:
    std::mt19937_64 engine_;
};

/// A +/-1 configuration determined by hashing the partition's canonical
/// serialization with the given salt: arbitrary-looking but reproducible,
/// with no structure a law could accidentally rely on.
SymbolConfig hash_config(int k, std::uint64_t salt);

}  // namespace chainspace

#endif
