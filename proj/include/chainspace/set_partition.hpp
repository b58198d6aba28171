#ifndef CHAINSPACE_SET_PARTITION_HPP
#define CHAINSPACE_SET_PARTITION_HPP

#include <map>
#include <string>
#include <vector>

#include "chainspace/contracts.hpp"

namespace chainspace {

/// An ordered partition of the ground set {1, ..., n} into nonempty blocks.
///
/// The encoding assigns each element the index of its block, written with
/// the digits 0-9a-z.  A partition is "naturally ordered" when block minima
/// increase with block index; for those the encoding is a restricted-growth
/// string and serves as the canonical key for the unordered partition.
class SetPartition {
public:
    SetPartition(int ground_size, std::vector<std::vector<int>> blocks);

    /// Parse the digit-per-element encoding (blocks numbered from 0).
    static SetPartition from_encoding(const std::string& encoding);

    /// The all-singletons partition ({1}, {2}, ..., {n}).
    static SetPartition singletons(int n);

    int ground_size() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int j) const { return blocks_.at(static_cast<std::size_t>(j)); }

    /// Index (0-based) of the block containing element i (1-based).
    int block_of(int element) const;

    std::string encoding() const;
    bool is_naturally_ordered() const;

    bool operator==(const SetPartition&) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

/// Blocks reordered by increasing minimum; same underlying partition.
SetPartition naturally_order(const SetPartition& p);

/// All partitions of {1..n} into exactly k blocks, in lexicographic encoding
/// order.  With naturally_ordered set, one representative per unordered
/// partition (restricted-growth strings); otherwise every block ordering.
std::vector<SetPartition> enumerate_partitions(int n, int k, bool naturally_ordered);

/// Merge gamma's blocks as directed by beta: block j of the result is the
/// union of gamma's blocks C_i for i in beta's block B_j.  Both inputs must
/// be naturally ordered and beta's ground set must be {1..gamma.block_count()}.
SetPartition amalgamate(const SetPartition& gamma, const SetPartition& beta);

/// All ways to merge eta's blocks down to k blocks, i.e. the naturally
/// ordered amalgamations of eta by each partition of its block index set.
std::vector<SetPartition> coarsenings(const SetPartition& eta, int k);

/// True when every block of coarse is a union of blocks of fine.
bool is_refinement(const SetPartition& fine, const SetPartition& coarse);

/// An r-coloring of the unordered partitions of {1..n} into k blocks,
/// keyed by their restricted-growth encodings.
struct Coloring {
    int n = 0;
    int k = 0;
    int r = 0;
    std::map<std::string, int> color;

    int at(const SetPartition& p) const;
    bool has(const SetPartition& p) const;

    bool operator==(const Coloring&) const = default;
};

}  // namespace chainspace

#endif
