#ifndef CHAINSPACE_COVER_HPP
#define CHAINSPACE_COVER_HPP

#include <vector>

#include "chainspace/clopen.hpp"
#include "chainspace/permutation.hpp"
#include "chainspace/prefix_code.hpp"
#include "chainspace/set_partition.hpp"

namespace chainspace {

/// An ordered partition of the whole space into nonempty, pairwise disjoint
/// clopen parts that cover everything.  Part order is significant.
class OrderedPartition {
public:
    explicit OrderedPartition(std::vector<ClopenSet> parts);

    int size() const { return static_cast<int>(parts_.size()); }
    const ClopenSet& part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }
    const std::vector<ClopenSet>& parts() const { return parts_; }

    /// Index of the part whose interior contains the cylinder [w], if any.
    int part_containing(const Word& w) const;

    bool operator==(const OrderedPartition&) const = default;

private:
    std::vector<ClopenSet> parts_;
};

/// The same data with the order forgotten; canonically stored with parts
/// sorted by their lexicographically least cylinder.
class UnorderedPartition {
public:
    explicit UnorderedPartition(std::vector<ClopenSet> parts);

    int size() const { return static_cast<int>(parts_.size()); }
    const ClopenSet& part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }
    const std::vector<ClopenSet>& parts() const { return parts_; }

    bool operator==(const UnorderedPartition&) const = default;

private:
    std::vector<ClopenSet> parts_;
};

/// Forget the order (written with a tilde in the notation of the domain).
UnorderedPartition forget_order(const OrderedPartition& p);

/// Common refinement: the nonempty intersections A_i n B_j listed in
/// lexicographic (i, j) order.  Empty intersections are dropped.
OrderedPartition join(const OrderedPartition& a, const OrderedPartition& b);

/// The index action (sigma . beta)_i = beta_{sigma(i)}.
OrderedPartition permute_parts(const Permutation& sigma, const OrderedPartition& beta);

/// Merge parts of beta as directed by gamma: part j of the result is the
/// union of beta's parts B_i for i in gamma's block j.  gamma must partition
/// {1..beta.size()}.
OrderedPartition amalgamate_cover(const OrderedPartition& beta, const SetPartition& gamma);

/// True when every part of fine is contained in a part of coarse.
bool refines(const OrderedPartition& fine, const OrderedPartition& coarse);

/// Every unordered partition of the code's leaves into exactly `parts`
/// nonempty groups, each group becoming the union of its cylinders.
std::vector<UnorderedPartition> leaf_partitions(const PrefixCode& code, int parts);

}  // namespace chainspace

#endif
