#ifndef CHAINSPACE_CHAIN_HPP
#define CHAINSPACE_CHAIN_HPP

#include <vector>

#include "chainspace/cover.hpp"
#include "chainspace/prefix_code.hpp"
#include "chainspace/prefix_map.hpp"

namespace chainspace {

/// The finite trace of a maximal chain of closed sets: a complete prefix
/// code together with the order in which its leaves are first reached.  The
/// chain's elements are exactly the unions of order-prefixes, growing from
/// the root leaf to the whole space one leaf at a time.
class ChainApprox {
public:
    explicit ChainApprox(std::vector<Word> order);

    /// Leaves of `code` in lexicographic order.
    static ChainApprox lex(const PrefixCode& code);

    const std::vector<Word>& order() const { return order_; }
    std::size_t size() const { return order_.size(); }
    const Word& root() const { return order_.front(); }
    PrefixCode code() const;

    std::size_t position_of(const Word& leaf) const;

    bool operator==(const ChainApprox&) const = default;

private:
    std::vector<Word> order_;
};

/// Replace `leaf` by `first_child` at its position and insert the other
/// child at `insert_pos` (0-based, strictly after the leaf's position).
ChainApprox refine_chain(const ChainApprox& c, const Word& leaf, const Word& first_child,
                         std::size_t insert_pos);

/// Collapse onto a coarser code: each coarse leaf takes the position at
/// which the chain first enters it.  Every leaf of c must extend a leaf of
/// `coarse`.
ChainApprox project_chain(const ChainApprox& c, const PrefixCode& coarse);

/// Split leaves (deterministically: the '0'-child keeps the parent's
/// position, the '1'-child goes immediately after) until every leaf lies
/// inside a single part.
ChainApprox refine_to_measurable(const ChainApprox& c, const UnorderedPartition& parts);

/// Split leaves until every leaf extends a domain leaf of g.
ChainApprox refine_to_map(const ChainApprox& c, const PrefixMap& g);

/// Shortest order-prefix whose union meets d (d nonempty).
std::vector<Word> hull_min(const ChainApprox& c, const ClopenSet& d);

/// Longest order-prefix whose union lies inside d; requires the root's
/// cylinder to be contained in d.
std::vector<Word> hull_max(const ChainApprox& c, const ClopenSet& d);

/// The parts of `parts` listed in the order the chain first touches them.
OrderedPartition induced_order(const ChainApprox& c, const UnorderedPartition& parts);

/// The unique sigma with (sigma . beta) equal to the chain-induced ordering
/// of beta's parts.
Permutation theta(const ChainApprox& c, const OrderedPartition& beta);

/// Whether the chain's induced ordering of alpha's parts is alpha itself.
bool in_neighborhood(const ChainApprox& c, const OrderedPartition& alpha);

/// Transport the chain along g: refine until g is leaf-to-leaf, then map the
/// order elementwise.  Order-prefixes of the result are the g-images of the
/// order-prefixes of c.
ChainApprox act_chain(const PrefixMap& g, const ChainApprox& c);

/// First-touched leaf of each part, in induced order: entry k lies in the
/// k-th part the chain reaches.
std::vector<Word> entry_points(const ChainApprox& c, const OrderedPartition& alpha);

}  // namespace chainspace

#endif
