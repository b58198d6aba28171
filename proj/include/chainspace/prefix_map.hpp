#ifndef CHAINSPACE_PREFIX_MAP_HPP
#define CHAINSPACE_PREFIX_MAP_HPP

#include <utility>
#include <vector>

#include "chainspace/cover.hpp"
#include "chainspace/prefix_code.hpp"

namespace chainspace {

/// A homeomorphism of the binary Cantor space given by a finite prefix
/// replacement: a bijection between the leaves of two complete prefix codes,
/// acting by u.s -> v.s on each paired leaf.  Stored canonically: pairs are
/// sorted by domain leaf and sibling pairs whose images are sibling pairs in
/// the same orientation are merged, so the identity is always {"" -> ""} and
/// equal maps have equal pair lists.
class PrefixMap {
public:
    static PrefixMap identity();

    /// Validate and canonicalize an arbitrary leaf pairing.
    static PrefixMap from_pairs(std::vector<std::pair<Word, Word>> pairs);

    /// The map sending leaf i of `domain` to leaf sigma(i) of `range`.
    static PrefixMap leaf_bijection(const PrefixCode& domain, const PrefixCode& range,
                                    const Permutation& sigma);

    const std::vector<std::pair<Word, Word>>& pairs() const { return pairs_; }
    bool is_identity() const;

    PrefixCode domain_code() const;
    PrefixCode range_code() const;

    /// Image of a word deep enough to reach a domain leaf.
    Word apply_word(const Word& w) const;

    ClopenSet apply_clopen(const ClopenSet& s) const;
    OrderedPartition apply(const OrderedPartition& p) const;
    UnorderedPartition apply(const UnorderedPartition& p) const;

    PrefixMap inverse() const;

    bool operator==(const PrefixMap&) const = default;

private:
    std::vector<std::pair<Word, Word>> pairs_;
};

/// Composition acting as x -> f(g(x)).
PrefixMap compose(const PrefixMap& f, const PrefixMap& g);

/// True when g maps every part of alpha onto itself setwise.
bool stabilizes(const PrefixMap& g, const OrderedPartition& alpha);

/// Leaf pairs mapping the clopen set a onto the clopen set b, obtained by
/// repeatedly splitting the lexicographically last cylinder of the smaller
/// list until the counts agree and then pairing in sorted order.
std::vector<std::pair<Word, Word>> match_clopen(const ClopenSet& a, const ClopenSet& b);

/// A map g with g(alpha_i) = beta_i for all i, built part by part with
/// match_clopen.  Requires partitions of equal size; deterministic.
PrefixMap homogeneity_witness(const OrderedPartition& alpha, const OrderedPartition& beta);

}  // namespace chainspace

#endif
