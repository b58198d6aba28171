#include "chainspace/prefix_map.hpp"

#include <algorithm>

namespace chainspace {

namespace {

bool sibling_words(const Word& a, const Word& b) {
    return !a.empty() && a.size() == b.size() && a.str().back() == '0' &&
           b.str().back() == '1' &&
           a.str().compare(0, a.size() - 1, b.str(), 0, b.size() - 1) == 0;
}

// Merge pairs (u0 -> p0, u1 -> p1) into (u -> p) until no merge applies.
std::vector<std::pair<Word, Word>> canonical_pairs(std::vector<std::pair<Word, Word>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    bool merged = true;
    while (merged) {
        merged = false;
        std::vector<std::pair<Word, Word>> next;
        next.reserve(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (i + 1 < pairs.size() && sibling_words(pairs[i].first, pairs[i + 1].first) &&
                sibling_words(pairs[i].second, pairs[i + 1].second)) {
                next.emplace_back(pairs[i].first.parent(), pairs[i].second.parent());
                ++i;
                merged = true;
            } else {
                next.push_back(pairs[i]);
            }
        }
        pairs = std::move(next);
    }
    return pairs;
}

}  // namespace

PrefixMap PrefixMap::identity() {
    return from_pairs({{Word(), Word()}});
}

PrefixMap PrefixMap::from_pairs(std::vector<std::pair<Word, Word>> pairs) {
    require(!pairs.empty(), "PrefixMap: empty pairing");
    std::vector<Word> domain, range;
    domain.reserve(pairs.size());
    range.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        domain.push_back(u);
        range.push_back(v);
    }
    require(is_complete_prefix_code(domain),
            "PrefixMap: domain words must form a complete prefix code");
    require(is_complete_prefix_code(range),
            "PrefixMap: range words must form a complete prefix code");
    PrefixMap g;
    g.pairs_ = canonical_pairs(std::move(pairs));
    return g;
}

PrefixMap PrefixMap::leaf_bijection(const PrefixCode& domain, const PrefixCode& range,
                                    const Permutation& sigma) {
    require(domain.size() == range.size() &&
                static_cast<std::size_t>(sigma.k()) == domain.size(),
            "PrefixMap::leaf_bijection: size mismatch");
    std::vector<std::pair<Word, Word>> pairs;
    pairs.reserve(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i)
        pairs.emplace_back(domain.leaves()[i],
                           range.leaves()[static_cast<std::size_t>(
                               sigma.apply(static_cast<int>(i)))]);
    return from_pairs(std::move(pairs));
}

bool PrefixMap::is_identity() const {
    return pairs_.size() == 1 && pairs_.front().first.empty() &&
           pairs_.front().second.empty();
}

PrefixCode PrefixMap::domain_code() const {
    std::vector<Word> leaves;
    leaves.reserve(pairs_.size());
    for (const auto& [u, v] : pairs_) leaves.push_back(u);
    return PrefixCode(std::move(leaves));
}

PrefixCode PrefixMap::range_code() const {
    std::vector<Word> leaves;
    leaves.reserve(pairs_.size());
    for (const auto& [u, v] : pairs_) leaves.push_back(v);
    return PrefixCode(std::move(leaves));
}

Word PrefixMap::apply_word(const Word& w) const {
    for (const auto& [u, v] : pairs_)
        if (u.is_prefix_of(w)) return v.concat(w.suffix_from(u.size()));
    throw ContractViolation("PrefixMap::apply_word: word does not reach a domain leaf");
}

ClopenSet PrefixMap::apply_clopen(const ClopenSet& s) const {
    std::vector<Word> out;
    for (const Word& w : s.words())
        for (const auto& [u, v] : pairs_) {
            if (u.is_prefix_of(w))
                out.push_back(v.concat(w.suffix_from(u.size())));
            else if (w.is_proper_prefix_of(u))
                out.push_back(v);
        }
    return ClopenSet::of(std::move(out));
}

OrderedPartition PrefixMap::apply(const OrderedPartition& p) const {
    std::vector<ClopenSet> parts;
    parts.reserve(static_cast<std::size_t>(p.size()));
    for (const ClopenSet& part : p.parts()) parts.push_back(apply_clopen(part));
    return OrderedPartition(std::move(parts));
}

UnorderedPartition PrefixMap::apply(const UnorderedPartition& p) const {
    std::vector<ClopenSet> parts;
    parts.reserve(static_cast<std::size_t>(p.size()));
    for (const ClopenSet& part : p.parts()) parts.push_back(apply_clopen(part));
    return UnorderedPartition(std::move(parts));
}

PrefixMap PrefixMap::inverse() const {
    std::vector<std::pair<Word, Word>> swapped;
    swapped.reserve(pairs_.size());
    for (const auto& [u, v] : pairs_) swapped.emplace_back(v, u);
    return from_pairs(std::move(swapped));
}

PrefixMap compose(const PrefixMap& f, const PrefixMap& g) {
    // Each g-pair u -> v is refined against f's domain leaves: where a leaf d
    // of f sits above v the pair contributes u -> f(d).(v minus d); where d
    // extends v the g-pair is split along the extra suffix.
    std::vector<std::pair<Word, Word>> pairs;
    for (const auto& [u, v] : g.pairs())
        for (const auto& [d, e] : f.pairs()) {
            if (d.is_prefix_of(v))
                pairs.emplace_back(u, e.concat(v.suffix_from(d.size())));
            else if (v.is_proper_prefix_of(d))
                pairs.emplace_back(u.concat(d.suffix_from(v.size())), e);
        }
    return PrefixMap::from_pairs(std::move(pairs));
}

bool stabilizes(const PrefixMap& g, const OrderedPartition& alpha) {
    for (const ClopenSet& part : alpha.parts())
        if (!(g.apply_clopen(part) == part)) return false;
    return true;
}

std::vector<std::pair<Word, Word>> match_clopen(const ClopenSet& a, const ClopenSet& b) {
    require(!a.is_empty() && !b.is_empty(), "match_clopen: sets must be nonempty");
    std::vector<Word> left = a.words(), right = b.words();
    // Splitting the lexicographically last word keeps the list sorted: both
    // children still compare greater than every other element.
    auto grow = [](std::vector<Word>& words, std::size_t target) {
        while (words.size() < target) {
            Word w = words.back();
            words.back() = w.child('0');
            words.push_back(w.child('1'));
        }
    };
    grow(left, right.size());
    grow(right, left.size());
    std::vector<std::pair<Word, Word>> pairs;
    pairs.reserve(left.size());
    for (std::size_t i = 0; i < left.size(); ++i) pairs.emplace_back(left[i], right[i]);
    return pairs;
}

PrefixMap homogeneity_witness(const OrderedPartition& alpha, const OrderedPartition& beta) {
    require(alpha.size() == beta.size(), "homogeneity_witness: part counts differ");
    std::vector<std::pair<Word, Word>> pairs;
    for (int i = 0; i < alpha.size(); ++i) {
        auto part_pairs = match_clopen(alpha.part(i), beta.part(i));
        pairs.insert(pairs.end(), part_pairs.begin(), part_pairs.end());
    }
    return PrefixMap::from_pairs(std::move(pairs));
}

}  // namespace chainspace
