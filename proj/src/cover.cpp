#include "chainspace/cover.hpp"

#include <algorithm>
#include <cstdint>

namespace chainspace {

namespace {

void validate_partition(const std::vector<ClopenSet>& parts) {
    require(!parts.empty(), "partition: no parts");
    std::size_t max_len = 0;
    for (const ClopenSet& p : parts) {
        require(!p.is_empty(), "partition: parts must be nonempty");
        for (const Word& w : p.words()) max_len = std::max(max_len, w.size());
    }
    require(max_len <= 60, "partition: cylinder depth out of range");
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            require(parts[i].disjoint_from(parts[j]),
                    "partition: parts must be pairwise disjoint");
    // Disjoint parts cover the space iff the dyadic measures sum to 1.
    std::uint64_t kraft = 0;
    for (const ClopenSet& p : parts)
        for (const Word& w : p.words()) kraft += std::uint64_t{1} << (max_len - w.size());
    require(kraft == (std::uint64_t{1} << max_len),
            "partition: parts must cover the whole space");
}

}  // namespace

OrderedPartition::OrderedPartition(std::vector<ClopenSet> parts) : parts_(std::move(parts)) {
    validate_partition(parts_);
}

int OrderedPartition::part_containing(const Word& w) const {
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (parts_[i].contains_cylinder(w)) return static_cast<int>(i);
    return -1;
}

UnorderedPartition::UnorderedPartition(std::vector<ClopenSet> parts) : parts_(std::move(parts)) {
    validate_partition(parts_);
    std::sort(parts_.begin(), parts_.end(),
              [](const ClopenSet& a, const ClopenSet& b) { return a.least() < b.least(); });
}

UnorderedPartition forget_order(const OrderedPartition& p) {
    return UnorderedPartition(p.parts());
}

OrderedPartition join(const OrderedPartition& a, const OrderedPartition& b) {
    std::vector<ClopenSet> parts;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j) {
            ClopenSet cell = a.part(i).intersect(b.part(j));
            if (!cell.is_empty()) parts.push_back(std::move(cell));
        }
    return OrderedPartition(std::move(parts));
}

OrderedPartition permute_parts(const Permutation& sigma, const OrderedPartition& beta) {
    require(sigma.k() == beta.size(), "permute_parts: size mismatch");
    std::vector<ClopenSet> parts;
    parts.reserve(static_cast<std::size_t>(beta.size()));
    for (int i = 0; i < beta.size(); ++i) parts.push_back(beta.part(sigma.apply(i)));
    return OrderedPartition(std::move(parts));
}

OrderedPartition amalgamate_cover(const OrderedPartition& beta, const SetPartition& gamma) {
    require(gamma.ground_size() == beta.size(),
            "amalgamate_cover: gamma must partition beta's index set");
    std::vector<ClopenSet> parts;
    parts.reserve(static_cast<std::size_t>(gamma.block_count()));
    for (const auto& block : gamma.blocks()) {
        ClopenSet g;
        for (int i : block) g = g.unite(beta.part(i - 1));
        parts.push_back(std::move(g));
    }
    return OrderedPartition(std::move(parts));
}

bool refines(const OrderedPartition& fine, const OrderedPartition& coarse) {
    for (const ClopenSet& f : fine.parts()) {
        bool inside = false;
        for (const ClopenSet& c : coarse.parts())
            if (f.subset_of(c)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

std::vector<UnorderedPartition> leaf_partitions(const PrefixCode& code, int parts) {
    const int n = static_cast<int>(code.leaves().size());
    require(parts >= 1 && parts <= n, "leaf_partitions: need 1 <= parts <= leaf count");
    std::vector<UnorderedPartition> out;
    for (const SetPartition& p : enumerate_partitions(n, parts, true)) {
        std::vector<ClopenSet> groups;
        groups.reserve(static_cast<std::size_t>(parts));
        for (const std::vector<int>& block : p.blocks()) {
            std::vector<Word> words;
            words.reserve(block.size());
            for (int i : block) words.push_back(code.leaves()[static_cast<std::size_t>(i - 1)]);
            groups.push_back(ClopenSet::of(std::move(words)));
        }
        out.emplace_back(std::move(groups));
    }
    return out;
}

}  // namespace chainspace
