#include "chainspace/chain.hpp"

#include <algorithm>

namespace chainspace {

ChainApprox::ChainApprox(std::vector<Word> order) : order_(std::move(order)) {
    require(is_complete_prefix_code(order_),
            "ChainApprox: order must list the leaves of a complete prefix code");
}

ChainApprox ChainApprox::lex(const PrefixCode& code) {
    return ChainApprox(code.leaves());
}

PrefixCode ChainApprox::code() const {
    return PrefixCode(order_);
}

std::size_t ChainApprox::position_of(const Word& leaf) const {
    for (std::size_t i = 0; i < order_.size(); ++i)
        if (order_[i] == leaf) return i;
    throw ContractViolation("ChainApprox::position_of: not a leaf of this chain");
}

ChainApprox refine_chain(const ChainApprox& c, const Word& leaf, const Word& first_child,
                         std::size_t insert_pos) {
    const std::size_t pos = c.position_of(leaf);
    require(first_child == leaf.child('0') || first_child == leaf.child('1'),
            "refine_chain: first_child must be a child of leaf");
    require(insert_pos > pos && insert_pos <= c.size(),
            "refine_chain: insert position must lie strictly after the leaf");
    std::vector<Word> order = c.order();
    order[pos] = first_child;
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(insert_pos),
                 first_child.sibling());
    return ChainApprox(std::move(order));
}

ChainApprox project_chain(const ChainApprox& c, const PrefixCode& coarse) {
    std::vector<Word> order;
    order.reserve(coarse.size());
    for (const Word& leaf : c.order()) {
        auto up = coarse.leaf_prefixing(leaf);
        require(up.has_value(), "project_chain: coarse code does not cover a leaf");
        if (std::find(order.begin(), order.end(), *up) == order.end())
            order.push_back(*up);
    }
    require(order.size() == coarse.size(), "project_chain: coarse code not fully reached");
    return ChainApprox(std::move(order));
}

namespace {

// Deterministic splitting rule shared by every auto-refinement: the '0'-child
// keeps the parent's first-touch position, the '1'-child follows immediately.
template <typename Straddles>
ChainApprox refine_until(const ChainApprox& c, Straddles straddles) {
    std::vector<Word> order = c.order();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (straddles(order[i])) {
                Word left = order[i].child('0');
                order[i] = left;
                order.insert(order.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                             left.sibling());
                changed = true;
                break;
            }
        }
    }
    return ChainApprox(std::move(order));
}

}  // namespace

ChainApprox refine_to_measurable(const ChainApprox& c, const UnorderedPartition& parts) {
    return refine_until(c, [&parts](const Word& leaf) {
        for (const ClopenSet& p : parts.parts())
            if (p.contains_cylinder(leaf)) return false;
        return true;
    });
}

ChainApprox refine_to_map(const ChainApprox& c, const PrefixMap& g) {
    return refine_until(c, [&g](const Word& leaf) {
        for (const auto& [u, v] : g.pairs())
            if (u.is_prefix_of(leaf)) return false;
        return true;
    });
}

std::vector<Word> hull_min(const ChainApprox& c, const ClopenSet& d) {
    require(!d.is_empty(), "hull_min: set must be nonempty");
    std::vector<Word> prefix;
    for (const Word& leaf : c.order()) {
        prefix.push_back(leaf);
        if (d.meets_cylinder(leaf)) return prefix;
    }
    throw ContractViolation("hull_min: nonempty set meets no leaf");  // unreachable
}

std::vector<Word> hull_max(const ChainApprox& c, const ClopenSet& d) {
    require(d.contains_cylinder(c.root()),
            "hull_max: set must contain the root's cylinder");
    std::vector<Word> prefix;
    for (const Word& leaf : c.order()) {
        if (!d.contains_cylinder(leaf)) break;
        prefix.push_back(leaf);
    }
    return prefix;
}

OrderedPartition induced_order(const ChainApprox& c, const UnorderedPartition& parts) {
    ChainApprox fine = refine_to_measurable(c, parts);
    std::vector<ClopenSet> ordered;
    ordered.reserve(static_cast<std::size_t>(parts.size()));
    std::vector<bool> seen(static_cast<std::size_t>(parts.size()), false);
    for (const Word& leaf : fine.order()) {
        for (int i = 0; i < parts.size(); ++i) {
            if (!seen[static_cast<std::size_t>(i)] &&
                parts.part(i).contains_cylinder(leaf)) {
                seen[static_cast<std::size_t>(i)] = true;
                ordered.push_back(parts.part(i));
                break;
            }
        }
        if (static_cast<int>(ordered.size()) == parts.size()) break;
    }
    return OrderedPartition(std::move(ordered));
}

Permutation theta(const ChainApprox& c, const OrderedPartition& beta) {
    OrderedPartition sorted = induced_order(c, forget_order(beta));
    std::vector<int> images(static_cast<std::size_t>(beta.size()), -1);
    for (int i = 0; i < beta.size(); ++i) {
        for (int j = 0; j < beta.size(); ++j)
            if (sorted.part(i) == beta.part(j)) {
                images[static_cast<std::size_t>(i)] = j;
                break;
            }
    }
    return Permutation(std::move(images));
}

bool in_neighborhood(const ChainApprox& c, const OrderedPartition& alpha) {
    return induced_order(c, forget_order(alpha)) == alpha;
}

ChainApprox act_chain(const PrefixMap& g, const ChainApprox& c) {
    ChainApprox fine = refine_to_map(c, g);
    std::vector<Word> order;
    order.reserve(fine.size());
    for (const Word& leaf : fine.order()) order.push_back(g.apply_word(leaf));
    return ChainApprox(std::move(order));
}

std::vector<Word> entry_points(const ChainApprox& c, const OrderedPartition& alpha) {
    ChainApprox fine = refine_to_measurable(c, forget_order(alpha));
    std::vector<Word> entries;
    entries.reserve(static_cast<std::size_t>(alpha.size()));
    std::vector<bool> seen(static_cast<std::size_t>(alpha.size()), false);
    for (const Word& leaf : fine.order()) {
        const int i = alpha.part_containing(leaf);
        if (i >= 0 && !seen[static_cast<std::size_t>(i)]) {
            seen[static_cast<std::size_t>(i)] = true;
            entries.push_back(leaf);
        }
        if (entries.size() == static_cast<std::size_t>(alpha.size())) break;
    }
    return entries;
}

}  // namespace chainspace
