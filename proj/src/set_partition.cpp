#include "chainspace/set_partition.hpp"

#include <algorithm>

namespace chainspace {

namespace {

char digit_char(int d) {
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10);
}

int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

}  // namespace

SetPartition::SetPartition(int ground_size, std::vector<std::vector<int>> blocks)
    : n_(ground_size), blocks_(std::move(blocks)) {
    require(n_ >= 1, "SetPartition: ground set must be nonempty");
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
    int covered = 0;
    for (auto& b : blocks_) {
        require(!b.empty(), "SetPartition: blocks must be nonempty");
        std::sort(b.begin(), b.end());
        for (int e : b) {
            require(e >= 1 && e <= n_, "SetPartition: element out of range");
            require(!seen[static_cast<std::size_t>(e)], "SetPartition: duplicate element");
            seen[static_cast<std::size_t>(e)] = true;
            ++covered;
        }
    }
    require(covered == n_, "SetPartition: blocks must cover the ground set");
}

SetPartition SetPartition::from_encoding(const std::string& encoding) {
    require(!encoding.empty(), "SetPartition::from_encoding: empty encoding");
    int max_digit = -1;
    for (char c : encoding) {
        int d = digit_value(c);
        require(d >= 0, "SetPartition::from_encoding: bad character");
        max_digit = std::max(max_digit, d);
    }
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(max_digit) + 1);
    for (int i = 0; i < static_cast<int>(encoding.size()); ++i)
        blocks[static_cast<std::size_t>(digit_value(encoding[static_cast<std::size_t>(i)]))]
            .push_back(i + 1);
    for (const auto& b : blocks)
        require(!b.empty(), "SetPartition::from_encoding: unused block index");
    return SetPartition(static_cast<int>(encoding.size()), std::move(blocks));
}

SetPartition SetPartition::singletons(int n) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) blocks.push_back({i});
    return SetPartition(n, std::move(blocks));
}

int SetPartition::block_of(int element) const {
    require(element >= 1 && element <= n_, "SetPartition::block_of: element out of range");
    for (std::size_t j = 0; j < blocks_.size(); ++j)
        if (std::binary_search(blocks_[j].begin(), blocks_[j].end(), element))
            return static_cast<int>(j);
    return -1;  // unreachable: constructor guarantees coverage
}

std::string SetPartition::encoding() const {
    std::string enc(static_cast<std::size_t>(n_), '?');
    for (std::size_t j = 0; j < blocks_.size(); ++j)
        for (int e : blocks_[j])
            enc[static_cast<std::size_t>(e - 1)] = digit_char(static_cast<int>(j));
    return enc;
}

bool SetPartition::is_naturally_ordered() const {
    for (std::size_t j = 1; j < blocks_.size(); ++j)
        if (blocks_[j - 1].front() > blocks_[j].front()) return false;
    return true;
}

SetPartition naturally_order(const SetPartition& p) {
    std::vector<std::vector<int>> blocks = p.blocks();
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    return SetPartition(p.ground_size(), std::move(blocks));
}

namespace {

// Lexicographic recursion over block-index strings.  In natural mode a digit
// may exceed the running maximum by at most one (restricted growth); in the
// general mode any digit below k is allowed.  Both prune on the number of
// still-unused blocks versus remaining positions.
void enumerate_rec(int n, int k, bool natural, std::vector<int>& assign,
                   std::vector<int>& block_sizes, int used,
                   std::vector<SetPartition>& out) {
    const int pos = static_cast<int>(assign.size());
    if (pos == n) {
        if (used == k) {
            std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
            for (int i = 0; i < n; ++i)
                blocks[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])].push_back(i + 1);
            out.emplace_back(n, std::move(blocks));
        }
        return;
    }
    if (k - used > n - pos) return;  // cannot populate the remaining blocks
    const int limit = natural ? std::min(used, k - 1) : k - 1;
    for (int d = 0; d <= limit; ++d) {
        assign.push_back(d);
        const bool fresh = block_sizes[static_cast<std::size_t>(d)] == 0;
        ++block_sizes[static_cast<std::size_t>(d)];
        enumerate_rec(n, k, natural, assign, block_sizes, used + (fresh ? 1 : 0), out);
        --block_sizes[static_cast<std::size_t>(d)];
        assign.pop_back();
    }
}

}  // namespace

std::vector<SetPartition> enumerate_partitions(int n, int k, bool naturally_ordered) {
    require(n >= 1, "enumerate_partitions: n must be positive");
    std::vector<SetPartition> out;
    if (k < 1 || k > n) return out;
    std::vector<int> assign;
    assign.reserve(static_cast<std::size_t>(n));
    std::vector<int> block_sizes(static_cast<std::size_t>(k), 0);
    enumerate_rec(n, k, naturally_ordered, assign, block_sizes, 0, out);
    return out;
}

SetPartition amalgamate(const SetPartition& gamma, const SetPartition& beta) {
    require(gamma.is_naturally_ordered(), "amalgamate: gamma must be naturally ordered");
    require(beta.is_naturally_ordered(), "amalgamate: beta must be naturally ordered");
    require(beta.ground_size() == gamma.block_count(),
            "amalgamate: beta must partition gamma's block index set");
    std::vector<std::vector<int>> merged;
    merged.reserve(static_cast<std::size_t>(beta.block_count()));
    for (const auto& b : beta.blocks()) {
        std::vector<int> g;
        for (int i : b) {
            const auto& c = gamma.block(i - 1);
            g.insert(g.end(), c.begin(), c.end());
        }
        std::sort(g.begin(), g.end());
        merged.push_back(std::move(g));
    }
    return naturally_order(SetPartition(gamma.ground_size(), std::move(merged)));
}

std::vector<SetPartition> coarsenings(const SetPartition& eta, int k) {
    require(eta.is_naturally_ordered(), "coarsenings: eta must be naturally ordered");
    std::vector<SetPartition> out;
    for (const SetPartition& tau : enumerate_partitions(eta.block_count(), k, true))
        out.push_back(amalgamate(eta, tau));
    std::sort(out.begin(), out.end(), [](const SetPartition& a, const SetPartition& b) {
        return a.encoding() < b.encoding();
    });
    return out;
}

bool is_refinement(const SetPartition& fine, const SetPartition& coarse) {
    require(fine.ground_size() == coarse.ground_size(),
            "is_refinement: partitions of different ground sets");
    for (const auto& b : fine.blocks()) {
        const int target = coarse.block_of(b.front());
        for (int e : b)
            if (coarse.block_of(e) != target) return false;
    }
    return true;
}

int Coloring::at(const SetPartition& p) const {
    auto it = color.find(naturally_order(p).encoding());
    require(it != color.end(), "Coloring::at: partition not colored");
    return it->second;
}

bool Coloring::has(const SetPartition& p) const {
    return color.find(naturally_order(p).encoding()) != color.end();
}

}  // namespace chainspace
