#include "chainspace/prefix_code.hpp"

#include <algorithm>
#include <cstdint>

namespace chainspace {

bool is_complete_prefix_code(const std::vector<Word>& words) {
    if (words.empty()) return false;
    std::vector<Word> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    std::size_t max_len = 0;
    for (const Word& w : sorted) max_len = std::max(max_len, w.size());
    if (max_len > 60) return false;  // outside the supported depth range
    // In sorted order a prefix relation, if any, shows up between neighbours.
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i].is_prefix_of(sorted[i + 1])) return false;
    std::uint64_t kraft = 0;
    for (const Word& w : sorted) kraft += std::uint64_t{1} << (max_len - w.size());
    return kraft == (std::uint64_t{1} << max_len);
}

PrefixCode::PrefixCode(std::vector<Word> leaves) : leaves_(std::move(leaves)) {
    std::sort(leaves_.begin(), leaves_.end());
    require(is_complete_prefix_code(leaves_),
            "PrefixCode: leaves must form a complete prefix code");
}

const PrefixCode& PrefixCode::trivial() {
    static const PrefixCode code({Word()});
    return code;
}

std::size_t PrefixCode::max_depth() const {
    std::size_t d = 0;
    for (const Word& w : leaves_) d = std::max(d, w.size());
    return d;
}

bool PrefixCode::contains(const Word& w) const {
    return std::binary_search(leaves_.begin(), leaves_.end(), w);
}

std::optional<Word> PrefixCode::leaf_prefixing(const Word& w) const {
    for (const Word& leaf : leaves_)
        if (leaf.is_prefix_of(w)) return leaf;
    return std::nullopt;
}

namespace {

// codes(n) splits n leaves between the two subtrees in every way.
void all_codes_rec(int n, const Word& prefix, std::vector<std::vector<Word>>& partial) {
    if (n == 1) {
        for (auto& leaves : partial) leaves.push_back(prefix);
        return;
    }
    std::vector<std::vector<Word>> result;
    for (int left = 1; left < n; ++left) {
        std::vector<std::vector<Word>> lefts{{}};
        all_codes_rec(left, prefix.child('0'), lefts);
        std::vector<std::vector<Word>> rights{{}};
        all_codes_rec(n - left, prefix.child('1'), rights);
        for (const auto& base : partial)
            for (const auto& l : lefts)
                for (const auto& r : rights) {
                    std::vector<Word> combined = base;
                    combined.insert(combined.end(), l.begin(), l.end());
                    combined.insert(combined.end(), r.begin(), r.end());
                    result.push_back(std::move(combined));
                }
    }
    partial = std::move(result);
}

}  // namespace

std::vector<PrefixCode> all_codes(int n) {
    require(n >= 1, "all_codes: n must be positive");
    std::vector<std::vector<Word>> shapes{{}};
    all_codes_rec(n, Word(), shapes);
    std::vector<PrefixCode> out;
    out.reserve(shapes.size());
    for (auto& leaves : shapes) out.emplace_back(std::move(leaves));
    return out;
}

}  // namespace chainspace
