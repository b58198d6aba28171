#ifndef CHAINSPACE_PREFIX_CODE_HPP
#define CHAINSPACE_PREFIX_CODE_HPP

#include <optional>
#include <vector>

#include "chainspace/word.hpp"

namespace chainspace {

/// A complete binary prefix code: a finite antichain of words whose
/// cylinders tile the whole space (prefix-free with Kraft sum exactly 1).
/// Leaves are kept sorted lexicographically.
class PrefixCode {
public:
    explicit PrefixCode(std::vector<Word> leaves);

    static const PrefixCode& trivial();  // the single empty word

    const std::vector<Word>& leaves() const { return leaves_; }
    std::size_t size() const { return leaves_.size(); }
    std::size_t max_depth() const;

    bool contains(const Word& w) const;

    /// The unique leaf that is a prefix of w, when w reaches leaf depth.
    std::optional<Word> leaf_prefixing(const Word& w) const;

    bool operator==(const PrefixCode&) const = default;

private:
    std::vector<Word> leaves_;
};

/// Check the complete-code property without constructing (used by validators).
bool is_complete_prefix_code(const std::vector<Word>& words);

/// All complete binary prefix codes with exactly n leaves (Catalan(n-1) many),
/// in a fixed deterministic order.
std::vector<PrefixCode> all_codes(int n);

}  // namespace chainspace

#endif
