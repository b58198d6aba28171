#ifndef CHAINSPACE_WORD_HPP
#define CHAINSPACE_WORD_HPP

#include <compare>
#include <string>

#include "chainspace/contracts.hpp"

namespace chainspace {

/// A finite binary word, standing for the cylinder of all infinite
/// {0,1}-sequences extending it.  The empty word denotes the whole space.
/// Comparison is lexicographic on the underlying bit string.
class Word {
public:
    Word() = default;

    explicit Word(std::string bits) : bits_(std::move(bits)) {
        for (char c : bits_)
            require(c == '0' || c == '1', "Word: bits must be '0' or '1'");
    }

    const std::string& str() const { return bits_; }
    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    char bit(std::size_t i) const { return bits_.at(i); }

    bool is_prefix_of(const Word& w) const {
        return bits_.size() <= w.bits_.size() &&
               w.bits_.compare(0, bits_.size(), bits_) == 0;
    }

    bool is_proper_prefix_of(const Word& w) const {
        return bits_.size() < w.bits_.size() && is_prefix_of(w);
    }

    /// Either word a prefix of the other, i.e. the two cylinders intersect.
    bool comparable_with(const Word& w) const {
        return is_prefix_of(w) || w.is_prefix_of(*this);
    }

    Word child(char bit) const {
        require(bit == '0' || bit == '1', "Word::child: bit must be '0' or '1'");
        return Word(bits_ + bit);
    }

    Word sibling() const {
        require(!bits_.empty(), "Word::sibling: the empty word has no sibling");
        std::string s = bits_;
        s.back() = s.back() == '0' ? '1' : '0';
        return Word(std::move(s));
    }

    Word parent() const {
        require(!bits_.empty(), "Word::parent: the empty word has no parent");
        return Word(bits_.substr(0, bits_.size() - 1));
    }

    Word concat(const Word& suffix) const { return Word(bits_ + suffix.bits_); }

    Word suffix_from(std::size_t pos) const {
        require(pos <= bits_.size(), "Word::suffix_from: position out of range");
        return Word(bits_.substr(pos));
    }

    auto operator<=>(const Word&) const = default;

private:
    std::string bits_;
};

}  // namespace chainspace

#endif
