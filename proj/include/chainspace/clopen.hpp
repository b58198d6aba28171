#ifndef CHAINSPACE_CLOPEN_HPP
#define CHAINSPACE_CLOPEN_HPP

#include <vector>

#include "chainspace/word.hpp"

namespace chainspace {

/// A clopen subset of the binary Cantor space, held in canonical form: a
/// sorted antichain of cylinder words in which no word is a prefix of
/// another and no two words are siblings (a complete sibling pair is always
/// merged into the parent).  Canonical forms are unique, so set equality is
/// word-list equality.  The empty set has no words; the whole space is the
/// single empty word.
class ClopenSet {
public:
    ClopenSet() = default;

    /// Canonicalize an arbitrary list of cylinder words.
    static ClopenSet of(std::vector<Word> words);

    static ClopenSet whole() { return of({Word()}); }
    static ClopenSet cylinder(const Word& w) { return of({w}); }

    const std::vector<Word>& words() const { return words_; }
    bool is_empty() const { return words_.empty(); }
    bool is_whole() const { return words_.size() == 1 && words_.front().empty(); }

    /// Lexicographically least cylinder word (requires a nonempty set).
    const Word& least() const {
        require(!words_.empty(), "ClopenSet::least: set is empty");
        return words_.front();
    }

    /// Whole cylinder containment: [w] subset of this set.
    bool contains_cylinder(const Word& w) const;

    /// Nonempty intersection with the cylinder [w].
    bool meets_cylinder(const Word& w) const;

    ClopenSet unite(const ClopenSet& other) const;
    ClopenSet intersect(const ClopenSet& other) const;
    ClopenSet complement() const;
    ClopenSet minus(const ClopenSet& other) const { return intersect(other.complement()); }

    bool subset_of(const ClopenSet& other) const;
    bool intersects(const ClopenSet& other) const;
    bool disjoint_from(const ClopenSet& other) const { return !intersects(other); }

    bool operator==(const ClopenSet&) const = default;

private:
    struct canonical_tag {};
    ClopenSet(canonical_tag, std::vector<Word> words) : words_(std::move(words)) {}

    std::vector<Word> words_;
};

}  // namespace chainspace

#endif
