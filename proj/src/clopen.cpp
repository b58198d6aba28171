#include "chainspace/clopen.hpp"

#include <algorithm>

namespace chainspace {

namespace {

// Two sorted canonical words are siblings when they differ in the last bit only.
bool are_siblings(const Word& a, const Word& b) {
    return !a.empty() && a.size() == b.size() &&
           a.str().compare(0, a.size() - 1, b.str(), 0, b.size() - 1) == 0 &&
           a.str().back() != b.str().back();
}

void complement_rec(const ClopenSet& s, const Word& prefix, std::vector<Word>& out) {
    if (s.contains_cylinder(prefix)) return;
    if (!s.meets_cylinder(prefix)) {
        out.push_back(prefix);
        return;
    }
    complement_rec(s, prefix.child('0'), out);
    complement_rec(s, prefix.child('1'), out);
}

}  // namespace

ClopenSet ClopenSet::of(std::vector<Word> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());

    // Drop words covered by an earlier prefix.  In sorted order any covering
    // word of w precedes w, and the closest kept predecessor suffices.
    std::vector<Word> kept;
    kept.reserve(words.size());
    for (const Word& w : words) {
        if (!kept.empty() && kept.back().is_prefix_of(w)) continue;
        kept.push_back(w);
    }

    // Merge complete sibling pairs until none remain; merging preserves sorted
    // order and cannot reintroduce prefix containment.
    bool merged = true;
    while (merged) {
        merged = false;
        std::vector<Word> next;
        next.reserve(kept.size());
        for (std::size_t i = 0; i < kept.size(); ++i) {
            if (i + 1 < kept.size() && are_siblings(kept[i], kept[i + 1])) {
                next.push_back(kept[i].parent());
                ++i;
                merged = true;
            } else {
                next.push_back(kept[i]);
            }
        }
        kept = std::move(next);
    }
    return ClopenSet(canonical_tag{}, std::move(kept));
}

bool ClopenSet::contains_cylinder(const Word& w) const {
    // Canonical form guarantees [w] is covered iff a single word covers it.
    for (const Word& s : words_)
        if (s.is_prefix_of(w)) return true;
    return false;
}

bool ClopenSet::meets_cylinder(const Word& w) const {
    for (const Word& s : words_)
        if (s.comparable_with(w)) return true;
    return false;
}

ClopenSet ClopenSet::unite(const ClopenSet& other) const {
    std::vector<Word> all = words_;
    all.insert(all.end(), other.words_.begin(), other.words_.end());
    return of(std::move(all));
}

ClopenSet ClopenSet::intersect(const ClopenSet& other) const {
    std::vector<Word> out;
    for (const Word& a : words_)
        for (const Word& b : other.words_) {
            if (a.is_prefix_of(b))
                out.push_back(b);
            else if (b.is_prefix_of(a))
                out.push_back(a);
        }
    return of(std::move(out));
}

ClopenSet ClopenSet::complement() const {
    std::vector<Word> out;
    complement_rec(*this, Word(), out);
    return of(std::move(out));
}

bool ClopenSet::subset_of(const ClopenSet& other) const {
    for (const Word& w : words_)
        if (!other.contains_cylinder(w)) return false;
    return true;
}

bool ClopenSet::intersects(const ClopenSet& other) const {
    for (const Word& w : words_)
        if (other.meets_cylinder(w)) return true;
    return false;
}

}  // namespace chainspace
