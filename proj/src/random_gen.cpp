#include "chainspace/random_gen.hpp"

#include <algorithm>
#include <numeric>

namespace chainspace {

int RandomSource::uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Word RandomSource::random_word(int length) {
    std::string bits;
    bits.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) bits.push_back(uniform_int(0, 1) ? '1' : '0');
    return Word(std::move(bits));
}

PrefixCode RandomSource::random_code(int leaves) {
    require(leaves >= 1, "random_code: need at least one leaf");
    std::vector<Word> words{Word("")};
    while (static_cast<int>(words.size()) < leaves) {
        const std::size_t pick =
            static_cast<std::size_t>(uniform_int(0, static_cast<int>(words.size()) - 1));
        const Word parent = words[pick];
        require(parent.size() < 56, "random_code: leaf depth limit reached");
        words[pick] = parent.child('0');
        words.push_back(parent.child('1'));
    }
    return PrefixCode(std::move(words));
}

ChainApprox RandomSource::random_chain(int leaves) {
    PrefixCode code = random_code(leaves);
    std::vector<Word> order = code.leaves();
    std::shuffle(order.begin(), order.end(), engine_);
    return ChainApprox(std::move(order));
}

Permutation RandomSource::random_permutation(int k) {
    std::vector<int> images(static_cast<std::size_t>(k));
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), engine_);
    return Permutation(std::move(images));
}

PrefixMap RandomSource::random_map(int leaves) {
    PrefixCode domain = random_code(leaves);
    PrefixCode range = random_code(leaves);
    return PrefixMap::leaf_bijection(domain, range, random_permutation(leaves));
}

ClopenSet RandomSource::random_clopen(int leaves) {
    const PrefixCode code = random_code(leaves);
    std::vector<Word> chosen;
    for (const Word& w : code.leaves())
        if (uniform_int(0, 1)) chosen.push_back(w);
    if (chosen.empty())
        chosen.push_back(
            code.leaves()[static_cast<std::size_t>(uniform_int(0, leaves - 1))]);
    return ClopenSet::of(std::move(chosen));
}

OrderedPartition RandomSource::random_partition(int parts, int leaves) {
    require(parts >= 1 && leaves >= parts, "random_partition: need leaves >= parts >= 1");
    const PrefixCode code = random_code(leaves);
    std::vector<int> labels(static_cast<std::size_t>(leaves));
    for (int i = 0; i < leaves; ++i) labels[static_cast<std::size_t>(i)] = i % parts;
    std::shuffle(labels.begin(), labels.end(), engine_);
    std::vector<std::vector<Word>> buckets(static_cast<std::size_t>(parts));
    for (int i = 0; i < leaves; ++i)
        buckets[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])].push_back(
            code.leaves()[static_cast<std::size_t>(i)]);
    std::vector<ClopenSet> sets;
    sets.reserve(static_cast<std::size_t>(parts));
    for (std::vector<Word>& bucket : buckets) sets.push_back(ClopenSet::of(std::move(bucket)));
    return OrderedPartition(std::move(sets));
}

Table RandomSource::random_table(int k) {
    std::uint64_t size = 1;
    for (int i = 2; i <= k; ++i) size *= static_cast<std::uint64_t>(i);
    std::vector<int8_t> values(size);
    for (int8_t& v : values) v = uniform_int(0, 1) ? 1 : -1;
    return Table(k, std::move(values));
}

SymbolConfig hash_config(int k, std::uint64_t salt) {
    auto rule = [salt](const OrderedPartition& beta) {
        std::uint64_t h = 1469598103934665603ull ^ salt;
        auto mix = [&h](char c) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        };
        for (const ClopenSet& part : beta.parts()) {
            for (const Word& w : part.words()) {
                for (char c : w.str()) mix(c);
                mix(',');
            }
            mix('|');
        }
        return (h >> 17) & 1 ? 1 : -1;
    };
    return SymbolConfig(k, "hash-rule", rule);
}

}  // namespace chainspace
