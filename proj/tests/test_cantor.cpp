#include <doctest.h>

#include <vector>

#include "chainspace/cover.hpp"
#include "chainspace/prefix_map.hpp"

using namespace chainspace;

namespace {

ClopenSet clopen(std::vector<std::string> words) {
    std::vector<Word> ws;
    ws.reserve(words.size());
    for (std::string& s : words) ws.emplace_back(std::move(s));
    return ClopenSet::of(std::move(ws));
}

PrefixMap map_of(std::vector<std::pair<std::string, std::string>> pairs) {
    std::vector<std::pair<Word, Word>> ps;
    ps.reserve(pairs.size());
    for (auto& [u, v] : pairs) ps.emplace_back(Word(u), Word(v));
    return PrefixMap::from_pairs(std::move(ps));
}

std::vector<std::string> strings(const ClopenSet& s) {
    std::vector<std::string> out;
    for (const Word& w : s.words()) out.push_back(w.str());
    return out;
}

}  // namespace

TEST_CASE("canonical form of cylinder lists") {
    CHECK(strings(clopen({"00", "01"})) == std::vector<std::string>{"0"});
    CHECK(strings(clopen({"0", "01"})) == std::vector<std::string>{"0"});
    const ClopenSet whole = clopen({"00", "01", "10", "11"});
    CHECK(whole.is_whole());
    CHECK(strings(whole) == std::vector<std::string>{""});
    CHECK(clopen({}).is_empty());
}

TEST_CASE("boolean operations agree with cylinder arithmetic") {
    CHECK(strings(clopen({"0"}).complement()) == std::vector<std::string>{"1"});
    CHECK(strings(clopen({"0"}).intersect(clopen({"00", "11"}))) ==
          std::vector<std::string>{"00"});
    CHECK(clopen({"0"}).unite(clopen({"1"})).is_whole());
    CHECK(clopen({"0"}).minus(clopen({"01"})) == clopen({"00"}));
    CHECK(clopen({"0"}).subset_of(clopen({"0", "10"})));
    CHECK(clopen({"01"}).intersects(clopen({"0"})));
    CHECK(clopen({"01"}).disjoint_from(clopen({"1"})));
}

TEST_CASE("composition acts as apply-right-then-left") {
    const PrefixMap f = map_of({{"0", "00"}, {"10", "01"}, {"11", "1"}});
    SUBCASE("two-sided inverse") {
        CHECK(compose(f, f.inverse()).is_identity());
        CHECK(compose(f.inverse(), f).is_identity());
    }
    SUBCASE("identity is neutral") {
        CHECK(compose(PrefixMap::identity(), f) == f);
        CHECK(compose(f, PrefixMap::identity()) == f);
    }
    SUBCASE("pointwise on a truncated point") {
        const Word x("0111");
        CHECK(f.apply_word(f.inverse().apply_word(x)) == x);
        CHECK(f.inverse().apply_word(f.apply_word(x)) == x);
        // f sends 0111... to 00111...
        CHECK(f.apply_word(x) == Word("00111"));
    }
    SUBCASE("pointwise composition law on words") {
        const PrefixMap g = map_of({{"00", "1"}, {"01", "00"}, {"1", "01"}});
        const PrefixMap fg = compose(f, g);
        for (const char* s : {"0000", "0101", "1010", "1111", "0110"}) {
            const Word w(s);
            CHECK(fg.apply_word(w) == f.apply_word(g.apply_word(w)));
        }
    }
}

TEST_CASE("images of clopen sets and partitions") {
    const PrefixMap g = map_of({{"0", "00"}, {"10", "01"}, {"11", "1"}});
    CHECK(g.apply_clopen(clopen({"0"})) == clopen({"00"}));
    CHECK(PrefixMap::identity().apply_clopen(clopen({"0", "11"})) == clopen({"0", "11"}));
    const OrderedPartition image =
        g.apply(OrderedPartition({clopen({"0"}), clopen({"1"})}));
    REQUIRE(image.size() == 2);
    CHECK(image.part(0) == clopen({"00"}));
    CHECK(image.part(1) == clopen({"01", "1"}));
}

TEST_CASE("join orders intersections lexicographically by index pair") {
    const OrderedPartition alpha({clopen({"0"}), clopen({"1"})});
    SUBCASE("idempotent") {
        const OrderedPartition j = join(alpha, alpha);
        REQUIRE(j.size() == 2);
        CHECK(j.part(0) == clopen({"0"}));
        CHECK(j.part(1) == clopen({"1"}));
    }
    SUBCASE("crosswise split") {
        const OrderedPartition beta({clopen({"00", "10"}), clopen({"01", "11"})});
        const OrderedPartition j = join(alpha, beta);
        REQUIRE(j.size() == 4);
        CHECK(j.part(0) == clopen({"00"}));
        CHECK(j.part(1) == clopen({"01"}));
        CHECK(j.part(2) == clopen({"10"}));
        CHECK(j.part(3) == clopen({"11"}));
    }
    SUBCASE("empty cross-intersections are dropped") {
        const OrderedPartition beta({clopen({"1"}), clopen({"0"})});
        const OrderedPartition j = join(alpha, beta);
        REQUIRE(j.size() == 2);
        CHECK(j.part(0) == clopen({"0"}));
        CHECK(j.part(1) == clopen({"1"}));
    }
}

TEST_CASE("homogeneity witness maps parts onto parts") {
    SUBCASE("pad-and-pair example") {
        const OrderedPartition alpha({clopen({"0"}), clopen({"1"})});
        const OrderedPartition beta({clopen({"00"}), clopen({"01", "1"})});
        const PrefixMap g = homogeneity_witness(alpha, beta);
        const std::vector<std::pair<Word, Word>> expected = {
            {Word("0"), Word("00")}, {Word("10"), Word("01")}, {Word("11"), Word("1")}};
        CHECK(g.pairs() == expected);
    }
    SUBCASE("three parts reversed") {
        const OrderedPartition alpha({clopen({"00"}), clopen({"01"}), clopen({"1"})});
        const OrderedPartition beta({clopen({"1"}), clopen({"01"}), clopen({"00"})});
        const PrefixMap g = homogeneity_witness(alpha, beta);
        for (int i = 0; i < 3; ++i) CHECK(g.apply_clopen(alpha.part(i)) == beta.part(i));
    }
    SUBCASE("equal partitions give a stabilizing map") {
        const OrderedPartition alpha({clopen({"0", "11"}), clopen({"10"})});
        CHECK(stabilizes(homogeneity_witness(alpha, alpha), alpha));
    }
    SUBCASE("length mismatch is rejected") {
        const OrderedPartition two({clopen({"0"}), clopen({"1"})});
        const OrderedPartition one({ClopenSet::whole()});
        CHECK_THROWS_AS(homogeneity_witness(two, one), ContractViolation);
    }
}

TEST_CASE("stabilizes checks every part") {
    const OrderedPartition alpha({clopen({"0"}), clopen({"1"})});
    CHECK(stabilizes(PrefixMap::identity(), alpha));
    CHECK_FALSE(stabilizes(map_of({{"0", "1"}, {"1", "0"}}), alpha));
    CHECK(stabilizes(map_of({{"00", "01"}, {"01", "00"}, {"1", "1"}}), alpha));
}

TEST_CASE("part permutation acts by index lookup") {
    const OrderedPartition beta({clopen({"00"}), clopen({"01"}), clopen({"1"})});
    const Permutation sigma({2, 0, 1});  // sigma(0)=2, sigma(1)=0, sigma(2)=1
    const OrderedPartition moved = permute_parts(sigma, beta);
    CHECK(moved.part(0) == beta.part(2));
    CHECK(moved.part(1) == beta.part(0));
    CHECK(moved.part(2) == beta.part(1));
}

TEST_CASE("unordered partitions sort parts by least cylinder") {
    const UnorderedPartition p({clopen({"1"}), clopen({"0"})});
    CHECK(p.part(0) == clopen({"0"}));
    CHECK(p.part(1) == clopen({"1"}));
    const OrderedPartition alpha({clopen({"1"}), clopen({"0"})});
    CHECK(forget_order(alpha) == p);
}
