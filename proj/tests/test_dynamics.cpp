#include <doctest.h>

#include <vector>

#include "chainspace/witness.hpp"

using namespace chainspace;

namespace {

ChainApprox chain(std::vector<std::string> order) {
    std::vector<Word> ws;
    ws.reserve(order.size());
    for (std::string& s : order) ws.emplace_back(std::move(s));
    return ChainApprox(std::move(ws));
}

ClopenSet clopen(std::vector<std::string> words) {
    std::vector<Word> ws;
    ws.reserve(words.size());
    for (std::string& s : words) ws.emplace_back(std::move(s));
    return ClopenSet::of(std::move(ws));
}

const ChainApprox lex4 = chain({"00", "01", "10", "11"});
const ChainApprox mixed4 = chain({"10", "00", "11", "01"});
const OrderedPartition std2({clopen({"0"}), clopen({"1"})});

}  // namespace

TEST_CASE("point cover witness pulls a cylinder over the point") {
    SUBCASE("point already covered: identity") {
        CHECK(point_cover_witness(Word("01"), clopen({"0"})).is_identity());
        CHECK(point_cover_witness(Word("11"), ClopenSet::whole()).is_identity());
    }
    SUBCASE("point outside: image covers it") {
        const PrefixMap g = point_cover_witness(Word("11"), clopen({"0"}));
        CHECK(ClopenSet::cylinder(Word("11")).subset_of(g.apply_clopen(clopen({"0"}))));
    }
    SUBCASE("empty cover is rejected") {
        CHECK_THROWS_AS(point_cover_witness(Word("0"), ClopenSet()), ContractViolation);
    }
    SUBCASE("whole-space point with a proper cover is rejected") {
        CHECK_THROWS_AS(point_cover_witness(Word(""), clopen({"0"})), ContractViolation);
    }
}

TEST_CASE("squeeze witness compresses a proper set into any nonempty one") {
    SUBCASE("already inside: identity") {
        CHECK(extreme_proximality_witness(clopen({"00"}), clopen({"0"})).is_identity());
    }
    SUBCASE("worked compression") {
        const ClopenSet f = clopen({"0"});
        const ClopenSet u = clopen({"11"});
        const PrefixMap g = extreme_proximality_witness(f, u);
        CHECK(g.apply_clopen(f).subset_of(u));
    }
    SUBCASE("two-cylinder source") {
        const ClopenSet f = clopen({"0", "10"});
        const ClopenSet u = clopen({"01"});
        CHECK(extreme_proximality_witness(f, u).apply_clopen(f).subset_of(u));
    }
    SUBCASE("whole space cannot be compressed") {
        CHECK_THROWS_AS(extreme_proximality_witness(ClopenSet::whole(), clopen({"0"})),
                        ContractViolation);
    }
    SUBCASE("empty target is rejected") {
        CHECK_THROWS_AS(extreme_proximality_witness(clopen({"0"}), ClopenSet()),
                        ContractViolation);
    }
}

TEST_CASE("order witness moves a chain into a prescribed neighborhood") {
    SUBCASE("chain out of order") {
        const PrefixMap g = phi_minimality_witness(mixed4, std2);
        CHECK(in_neighborhood(act_chain(g, mixed4), std2));
    }
    SUBCASE("already in the neighborhood") {
        const PrefixMap g = phi_minimality_witness(lex4, std2);
        CHECK(in_neighborhood(act_chain(g, lex4), std2));
    }
    SUBCASE("single part needs nothing") {
        const PrefixMap g = phi_minimality_witness(lex4, OrderedPartition({ClopenSet::whole()}));
        CHECK(g.is_identity());
    }
}

TEST_CASE("joint order witness aligns two chains at once") {
    SUBCASE("equal chains") {
        const PrefixMap g = proximality_witness(mixed4, mixed4, std2);
        CHECK(in_neighborhood(act_chain(g, mixed4), std2));
    }
    SUBCASE("lex against reverse lex") {
        const ChainApprox rev = chain({"11", "10", "01", "00"});
        const PrefixMap g = proximality_witness(lex4, rev, std2);
        CHECK(in_neighborhood(act_chain(g, lex4), std2));
        CHECK(in_neighborhood(act_chain(g, rev), std2));
    }
    SUBCASE("three parts") {
        const OrderedPartition alpha({clopen({"00"}), clopen({"01"}), clopen({"1"})});
        const ChainApprox c1 = chain({"11", "00", "01", "10"});
        const ChainApprox c2 = chain({"01", "10", "00", "11"});
        const PrefixMap g = proximality_witness(c1, c2, alpha);
        CHECK(in_neighborhood(act_chain(g, c1), alpha));
        CHECK(in_neighborhood(act_chain(g, c2), alpha));
    }
}

TEST_CASE("incomparability witness fixes the root and crosses the hull") {
    SUBCASE("worked example") {
        const IncomparabilityWitness w = incomparability_witness(lex4, clopen({"0"}));
        const std::vector<std::pair<Word, Word>> expected = {
            {Word("00"), Word("00")}, {Word("01"), Word("1")}, {Word("1"), Word("01")}};
        CHECK(w.witness.pairs() == expected);
        CHECK(w.a == Word("01"));
        CHECK(w.b == Word("1"));
        const ClopenSet f = clopen({"0"});
        const ClopenSet gf = w.witness.apply_clopen(f);
        CHECK(ClopenSet::cylinder(w.a).subset_of(f.minus(gf)));
        CHECK(ClopenSet::cylinder(w.b).subset_of(gf.minus(f)));
        // The root's cylinder is untouched.
        CHECK(w.witness.apply_clopen(ClopenSet::cylinder(lex4.root())) ==
              ClopenSet::cylinder(lex4.root()));
    }
    SUBCASE("whole space is rejected") {
        CHECK_THROWS_AS(incomparability_witness(lex4, ClopenSet::whole()), ContractViolation);
    }
    SUBCASE("single root leaf is rejected") {
        CHECK_THROWS_AS(incomparability_witness(lex4, clopen({"00"})), ContractViolation);
    }
    SUBCASE("set must be a hull of the chain") {
        CHECK_THROWS_AS(incomparability_witness(lex4, clopen({"00", "10"})),
                        ContractViolation);
    }
}

TEST_CASE("certificates from every constructor pass the checker") {
    CHECK(check_witness(certify_point_cover(Word("11"), clopen({"0"}))).ok);
    CHECK(check_witness(certify_extreme_proximality(clopen({"0"}), clopen({"11"}))).ok);
    CHECK(check_witness(certify_phi_minimality(mixed4, std2)).ok);
    CHECK(check_witness(certify_proximality(lex4, chain({"11", "10", "01", "00"}), std2)).ok);
    CHECK(check_witness(certify_incomparability(lex4, clopen({"0"}))).ok);
}

TEST_CASE("checker rejects tampered certificates") {
    SUBCASE("tampered witness map") {
        WitnessCertificate cert = certify_extreme_proximality(clopen({"0"}), clopen({"11"}));
        cert.witness = PrefixMap::identity();
        const CheckResult r = check_witness(cert);
        CHECK_FALSE(r.ok);
        CHECK_FALSE(r.diagnostic.empty());
    }
    SUBCASE("mismatched inputs") {
        WitnessCertificate cert = certify_phi_minimality(mixed4, std2);
        cert.chain = lex4;  // the stored witness reverses this chain instead
        REQUIRE_FALSE(in_neighborhood(act_chain(cert.witness, lex4), std2));
        CHECK_FALSE(check_witness(cert).ok);
    }
    SUBCASE("missing payload") {
        WitnessCertificate cert;
        cert.kind = WitnessKind::point_cover;
        const CheckResult r = check_witness(cert);
        CHECK_FALSE(r.ok);
        CHECK_FALSE(r.diagnostic.empty());
    }
    SUBCASE("crossing cylinders swapped") {
        WitnessCertificate cert = certify_incomparability(lex4, clopen({"0"}));
        std::swap(cert.evidence_a, cert.evidence_b);
        CHECK_FALSE(check_witness(cert).ok);
    }
}
