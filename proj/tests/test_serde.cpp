#include <doctest.h>

#include <vector>

#include "chainspace/serde.hpp"

using namespace chainspace;
using nlohmann::json;

namespace {

ClopenSet clopen(std::vector<std::string> words) {
    std::vector<Word> ws;
    ws.reserve(words.size());
    for (std::string& s : words) ws.emplace_back(std::move(s));
    return ClopenSet::of(std::move(ws));
}

}  // namespace

TEST_CASE("word and permutation forms") {
    CHECK(encode(Word("0110")) == json("0110"));
    CHECK(decode_word(json("0110")) == Word("0110"));
    CHECK(decode_word(json("")) == Word(""));

    const Permutation sigma({1, 2, 0});
    CHECK(encode(sigma) == json("231"));
    CHECK(decode_permutation(json("231")) == sigma);
    CHECK_THROWS_AS(decode_permutation(json("220")), ContractViolation);
}

TEST_CASE("set partition form is the encoding string") {
    const SetPartition p = SetPartition(4, {{1, 2, 4}, {3}});
    CHECK(encode(p) == json("0010"));
    CHECK(decode_set_partition(json("0010")) == p);
    CHECK_THROWS_AS(decode_set_partition(json("020")), ContractViolation);
}

TEST_CASE("clopen sets, codes, and partitions serialize as word arrays") {
    const ClopenSet s = clopen({"00", "1"});
    CHECK(encode(s) == json::array({"00", "1"}));
    CHECK(decode_clopen(encode(s)) == s);

    const PrefixCode code({Word("0"), Word("10"), Word("11")});
    CHECK(encode(code) == json::array({"0", "10", "11"}));
    CHECK(decode_prefix_code(encode(code)) == code);
    CHECK_THROWS_AS(decode_prefix_code(json::array({"0", "01"})), ContractViolation);

    const OrderedPartition alpha({clopen({"0"}), clopen({"1"})});
    CHECK(encode(alpha) == json::array({json::array({"0"}), json::array({"1"})}));
    CHECK(decode_partition(encode(alpha)).parts() == alpha.parts());
}

TEST_CASE("chains serialize as ordered leaf lists") {
    const ChainApprox c({Word("10"), Word("0"), Word("11")});
    CHECK(encode(c) == json::array({"10", "0", "11"}));
    CHECK(decode_chain(encode(c)) == c);
    CHECK_THROWS_AS(decode_chain(json::array({"0", "10"})), ContractViolation);
}

TEST_CASE("prefix maps serialize as arrow pairs") {
    const PrefixMap g = PrefixMap::from_pairs(
        {{Word("0"), Word("10")}, {Word("10"), Word("0")}, {Word("11"), Word("11")}});
    CHECK(encode(g) == json::array({"0->10", "10->0", "11->11"}));
    CHECK(decode_prefix_map(encode(g)) == g);
    CHECK(decode_prefix_map(encode(PrefixMap::identity())).is_identity());
    CHECK_THROWS_AS(decode_prefix_map(json::array({"0->0"})), ContractViolation);
}

TEST_CASE("tables serialize by one-line permutation keys") {
    const Table t(2, {1, -1});
    const json j = encode(t);
    CHECK(j.at("k") == 2);
    CHECK(j.at("values").at("12") == 1);
    CHECK(j.at("values").at("21") == -1);
    CHECK(decode_table(j) == t);

    json missing = j;
    missing["values"].erase("21");
    CHECK_THROWS_AS(decode_table(missing), ContractViolation);
}

TEST_CASE("colorings carry their domain parameters") {
    Coloring col;
    col.n = 3;
    col.k = 2;
    col.r = 2;
    col.color = {{"001", 0}, {"010", 1}, {"011", 0}};
    const json j = encode(col);
    CHECK(j.at("n") == 3);
    CHECK(j.at("colors").at("010") == 1);
    CHECK(decode_coloring(j) == col);
}

TEST_CASE("witness certificates round-trip with their optional payloads") {
    WitnessCertificate cert;
    cert.kind = WitnessKind::incomparable;
    cert.witness = PrefixMap::from_pairs(
        {{Word("00"), Word("00")}, {Word("01"), Word("1")}, {Word("1"), Word("01")}});
    cert.chain = ChainApprox({Word("00"), Word("01"), Word("10"), Word("11")});
    cert.set_f = clopen({"0"});
    cert.evidence_a = Word("01");
    cert.evidence_b = Word("1");

    const json j = encode(cert);
    CHECK(j.at("kind") == "incomparable");
    const WitnessCertificate back = decode_witness_certificate(j);
    CHECK(back.kind == cert.kind);
    CHECK(back.witness == cert.witness);
    CHECK(back.chain == cert.chain);
    CHECK(back.set_f == cert.set_f);
    CHECK(back.evidence_a == cert.evidence_a);
    CHECK(back.evidence_b == cert.evidence_b);
    CHECK_FALSE(back.set_u.has_value());
    CHECK_FALSE(back.chain2.has_value());
}

TEST_CASE("search certificates round-trip") {
    DrCertificate cert;
    cert.kind = DrCertificateKind::upper_witnessed;
    cert.n = 3;
    cert.k = 2;
    cert.m = 3;
    cert.r = 1;
    cert.coloring.n = 3;
    cert.coloring.k = 2;
    cert.coloring.r = 1;
    cert.coloring.color = {{"001", 0}, {"010", 0}, {"011", 0}};
    cert.eta_encoding = "012";
    cert.witness_color = 0;

    const json j = encode(cert);
    CHECK(j.at("kind") == "upper_witnessed");
    const DrCertificate back = decode_dr_certificate(j);
    CHECK(back.kind == cert.kind);
    CHECK(back.n == cert.n);
    CHECK(back.coloring == cert.coloring);
    CHECK(back.eta_encoding == cert.eta_encoding);
    CHECK(back.witness_color == cert.witness_color);

    DrCertificate lower;
    lower.kind = DrCertificateKind::lower_bound;
    lower.n = 3;
    lower.k = 2;
    lower.m = 3;
    lower.r = 2;
    lower.coloring = cert.coloring;
    lower.coloring.r = 2;
    const DrCertificate low_back = decode_dr_certificate(encode(lower));
    CHECK(low_back.kind == DrCertificateKind::lower_bound);
    CHECK_FALSE(low_back.eta_encoding.has_value());
}

TEST_CASE("object keys are emitted in sorted order") {
    Coloring col;
    col.n = 3;
    col.k = 2;
    col.r = 2;
    col.color = {{"011", 1}, {"001", 0}, {"010", 0}};
    const std::string dumped = encode(col).dump();
    CHECK(dumped.find("\"001\"") < dumped.find("\"010\""));
    CHECK(dumped.find("\"010\"") < dumped.find("\"011\""));
}
