#include "chainspace/serde.hpp"

#include <string>
#include <vector>

namespace chainspace {

nlohmann::json encode(const Word& w) { return w.str(); }

nlohmann::json encode(const Permutation& p) { return p.one_line(); }

nlohmann::json encode(const SetPartition& p) { return p.encoding(); }

namespace {

nlohmann::json encode_words(const std::vector<Word>& words) {
    nlohmann::json j = nlohmann::json::array();
    for (const Word& w : words) j.push_back(w.str());
    return j;
}

std::vector<Word> decode_words(const nlohmann::json& j) {
    std::vector<Word> words;
    for (const auto& item : j) words.emplace_back(item.get<std::string>());
    return words;
}

}  // namespace

nlohmann::json encode(const ClopenSet& s) { return encode_words(s.words()); }

nlohmann::json encode(const PrefixCode& c) { return encode_words(c.leaves()); }

nlohmann::json encode(const OrderedPartition& p) {
    nlohmann::json j = nlohmann::json::array();
    for (const ClopenSet& part : p.parts()) j.push_back(encode(part));
    return j;
}

nlohmann::json encode(const UnorderedPartition& p) {
    nlohmann::json j = nlohmann::json::array();
    for (const ClopenSet& part : p.parts()) j.push_back(encode(part));
    return j;
}

nlohmann::json encode(const ChainApprox& c) { return encode_words(c.order()); }

nlohmann::json encode(const PrefixMap& g) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [u, v] : g.pairs()) j.push_back(u.str() + "->" + v.str());
    return j;
}

nlohmann::json encode(const Table& t) {
    nlohmann::json values = nlohmann::json::object();
    for (const Permutation& sigma : all_permutations(t.k()))
        values[sigma.one_line()] = t.eval(sigma);
    return {{"k", t.k()}, {"values", values}};
}

nlohmann::json encode(const Coloring& c) {
    nlohmann::json colors = nlohmann::json::object();
    for (const auto& [key, value] : c.color) colors[key] = value;
    return {{"n", c.n}, {"k", c.k}, {"r", c.r}, {"colors", colors}};
}

nlohmann::json encode(const WitnessCertificate& cert) {
    nlohmann::json j{{"kind", witness_kind_name(cert.kind)}, {"witness", encode(cert.witness)}};
    if (cert.point) j["point"] = encode(*cert.point);
    if (cert.set_f) j["set_f"] = encode(*cert.set_f);
    if (cert.set_u) j["set_u"] = encode(*cert.set_u);
    if (cert.chain) j["chain"] = encode(*cert.chain);
    if (cert.chain2) j["chain2"] = encode(*cert.chain2);
    if (cert.partition) j["partition"] = encode(*cert.partition);
    if (cert.evidence_a) j["evidence_a"] = encode(*cert.evidence_a);
    if (cert.evidence_b) j["evidence_b"] = encode(*cert.evidence_b);
    return j;
}

nlohmann::json encode(const DrCertificate& cert) {
    nlohmann::json j{{"kind", dr_certificate_kind_name(cert.kind)},
                     {"n", cert.n},
                     {"k", cert.k},
                     {"m", cert.m},
                     {"r", cert.r},
                     {"coloring", encode(cert.coloring)}};
    if (cert.eta_encoding) j["eta"] = *cert.eta_encoding;
    if (cert.witness_color) j["color"] = *cert.witness_color;
    return j;
}

Word decode_word(const nlohmann::json& j) { return Word(j.get<std::string>()); }

Permutation decode_permutation(const nlohmann::json& j) {
    return Permutation::from_one_line(j.get<std::string>());
}

SetPartition decode_set_partition(const nlohmann::json& j) {
    return SetPartition::from_encoding(j.get<std::string>());
}

ClopenSet decode_clopen(const nlohmann::json& j) { return ClopenSet::of(decode_words(j)); }

PrefixCode decode_prefix_code(const nlohmann::json& j) {
    return PrefixCode(decode_words(j));
}

OrderedPartition decode_partition(const nlohmann::json& j) {
    std::vector<ClopenSet> parts;
    for (const auto& item : j) parts.push_back(decode_clopen(item));
    return OrderedPartition(std::move(parts));
}

ChainApprox decode_chain(const nlohmann::json& j) { return ChainApprox(decode_words(j)); }

PrefixMap decode_prefix_map(const nlohmann::json& j) {
    std::vector<std::pair<Word, Word>> pairs;
    for (const auto& item : j) {
        const std::string s = item.get<std::string>();
        const std::size_t arrow = s.find("->");
        require(arrow != std::string::npos, "decode_prefix_map: pair needs a '->'");
        pairs.emplace_back(Word(s.substr(0, arrow)), Word(s.substr(arrow + 2)));
    }
    return PrefixMap::from_pairs(std::move(pairs));
}

Table decode_table(const nlohmann::json& j) {
    const int k = j.at("k").get<int>();
    require(k >= 1 && k <= 4, "decode_table: arity out of range");
    const std::vector<Permutation> perms = all_permutations(k);
    std::vector<int8_t> values(perms.size(), 0);
    const auto& entries = j.at("values");
    require(entries.size() == perms.size(), "decode_table: need one value per permutation");
    for (const Permutation& sigma : perms) {
        const int v = entries.at(sigma.one_line()).get<int>();
        values[static_cast<std::size_t>(sigma.lex_rank())] = static_cast<int8_t>(v);
    }
    return Table(k, std::move(values));
}

Coloring decode_coloring(const nlohmann::json& j) {
    Coloring col{j.at("n").get<int>(), j.at("k").get<int>(), j.at("r").get<int>(), {}};
    for (const auto& [key, value] : j.at("colors").items())
        col.color[key] = value.get<int>();
    return col;
}

WitnessCertificate decode_witness_certificate(const nlohmann::json& j) {
    const auto kind = witness_kind_from_name(j.at("kind").get<std::string>());
    require(kind.has_value(), "decode_witness_certificate: unknown kind");
    WitnessCertificate cert;
    cert.kind = *kind;
    cert.witness = decode_prefix_map(j.at("witness"));
    if (j.contains("point")) cert.point = decode_word(j.at("point"));
    if (j.contains("set_f")) cert.set_f = decode_clopen(j.at("set_f"));
    if (j.contains("set_u")) cert.set_u = decode_clopen(j.at("set_u"));
    if (j.contains("chain")) cert.chain = decode_chain(j.at("chain"));
    if (j.contains("chain2")) cert.chain2 = decode_chain(j.at("chain2"));
    if (j.contains("partition")) cert.partition = decode_partition(j.at("partition"));
    if (j.contains("evidence_a")) cert.evidence_a = decode_word(j.at("evidence_a"));
    if (j.contains("evidence_b")) cert.evidence_b = decode_word(j.at("evidence_b"));
    return cert;
}

DrCertificate decode_dr_certificate(const nlohmann::json& j) {
    const auto kind = dr_certificate_kind_from_name(j.at("kind").get<std::string>());
    require(kind.has_value(), "decode_dr_certificate: unknown kind");
    DrCertificate cert;
    cert.kind = *kind;
    cert.n = j.at("n").get<int>();
    cert.k = j.at("k").get<int>();
    cert.m = j.at("m").get<int>();
    cert.r = j.at("r").get<int>();
    cert.coloring = decode_coloring(j.at("coloring"));
    if (j.contains("eta")) cert.eta_encoding = j.at("eta").get<std::string>();
    if (j.contains("color")) cert.witness_color = j.at("color").get<int>();
    return cert;
}

}  // namespace chainspace
