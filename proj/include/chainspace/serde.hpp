#ifndef CHAINSPACE_SERDE_HPP
#define CHAINSPACE_SERDE_HPP

#include <json.hpp>

#include "chainspace/dual_ramsey.hpp"
#include "chainspace/witness.hpp"

namespace chainspace {

// JSON forms (all object keys are sorted, so dumps are deterministic):
//   Word               "0110"
//   Permutation        "231"              (one-line, 1-based)
//   SetPartition       "0010"             (block index per element)
//   ClopenSet          ["00", "1"]        (canonical cylinder list)
//   PrefixCode         ["0", "10", "11"]
//   OrderedPartition   [["0"], ["10", "11"]]
//   ChainApprox        ["10", "0", "11"]  (first-touch order)
//   PrefixMap          ["0->10", "10->0", "11->11"]
//   Table              {"k": 2, "values": {"12": 1, "21": -1}}
//   Coloring           {"n": 3, "k": 2, "r": 2, "colors": {"001": 0, ...}}

nlohmann::json encode(const Word& w);
nlohmann::json encode(const Permutation& p);
nlohmann::json encode(const SetPartition& p);
nlohmann::json encode(const ClopenSet& s);
nlohmann::json encode(const PrefixCode& c);
nlohmann::json encode(const OrderedPartition& p);
nlohmann::json encode(const UnorderedPartition& p);
nlohmann::json encode(const ChainApprox& c);
nlohmann::json encode(const PrefixMap& g);
nlohmann::json encode(const Table& t);
nlohmann::json encode(const Coloring& c);
nlohmann::json encode(const WitnessCertificate& cert);
nlohmann::json encode(const DrCertificate& cert);

Word decode_word(const nlohmann::json& j);
Permutation decode_permutation(const nlohmann::json& j);
SetPartition decode_set_partition(const nlohmann::json& j);
ClopenSet decode_clopen(const nlohmann::json& j);
PrefixCode decode_prefix_code(const nlohmann::json& j);
OrderedPartition decode_partition(const nlohmann::json& j);
ChainApprox decode_chain(const nlohmann::json& j);
PrefixMap decode_prefix_map(const nlohmann::json& j);
Table decode_table(const nlohmann::json& j);
Coloring decode_coloring(const nlohmann::json& j);
WitnessCertificate decode_witness_certificate(const nlohmann::json& j);
DrCertificate decode_dr_certificate(const nlohmann::json& j);

}  // namespace chainspace

#endif
