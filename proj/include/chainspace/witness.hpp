#ifndef CHAINSPACE_WITNESS_HPP
#define CHAINSPACE_WITNESS_HPP

#include <optional>
#include <string>

#include "chainspace/chain.hpp"

namespace chainspace {

/// Kinds of dynamical behaviour a witness can certify.
enum class WitnessKind {
    point_cover,         // g moves a chosen set over a chosen point
    extreme_proximal,    // g squeezes a proper closed set into a target
    phi_minimal,         // g moves a chain into a prescribed order neighbourhood
    proximal,            // one g moves two chains into the same neighbourhood
    incomparable,        // g fixes the root yet makes a chain element incomparable
};

const char* witness_kind_name(WitnessKind kind);
std::optional<WitnessKind> witness_kind_from_name(const std::string& name);

/// A self-contained claim: the inputs, the witnessing map, and (for the
/// incomparability kind) the two separating cylinders.  check_witness
/// re-verifies the claim from these fields alone.
struct WitnessCertificate {
    WitnessKind kind;
    PrefixMap witness = PrefixMap::identity();

    std::optional<Word> point;                 // point_cover
    std::optional<ClopenSet> set_f;            // extreme_proximal / incomparable
    std::optional<ClopenSet> set_u;            // point_cover / extreme_proximal
    std::optional<ChainApprox> chain;          // phi_minimal / proximal / incomparable
    std::optional<ChainApprox> chain2;         // proximal
    std::optional<OrderedPartition> partition; // phi_minimal / proximal
    std::optional<Word> evidence_a;            // incomparable
    std::optional<Word> evidence_b;            // incomparable
};

/// A map g whose image of u covers the cylinder of x, for some cylinder u
/// of u_set; identity when [x] already lies inside u_set.
PrefixMap point_cover_witness(const Word& x, const ClopenSet& u_set);

/// A map g with g(f_set) contained in u_set; requires f_set proper and
/// u_set nonempty.
PrefixMap extreme_proximality_witness(const ClopenSet& f_set, const ClopenSet& u_set);

/// A map g with act_chain(g, c) inducing exactly alpha's part order.
PrefixMap phi_minimality_witness(const ChainApprox& c, const OrderedPartition& alpha);

/// One map g moving both chains into alpha's order neighbourhood
/// simultaneously, built by settling one part of alpha at a time.
PrefixMap proximality_witness(const ChainApprox& c1, const ChainApprox& c2,
                              const OrderedPartition& alpha);

struct IncomparabilityWitness {
    PrefixMap witness;
    Word a;  // inside f_set, outside g(f_set)
    Word b;  // inside g(f_set), outside f_set
};

/// For a chain-element hull f_set strictly between the root's cylinder and
/// the whole space: a g fixing the root's cylinder pointwise with
/// f_set and g(f_set) incomparable, plus separating cylinders.
IncomparabilityWitness incomparability_witness(const ChainApprox& c, const ClopenSet& f_set);

/// Re-verify a certificate using only clopen/chain primitives; never calls
/// the constructors above.
CheckResult check_witness(const WitnessCertificate& cert);

/// Convenience constructors producing ready-to-check certificates.
WitnessCertificate certify_point_cover(const Word& x, const ClopenSet& u_set);
WitnessCertificate certify_extreme_proximality(const ClopenSet& f_set, const ClopenSet& u_set);
WitnessCertificate certify_phi_minimality(const ChainApprox& c, const OrderedPartition& alpha);
WitnessCertificate certify_proximality(const ChainApprox& c1, const ChainApprox& c2,
                                       const OrderedPartition& alpha);
WitnessCertificate certify_incomparability(const ChainApprox& c, const ClopenSet& f_set);

}  // namespace chainspace

#endif
