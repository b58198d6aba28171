#include "chainspace/witness.hpp"

#include <algorithm>

namespace chainspace {

const char* witness_kind_name(WitnessKind kind) {
    switch (kind) {
        case WitnessKind::point_cover: return "point_cover";
        case WitnessKind::extreme_proximal: return "extreme_proximal";
        case WitnessKind::phi_minimal: return "phi_minimal";
        case WitnessKind::proximal: return "proximal";
        case WitnessKind::incomparable: return "incomparable";
    }
    return "unknown";
}

std::optional<WitnessKind> witness_kind_from_name(const std::string& name) {
    for (WitnessKind kind :
         {WitnessKind::point_cover, WitnessKind::extreme_proximal, WitnessKind::phi_minimal,
          WitnessKind::proximal, WitnessKind::incomparable})
        if (name == witness_kind_name(kind)) return kind;
    return std::nullopt;
}

PrefixMap point_cover_witness(const Word& x, const ClopenSet& u_set) {
    require(!u_set.is_empty(), "point_cover_witness: target set must be nonempty");
    const ClopenSet x_cyl = ClopenSet::cylinder(x);
    if (x_cyl.subset_of(u_set)) return PrefixMap::identity();
    require(!x.empty(),
            "point_cover_witness: the empty prefix cannot be covered by a proper image");
    // Map one cylinder of u_set exactly onto [x]; everything else goes to the
    // complement, so [x] lies inside the image of u_set.
    const ClopenSet u_cyl = ClopenSet::cylinder(u_set.least());
    std::vector<std::pair<Word, Word>> pairs = match_clopen(u_cyl, x_cyl);
    auto rest = match_clopen(u_cyl.complement(), x_cyl.complement());
    pairs.insert(pairs.end(), rest.begin(), rest.end());
    return PrefixMap::from_pairs(std::move(pairs));
}

PrefixMap extreme_proximality_witness(const ClopenSet& f_set, const ClopenSet& u_set) {
    require(!f_set.is_whole(), "extreme_proximality_witness: source must be a proper subset");
    require(!u_set.is_empty(), "extreme_proximality_witness: target must be nonempty");
    if (f_set.subset_of(u_set)) return PrefixMap::identity();
    // Send f_set onto a single cylinder inside u_set.  Reaching this branch
    // means u_set is proper (otherwise f_set would be inside it) and f_set is
    // nonempty, so all four pieces below are nonempty.
    const ClopenSet target = ClopenSet::cylinder(u_set.least());
    std::vector<std::pair<Word, Word>> pairs = match_clopen(f_set, target);
    auto rest = match_clopen(f_set.complement(), target.complement());
    pairs.insert(pairs.end(), rest.begin(), rest.end());
    return PrefixMap::from_pairs(std::move(pairs));
}

PrefixMap phi_minimality_witness(const ChainApprox& c, const OrderedPartition& alpha) {
    // The chain currently reaches alpha's parts in some order; the map that
    // renames the i-th part reached to alpha's i-th part straightens it out.
    OrderedPartition reached = induced_order(c, forget_order(alpha));
    return homogeneity_witness(reached, alpha);
}

namespace {

// Split leaves (first part with a deficit, first of its leaves in chain
// order) until every part of alpha holds at least `quota` leaves.
ChainApprox refine_for_capacity(ChainApprox c, const OrderedPartition& alpha,
                                std::size_t quota) {
    c = refine_to_measurable(c, forget_order(alpha));
    for (;;) {
        bool deficit = false;
        for (int i = 0; i < alpha.size() && !deficit; ++i) {
            std::size_t count = 0;
            for (const Word& leaf : c.order())
                if (alpha.part(i).contains_cylinder(leaf)) ++count;
            if (count < quota) {
                for (std::size_t pos = 0; pos < c.size(); ++pos)
                    if (alpha.part(i).contains_cylinder(c.order()[pos])) {
                        c = refine_chain(c, c.order()[pos], c.order()[pos].child('0'),
                                         pos + 1);
                        break;
                    }
                deficit = true;
            }
        }
        if (!deficit) return c;
    }
}

Word extend_zeros(const Word& w, int count) {
    std::string bits = w.str();
    bits.append(static_cast<std::size_t>(count), '0');
    return Word(std::move(bits));
}

Word first_leaf_outside(const ChainApprox& c, const ClopenSet& settled) {
    for (const Word& leaf : c.order())
        if (settled.is_empty() || !settled.contains_cylinder(leaf)) return leaf;
    throw ContractViolation("proximality_witness: no leaf outside the settled parts");
}

}  // namespace

PrefixMap proximality_witness(const ChainApprox& c1, const ChainApprox& c2,
                              const OrderedPartition& alpha) {
    const int n = alpha.size();
    const UnorderedPartition parts = forget_order(alpha);
    ChainApprox base1 = refine_for_capacity(c1, alpha, 2 * static_cast<std::size_t>(n));
    ChainApprox base2 = refine_for_capacity(c2, alpha, 2 * static_cast<std::size_t>(n));

    PrefixMap g = PrefixMap::identity();
    ClopenSet settled;
    for (int step = 0; step < n; ++step) {
        const ClopenSet& target = alpha.part(step);
        ChainApprox d1 = refine_to_measurable(act_chain(g, base1), parts);
        ChainApprox d2 = refine_to_measurable(act_chain(g, base2), parts);
        const Word r1 = first_leaf_outside(d1, settled);
        const Word r2 = first_leaf_outside(d2, settled);

        // Move both pending roots into the target part while fixing every
        // settled part pointwise.  Deepening the moved cylinders along the
        // '0'-branch keeps them at the roots' first-touch positions and
        // guarantees the remainder of the unsettled region stays nonempty.
        PrefixMap h = PrefixMap::identity();
        for (int depth = 0;; ++depth) {
            require(depth <= 128, "proximality_witness: deepening failed to stabilize");
            const ClopenSet moved =
                ClopenSet::of({extend_zeros(r1, depth), extend_zeros(r2, depth)});
            if (moved.subset_of(target)) break;  // already where they belong
            const ClopenSet unsettled = settled.complement();
            const ClopenSet rest = unsettled.minus(moved);
            if (rest.is_empty()) continue;
            const ClopenSet landing = ClopenSet::cylinder(target.least().child('0'));
            std::vector<std::pair<Word, Word>> pairs;
            for (const Word& w : settled.words()) pairs.emplace_back(w, w);
            auto move_pairs = match_clopen(moved, landing);
            pairs.insert(pairs.end(), move_pairs.begin(), move_pairs.end());
            auto rest_pairs = match_clopen(rest, unsettled.minus(landing));
            pairs.insert(pairs.end(), rest_pairs.begin(), rest_pairs.end());
            h = PrefixMap::from_pairs(std::move(pairs));
            break;
        }
        g = compose(h, g);
        settled = settled.unite(target);
    }
    return g;
}

IncomparabilityWitness incomparability_witness(const ChainApprox& c, const ClopenSet& f_set) {
    // f_set must be one of the chain's elements: the union of an order-prefix.
    ClopenSet running;
    std::size_t hull_len = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        running = running.unite(ClopenSet::cylinder(c.order()[j]));
        if (running == f_set) {
            hull_len = j + 1;
            break;
        }
    }
    require(hull_len > 0, "incomparability_witness: set is not a chain element of c");
    require(hull_len >= 2, "incomparability_witness: chain element too small to split");
    require(hull_len <= c.size() - 1,
            "incomparability_witness: chain element must be proper");

    const ClopenSet root_cyl = ClopenSet::cylinder(c.root());
    const ClopenSet a_side = f_set.minus(root_cyl);
    const ClopenSet b_side = f_set.complement();
    std::vector<std::pair<Word, Word>> pairs{{c.root(), c.root()}};
    auto ab = match_clopen(a_side, b_side);
    pairs.insert(pairs.end(), ab.begin(), ab.end());
    auto ba = match_clopen(b_side, a_side);
    pairs.insert(pairs.end(), ba.begin(), ba.end());
    IncomparabilityWitness result{PrefixMap::from_pairs(std::move(pairs)), a_side.least(),
                                  b_side.least()};
    return result;
}

namespace {

CheckResult fail(const std::string& diagnostic) { return {false, diagnostic}; }

CheckResult pass() { return {true, ""}; }

}  // namespace

CheckResult check_witness(const WitnessCertificate& cert) {
    try {
        switch (cert.kind) {
            case WitnessKind::point_cover: {
                if (!cert.point || !cert.set_u) return fail("point_cover: missing fields");
                ClopenSet image = cert.witness.apply_clopen(*cert.set_u);
                if (!ClopenSet::cylinder(*cert.point).subset_of(image))
                    return fail("point_cover: image does not cover the point's cylinder");
                return pass();
            }
            case WitnessKind::extreme_proximal: {
                if (!cert.set_f || !cert.set_u)
                    return fail("extreme_proximal: missing fields");
                if (!cert.witness.apply_clopen(*cert.set_f).subset_of(*cert.set_u))
                    return fail("extreme_proximal: image not inside the target");
                return pass();
            }
            case WitnessKind::phi_minimal: {
                if (!cert.chain || !cert.partition)
                    return fail("phi_minimal: missing fields");
                if (!in_neighborhood(act_chain(cert.witness, *cert.chain), *cert.partition))
                    return fail("phi_minimal: moved chain is outside the neighbourhood");
                return pass();
            }
            case WitnessKind::proximal: {
                if (!cert.chain || !cert.chain2 || !cert.partition)
                    return fail("proximal: missing fields");
                if (!in_neighborhood(act_chain(cert.witness, *cert.chain), *cert.partition))
                    return fail("proximal: first chain is outside the neighbourhood");
                if (!in_neighborhood(act_chain(cert.witness, *cert.chain2), *cert.partition))
                    return fail("proximal: second chain is outside the neighbourhood");
                return pass();
            }
            case WitnessKind::incomparable: {
                if (!cert.chain || !cert.set_f || !cert.evidence_a || !cert.evidence_b)
                    return fail("incomparable: missing fields");
                const ClopenSet root_cyl = ClopenSet::cylinder(cert.chain->root());
                if (!(cert.witness.apply_clopen(root_cyl) == root_cyl))
                    return fail("incomparable: witness moves the root's cylinder");
                const ClopenSet image = cert.witness.apply_clopen(*cert.set_f);
                const ClopenSet a_cyl = ClopenSet::cylinder(*cert.evidence_a);
                const ClopenSet b_cyl = ClopenSet::cylinder(*cert.evidence_b);
                if (!a_cyl.subset_of(*cert.set_f) || a_cyl.intersects(image))
                    return fail("incomparable: first cylinder fails set minus image");
                if (!b_cyl.subset_of(image) || b_cyl.intersects(*cert.set_f))
                    return fail("incomparable: second cylinder fails image minus set");
                return pass();
            }
        }
        return fail("unknown witness kind");
    } catch (const ContractViolation& e) {
        return fail(std::string("malformed certificate: ") + e.what());
    }
}

WitnessCertificate certify_point_cover(const Word& x, const ClopenSet& u_set) {
    WitnessCertificate cert;
    cert.kind = WitnessKind::point_cover;
    cert.witness = point_cover_witness(x, u_set);
    cert.point = x;
    cert.set_u = u_set;
    return cert;
}

WitnessCertificate certify_extreme_proximality(const ClopenSet& f_set,
                                               const ClopenSet& u_set) {
    WitnessCertificate cert;
    cert.kind = WitnessKind::extreme_proximal;
    cert.witness = extreme_proximality_witness(f_set, u_set);
    cert.set_f = f_set;
    cert.set_u = u_set;
    return cert;
}

WitnessCertificate certify_phi_minimality(const ChainApprox& c,
                                          const OrderedPartition& alpha) {
    WitnessCertificate cert;
    cert.kind = WitnessKind::phi_minimal;
    cert.witness = phi_minimality_witness(c, alpha);
    cert.chain = c;
    cert.partition = alpha;
    return cert;
}

WitnessCertificate certify_proximality(const ChainApprox& c1, const ChainApprox& c2,
                                       const OrderedPartition& alpha) {
    WitnessCertificate cert;
    cert.kind = WitnessKind::proximal;
    cert.witness = proximality_witness(c1, c2, alpha);
    cert.chain = c1;
    cert.chain2 = c2;
    cert.partition = alpha;
    return cert;
}

WitnessCertificate certify_incomparability(const ChainApprox& c, const ClopenSet& f_set) {
    IncomparabilityWitness w = incomparability_witness(c, f_set);
    WitnessCertificate cert;
    cert.kind = WitnessKind::incomparable;
    cert.witness = w.witness;
    cert.chain = c;
    cert.set_f = f_set;
    cert.evidence_a = w.a;
    cert.evidence_b = w.b;
    return cert;
}

}  // namespace chainspace
