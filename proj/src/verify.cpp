#include "chainspace/verify.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace chainspace {

bool SuiteResult::ok() const {
    for (const SuiteCheck& c : checks)
        if (!c.ok) return false;
    return true;
}

std::uint64_t SuiteResult::cases() const {
    std::uint64_t total = 0;
    for (const SuiteCheck& c : checks) total += c.cases;
    return total;
}

namespace {

struct CheckBuilder {
    SuiteCheck check;

    explicit CheckBuilder(std::string name) { check.name = std::move(name); }

    void expect(bool condition, const char* detail) {
        ++check.cases;
        if (!condition && check.ok) {
            check.ok = false;
            check.detail = detail;
        }
    }

    void expect(bool condition, const std::string& detail) {
        ++check.cases;
        if (!condition && check.ok) {
            check.ok = false;
            check.detail = detail;
        }
    }
};

std::vector<OrderedPartition> orderings(const UnorderedPartition& u) {
    const OrderedPartition base(u.parts());
    std::vector<OrderedPartition> out;
    for (const Permutation& sigma : all_permutations(u.size()))
        out.push_back(permute_parts(sigma, base));
    return out;
}

/// Independent oracle for the chain-induced order: sort the parts by the
/// length of the shortest order-prefix of the measurable refinement that
/// meets them.  Shares no code with the first-appearance scan.
std::optional<OrderedPartition> induced_by_hulls(const ChainApprox& c,
                                                 const UnorderedPartition& parts) {
    const ChainApprox d = refine_to_measurable(c, parts);
    std::vector<std::pair<std::size_t, int>> keyed;
    for (int i = 0; i < parts.size(); ++i)
        keyed.emplace_back(hull_min(d, parts.part(i)).size(), i);
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 1; i < keyed.size(); ++i)
        if (keyed[i].first == keyed[i - 1].first) return std::nullopt;  // not linear
    std::vector<ClopenSet> ordered;
    for (const auto& [len, idx] : keyed) ordered.push_back(parts.part(idx));
    return OrderedPartition(std::move(ordered));
}

}  // namespace

SuiteResult verify_partitions(const VerifyOptions& options) {
    (void)options;  // the partition laws are checked exhaustively at fixed sizes
    SuiteResult result{"partitions", {}};

    {
        CheckBuilder b("merge-associativity");
        for (int m = 2; m <= 6; ++m)
            for (int k = 1; k <= m; ++k) {
                const auto gammas = enumerate_partitions(m, k, true);
                for (int s = 1; s <= k; ++s) {
                    const auto betas = enumerate_partitions(k, s, true);
                    for (int t = 1; t <= s; ++t) {
                        const auto deltas = enumerate_partitions(s, t, true);
                        for (const auto& gamma : gammas)
                            for (const auto& beta : betas)
                                for (const auto& delta : deltas)
                                    b.expect(amalgamate(amalgamate(gamma, beta), delta) ==
                                                 amalgamate(gamma, amalgamate(beta, delta)),
                                             "merging is not associative at " +
                                                 gamma.encoding() + "/" + beta.encoding() +
                                                 "/" + delta.encoding());
                    }
                }
            }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("natural-order-idempotent");
        for (int n = 1; n <= 5; ++n)
            for (int k = 1; k <= n; ++k)
                for (const SetPartition& p : enumerate_partitions(n, k, false)) {
                    const SetPartition q = naturally_order(p);
                    bool same_blocks = true;
                    for (int i = 1; i <= n && same_blocks; ++i)
                        for (int j = i + 1; j <= n && same_blocks; ++j)
                            if ((p.block_of(i) == p.block_of(j)) !=
                                (q.block_of(i) == q.block_of(j)))
                                same_blocks = false;
                    b.expect(naturally_order(q) == q && q.is_naturally_ordered() && same_blocks,
                             "normalization unstable at " + p.encoding());
                }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("block-count-recurrence");
        std::map<std::pair<int, int>, std::uint64_t> count;
        count[{0, 0}] = 1;
        for (int n = 1; n <= 10; ++n) {
            count[{n, 0}] = 0;
            for (int k = 1; k <= n; ++k)
                count[{n, k}] = enumerate_partitions(n, k, true).size();
        }
        for (int n = 2; n <= 10; ++n)
            for (int k = 1; k <= n; ++k) {
                const std::uint64_t expected =
                    static_cast<std::uint64_t>(k) * count[{n - 1, k}] +
                    (k >= 1 ? count[{n - 1, k - 1}] : 0);
                b.expect(count[{n, k}] == expected, "count recurrence fails at n=" +
                                                        std::to_string(n) +
                                                        ", k=" + std::to_string(k));
            }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("merges-are-coarser");
        for (int n = 2; n <= 6; ++n)
            for (int m = 1; m <= n; ++m)
                for (const SetPartition& eta : enumerate_partitions(n, m, true))
                    for (int k = 1; k <= m; ++k)
                        for (const SetPartition& merge : coarsenings(eta, k))
                            b.expect(merge.ground_size() == n && merge.block_count() == k &&
                                         merge.is_naturally_ordered() &&
                                         is_refinement(eta, merge),
                                     "bad merge " + merge.encoding() + " of " + eta.encoding());
        result.checks.push_back(b.check);
    }

    return result;
}

SuiteResult verify_cantor(const VerifyOptions& options) {
    SuiteResult result{"cantor", {}};
    RandomSource rng(options.seed);
    const int leaves = std::max(2, options.max_leaves);

    {
        CheckBuilder b("compose-associative");
        for (int i = 0; i < options.random_cases; ++i) {
            const PrefixMap f = rng.random_map(rng.uniform_int(1, leaves));
            const PrefixMap g = rng.random_map(rng.uniform_int(1, leaves));
            const PrefixMap h = rng.random_map(rng.uniform_int(1, leaves));
            b.expect(compose(compose(f, g), h) == compose(f, compose(g, h)),
                     "composition is not associative");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("compose-pointwise");
        const int triples = std::max(5, options.random_cases / 10);
        for (int i = 0; i < triples; ++i) {
            const PrefixMap f = rng.random_map(rng.uniform_int(1, 4));
            const PrefixMap g = rng.random_map(rng.uniform_int(1, 4));
            const PrefixMap h = rng.random_map(rng.uniform_int(1, 4));
            const PrefixMap fg_h = compose(compose(f, g), h);
            bool agree = true;
            for (int w = 0; w < (1 << 12) && agree; ++w) {
                std::string bits(12, '0');
                for (int pos = 0; pos < 12; ++pos)
                    if (w & (1 << pos)) bits[static_cast<std::size_t>(pos)] = '1';
                const Word word(bits);
                if (fg_h.apply_word(word) != f.apply_word(g.apply_word(h.apply_word(word))))
                    agree = false;
            }
            b.expect(agree, "composite disagrees with stepwise application");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("inverse-and-identity");
        for (int i = 0; i < options.random_cases; ++i) {
            const PrefixMap g = rng.random_map(rng.uniform_int(1, leaves));
            b.expect(compose(g, g.inverse()).is_identity() &&
                         compose(g.inverse(), g).is_identity() &&
                         compose(PrefixMap::identity(), g) == g &&
                         compose(g, PrefixMap::identity()) == g,
                     "group laws fail for a sampled map");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("canonical-idempotent");
        for (int i = 0; i < options.random_cases; ++i) {
            const ClopenSet s = rng.random_clopen(leaves);
            std::vector<Word> redundant;
            for (const Word& w : s.words()) {
                if (rng.uniform_int(0, 1)) {
                    redundant.push_back(w.child('0'));
                    redundant.push_back(w.child('1'));
                } else {
                    redundant.push_back(w);
                }
                if (rng.uniform_int(0, 2) == 0) redundant.push_back(w.child('1'));
            }
            std::shuffle(redundant.begin(), redundant.end(), rng.engine());
            b.expect(ClopenSet::of(s.words()) == s && ClopenSet::of(redundant) == s,
                     "canonical form is not a fixed point");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("bool-ops-pointwise");
        for (int i = 0; i < options.random_cases; ++i) {
            const ClopenSet a = rng.random_clopen(leaves);
            const ClopenSet c = rng.random_clopen(leaves);
            std::size_t depth = 1;
            for (const Word& w : a.words()) depth = std::max(depth, w.size() + 1);
            for (const Word& w : c.words()) depth = std::max(depth, w.size() + 1);
            bool agree = true;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << depth) && agree; ++bits) {
                std::string s(depth, '0');
                for (std::size_t pos = 0; pos < depth; ++pos)
                    if (bits & (std::uint64_t{1} << pos)) s[pos] = '1';
                const Word w(s);
                const bool in_a = a.contains_cylinder(w);
                const bool in_c = c.contains_cylinder(w);
                if (a.unite(c).contains_cylinder(w) != (in_a || in_c)) agree = false;
                if (a.intersect(c).contains_cylinder(w) != (in_a && in_c)) agree = false;
                if (a.complement().contains_cylinder(w) != !in_a) agree = false;
                if (a.minus(c).contains_cylinder(w) != (in_a && !in_c)) agree = false;
            }
            b.expect(agree, "set algebra disagrees with pointwise membership");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("part-permutation-commutes");
        for (int i = 0; i < options.random_cases; ++i) {
            const int k = rng.uniform_int(1, 4);
            const OrderedPartition alpha = rng.random_partition(k, std::max(k, leaves));
            const PrefixMap g = rng.random_map(rng.uniform_int(1, leaves));
            for (const Permutation& sigma : all_permutations(k))
                b.expect(g.apply(permute_parts(sigma, alpha)) ==
                             permute_parts(sigma, g.apply(alpha)),
                         "index permutation does not commute with the map action");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("matching-map-partwise");
        for (int i = 0; i < options.random_cases; ++i) {
            const int k = rng.uniform_int(1, 4);
            const OrderedPartition alpha = rng.random_partition(k, std::max(k, leaves));
            const OrderedPartition beta = rng.random_partition(k, std::max(k, leaves));
            const PrefixMap g = homogeneity_witness(alpha, beta);
            for (int p = 0; p < k; ++p)
                b.expect(g.apply_clopen(alpha.part(p)) == beta.part(p),
                         "matching map misses a part");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("join-refines-both");
        for (int i = 0; i < options.random_cases; ++i) {
            const OrderedPartition alpha =
                rng.random_partition(rng.uniform_int(1, 3), std::max(3, leaves));
            const OrderedPartition beta =
                rng.random_partition(rng.uniform_int(1, 3), std::max(3, leaves));
            const OrderedPartition j = join(alpha, beta);
            b.expect(refines(j, alpha) && refines(j, beta),
                     "common refinement fails to refine an input");
        }
        result.checks.push_back(b.check);
    }

    return result;
}

SuiteResult verify_chains(const VerifyOptions& options) {
    SuiteResult result{"chains", {}};
    RandomSource rng(options.seed + 1);
    const int leaves = std::max(3, options.max_leaves);

    {
        CheckBuilder b("induced-order-two-definitions");
        for (int n = 1; n <= 4; ++n)
            for (const PrefixCode& code : all_codes(n)) {
                std::vector<Word> order = code.leaves();
                std::sort(order.begin(), order.end());
                do {
                    const ChainApprox c(order);
                    for (int parts = 1; parts <= n; ++parts)
                        for (const UnorderedPartition& u : leaf_partitions(code, parts)) {
                            const auto oracle = induced_by_hulls(c, u);
                            b.expect(oracle.has_value() && *oracle == induced_order(c, u),
                                     "first-appearance order disagrees with the hull oracle");
                        }
                } while (std::next_permutation(order.begin(), order.end()));
            }
        for (int i = 0; i < options.random_cases; ++i) {
            const ChainApprox c = rng.random_chain(leaves);
            const UnorderedPartition u =
                forget_order(rng.random_partition(rng.uniform_int(1, 3), leaves));
            const auto oracle = induced_by_hulls(c, u);
            b.expect(oracle.has_value() && *oracle == induced_order(c, u),
                     "first-appearance order disagrees with the hull oracle");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("theta-moves-with-maps");
        for (int i = 0; i < options.random_cases; ++i) {
            const ChainApprox c = rng.random_chain(leaves);
            const int k = rng.uniform_int(1, 4);
            const OrderedPartition beta = rng.random_partition(k, std::max(k, leaves));
            const PrefixMap g = rng.random_map(rng.uniform_int(1, leaves));
            b.expect(theta(c, beta) == theta(act_chain(g, c), g.apply(beta)),
                     "theta changes under a simultaneous map action");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("theta-inverts-sorting");
        for (int i = 0; i < options.random_cases; ++i) {
            const ChainApprox c = rng.random_chain(leaves);
            const int k = rng.uniform_int(1, 4);
            const UnorderedPartition u = forget_order(rng.random_partition(k, std::max(k, leaves)));
            const OrderedPartition sorted = induced_order(c, u);
            for (const Permutation& sigma : all_permutations(k))
                b.expect(theta(c, permute_parts(sigma.inverse(), sorted)) == sigma,
                         "theta does not recover the permutation that unsorted the parts");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("sorting-moves-with-maps");
        for (int i = 0; i < options.random_cases; ++i) {
            const ChainApprox c = rng.random_chain(leaves);
            const int k = rng.uniform_int(1, 4);
            const UnorderedPartition u = forget_order(rng.random_partition(k, std::max(k, leaves)));
            const PrefixMap g = rng.random_map(rng.uniform_int(1, leaves));
            b.expect(g.apply(induced_order(c, u)) == induced_order(act_chain(g, c), g.apply(u)),
                     "chain-induced order does not commute with the map action");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("refine-project-roundtrip");
        for (int i = 0; i < options.random_cases; ++i) {
            const ChainApprox c = rng.random_chain(leaves);
            const std::size_t pos =
                static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(c.size()) - 1));
            const Word leaf = c.order()[pos];
            const char first = rng.uniform_int(0, 1) ? '1' : '0';
            const std::size_t insert_pos = static_cast<std::size_t>(
                rng.uniform_int(static_cast<int>(pos) + 1, static_cast<int>(c.size())));
            const ChainApprox refined = refine_chain(c, leaf, leaf.child(first), insert_pos);
            b.expect(project_chain(refined, c.code()) == c,
                     "projecting a single refinement does not restore the chain");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("hull-boundaries");
        for (int i = 0; i < options.random_cases; ++i) {
            const ChainApprox c = rng.random_chain(leaves);
            const ClopenSet d = rng.random_clopen(leaves);
            const std::vector<Word> lo = hull_min(c, d);
            b.expect(!lo.empty() && ClopenSet::cylinder(lo.back()).intersects(d),
                     "shortest meeting prefix does not meet the set");
            for (std::size_t j = 0; j + 1 < lo.size(); ++j)
                b.expect(!ClopenSet::cylinder(lo[j]).intersects(d),
                         "a leaf before the first meeting leaf already meets the set");
            const ClopenSet grown = d.unite(ClopenSet::cylinder(c.root()));
            const std::vector<Word> hi = hull_max(c, grown);
            ClopenSet unioned;
            for (const Word& w : hi) unioned = unioned.unite(ClopenSet::cylinder(w));
            b.expect(!hi.empty() && unioned.subset_of(grown),
                     "longest contained prefix is not contained");
            if (hi.size() < c.size())
                b.expect(!unioned.unite(ClopenSet::cylinder(c.order()[hi.size()])).subset_of(grown),
                         "longest contained prefix is not maximal");
        }
        result.checks.push_back(b.check);
    }

    return result;
}

SuiteResult verify_symbolic(const VerifyOptions& options) {
    SuiteResult result{"symbolic", {}};
    RandomSource rng(options.seed + 2);
    const int leaves = std::max(4, options.max_leaves);

    {
        CheckBuilder b("cocycle-law");
        for (int i = 0; i < options.random_cases; ++i) {
            const int k = rng.uniform_int(2, 3);
            const ChainApprox c = rng.random_chain(leaves);
            const UnorderedPartition parts =
                forget_order(rng.random_partition(k, std::max(k, leaves)));
            const PrefixMap g = rng.random_map(rng.uniform_int(1, leaves));
            const PrefixMap h = rng.random_map(rng.uniform_int(1, leaves));
            b.expect(rho(c, compose(g, h), parts) ==
                         compose(rho(c, g, parts), rho(c, h, g.inverse().apply(parts))),
                     "cocycle law fails");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("projection-conjugates-actions");
        for (int i = 0; i < options.random_cases; ++i) {
            const int k = rng.uniform_int(2, 3);
            const SymbolConfig omega = hash_config(k, rng.engine()());
            const ChainApprox c = rng.random_chain(leaves);
            const PrefixMap g = rng.random_map(rng.uniform_int(1, leaves));
            const UnorderedPartition parts =
                forget_order(rng.random_partition(k, std::max(k, leaves)));
            const TildeConfig lhs = tilde(act_omega(g, omega), c);
            const TildeConfig projected = tilde(omega, c);
            for (const Permutation& sigma : all_permutations(k))
                b.expect(lhs.eval(parts, sigma) ==
                             bullet_eval(c, g, projected, parts, sigma),
                         "projection does not conjugate the two actions");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("table-map-locality");
        for (int i = 0; i < options.random_cases; ++i) {
            const int k = rng.uniform_int(2, 3);
            const Table t = rng.random_table(k);
            const ChainApprox c = rng.random_chain(leaves);
            const OrderedPartition beta = rng.random_partition(k, std::max(k, leaves));
            // Extra splits of the measurable refinement keep first touches.
            ChainApprox other = refine_to_measurable(c, forget_order(beta));
            for (int extra = 0; extra < 3; ++extra) {
                const std::size_t pos = static_cast<std::size_t>(
                    rng.uniform_int(0, static_cast<int>(other.size()) - 1));
                const Word leaf = other.order()[pos];
                const std::size_t insert_pos = static_cast<std::size_t>(rng.uniform_int(
                    static_cast<int>(pos) + 1, static_cast<int>(other.size())));
                other = refine_chain(other, leaf, leaf.child('0'), insert_pos);
            }
            b.expect(induced_order(other, forget_order(beta)) ==
                             induced_order(c, forget_order(beta)) &&
                         phi_T(t, c, beta) == phi_T(t, other, beta),
                     "table map value changed under an order-preserving refinement");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("projected-table-config-constant");
        for (int i = 0; i < options.random_cases; ++i) {
            const int k = rng.uniform_int(2, 3);
            const Table t = rng.random_table(k);
            const ChainApprox c = rng.random_chain(leaves);
            const TildeConfig projected = tilde(phi_config(t, c), c);
            const UnorderedPartition parts =
                forget_order(rng.random_partition(k, std::max(k, leaves)));
            for (const Permutation& sigma : all_permutations(k))
                b.expect(projected.eval(parts, sigma) == t.eval(sigma),
                         "projected table configuration depends on the partition");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("table-config-moves-with-maps");
        for (int i = 0; i < options.random_cases; ++i) {
            const int k = rng.uniform_int(2, 3);
            const Table t = rng.random_table(k);
            const ChainApprox c = rng.random_chain(leaves);
            const PrefixMap g = rng.random_map(rng.uniform_int(1, leaves));
            const OrderedPartition beta = rng.random_partition(k, std::max(k, leaves));
            b.expect(act_omega(g, phi_config(t, c)).eval(beta) ==
                         phi_config(t, act_chain(g, c)).eval(beta),
                     "table configuration is not map-equivariant");
        }
        result.checks.push_back(b.check);
    }

    return result;
}

SuiteResult verify_dynamics(const VerifyOptions& options) {
    SuiteResult result{"dynamics", {}};
    RandomSource rng(options.seed + 3);

    {
        CheckBuilder b("point-cover-sound");
        for (int n = 1; n <= 4; ++n)
            for (const PrefixCode& code : all_codes(n)) {
                const std::size_t count = code.leaves().size();
                for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << count); ++mask) {
                    std::vector<Word> chosen;
                    for (std::size_t j = 0; j < count; ++j)
                        if (mask & (std::uint64_t{1} << j)) chosen.push_back(code.leaves()[j]);
                    const ClopenSet u = ClopenSet::of(chosen);
                    for (const Word& x : code.leaves()) {
                        const auto cert = certify_point_cover(x, u);
                        const CheckResult check = check_witness(cert);
                        b.expect(check.ok, "point cover rejected: " + check.diagnostic);
                    }
                    if (u.is_whole()) {
                        const auto cert = certify_point_cover(Word(""), u);
                        b.expect(check_witness(cert).ok, "whole-space point cover rejected");
                    } else {
                        bool threw = false;
                        try {
                            certify_point_cover(Word(""), u);
                        } catch (const ContractViolation&) {
                            threw = true;
                        }
                        b.expect(threw, "covering the empty prefix should be impossible");
                    }
                }
            }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("squeeze-sound");
        for (int n = 1; n <= 4; ++n)
            for (const PrefixCode& code : all_codes(n)) {
                const std::size_t count = code.leaves().size();
                for (std::uint64_t fm = 0; fm < (std::uint64_t{1} << count); ++fm) {
                    if (fm + 1 == (std::uint64_t{1} << count)) continue;  // proper only
                    std::vector<Word> fw;
                    for (std::size_t j = 0; j < count; ++j)
                        if (fm & (std::uint64_t{1} << j)) fw.push_back(code.leaves()[j]);
                    const ClopenSet f = ClopenSet::of(fw);
                    for (std::uint64_t um = 1; um < (std::uint64_t{1} << count); ++um) {
                        std::vector<Word> uw;
                        for (std::size_t j = 0; j < count; ++j)
                            if (um & (std::uint64_t{1} << j)) uw.push_back(code.leaves()[j]);
                        const auto cert = certify_extreme_proximality(f, ClopenSet::of(uw));
                        const CheckResult check = check_witness(cert);
                        b.expect(check.ok, "squeeze witness rejected: " + check.diagnostic);
                    }
                }
            }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("order-witness-sound");
        for (int n = 1; n <= 4; ++n)
            for (const PrefixCode& code : all_codes(n)) {
                std::vector<Word> order = code.leaves();
                std::sort(order.begin(), order.end());
                do {
                    const ChainApprox c(order);
                    for (int parts = 1; parts <= std::min(3, n); ++parts)
                        for (const UnorderedPartition& u : leaf_partitions(code, parts))
                            for (const OrderedPartition& alpha : orderings(u)) {
                                const auto cert = certify_phi_minimality(c, alpha);
                                const CheckResult check = check_witness(cert);
                                b.expect(check.ok,
                                         "order witness rejected: " + check.diagnostic);
                            }
                } while (std::next_permutation(order.begin(), order.end()));
            }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("joint-order-witness-sound");
        for (int i = 0; i < options.random_cases; ++i) {
            const int n = rng.uniform_int(2, std::max(3, options.max_leaves));
            const ChainApprox c1 = rng.random_chain(n);
            const ChainApprox c2 = rng.random_chain(rng.uniform_int(2, std::max(3, options.max_leaves)));
            const int parts = rng.uniform_int(1, 3);
            const OrderedPartition alpha = rng.random_partition(parts, std::max(parts, 4));
            const auto cert = certify_proximality(c1, c2, alpha);
            const CheckResult check = check_witness(cert);
            b.expect(check.ok, "joint order witness rejected: " + check.diagnostic);
            const PrefixMap& g = cert.witness;
            b.expect(in_neighborhood(act_chain(g, c1), alpha) &&
                         in_neighborhood(act_chain(g, c2), alpha),
                     "joint witness does not place both chains in the neighbourhood");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("incomparability-witness-sound");
        for (int n = 3; n <= 4; ++n)
            for (const PrefixCode& code : all_codes(n)) {
                std::vector<Word> order = code.leaves();
                std::sort(order.begin(), order.end());
                do {
                    const ChainApprox c(order);
                    ClopenSet f;
                    for (std::size_t j = 0; j + 1 < c.size(); ++j) {
                        f = f.unite(ClopenSet::cylinder(c.order()[j]));
                        if (j == 0) continue;  // need at least two leaves
                        const auto cert = certify_incomparability(c, f);
                        const CheckResult check = check_witness(cert);
                        b.expect(check.ok, "incomparability rejected: " + check.diagnostic);
                        b.expect(cert.witness.apply_clopen(ClopenSet::cylinder(c.root())) ==
                                     ClopenSet::cylinder(c.root()),
                                 "incomparability witness moves the root cylinder");
                    }
                } while (std::next_permutation(order.begin(), order.end()));
            }
        result.checks.push_back(b.check);
    }

    return result;
}

SuiteResult verify_ramsey(const VerifyOptions& options) {
    (void)options;  // engine checks run on fixed small instances
    SuiteResult result{"ramsey", {}};

    {
        CheckBuilder b("pruned-matches-exhaustive");
        for (int n = 1; n <= 6; ++n)
            for (int k = 1; k <= n; ++k) {
                if (enumerate_partitions(n, k, true).size() > 7) continue;
                for (int m = k; m <= n; ++m)
                    for (int r = 1; r <= 3; ++r) {
                        const DrSearchResult pruned = search_bad_coloring(n, k, m, r);
                        const auto reference = exhaustive_bad_coloring(n, k, m, r);
                        b.expect(pruned.status != DrStatus::unknown,
                                 "search ran out of budget on a small instance");
                        b.expect((pruned.status == DrStatus::found) == reference.has_value(),
                                 "pruned and exhaustive searches disagree on existence");
                        if (pruned.status == DrStatus::found && reference)
                            b.expect(*pruned.coloring == *reference,
                                     "pruned search returned a different least coloring");
                    }
            }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("certificates-reverify");
        const std::vector<DrQuery> queries{{1, 2, 2, 4}, {2, 2, 3, 4}, {1, 3, 3, 4}, {2, 3, 2, 5}};
        for (const DrQuery& q : queries) {
            const DrNumberResult res = dr_number(q);
            for (const DrCertificate& cert : res.certificates) {
                const CheckResult check = check_dr_certificate(cert);
                b.expect(check.ok, "certificate rejected: " + check.diagnostic);
            }
            if (res.status == DrNumberResult::Status::determined)
                for (const DrCertificate& cert : res.certificates) {
                    if (cert.kind == DrCertificateKind::lower_bound)
                        b.expect(cert.n == res.value - 1,
                                 "binding lower bound is not one below the value");
                    else
                        b.expect(cert.n == res.value, "upper witness is not at the value");
                }
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("trivial-families");
        for (int m = 1; m <= 4; ++m)
            for (int r = 1; r <= 3; ++r) {
                const DrNumberResult single = dr_number({1, m, r, m});
                b.expect(single.status == DrNumberResult::Status::determined &&
                             single.value == m,
                         "one-block family value is wrong");
                const DrNumberResult diag = dr_number({m, m, r, m});
                b.expect(diag.status == DrNumberResult::Status::determined && diag.value == m,
                         "diagonal family value is wrong");
            }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("verdict-monotone");
        for (int k = 1; k <= 2; ++k)
            for (int m = k; m <= 3; ++m)
                for (int r = 1; r <= 2; ++r) {
                    bool held = false;
                    for (int n = m; n <= 5; ++n) {
                        const DrVerdict v = verify_dr(n, k, m, r);
                        if (v.status == DrVerdict::Status::unknown) break;
                        const bool holds = v.status == DrVerdict::Status::holds;
                        b.expect(!held || holds, "property held at a size but fails at a larger one");
                        held = held || holds;
                    }
                }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("worker-count-irrelevant");
        for (int r = 2; r <= 3; ++r) {
            DrBudget serial;
            serial.workers = 1;
            DrBudget wide;
            wide.workers = 4;
            const DrSearchResult a = search_bad_coloring(5, 2, 3, r, serial);
            const DrSearchResult c = search_bad_coloring(5, 2, 3, r, wide);
            b.expect(a.status == c.status && a.coloring == c.coloring &&
                         a.explored == c.explored && a.shard_count == c.shard_count,
                     "results depend on the worker count");
        }
        result.checks.push_back(b.check);
    }

    return result;
}

SuiteResult verify_factor(const VerifyOptions& options) {
    SuiteResult result{"factor", {}};
    RandomSource rng(options.seed + 4);
    const int leaves = std::max(4, options.max_leaves);

    {
        CheckBuilder b("round-trip-all-two-part-tables");
        for (int i = 0; i < std::max(3, options.random_cases / 20); ++i) {
            const ChainApprox c0 = rng.random_chain(leaves);
            const OrderedPartition alpha = rng.random_partition(rng.uniform_int(2, 3), leaves);
            for (const Table& t : Table::all(2)) {
                const auto extraction = extract_table(phi_config(t, c0), c0, alpha, alpha.size());
                b.expect(extraction.has_value() && extraction->table == t,
                         "round trip failed to recover a two-part table");
            }
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("round-trip-sampled-three-part-tables");
        for (int i = 0; i < std::max(2, options.random_cases / 50); ++i) {
            const ChainApprox c0 = rng.random_chain(leaves);
            const OrderedPartition alpha = rng.random_partition(3, std::max(3, leaves));
            for (int s = 0; s < 3; ++s) {
                const Table t = rng.random_table(3);
                const auto extraction = extract_table(phi_config(t, c0), c0, alpha, alpha.size());
                b.expect(extraction.has_value() && extraction->table == t,
                         "round trip failed to recover a three-part table");
            }
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("table-config-colors-constantly");
        for (int i = 0; i < std::max(3, options.random_cases / 20); ++i) {
            const ChainApprox c0 = rng.random_chain(leaves);
            const Table t = rng.random_table(2);
            const OrderedPartition beta =
                induced_order(c0, forget_order(rng.random_partition(rng.uniform_int(2, 4),
                                                                    std::max(4, leaves))));
            const Coloring col = factor_coloring(phi_config(t, c0), c0, beta);
            const int expected = table_palette_index(t);
            for (const auto& [key, value] : col.color)
                b.expect(value == expected, "coloring of a table configuration is not constant");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("coloring-is-local");
        for (int i = 0; i < std::max(3, options.random_cases / 20); ++i) {
            const int k = 2;
            const ChainApprox c0 = rng.random_chain(leaves);
            const OrderedPartition beta = induced_order(
                c0, forget_order(rng.random_partition(rng.uniform_int(2, 4), std::max(4, leaves))));
            const SymbolConfig omega = hash_config(k, rng.engine()());
            // Same values on partitions whose parts are unions of beta's
            // parts, flipped values everywhere else.
            const OrderedPartition beta_copy = beta;
            const SymbolConfig twisted(
                k, "twisted",
                [omega, beta_copy](const OrderedPartition& query) {
                    const int value = omega.eval(query);
                    return refines(beta_copy, query) ? value : -value;
                });
            b.expect(factor_coloring(omega, c0, beta) == factor_coloring(twisted, c0, beta),
                     "coloring depends on values away from the merges");
        }
        result.checks.push_back(b.check);
    }

    {
        CheckBuilder b("honest-failure-below-threshold");
        const ChainApprox c0 = rng.random_chain(leaves);
        const OrderedPartition alpha = rng.random_partition(3, std::max(3, leaves));
        bool found_adversary = false;
        for (std::uint64_t salt = 0; salt < 64 && !found_adversary; ++salt) {
            const SymbolConfig omega = hash_config(2, salt);
            if (!extract_table(omega, c0, alpha, alpha.size()).has_value())
                found_adversary = true;
        }
        b.expect(found_adversary,
                 "no adversarial configuration produced an honest empty result");
        result.checks.push_back(b.check);
    }

    return result;
}

std::vector<SuiteResult> verify_all(const VerifyOptions& options) {
    return {verify_partitions(options), verify_cantor(options),  verify_chains(options),
            verify_symbolic(options),   verify_dynamics(options), verify_ramsey(options),
            verify_factor(options)};
}

}  // namespace chainspace
