#ifndef CHAINSPACE_DUAL_RAMSEY_HPP
#define CHAINSPACE_DUAL_RAMSEY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chainspace/set_partition.hpp"
#include "chainspace/symbolic.hpp"

namespace chainspace {

/// A question about the least ground size at which the coloring property
/// holds: every r-coloring of the k-block partitions of {1..N} admits an
/// m-block partition all of whose k-block merges share one color.
struct DrQuery {
    int k = 0;
    int m = 0;
    int r = 0;
    int n_max = 0;
};

/// Resource limits for the search engine.  Results never depend on the
/// worker count; the budget caps the number of explored assignments and is
/// split evenly across shards.
struct DrBudget {
    std::uint64_t max_nodes = 50'000'000;
    int workers = 0;  // 0 = hardware concurrency
};

enum class DrStatus {
    found,    // a bad coloring in hand
    none,     // exhaustively ruled out
    unknown,  // budget exhausted before a verdict
};

struct DrSearchResult {
    DrStatus status = DrStatus::unknown;
    std::optional<Coloring> coloring;  // present iff status == found
    std::uint64_t explored = 0;
    int shard_count = 0;
};

struct DrVerdict {
    enum class Status { holds, fails, unknown };
    Status status = Status::unknown;
    std::optional<Coloring> counterexample;  // present iff status == fails
    std::uint64_t explored = 0;
};

enum class DrCertificateKind {
    lower_bound,      // a coloring of size n with no monochromatic merge pattern
    upper_witnessed,  // one coloring together with its monochromatic pattern
};

const char* dr_certificate_kind_name(DrCertificateKind kind);
std::optional<DrCertificateKind> dr_certificate_kind_from_name(const std::string& name);

/// A self-contained, re-checkable claim about one ground size.
struct DrCertificate {
    DrCertificateKind kind = DrCertificateKind::lower_bound;
    int n = 0;
    int k = 0;
    int m = 0;
    int r = 0;
    Coloring coloring;
    std::optional<std::string> eta_encoding;  // upper_witnessed: the pattern
    std::optional<int> witness_color;         // upper_witnessed: its color
};

struct DrNumberResult {
    enum class Status {
        determined,    // value is the exact least ground size
        beyond_range,  // certified strictly greater than n_max
        unknown,       // budget ran out first
    };
    Status status = Status::unknown;
    int value = -1;        // set iff determined
    int last_searched = 0;  // largest ground size the engine decided or attempted
    std::vector<DrCertificate> certificates;
    std::uint64_t explored = 0;
};

/// The lexicographically least m-block partition eta (restricted-growth
/// order) whose k-block merges all share one color, with that color.
/// The coloring must be total over the k-block partitions of {1..col.n}.
std::optional<std::pair<SetPartition, int>> find_monochromatic(const Coloring& col, int m);

/// Backtracking search for a coloring with no monochromatic pattern, in
/// lexicographic order over label-canonical colorings (each new color is at
/// most one past the largest used).  Sharded by assignment prefix; the
/// reported coloring is the lexicographically least among shard results.
DrSearchResult search_bad_coloring(int n, int k, int m, int r, const DrBudget& budget = {});

/// Reference scan over all r^|vars| colorings in lexicographic order with
/// no pruning; returns the first bad coloring.  Deliberately independent of
/// search_bad_coloring so the two can cross-check each other.
std::optional<Coloring> exhaustive_bad_coloring(int n, int k, int m, int r);

/// Does every r-coloring of the k-block partitions of {1..n} admit a
/// monochromatic m-block pattern?
DrVerdict verify_dr(int n, int k, int m, int r, const DrBudget& budget = {});

/// The decision for a single ground size, packaged as a certificate:
/// found  -> lower_bound (the bad coloring),
/// none   -> upper_witnessed (a demonstration coloring with its pattern),
/// unknown -> no certificate.
struct DrStep {
    DrStatus status = DrStatus::unknown;
    std::optional<DrCertificate> certificate;
    std::uint64_t explored = 0;
};

DrStep dr_step(int n, int k, int m, int r, const DrBudget& budget = {});

/// Scan ground sizes m..n_max for the least one where the property holds,
/// emitting a binding lower-bound certificate and an upper demonstration.
DrNumberResult dr_number(const DrQuery& query, const DrBudget& budget = {});

/// Re-verify a certificate using only partition enumeration and merging;
/// shares no code with the search engine.
CheckResult check_dr_certificate(const DrCertificate& cert);

/// Dense index of a table in the palette enumerated by Table::all: bit i of
/// the index is set exactly when the value at lexicographic rank i is -1.
int table_palette_index(const Table& table);
Table table_from_palette(int k, int index);

/// Color each k-block merge pattern gamma of beta's index set by the table
///   sigma -> omega-tilde(forget_order(merge(beta, gamma)), sigma),
/// encoded as its palette index; r = 2^(k!).  beta must be sorted by c0
/// (its parts listed in the order the chain first touches them).
Coloring factor_coloring(const SymbolConfig& omega, const ChainApprox& c0,
                         const OrderedPartition& beta);

struct FactorExtraction {
    Table table;
    PrefixMap witness;          // g with g(refined pattern) = sorted alpha, partwise
    SetPartition eta;           // the monochromatic merge pattern
    OrderedPartition beta;      // the sorted refinement that was colored
};

/// Refine alpha to a sorted partition with exactly n_parts parts, color its
/// merge patterns via factor_coloring, and look for a monochromatic
/// |alpha|-block pattern.  On success returns the shared table, the witness
/// map, and the pattern, after re-verifying the extracted table against the
/// translated configuration on every merge of sorted alpha (a failure there
/// indicates an engine bug and throws std::logic_error).  Returns empty
/// when no monochromatic pattern exists at this size.
std::optional<FactorExtraction> extract_table(const SymbolConfig& omega, const ChainApprox& c0,
                                              const OrderedPartition& alpha, int n_parts);

}  // namespace chainspace

#endif
