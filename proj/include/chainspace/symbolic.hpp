#ifndef CHAINSPACE_SYMBOLIC_HPP
#define CHAINSPACE_SYMBOLIC_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "chainspace/chain.hpp"
#include "chainspace/table.hpp"

namespace chainspace {

/// A +/-1 configuration over all ordered clopen partitions into k parts.
/// The index set is infinite, so the configuration is intensional: a rule
/// evaluated on demand behind a memo table.  The memo is the only mutable
/// state and acts as an idempotent cache.
class SymbolConfig {
public:
    using Rule = std::function<int(const OrderedPartition&)>;

    SymbolConfig(int k, std::string description, Rule rule);

    int k() const { return k_; }
    const std::string& description() const { return description_; }

    int eval(const OrderedPartition& beta) const;

private:
    struct Memo {
        std::mutex lock;
        std::unordered_map<std::string, int> values;
    };

    int k_;
    std::string description_;
    Rule rule_;
    std::shared_ptr<Memo> memo_;
};

/// A table-valued configuration over unordered partitions into k parts,
/// likewise intensional and memoized.
class TildeConfig {
public:
    using Rule = std::function<int(const UnorderedPartition&, const Permutation&)>;

    TildeConfig(int k, std::string description, Rule rule);

    int k() const { return k_; }
    const std::string& description() const { return description_; }

    int eval(const UnorderedPartition& parts, const Permutation& sigma) const;

private:
    struct Memo {
        std::mutex lock;
        std::unordered_map<std::string, int> values;
    };

    int k_;
    std::string description_;
    Rule rule_;
    std::shared_ptr<Memo> memo_;
};

/// Translation action: (g . omega)(beta) = omega(g^{-1} beta).
SymbolConfig act_omega(const PrefixMap& g, const SymbolConfig& omega);

/// Projection along a chain: tilde(omega, c)(parts)(sigma) =
/// omega(sigma^{-1} . t*_c(parts)), where t*_c is the chain-induced order.
TildeConfig tilde(const SymbolConfig& omega, const ChainApprox& c);

/// The chain cocycle: the unique rho with
///   rho^{-1} . t*_c(g^{-1} parts) = g^{-1} t*_c(parts).
Permutation rho(const ChainApprox& c, const PrefixMap& g, const UnorderedPartition& parts);

/// The transported ("bullet") action on tilde-configurations, evaluated at
/// one point: (g . omega_tilde)(parts)(sigma) =
/// omega_tilde(g^{-1} parts, sigma o rho_c(g, parts)).
int bullet_eval(const ChainApprox& c, const PrefixMap& g, const TildeConfig& omega_tilde,
                const UnorderedPartition& parts, const Permutation& sigma);

/// phi_T(c)(beta) = T(theta_beta(c)).
int phi_T(const Table& table, const ChainApprox& c, const OrderedPartition& beta);

/// phi_T(c) packaged as a configuration.
SymbolConfig phi_config(const Table& table, const ChainApprox& c);

}  // namespace chainspace

#endif
