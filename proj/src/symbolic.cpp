#include "chainspace/symbolic.hpp"

namespace chainspace {

namespace {

std::string clopen_key(const ClopenSet& s) {
    std::string key;
    for (const Word& w : s.words()) {
        key += w.str();
        key += ',';
    }
    return key;
}

std::string partition_key(const std::vector<ClopenSet>& parts) {
    std::string key;
    for (const ClopenSet& p : parts) {
        key += clopen_key(p);
        key += '|';
    }
    return key;
}

}  // namespace

SymbolConfig::SymbolConfig(int k, std::string description, Rule rule)
    : k_(k),
      description_(std::move(description)),
      rule_(std::move(rule)),
      memo_(std::make_shared<Memo>()) {
    require(k_ >= 1, "SymbolConfig: k must be positive");
}

int SymbolConfig::eval(const OrderedPartition& beta) const {
    require(beta.size() == k_, "SymbolConfig::eval: partition has wrong part count");
    const std::string key = partition_key(beta.parts());
    {
        std::lock_guard<std::mutex> guard(memo_->lock);
        auto it = memo_->values.find(key);
        if (it != memo_->values.end()) return it->second;
    }
    const int value = rule_(beta);
    require(value == 1 || value == -1, "SymbolConfig: rule must produce +1 or -1");
    std::lock_guard<std::mutex> guard(memo_->lock);
    memo_->values.emplace(key, value);
    return value;
}

TildeConfig::TildeConfig(int k, std::string description, Rule rule)
    : k_(k),
      description_(std::move(description)),
      rule_(std::move(rule)),
      memo_(std::make_shared<Memo>()) {
    require(k_ >= 1, "TildeConfig: k must be positive");
}

int TildeConfig::eval(const UnorderedPartition& parts, const Permutation& sigma) const {
    require(parts.size() == k_, "TildeConfig::eval: partition has wrong part count");
    require(sigma.k() == k_, "TildeConfig::eval: permutation size mismatch");
    const std::string key = partition_key(parts.parts()) + '@' + sigma.one_line();
    {
        std::lock_guard<std::mutex> guard(memo_->lock);
        auto it = memo_->values.find(key);
        if (it != memo_->values.end()) return it->second;
    }
    const int value = rule_(parts, sigma);
    require(value == 1 || value == -1, "TildeConfig: rule must produce +1 or -1");
    std::lock_guard<std::mutex> guard(memo_->lock);
    memo_->values.emplace(key, value);
    return value;
}

SymbolConfig act_omega(const PrefixMap& g, const SymbolConfig& omega) {
    PrefixMap ginv = g.inverse();
    return SymbolConfig(omega.k(), "act(" + omega.description() + ")",
                        [ginv, omega](const OrderedPartition& beta) {
                            return omega.eval(ginv.apply(beta));
                        });
}

TildeConfig tilde(const SymbolConfig& omega, const ChainApprox& c) {
    return TildeConfig(omega.k(), "tilde(" + omega.description() + ")",
                       [omega, c](const UnorderedPartition& parts, const Permutation& sigma) {
                           OrderedPartition sorted = induced_order(c, parts);
                           return omega.eval(permute_parts(sigma.inverse(), sorted));
                       });
}

Permutation rho(const ChainApprox& c, const PrefixMap& g, const UnorderedPartition& parts) {
    PrefixMap ginv = g.inverse();
    OrderedPartition lhs = induced_order(c, ginv.apply(parts));
    OrderedPartition rhs = ginv.apply(induced_order(c, parts));
    // Solve rho^{-1} . lhs = rhs, i.e. lhs_j = rhs_{rho(j)}.
    std::vector<int> images(static_cast<std::size_t>(lhs.size()), -1);
    for (int j = 0; j < lhs.size(); ++j)
        for (int i = 0; i < rhs.size(); ++i)
            if (lhs.part(j) == rhs.part(i)) {
                images[static_cast<std::size_t>(j)] = i;
                break;
            }
    return Permutation(std::move(images));
}

int bullet_eval(const ChainApprox& c, const PrefixMap& g, const TildeConfig& omega_tilde,
                const UnorderedPartition& parts, const Permutation& sigma) {
    Permutation r = rho(c, g, parts);
    return omega_tilde.eval(g.inverse().apply(parts), compose(sigma, r));
}

int phi_T(const Table& table, const ChainApprox& c, const OrderedPartition& beta) {
    return table.eval(theta(c, beta));
}

SymbolConfig phi_config(const Table& table, const ChainApprox& c) {
    return SymbolConfig(table.k(), "phi_T",
                        [table, c](const OrderedPartition& beta) {
                            return table.eval(theta(c, beta));
                        });
}

}  // namespace chainspace
