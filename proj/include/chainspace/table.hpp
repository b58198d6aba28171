#ifndef CHAINSPACE_TABLE_HPP
#define CHAINSPACE_TABLE_HPP

#include <cstdint>
#include <vector>

#include "chainspace/permutation.hpp"

namespace chainspace {

/// A function from the permutations of {0..k-1} to {+1, -1}, stored densely
/// by lexicographic rank.
class Table {
public:
    Table(int k, std::vector<int8_t> values) : k_(k), values_(std::move(values)) {
        std::uint64_t expected = 1;
        for (int i = 2; i <= k_; ++i) expected *= static_cast<std::uint64_t>(i);
        require(values_.size() == expected, "Table: need one value per permutation");
        for (int8_t v : values_)
            require(v == 1 || v == -1, "Table: values must be +1 or -1");
    }

    static Table constant(int k, int value) {
        std::uint64_t size = 1;
        for (int i = 2; i <= k; ++i) size *= static_cast<std::uint64_t>(i);
        return Table(k, std::vector<int8_t>(size, static_cast<int8_t>(value)));
    }

    /// All 2^(k!) tables, in binary counting order (+1 before -1 per slot).
    static std::vector<Table> all(int k);

    int k() const { return k_; }

    int eval(const Permutation& sigma) const {
        require(sigma.k() == k_, "Table::eval: permutation size mismatch");
        return values_[static_cast<std::size_t>(sigma.lex_rank())];
    }

    const std::vector<int8_t>& values() const { return values_; }

    bool operator==(const Table&) const = default;

private:
    int k_;
    std::vector<int8_t> values_;
};

}  // namespace chainspace

#endif
