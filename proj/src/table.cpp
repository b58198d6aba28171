#include "chainspace/table.hpp"

namespace chainspace {

std::vector<Table> Table::all(int k) {
    std::uint64_t size = 1;
    for (int i = 2; i <= k; ++i) size *= static_cast<std::uint64_t>(i);
    require(size <= 20, "Table::all: table family too large to enumerate");
    std::vector<Table> out;
    out.reserve(std::size_t{1} << size);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
        std::vector<int8_t> values(size);
        for (std::uint64_t i = 0; i < size; ++i)
            values[i] = (mask >> i) & 1 ? -1 : 1;
        out.emplace_back(k, std::move(values));
    }
    return out;
}

}  // namespace chainspace
