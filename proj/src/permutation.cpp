#include "chainspace/permutation.hpp"

#include <algorithm>

namespace chainspace {

std::vector<Permutation> all_permutations(int k) {
    require(k >= 0, "all_permutations: k must be nonnegative");
    std::vector<int> img(static_cast<std::size_t>(k));
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace chainspace
