#ifndef CHAINSPACE_PERMUTATION_HPP
#define CHAINSPACE_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "chainspace/contracts.hpp"

namespace chainspace {

/// A permutation of {0, ..., k-1}.
///
/// Composition follows standard function composition:
/// compose(a, b) maps i to a(b(i)).  The action on ordered tuples is
/// (sigma . x)_i = x_{sigma(i)}; see cover.hpp for the partition action.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            require(v >= 0 && static_cast<std::size_t>(v) < images_.size() && !seen[v],
                    "Permutation: images must be a bijection on {0..k-1}");
            seen[v] = true;
        }
    }

    static Permutation identity(int k) {
        std::vector<int> img(static_cast<std::size_t>(k));
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    int k() const { return static_cast<int>(images_.size()); }

    int apply(int i) const {
        require(i >= 0 && static_cast<std::size_t>(i) < images_.size(),
                "Permutation::apply: index out of range");
        return images_[static_cast<std::size_t>(i)];
    }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
        return Permutation(std::move(inv));
    }

    /// One-line notation with 1-based entries, e.g. identity on 3 -> "123".
    std::string one_line() const {
        std::string s;
        for (int v : images_) {
            int digit = v + 1;
            s += digit < 10 ? static_cast<char>('0' + digit)
                            : static_cast<char>('a' + digit - 10);
        }
        return s;
    }

    static Permutation from_one_line(const std::string& s) {
        std::vector<int> img;
        img.reserve(s.size());
        for (char c : s) {
            int digit = (c >= '0' && c <= '9') ? c - '0'
                      : (c >= 'a' && c <= 'z') ? c - 'a' + 10
                                               : -1;
            require(digit >= 1, "Permutation::from_one_line: bad character");
            img.push_back(digit - 1);
        }
        return Permutation(std::move(img));
    }

    /// Lexicographic rank of the one-line word among all k! permutations.
    std::uint64_t lex_rank() const {
        std::uint64_t rank = 0;
        const std::size_t n = images_.size();
        std::uint64_t factorial = 1;
        for (std::size_t i = 2; i <= n; ++i) factorial *= i;
        for (std::size_t i = 0; i < n; ++i) {
            factorial /= (n - i);
            int smaller = 0;
            for (std::size_t j = i + 1; j < n; ++j)
                if (images_[j] < images_[i]) ++smaller;
            rank += static_cast<std::uint64_t>(smaller) * factorial;
        }
        return rank;
    }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// Standard function composition: result(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    require(a.k() == b.k(), "compose: size mismatch");
    std::vector<int> img(static_cast<std::size_t>(a.k()));
    for (int i = 0; i < a.k(); ++i) img[static_cast<std::size_t>(i)] = a.apply(b.apply(i));
    return Permutation(std::move(img));
}

/// All permutations of {0..k-1} in lexicographic one-line order.
std::vector<Permutation> all_permutations(int k);

}  // namespace chainspace

#endif
