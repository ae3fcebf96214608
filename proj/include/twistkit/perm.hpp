#pragma once

#include <compare>
#include <string>
#include <vector>

namespace twistkit {

/// Permutation of {0..degree-1}. Composition convention:
/// (p * q)(i) = p(q(i)), i.e. q acts first.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int degree); // identity
    explicit Permutation(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    Permutation operator*(const Permutation& q) const;
    Permutation inverse() const;

    /// Orders of the disjoint cycles, fixed points included, sorted.
    std::vector<int> cycle_type() const;
    int order() const;

    /// Disjoint cycle notation on 0-based points, fixed points omitted;
    /// the identity prints as `()`. Example: `(0 1 2)(3 4)`.
    std::string cycle_str() const;
    /// Parses cycle_str output (whitespace-separated points inside parens).
    static Permutation parse_cycles(const std::string& text, int degree);

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

} // namespace twistkit
