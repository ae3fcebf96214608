#pragma once

#include "twistkit/word.hpp"

#include <iosfwd>
#include <vector>

namespace twistkit {

/// Finite group presentation. For knot groups the meridian is a
/// distinguished generator and epsilon records the abelianization exponent
/// of each generator (the image in <t>); cover presentations coming out of
/// the rewriting machinery carry epsilon = 0 and no meridian.
struct Presentation {
    int generators = 0;
    std::vector<Word> relators;
    int meridian = -1; // 0-based generator index, -1 if none
    std::vector<int> epsilon;

    /// Checks letter ranges, epsilon size, meridian range, and that every
    /// relator has total epsilon-weight 0. Throws std::invalid_argument.
    void validate() const;

    /// Deficiency-1 meridian presentation with epsilon == 1 everywhere:
    /// what the Wada construction and the cover rewriting require.
    bool is_wirtinger_like() const;
};

/// Sum of epsilon(generator) * exponent over the letters of w.
long exponent_sum(const Word& w, const Presentation& pres);

/// Knot group presentation of the closure of a braid word on `strands`
/// strands, via the Artin action: generators x_1..x_s with epsilon == 1,
/// relators x_i^-1 beta(x_i) for i = 1..s-1 (the last one is redundant and
/// dropped), meridian x_1. Braid letters are +-k for sigma_k^{+-1},
/// 0 < k < strands. Rejects closures with more than one component.
Presentation wirtinger_from_braid(const std::vector<int>& braid, int strands);

/// Reads the keyword format:
///     generators N
///     meridian I          (1-based; optional)
///     epsilon e1 ... eN   (optional, defaults to all 1)
///     relator x1 x2 X1    (repeatable)
/// Blank lines and lines starting with '#' are skipped.
Presentation parse_presentation(std::istream& in);

} // namespace twistkit
