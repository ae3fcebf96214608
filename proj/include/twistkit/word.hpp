#pragma once

#include <string>
#include <vector>

namespace twistkit {

/// Free-group word. Letter k > 0 is generator x_k, letter -k its inverse
/// (1-based generator indices).
using Word = std::vector<int>;

/// Cancels adjacent inverse pairs until none remain. Equal to the input as
/// a free-group element.
Word free_reduce(const Word& w);

Word inverse_word(const Word& w);

/// Concatenation followed by free reduction.
Word concat_reduce(const Word& a, const Word& b);

/// Removes the largest common conjugating prefix/suffix (u w u^-1 -> w).
/// Preserves the normal closure, so it is safe on relators.
Word cyclically_reduce(const Word& w);

/// Text form `x1 x2 X1` (capital letter = inverse). Empty word prints as "".
std::string word_str(const Word& w);
/// Parses word_str output; also accepts extra whitespace.
Word parse_word(const std::string& text);

} // namespace twistkit
