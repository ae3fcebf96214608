#pragma once

#include "twistkit/laurent.hpp"

#include <cstddef>
#include <vector>

namespace twistkit {

/// Dense matrix over Z[t,t^-1].
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static LaurentMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    LaurentPoly& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }
    const LaurentPoly& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

    bool is_zero() const;
    LaurentMatrix operator*(const LaurentMatrix& o) const;
    LaurentMatrix operator-(const LaurentMatrix& o) const;
    bool operator==(const LaurentMatrix& o) const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<LaurentPoly> entries_;
};

/// Exact determinant. Dispatches on size: cofactor expansion for tiny
/// matrices, fraction-free (Bareiss) elimination with fewest-terms pivoting
/// for mid sizes, and modular evaluation/interpolation (CRT-reconstructed,
/// bound-checked) for large ones. All routes agree exactly, including sign.
/// Throws std::invalid_argument on non-square input. det of 0x0 is 1.
LaurentPoly determinant(const LaurentMatrix& m);

/// Individual routes, exposed so tests can cross-check them.
LaurentPoly determinant_cofactor(const LaurentMatrix& m);
LaurentPoly determinant_bareiss(const LaurentMatrix& m);
LaurentPoly determinant_modular(const LaurentMatrix& m);

} // namespace twistkit
