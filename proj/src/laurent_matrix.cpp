#include "twistkit/laurent_matrix.hpp"

#include "twistkit/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace twistkit {

LaurentMatrix LaurentMatrix::identity(size_t n) {
    LaurentMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(1);
    return m;
}

bool LaurentMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    LaurentMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const LaurentPoly& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += a * o.at(k, j);
            }
        }
    return r;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    LaurentMatrix r(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

bool LaurentMatrix::operator==(const LaurentMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

LaurentPoly determinant_cofactor(const LaurentMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
    const size_t n = m.rows();
    if (n == 0) return LaurentPoly::constant(1);
    if (n == 1) return m.at(0, 0);
    LaurentPoly det;
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        LaurentMatrix sub(n - 1, n - 1);
        for (size_t i = 1; i < n; ++i) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(i - 1, cc++) = m.at(i, c);
            }
        }
        LaurentPoly term = m.at(0, j) * determinant_cofactor(sub);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

LaurentPoly determinant_bareiss(const LaurentMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
    const size_t n = m.rows();
    if (n == 0) return LaurentPoly::constant(1);
    LaurentMatrix w = m;
    int sign = 1;
    LaurentPoly prev = LaurentPoly::constant(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        // Pivot: nonzero entry in the trailing submatrix with the fewest
        // terms, to limit expression swell.
        size_t pr = n, pc = n;
        size_t best = SIZE_MAX;
        for (size_t i = k; i < n; ++i)
            for (size_t j = k; j < n; ++j) {
                const LaurentPoly& e = w.at(i, j);
                if (e.is_zero()) continue;
                if (e.term_count() < best) {
                    best = e.term_count();
                    pr = i;
                    pc = j;
                }
            }
        if (pr == n) return LaurentPoly(); // singular block, det = 0
        if (pr != k) {
            for (size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pr, j));
            sign = -sign;
        }
        if (pc != k) {
            for (size_t i = 0; i < n; ++i) std::swap(w.at(i, k), w.at(i, pc));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                auto q = divide_exact(num, prev);
                if (!q) throw internal_error("Bareiss elimination: inexact division");
                w.at(i, j) = std::move(*q);
            }
            w.at(i, k) = LaurentPoly();
        }
        prev = w.at(k, k);
    }
    LaurentPoly det = w.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

// ---------------------------------------------------------------------------
// Modular evaluation/interpolation determinant.
//
// The result polynomial has degree bounded by the sum of row degree spans,
// and its coefficients are bounded by prod_i (sum_j |M_ij|_1). Computing the
// determinant of integer evaluations modulo enough 31-bit primes and
// CRT-reconstructing each coefficient recovers the exact answer.
// ---------------------------------------------------------------------------

namespace {

uint64_t mod_pow(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

uint64_t mod_inv(uint64_t a, uint64_t p) { return mod_pow(a, p - 2, p); }

// det of an n x n matrix mod p (entries < p, p < 2^31); destroys `a`.
uint64_t det_mod_p(std::vector<uint64_t>& a, size_t n, uint64_t p) {
    uint64_t det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = n;
        for (size_t i = k; i < n; ++i)
            if (a[i * n + k] != 0) {
                piv = i;
                break;
            }
        if (piv == n) return 0;
        if (piv != k) {
            for (size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            det = p - det;
            if (det == p) det = 0;
        }
        const uint64_t pk = a[k * n + k];
        det = det * pk % p;
        const uint64_t inv = mod_inv(pk, p);
        for (size_t i = k + 1; i < n; ++i) {
            const uint64_t f = a[i * n + k] * inv % p;
            if (f == 0) continue;
            for (size_t j = k; j < n; ++j) {
                uint64_t sub = f * a[k * n + j] % p;
                uint64_t& cell = a[i * n + j];
                cell = cell >= sub ? cell - sub : cell + p - sub;
            }
        }
    }
    return det;
}

// Newton interpolation through points (0..d, values) mod p; returns monomial
// coefficients c[0..d].
std::vector<uint64_t> interpolate_mod_p(const std::vector<uint64_t>& values, uint64_t p) {
    const size_t d = values.size() - 1;
    std::vector<uint64_t> dd = values; // divided differences in place
    std::vector<uint64_t> inv(d + 1, 1);
    for (size_t j = 1; j <= d; ++j) inv[j] = mod_inv(j % p, p);
    for (size_t j = 1; j <= d; ++j)
        for (size_t i = d; i >= j; --i) {
            uint64_t diff = dd[i] >= dd[i - 1] ? dd[i] - dd[i - 1] : dd[i] + p - dd[i - 1];
            dd[i] = diff * inv[j] % p;
            if (i == j) break;
        }
    // Horner over the Newton basis: result = (...(dd[d](x - (d-1)) + dd[d-1])...)
    std::vector<uint64_t> coeff(d + 1, 0);
    coeff[0] = dd[d];
    size_t deg = 0;
    for (size_t k = d; k-- > 0;) {
        // multiply by (x - k), then add dd[k]
        const uint64_t xk = k % p;
        for (size_t i = deg + 1; i-- > 0;) {
            uint64_t shifted = i > 0 ? coeff[i - 1] : 0;
            uint64_t sub = coeff[i] * xk % p;
            coeff[i] = shifted >= sub ? shifted - sub : shifted + p - sub;
        }
        ++deg;
        coeff[0] = (coeff[0] + dd[k]) % p;
    }
    coeff.resize(d + 1, 0);
    return coeff;
}

// 31-bit primes, descending from 2^31 - 1, until their product exceeds `need`.
std::vector<uint64_t> primes_for_modulus(const mpz_class& need) {
    std::vector<uint64_t> out;
    mpz_class prod = 1;
    mpz_class c(2147483647); // 2^31 - 1, prime
    while (prod <= need) {
        if (mpz_probab_prime_p(c.get_mpz_t(), 40) > 0) {
            out.push_back(c.get_ui());
            prod *= c;
        }
        c -= 2;
    }
    return out;
}

} // namespace

LaurentPoly determinant_modular(const LaurentMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
    const size_t n = m.rows();
    if (n == 0) return LaurentPoly::constant(1);

    // Row normalization: factor t^{min} out of each row.
    long total_shift = 0;
    std::vector<long> row_shift(n, 0);
    std::vector<long> row_deg(n, 0);
    for (size_t i = 0; i < n; ++i) {
        bool any = false;
        long lo = 0, hi = 0;
        for (size_t j = 0; j < n; ++j) {
            const LaurentPoly& e = m.at(i, j);
            if (e.is_zero()) continue;
            if (!any) {
                lo = e.min_exp();
                hi = e.max_exp();
                any = true;
            } else {
                lo = std::min(lo, e.min_exp());
                hi = std::max(hi, e.max_exp());
            }
        }
        if (!any) return LaurentPoly(); // zero row
        row_shift[i] = lo;
        row_deg[i] = hi - lo;
        total_shift += lo;
    }
    long degree_bound = 0;
    for (size_t i = 0; i < n; ++i) degree_bound += row_deg[i];
    const size_t npoints = static_cast<size_t>(degree_bound) + 1;

    // Coefficient bound: prod over rows of (sum over entries of l1 norm).
    mpz_class bound = 1;
    for (size_t i = 0; i < n; ++i) {
        mpz_class row_sum = 0;
        for (size_t j = 0; j < n; ++j)
            for (const auto& [e, c] : m.at(i, j).terms()) row_sum += abs(c);
        bound *= row_sum;
    }

    // Enough primes that the CRT modulus exceeds 2*bound.
    std::vector<uint64_t> primes = primes_for_modulus(2 * bound);

    // Dense nonnegative-exponent coefficient tables per entry (after shift).
    std::vector<std::vector<std::pair<long, const mpz_class*>>> entry_terms(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto& slot = entry_terms[i * n + j];
            for (const auto& [e, c] : m.at(i, j).terms())
                slot.emplace_back(e - row_shift[i], &c);
        }

    std::vector<std::vector<uint64_t>> residues(primes.size());
    for (size_t pi = 0; pi < primes.size(); ++pi) {
        const uint64_t p = primes[pi];
        // entry coefficients mod p, dense per entry
        std::vector<std::vector<uint64_t>> dense(n * n);
        for (size_t idx = 0; idx < n * n; ++idx) {
            long dmax = -1;
            for (const auto& [e, c] : entry_terms[idx]) dmax = std::max(dmax, e);
            if (dmax < 0) continue;
            dense[idx].assign(static_cast<size_t>(dmax) + 1, 0);
            for (const auto& [e, c] : entry_terms[idx]) {
                mpz_class r = *c % static_cast<unsigned long>(p);
                if (r < 0) r += static_cast<unsigned long>(p);
                dense[idx][static_cast<size_t>(e)] = r.get_ui();
            }
        }
        std::vector<uint64_t> values(npoints);
        std::vector<uint64_t> a(n * n);
        for (size_t x = 0; x < npoints; ++x) {
            const uint64_t xv = x % p;
            for (size_t idx = 0; idx < n * n; ++idx) {
                const auto& cs = dense[idx];
                uint64_t acc = 0;
                for (size_t k = cs.size(); k-- > 0;) acc = (acc * xv + cs[k]) % p;
                a[idx] = acc;
            }
            values[x] = det_mod_p(a, n, p);
        }
        residues[pi] = npoints == 1 ? values : interpolate_mod_p(values, p);
    }

    // CRT-reconstruct each coefficient into a signed integer.
    mpz_class modulus = 1;
    for (uint64_t p : primes) modulus *= static_cast<unsigned long>(p);
    LaurentPoly det;
    for (size_t k = 0; k < npoints; ++k) {
        mpz_class x = 0;
        mpz_class mcur = 1;
        for (size_t pi = 0; pi < primes.size(); ++pi) {
            const uint64_t p = primes[pi];
            mpz_class pr(static_cast<unsigned long>(p));
            mpz_class xr = x % pr;
            if (xr < 0) xr += pr;
            uint64_t need = residues[pi][k] % p;
            uint64_t have = xr.get_ui() % p;
            uint64_t delta = need >= have ? need - have : need + p - have;
            mpz_class minv;
            mpz_class mred = mcur % pr;
            mpz_invert(minv.get_mpz_t(), mred.get_mpz_t(), pr.get_mpz_t());
            mpz_class step = (minv * static_cast<unsigned long>(delta)) % pr;
            x += mcur * step;
            mcur *= pr;
        }
        if (x * 2 > modulus) x -= modulus;
        det.add_term(static_cast<long>(k) + total_shift, x);
    }
    return det;
}

LaurentPoly determinant(const LaurentMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
    const size_t n = m.rows();
    if (n <= 3) return determinant_cofactor(m);
    if (n <= 12) return determinant_bareiss(m);
    return determinant_modular(m);
}

} // namespace twistkit
