#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace twistkit {

/// Integer Laurent polynomial in one variable t, kept in canonical form:
/// no stored coefficient is zero, the zero polynomial is the empty map.
/// Coefficients are arbitrary-precision integers throughout; the engine
/// relies on exact zero detection.
class LaurentPoly {
public:
    using Terms = std::map<long, mpz_class>; // exponent -> coefficient

    LaurentPoly() = default;

    static LaurentPoly constant(long c) { return monomial(mpz_class(c), 0); }
    static LaurentPoly constant(const mpz_class& c) { return monomial(c, 0); }
    static LaurentPoly monomial(const mpz_class& c, long e);
    /// The variable t (or t^e).
    static LaurentPoly t(long e = 1) { return monomial(mpz_class(1), e); }

    bool is_zero() const { return terms_.empty(); }
    /// Lowest/highest exponent; only defined for nonzero polynomials.
    long min_exp() const;
    long max_exp() const;
    /// max_exp - min_exp.
    long span() const { return max_exp() - min_exp(); }
    /// Coefficient of the highest-exponent term.
    const mpz_class& leading_coeff() const;
    mpz_class coeff(long e) const;
    size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    /// Adds c*t^e, dropping the term if it cancels to zero.
    void add_term(long e, const mpz_class& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Multiply by t^k.
    LaurentPoly shifted(long k) const;
    LaurentPoly pow(unsigned long e) const;

    /// Substitute t -> integer value (used by evaluation oracles).
    mpz_class eval_at(const mpz_class& x) const;

    /// Rendering as `c*t^e` terms sorted by exponent, e.g.
    /// `-1*t^0 + -1*t^1 + 1*t^2`; the zero polynomial prints as `0`.
    std::string str() const;
    /// Inverse of str(); throws std::invalid_argument on malformed input.
    static LaurentPoly parse(const std::string& text);

private:
    Terms terms_;
};

/// Exact quotient a/b over Z[t,t^-1]: returns q with a == b*q, or nullopt
/// when no such Laurent polynomial exists. b must be nonzero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Canonical representative of the unit-equivalence class {±t^k · p}:
/// lowest exponent shifted to 0 and positive leading coefficient.
/// Zero normalizes to zero.
class UnitClass {
public:
    UnitClass() = default;
    static UnitClass of(const LaurentPoly& p);

    const LaurentPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool operator==(const UnitClass& o) const { return rep_ == o.rep_; }
    bool operator!=(const UnitClass& o) const { return !(*this == o); }
    std::string str() const { return rep_.str(); }

private:
    LaurentPoly rep_;
};

/// Shape summary used by the fibering verdicts.
struct PolyClass {
    bool is_zero = true;
    long span_degree = 0;  // valid iff !is_zero
    bool is_monic = false; // highest-exponent coefficient is +-1
    UnitClass unit_class;
};

PolyClass classify(const LaurentPoly& p);

} // namespace twistkit
