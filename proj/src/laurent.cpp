#include "twistkit/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace twistkit {

LaurentPoly LaurentPoly::monomial(const mpz_class& c, long e) {
    LaurentPoly p;
    if (c != 0) p.terms_[e] = c;
    return p;
}

long LaurentPoly::min_exp() const {
    if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

const mpz_class& LaurentPoly::leading_coeff() const {
    if (is_zero()) throw std::logic_error("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

mpz_class LaurentPoly::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(long e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
    LaurentPoly r = constant(1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

mpz_class LaurentPoly::eval_at(const mpz_class& x) const {
    // Only meaningful for nonnegative exponents; callers shift first.
    mpz_class acc = 0;
    if (is_zero()) return acc;
    if (min_exp() < 0) throw std::logic_error("eval_at needs nonnegative exponents");
    long prev = max_exp();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (long k = prev; k > it->first; --k) acc *= x;
        acc += it->second;
        prev = it->first;
    }
    for (long k = prev; k > 0; --k) acc *= x;
    return acc;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << c.get_str() << "*t^" << e;
        first = false;
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
    auto fail = [&]() { throw std::invalid_argument("bad polynomial: '" + text + "'"); };
    // strip spaces around the whole string
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    if (b == std::string::npos) fail();
    std::string s = text.substr(b, e - b + 1);
    if (s == "0") return LaurentPoly();
    LaurentPoly p;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(" + ", pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        size_t star = term.find("*t^");
        if (star == std::string::npos) fail();
        std::string cs = term.substr(0, star);
        std::string es = term.substr(star + 3);
        if (cs.empty() || es.empty()) fail();
        mpz_class c;
        if (mpz_set_str(c.get_mpz_t(), cs.c_str(), 10) != 0) fail();
        long ex = 0;
        try {
            size_t used = 0;
            ex = std::stol(es, &used);
            if (used != es.size()) fail();
        } catch (const std::exception&) {
            fail();
        }
        p.add_term(ex, c);
        pos = next == std::string::npos ? s.size() : next + 3;
    }
    return p;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    // Shift both to ordinary polynomials; the quotient shifts back by the
    // difference. Long division from the top; every step must divide exactly.
    long shift = a.min_exp() - b.min_exp();
    LaurentPoly rem = a.shifted(-a.min_exp());
    LaurentPoly den = b.shifted(-b.min_exp());
    const long dn = den.max_exp();
    const mpz_class& lead = den.leading_coeff();
    LaurentPoly q;
    while (!rem.is_zero() && rem.max_exp() >= dn) {
        mpz_class c;
        mpz_class r;
        mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), rem.leading_coeff().get_mpz_t(),
                    lead.get_mpz_t());
        if (r != 0) return std::nullopt;
        long e = rem.max_exp() - dn;
        q.add_term(e, c);
        rem -= den * LaurentPoly::monomial(c, e);
    }
    if (!rem.is_zero()) return std::nullopt;
    return q.shifted(shift);
}

UnitClass UnitClass::of(const LaurentPoly& p) {
    UnitClass u;
    if (p.is_zero()) return u;
    LaurentPoly r = p.shifted(-p.min_exp());
    if (r.leading_coeff() < 0) r = -r;
    u.rep_ = r;
    return u;
}

PolyClass classify(const LaurentPoly& p) {
    PolyClass c;
    c.unit_class = UnitClass::of(p);
    if (p.is_zero()) return c;
    c.is_zero = false;
    c.span_degree = p.span();
    const mpz_class& lead = p.leading_coeff();
    c.is_monic = (lead == 1 || lead == -1);
    return c;
}

} // namespace twistkit
