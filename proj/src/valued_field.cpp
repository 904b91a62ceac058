#include "gnorm/valued_field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gnorm {

Rat LaurentPoly::coeff(long exponent) const {
    long k = exponent - ord;
    if (k < 0 || k >= static_cast<long>(coeffs.size())) return Rat(0);
    return coeffs[static_cast<std::size_t>(k)];
}

void LaurentPoly::normalize() {
    std::size_t lo = 0;
    while (lo < coeffs.size() && coeffs[lo] == 0) ++lo;
    if (lo == coeffs.size()) {
        coeffs.clear();
        ord = 0;
        return;
    }
    std::size_t hi = coeffs.size();
    while (hi > lo && coeffs[hi - 1] == 0) --hi;
    if (lo > 0 || hi < coeffs.size()) {
        coeffs = std::vector<Rat>(coeffs.begin() + static_cast<long>(lo),
                                  coeffs.begin() + static_cast<long>(hi));
        ord += static_cast<long>(lo);
    }
}

LaurentPoly LaurentPoly::constant(const Rat& c) {
    LaurentPoly p;
    if (c != 0) {
        p.ord = 0;
        p.coeffs = {c};
    }
    return p;
}

LaurentPoly LaurentPoly::monomial(const Rat& c, long exponent) {
    LaurentPoly p;
    if (c != 0) {
        p.ord = exponent;
        p.coeffs = {c};
    }
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long lo = std::min(a.ord, b.ord);
    long hi = std::max(a.degree(), b.degree());
    LaurentPoly r;
    r.ord = lo;
    r.coeffs.assign(static_cast<std::size_t>(hi - lo + 1), Rat(0));
    for (std::size_t k = 0; k < a.coeffs.size(); ++k)
        r.coeffs[static_cast<std::size_t>(a.ord - lo) + k] += a.coeffs[k];
    for (std::size_t k = 0; k < b.coeffs.size(); ++k)
        r.coeffs[static_cast<std::size_t>(b.ord - lo) + k] += b.coeffs[k];
    r.normalize();
    return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (Rat& c : r.coeffs) c = -c;
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly::zero();
    LaurentPoly r;
    r.ord = a.ord + b.ord;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    r.normalize();
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.ord == b.ord && a.coeffs == b.coeffs;
}

namespace {

// Integer polynomial, dense from degree 0.
using ZPoly = std::vector<mpz_class>;

void z_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class z_content(const ZPoly& p) {
    mpz_class g(0);
    for (const mpz_class& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void z_divexact(ZPoly& p, const mpz_class& d) {
    for (mpz_class& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// Primitive integer image of a rational-coefficient polynomial (ord 0 view).
ZPoly to_primitive(const LaurentPoly& p) {
    mpz_class den(1);
    for (const Rat& c : p.coeffs)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z;
    z.reserve(p.coeffs.size());
    for (const Rat& c : p.coeffs) {
        Rat scaled = c * Rat(den);
        z.push_back(scaled.get_num());
    }
    z_trim(z);
    mpz_class cont = z_content(z);
    if (cont > 1) z_divexact(z, cont);
    if (!z.empty() && z.back() < 0)
        for (mpz_class& c : z) c = -c;
    return z;
}

// Pseudo-remainder of a by b, reduced to its primitive part. The primitive
// remainder sequence keeps coefficient growth polynomial, unlike rational
// Euclid.
ZPoly z_pseudo_rem_primitive(ZPoly a, const ZPoly& b) {
    const mpz_class& lead = b.back();
    while (a.size() >= b.size()) {
        mpz_class f = a.back();
        std::size_t shift = a.size() - b.size();
        for (mpz_class& c : a) c *= lead;
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
        z_trim(a);
        if (a.empty()) return a;
    }
    mpz_class cont = z_content(a);
    if (cont > 1) z_divexact(a, cont);
    return a;
}

// Monic gcd of two plain polynomials (ord 0 inputs).
LaurentPoly poly_gcd(const LaurentPoly& pa, const LaurentPoly& pb) {
    ZPoly a = to_primitive(pa), b = to_primitive(pb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = z_pseudo_rem_primitive(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    LaurentPoly g;
    if (a.empty()) return g;
    g.ord = 0;
    g.coeffs.reserve(a.size());
    for (const mpz_class& c : a) g.coeffs.emplace_back(Rat(c) / Rat(a.back()));
    g.normalize();
    return g;
}

// Exact division, used only when the divisor is known to divide.
LaurentPoly poly_div_exact(LaurentPoly a, const LaurentPoly& b) {
    LaurentPoly q = LaurentPoly::zero();
    while (!a.is_zero()) {
        Rat f = a.coeffs.back() / b.coeffs.back();
        long shift = a.degree() - b.degree();
        LaurentPoly m = LaurentPoly::monomial(f, shift);
        q = q + m;
        a = a - m * b;
    }
    return q;
}

}  // namespace

FieldElem::FieldElem(LaurentPoly num, LaurentPoly den, long ramification)
    : num_(std::move(num)), den_(std::move(den)), ram_(ramification) {
    if (den_.is_zero()) throw std::domain_error("FieldElem: zero denominator");
    if (ram_ < 1) throw std::domain_error("FieldElem: ramification must be positive");
    canonicalize();
}

void FieldElem::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(Rat(1));
        return;
    }
    // Shift the u-power imbalance into the numerator so den has ord 0.
    long shift = den_.ord;
    den_.ord = 0;
    num_.ord -= shift;

    if (den_.degree() > 0) {
        LaurentPoly n0 = num_;
        n0.ord = 0;  // gcd on the polynomial parts
        LaurentPoly g = poly_gcd(n0, den_);
        if (!(g.degree() == 0)) {
            long keep = num_.ord;
            num_ = poly_div_exact(n0, g);
            num_.ord += keep;
            den_ = poly_div_exact(den_, g);
        }
    }
    Rat c0 = den_.coeffs.front();
    if (c0 != 1) {
        for (Rat& c : num_.coeffs) c /= c0;
        for (Rat& c : den_.coeffs) c /= c0;
    }
}

FieldElem FieldElem::zero(long ramification) {
    return FieldElem(LaurentPoly::zero(), LaurentPoly::constant(Rat(1)), ramification);
}

FieldElem FieldElem::one(long ramification) {
    return FieldElem(LaurentPoly::constant(Rat(1)), LaurentPoly::constant(Rat(1)), ramification);
}

FieldElem FieldElem::from_rat(const Rat& c, long ramification) {
    return FieldElem(LaurentPoly::constant(c), LaurentPoly::constant(Rat(1)), ramification);
}

FieldElem FieldElem::t_power(const Rat& e, long ramification) {
    Rat scaled = e * ramification;
    if (scaled.get_den() != 1)
        throw std::domain_error("t_power: exponent " + rat_to_string(e) +
                                " not representable at ramification " + std::to_string(ramification));
    return FieldElem(LaurentPoly::monomial(Rat(1), scaled.get_num().get_si()),
                     LaurentPoly::constant(Rat(1)), ramification);
}

ValOrInf FieldElem::val() const {
    if (is_zero()) return std::nullopt;
    return make_rat(num_.ord, ram_);
}

FieldElem FieldElem::ramify(long factor) const {
    if (factor < 1) throw std::domain_error("ramify: factor must be positive");
    if (factor == 1) return *this;
    auto stretch = [factor](const LaurentPoly& p) {
        if (p.is_zero()) return p;
        LaurentPoly r;
        r.ord = p.ord * factor;
        r.coeffs.assign((p.coeffs.size() - 1) * static_cast<std::size_t>(factor) + 1, Rat(0));
        for (std::size_t k = 0; k < p.coeffs.size(); ++k)
            r.coeffs[k * static_cast<std::size_t>(factor)] = p.coeffs[k];
        return r;
    };
    return FieldElem(stretch(num_), stretch(den_), ram_ * factor);
}

FieldElem FieldElem::with_ramification(long target) const {
    if (target % ram_ != 0)
        throw std::domain_error("with_ramification: target not a multiple of current ramification");
    return ramify(target / ram_);
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw std::domain_error("FieldElem::inv: division by zero");
    return FieldElem(den_, num_, ram_);
}

namespace {
long common_ram(const FieldElem& a, const FieldElem& b) {
    return std::lcm(a.ramification(), b.ramification());
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    long n = common_ram(a, b);
    FieldElem x = a.with_ramification(n), y = b.with_ramification(n);
    return FieldElem(x.num() * y.den() + y.num() * x.den(), x.den() * y.den(), n);
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator-(const FieldElem& a) {
    return FieldElem(-a.num(), a.den(), a.ramification());
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    long n = common_ram(a, b);
    FieldElem x = a.with_ramification(n), y = b.with_ramification(n);
    return FieldElem(x.num() * y.num(), x.den() * y.den(), n);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inv(); }

bool operator==(const FieldElem& a, const FieldElem& b) {
    long n = common_ram(a, b);
    FieldElem x = a.with_ramification(n), y = b.with_ramification(n);
    return x.num() == y.num() && x.den() == y.den();
}

std::string laurent_to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0*u^0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
        if (p.coeffs[k] == 0) continue;
        if (!first) out << "+";
        out << rat_to_string(p.coeffs[k]) << "*u^" << (p.ord + static_cast<long>(k));
        first = false;
    }
    return out.str();
}

LaurentPoly laurent_from_string(const std::string& text) {
    LaurentPoly p = LaurentPoly::zero();
    std::size_t pos = 0;
    while (pos < text.size()) {
        // terms are separated by '+'; a leading '-' belongs to the coefficient
        std::size_t next = text.find('+', pos + 1);
        std::string term = text.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? text.size() : next + 1;
        std::size_t star = term.find("*u^");
        if (star == std::string::npos)
            throw std::invalid_argument("laurent_from_string: bad term '" + term + "'");
        Rat c = rat_from_string(term.substr(0, star));
        long e = std::stol(term.substr(star + 3));
        p = p + LaurentPoly::monomial(c, e);
    }
    p.normalize();
    return p;
}

std::string FieldElem::to_string() const {
    if (den_ == LaurentPoly::constant(Rat(1))) return laurent_to_string(num_);
    return "(" + laurent_to_string(num_) + ")/(" + laurent_to_string(den_) + ")";
}

FieldElem FieldElem::from_string(const std::string& text, long ramification) {
    if (!text.empty() && text.front() == '(') {
        std::size_t split = text.find(")/(");
        if (split == std::string::npos || text.back() != ')')
            throw std::invalid_argument("FieldElem::from_string: malformed '" + text + "'");
        LaurentPoly num = laurent_from_string(text.substr(1, split - 1));
        LaurentPoly den =
            laurent_from_string(text.substr(split + 3, text.size() - split - 4));
        return FieldElem(num, den, ramification);
    }
    return FieldElem(laurent_from_string(text), LaurentPoly::constant(Rat(1)), ramification);
}

}  // namespace gnorm
