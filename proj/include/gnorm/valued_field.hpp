#pragma once

#include <string>
#include <vector>

#include "gnorm/rat.hpp"

namespace gnorm {

// Laurent polynomial in u over Q, dense from the lowest exponent.
// Zero is represented by an empty coefficient vector.
struct LaurentPoly {
    long ord = 0;                // exponent of the lowest term
    std::vector<Rat> coeffs;     // coeffs[k] multiplies u^(ord+k); front/back nonzero

    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return ord + static_cast<long>(coeffs.size()) - 1; }
    Rat coeff(long exponent) const;
    void normalize();            // trim zero coefficients at both ends

    static LaurentPoly zero() { return {}; }
    static LaurentPoly constant(const Rat& c);
    static LaurentPoly monomial(const Rat& c, long exponent);
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);
bool operator==(const LaurentPoly& a, const LaurentPoly& b);

// Element of K = Q(t^{1/N}) as a rational function in u = t^{1/N}.
// Canonical form: gcd(num, den) = 1, den is a plain polynomial (ord 0)
// with constant coefficient 1. Two elements interoperate at the lcm of
// their ramifications.
class FieldElem {
  public:
    FieldElem() : num_(LaurentPoly::zero()), den_(LaurentPoly::constant(Rat(1))), ram_(1) {}
    FieldElem(LaurentPoly num, LaurentPoly den, long ramification);

    static FieldElem zero(long ramification = 1);
    static FieldElem one(long ramification = 1);
    static FieldElem from_rat(const Rat& c, long ramification = 1);
    // c * t^e with e rational: requires denominator(e) | ramification.
    static FieldElem t_power(const Rat& e, long ramification);

    bool is_zero() const { return num_.is_zero(); }
    long ramification() const { return ram_; }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    // v(x) = ord_u(num)/N; v(0) = +inf. v(t) = 1.
    ValOrInf val() const;

    // Same element viewed with ramification N*M.
    FieldElem ramify(long factor) const;
    // Lift to a ramification target divisible by the current one.
    FieldElem with_ramification(long target) const;

    FieldElem inv() const;  // throws std::domain_error on zero

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a);
    friend bool operator==(const FieldElem& a, const FieldElem& b);

    // Text form "num" or "(num)/(den)" with terms "c*u^k"; round-trips exactly.
    std::string to_string() const;
    static FieldElem from_string(const std::string& text, long ramification);

  private:
    void canonicalize();

    LaurentPoly num_, den_;
    long ram_;
};

inline bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

std::string laurent_to_string(const LaurentPoly& p);
LaurentPoly laurent_from_string(const std::string& text);

}  // namespace gnorm
