#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gnorm {

// All spectral / volume / energy quantities are exact rationals in valuation
// units (log|x| := -v(x), v(t) = 1).
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with optional sign; q > 0 after canonicalization.
Rat rat_from_string(const std::string& text);

// Canonical GMP form: "p" when q == 1, else "p/q".
std::string rat_to_string(const Rat& r);

// Always "p/q", including "p/1". Used for emitted artifacts.
std::string rat_to_string_pq(const Rat& r);

// floor(r) as an integer Rat.
Rat rat_floor(const Rat& r);

// ceil(sqrt(m)) for m >= 0.
long ceil_sqrt(long m);

// lcm of the (positive) denominators; 1 for an empty list.
mpz_class lcm_denominators(std::span<const Rat> rs);

// +infinity is represented by an empty optional (only the zero vector /
// zero field element attains it).
using ValOrInf = std::optional<Rat>;

inline ValOrInf val_min(const ValOrInf& a, const ValOrInf& b) {
    if (!a) return b;
    if (!b) return a;
    return *a <= *b ? a : b;
}

inline ValOrInf val_add(const ValOrInf& a, const ValOrInf& b) {
    if (!a || !b) return std::nullopt;
    return Rat(*a + *b);
}

inline bool val_le(const ValOrInf& a, const ValOrInf& b) {
    // a <= b with nullopt = +inf.
    if (!a) return !b ? true : false;
    if (!b) return true;
    return *a <= *b;
}

}  // namespace gnorm
