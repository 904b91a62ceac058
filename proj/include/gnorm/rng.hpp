#pragma once

#include <cstdint>

#include "gnorm/rat.hpp"
#include "gnorm/valued_field.hpp"

namespace gnorm {

// Deterministic, platform-independent generator (splitmix64). One seeded
// generator per run; audits split substreams by index so results do not
// depend on thread schedule.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Independent substream derived from (seed, stream).
    Rng split(std::uint64_t stream) const {
        Rng child(state_ ^ (0x5851f42d4c957f2dULL * (stream + 1)));
        child.next();
        return child;
    }

    long uniform(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rat rat(long max_abs_num = 6, long max_den = 4) {
        return make_rat(uniform(-max_abs_num, max_abs_num), uniform(1, max_den));
    }

    // Nonzero Laurent rational function with small support.
    FieldElem field_elem(long ramification, long min_ord = -2, long max_ord = 3) {
        LaurentPoly num = LaurentPoly::zero();
        while (num.is_zero()) {
            long lo = uniform(min_ord, max_ord);
            long terms = uniform(1, 3);
            for (long k = 0; k < terms; ++k)
                num = num + LaurentPoly::monomial(Rat(uniform(-4, 4)), lo + k);
        }
        LaurentPoly den = LaurentPoly::constant(Rat(1));
        if (uniform(0, 5) == 0) den = den + LaurentPoly::monomial(Rat(uniform(-3, 3)), 1);
        return FieldElem(num, den, ramification);
    }

    // Element of the valuation ring (val >= 0); strictly positive val if asked.
    FieldElem integral_elem(long ramification, bool strictly_positive = false) {
        LaurentPoly p = LaurentPoly::zero();
        long lo = strictly_positive ? 1 : 0;
        long terms = uniform(1, 3);
        for (long k = 0; k < terms; ++k)
            p = p + LaurentPoly::monomial(Rat(uniform(-3, 3)), uniform(lo, lo + 3));
        if (p.is_zero() || Rat(p.ord, 1) < lo) {
            p = LaurentPoly::monomial(Rat(uniform(1, 3)), lo);
        }
        return FieldElem(p, LaurentPoly::constant(Rat(1)), ramification);
    }

  private:
    std::uint64_t state_;
};

}  // namespace gnorm
