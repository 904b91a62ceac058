#pragma once

#include <utility>
#include <vector>

#include "gnorm/rat.hpp"

namespace gnorm {

// Finite atomic measure on the line; exact rational locations and masses.
struct AtomicMeasure {
    std::vector<std::pair<Rat, Rat>> atoms;  // (location, mass), sorted, merged, masses > 0

    static AtomicMeasure from_points(const std::vector<Rat>& locations, const Rat& mass_each);
    static AtomicMeasure from_atoms(std::vector<std::pair<Rat, Rat>> raw);

    bool empty() const { return atoms.empty(); }
    Rat total_mass() const;
    Rat mean() const;
    Rat mass_at_least(const Rat& t) const;  // mu([t, +inf))
    Rat cdf(const Rat& x) const;            // mu((-inf, x])
    Rat cdf_left(const Rat& x) const;       // mu((-inf, x))
};

bool operator==(const AtomicMeasure& a, const AtomicMeasure& b);

// Continuous piecewise-linear CDF given by its breakpoints; constant 0 before
// the first and 1 after the last.
struct PiecewiseLinearCdf {
    std::vector<std::pair<Rat, Rat>> points;  // (x, F(x)), x strictly increasing

    Rat eval(const Rat& x) const;
};

// sup_x |F_mu(x) - F(x)| computed exactly (both CDFs are piecewise monotone,
// so the sup is attained at an atom, a breakpoint, or a one-sided limit).
Rat kolmogorov_distance(const AtomicMeasure& mu, const PiecewiseLinearCdf& cdf);

}  // namespace gnorm
