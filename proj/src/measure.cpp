#include "gnorm/measure.hpp"

#include <algorithm>
#include <stdexcept>

namespace gnorm {

AtomicMeasure AtomicMeasure::from_points(const std::vector<Rat>& locations, const Rat& mass_each) {
    std::vector<std::pair<Rat, Rat>> raw;
    raw.reserve(locations.size());
    for (const Rat& x : locations) raw.emplace_back(x, mass_each);
    return from_atoms(std::move(raw));
}

AtomicMeasure AtomicMeasure::from_atoms(std::vector<std::pair<Rat, Rat>> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    AtomicMeasure m;
    for (auto& [x, w] : raw) {
        if (w == 0) continue;
        if (w < 0) throw std::domain_error("AtomicMeasure: negative mass");
        if (!m.atoms.empty() && m.atoms.back().first == x)
            m.atoms.back().second += w;
        else
            m.atoms.emplace_back(x, w);
    }
    return m;
}

Rat AtomicMeasure::total_mass() const {
    Rat s(0);
    for (const auto& [x, w] : atoms) s += w;
    return s;
}

Rat AtomicMeasure::mean() const {
    Rat s(0);
    for (const auto& [x, w] : atoms) s += x * w;
    Rat t = total_mass();
    if (t == 0) throw std::domain_error("AtomicMeasure::mean: zero mass");
    return s / t;
}

Rat AtomicMeasure::mass_at_least(const Rat& t) const {
    Rat s(0);
    for (const auto& [x, w] : atoms)
        if (x >= t) s += w;
    return s;
}

Rat AtomicMeasure::cdf(const Rat& x) const {
    Rat s(0);
    for (const auto& [loc, w] : atoms)
        if (loc <= x) s += w;
    return s;
}

Rat AtomicMeasure::cdf_left(const Rat& x) const {
    Rat s(0);
    for (const auto& [loc, w] : atoms)
        if (loc < x) s += w;
    return s;
}

bool operator==(const AtomicMeasure& a, const AtomicMeasure& b) { return a.atoms == b.atoms; }

Rat PiecewiseLinearCdf::eval(const Rat& x) const {
    if (points.empty()) throw std::domain_error("PiecewiseLinearCdf: empty");
    if (x <= points.front().first) return x == points.front().first ? points.front().second : Rat(0);
    if (x >= points.back().first) return points.back().second;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (x <= points[i].first) {
            const auto& [x0, y0] = points[i - 1];
            const auto& [x1, y1] = points[i];
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
        }
    }
    return points.back().second;
}

Rat kolmogorov_distance(const AtomicMeasure& mu, const PiecewiseLinearCdf& cdf) {
    // Candidate abscissas: atoms (two-sided) and CDF breakpoints. Between
    // candidates both functions are monotone with no jumps, so this is exact.
    Rat best(0);
    auto consider = [&](const Rat& x) {
        Rat f = cdf.eval(x);
        Rat hi = abs(mu.cdf(x) - f);
        Rat lo = abs(mu.cdf_left(x) - f);
        if (hi > best) best = hi;
        if (lo > best) best = lo;
    };
    for (const auto& [x, w] : mu.atoms) consider(x);
    for (const auto& [x, y] : cdf.points) consider(x);
    return best;
}

}  // namespace gnorm
