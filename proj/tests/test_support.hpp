#pragma once

#include <numeric>

#include "gnorm/linalg.hpp"
#include "gnorm/norms.hpp"
#include "gnorm/rng.hpp"

namespace gnorm::testing {

inline FieldElem t_elem(long ram = 1) { return FieldElem::t_power(Rat(1), ram); }

inline FieldElem fe(const std::string& text, long ram = 1) {
    return FieldElem::from_string(text, ram);
}

inline Matrix random_invertible(Rng& rng, int d, long ram = 1) {
    for (;;) {
        Matrix m(d, d, ram);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (rng.uniform(0, 3) > 0) m.at(i, j) = rng.field_elem(ram);
        if (!det_elimination(m).is_zero()) return m;
    }
}

// Invertible matrix over the valuation ring with unit determinant valuation.
inline Matrix random_unimodular(Rng& rng, int d, long ram = 1) {
    Matrix m = Matrix::identity(d, ram);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            if (rng.uniform(0, 1) == 0) m.at(i, j) = rng.integral_elem(ram, true);
        }
    return m;
}

inline std::vector<Rat> random_weights(Rng& rng, int d, long max_den = 3) {
    std::vector<Rat> w;
    for (int i = 0; i < d; ++i) w.push_back(rng.rat(4, max_den));
    return w;
}

inline DiagNorm random_diag_norm(Rng& rng, int d, long ram = 1) {
    return DiagNorm(random_invertible(rng, d, ram), random_weights(rng, d));
}

inline std::vector<FieldElem> random_vector(Rng& rng, int d, long ram = 1) {
    std::vector<FieldElem> v(static_cast<std::size_t>(d), FieldElem::zero(ram));
    bool nonzero = false;
    for (int i = 0; i < d; ++i)
        if (rng.uniform(0, 2) > 0) {
            v[static_cast<std::size_t>(i)] = rng.field_elem(ram);
            nonzero = true;
        }
    if (!nonzero) v[0] = FieldElem::one(ram);
    return v;
}

// Re-representation of the same norm: weighted-unitary recombination (strictly
// dominant diagonal relative to the weight gaps) plus a column permutation and
// u-power column scalings absorbed into the weights.
inline DiagNorm scramble_representation(Rng& rng, const DiagNorm& n) {
    int d = n.dim();
    long den = lcm_denominators(n.weights()).get_si();
    long ram = std::lcm(n.ramification(), den);
    Matrix u = Matrix::identity(d, ram);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i == j || rng.uniform(0, 1) == 0) continue;
            // v(u_ij) >= max(0, w_j - w_i) + 1 keeps the norm unchanged
            Rat gap = n.weights()[static_cast<std::size_t>(j)] - n.weights()[static_cast<std::size_t>(i)];
            Rat lo = (gap > 0 ? gap : Rat(0)) + 1;
            FieldElem c = FieldElem::t_power(lo, ram);
            u.at(i, j) = c * rng.integral_elem(ram, false);
        }
    Matrix nb = mat_mul(n.basis().lifted(ram), u);
    std::vector<Rat> nw = n.weights();

    std::vector<int> perm(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = d - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[static_cast<std::size_t>(rng.uniform(0, i))]);
    Matrix pb(d, d, ram);
    std::vector<Rat> pw(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        int src = perm[static_cast<std::size_t>(j)];
        long shift = rng.uniform(0, 2);
        FieldElem s = FieldElem::t_power(Rat(shift), ram);
        for (int i = 0; i < d; ++i) pb.at(i, j) = s * nb.at(i, src);
        pw[static_cast<std::size_t>(j)] = nw[static_cast<std::size_t>(src)] + shift;
    }
    return DiagNorm(std::move(pb), std::move(pw));
}

}  // namespace gnorm::testing
