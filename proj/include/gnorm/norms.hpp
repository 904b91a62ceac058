#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gnorm/linalg.hpp"
#include "gnorm/measure.hpp"

namespace gnorm {

// Diagonalizable norm on K^d: an invertible basis matrix (columns) plus one
// rational weight per basis vector, w_i = v_norm(b_i). A lattice norm has all
// weights zero. A DiagNorm with fixed basis and varying weights is a point of
// the apartment of that basis.
class DiagNorm {
  public:
    DiagNorm(Matrix basis, std::vector<Rat> weights);

    // Trivial lattice norm (identity basis, zero weights).
    static DiagNorm lattice(int dim, long ramification = 1);
    // Diagonal in the coordinate basis with the given weights.
    static DiagNorm monomial(std::vector<Rat> weights, long ramification = 1);

    int dim() const { return basis_.rows; }
    long ramification() const { return ram_; }
    const Matrix& basis() const { return basis_; }
    const std::vector<Rat>& weights() const { return weights_; }

    // v_n(v) = min_i (v(a_i) + w_i) for v = sum a_i b_i; +inf iff v = 0.
    ValOrInf eval(const std::vector<FieldElem>& v) const;

    // Effective coordinate weights when every basis vector is a scalar times
    // a coordinate vector ("monomial-diagonal"); nullopt otherwise.
    std::optional<std::vector<Rat>> monomial_weights() const;

    DiagNorm with_ramification(long target) const;

  private:
    Matrix basis_;
    std::vector<Rat> weights_;
    long ram_;
};

// Sorted relative spectrum lambda_1 >= ... >= lambda_d of a pair of norms,
// with its derived quantities.
struct SpectralData {
    std::vector<Rat> lambdas;  // descending

    int dim() const { return static_cast<int>(lambdas.size()); }
    Rat vol() const;              // mean
    Rat d1() const;               // mean |lambda|
    Rat dinf() const;             // max |lambda|  (= sup_v |log ratio|)
    Rat dp_pow(int p) const;      // d_p^p = mean |lambda|^p (exact; d_p itself is irrational)
    AtomicMeasure sigma() const;  // d^{-1} sum of deltas at the lambda_i
};

// lambda_i = v_a(s_i) - v_b(s_i) over a joint diagonalizing basis (s_i);
// computed through weighted invariant factors of the transition matrix.
// Pinned convention: relative_spectrum(a, scale(a, c)) = (-c, ..., -c).
SpectralData relative_spectrum(const DiagNorm& a, const DiagNorm& b);

// Joint diagonalization: basis columns s_i with v_a(s_i) = a_weights[i],
// v_b(s_i) = b_weights[i]; lambda descending.
struct JointDiag {
    Matrix basis;
    std::vector<Rat> a_weights, b_weights;
};
JointDiag joint_diagonalization(const DiagNorm& a, const DiagNorm& b);

// Mean of the relative spectrum, recomputed independently through the top
// exterior power (determinant) formula; throws std::logic_error if the two
// routes disagree.
Rat vol(const DiagNorm& a, const DiagNorm& b);
Rat d1(const DiagNorm& a, const DiagNorm& b);
Rat dinf(const DiagNorm& a, const DiagNorm& b);
Rat dp_pow(const DiagNorm& a, const DiagNorm& b, int p);

// Pointwise maximum of two norms (v_max = min(v_a, v_b)).
DiagNorm max_norm(const DiagNorm& a, const DiagNorm& b);

// Adds c to every weight: multiplies the norm by e^{-c}.
DiagNorm scale(const DiagNorm& n, const Rat& c);

DiagNorm tensor_power(const DiagNorm& n, int k);
DiagNorm sym_power(const DiagNorm& n, int k);
DiagNorm ext_power(const DiagNorm& n, int k);

// Quotient norm along a surjection A : V -> W (max of v over lifts).
DiagNorm quotient_norm(const DiagNorm& n, const Matrix& surjection);

// Same basis and weights over K(t^{1/(N*M)}).
DiagNorm ground_field_extension(const DiagNorm& n, long factor);

// Lattice norm within d_inf distance eps (in fact <= 1/(2N') < eps/2 after
// ramifying to 1/N' < eps and rounding weights to the grid).
DiagNorm lattice_approximation(const DiagNorm& n, const Rat& eps);

// Valuation of the class of `target` in V / span(S): max over the translate
// target + span(S) of v_norm. Throws if target lies in span(S).
Rat min_val_on_translate(const std::vector<FieldElem>& target, const Matrix& span_columns,
                         const DiagNorm& norm);

// JSON-compatible record {dim, basis (row-major FieldElem text), weights,
// ramification}; exact round-trip.
std::string diag_norm_to_json(const DiagNorm& n);
DiagNorm diag_norm_from_json(const std::string& text);

// Enumeration of degree-k exponent vectors in `vars` variables (lex order);
// shared by the power constructions and the section ring.
std::vector<std::vector<int>> exponents_of_degree(int vars, int degree);

}  // namespace gnorm
