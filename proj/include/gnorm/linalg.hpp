#pragma once

#include <vector>

#include "gnorm/valued_field.hpp"

namespace gnorm {

// Dense matrix over K = Q(t^{1/N}). Entries may carry different
// ramifications; operations lift to the common one.
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<FieldElem> entries;  // row-major

    Matrix() = default;
    Matrix(int r, int c, long ramification = 1)
        : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, FieldElem::zero(ramification)) {}

    FieldElem& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    const FieldElem& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * cols + j];
    }

    static Matrix identity(int d, long ramification = 1);

    long ramification() const;  // lcm over entries
    Matrix lifted(long target) const;
    std::vector<FieldElem> column(int j) const;
};

bool operator==(const Matrix& a, const Matrix& b);

Matrix mat_mul(const Matrix& a, const Matrix& b);
std::vector<FieldElem> mat_vec(const Matrix& a, const std::vector<FieldElem>& v);

// Exact solve B x = v; throws std::domain_error if B is singular.
std::vector<FieldElem> solve_in_basis(const Matrix& basis, const std::vector<FieldElem>& v);

// Exact solve B X = RHS for a matrix right-hand side.
Matrix solve_many(const Matrix& basis, const Matrix& rhs);

Matrix inverse(const Matrix& m);

// Fraction-free-style recursive Laplace expansion with subset memoization
// (d <= 16); used as the independent route for determinant valuations.
FieldElem det_laplace(const Matrix& m);

// Gaussian elimination determinant, any size.
FieldElem det_elimination(const Matrix& m);

FieldElem det(const Matrix& m);

// Weighted invariant factors: s_1 <= ... <= s_d with
//   s_1 + ... + s_k = min over k x k minors (I,J) of
//       [ v(det T_{I,J}) + sum_{i in I} rowShifts_i + sum_{j in J} colShifts_j ].
// Runs the elimination route always and the exhaustive-minor route for
// d <= 8; throws std::logic_error if the two disagree.
std::vector<Rat> weighted_invariants(const Matrix& t, const std::vector<Rat>& row_shifts,
                                     const std::vector<Rat>& col_shifts);
std::vector<Rat> weighted_invariants_minors(const Matrix& t, const std::vector<Rat>& row_shifts,
                                            const std::vector<Rat>& col_shifts);
std::vector<Rat> weighted_invariants_elimination(const Matrix& t,
                                                 const std::vector<Rat>& row_shifts,
                                                 const std::vector<Rat>& col_shifts);

// Smith decomposition C = P * D * Q over the valuation ring, pivoting on the
// entry of minimal valuation (ties: lexicographically smallest (row, col)).
// invariants = valuations of diag(D), ascending. When track_left is set,
// `left` holds P (its columns recombine the ambient basis).
struct SmithResult {
    std::vector<Rat> invariants;
    Matrix left;
    bool has_left = false;
};
SmithResult smith_decompose(Matrix c, bool track_left);

// Valuation-pivoted column reduction of a generating family (plain, i.e.
// weights already cleared into the entries). Returns an orthogonal basis of
// the tropical span: pivot columns in stage order, with their pivot rows and
// pivot valuations. Zero columns are dropped.
struct ColumnReduction {
    Matrix basis;                 // rows x rank
    std::vector<int> pivot_rows;  // one per kept column
    std::vector<Rat> pivot_vals;
};
ColumnReduction column_reduce(Matrix family);

// max over s in span(S) of min_i v(target_i - s_i): the valuation of the
// class of `target` modulo span(S), coordinates plain (weights cleared).
// Throws std::domain_error if target lies in span(S).
Rat min_val_on_translate_plain(std::vector<FieldElem> target, const Matrix& span_columns);

}  // namespace gnorm
