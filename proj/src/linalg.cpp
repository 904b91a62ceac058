#include "gnorm/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace gnorm {

Matrix Matrix::identity(int d, long ramification) {
    Matrix m(d, d, ramification);
    for (int i = 0; i < d; ++i) m.at(i, i) = FieldElem::one(ramification);
    return m;
}

long Matrix::ramification() const {
    long n = 1;
    for (const FieldElem& e : entries) n = std::lcm(n, e.ramification());
    return n;
}

Matrix Matrix::lifted(long target) const {
    Matrix m = *this;
    for (FieldElem& e : m.entries) e = e.with_ramification(target);
    return m;
}

std::vector<FieldElem> Matrix::column(int j) const {
    std::vector<FieldElem> v;
    v.reserve(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) v.push_back(at(i, j));
    return v;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t k = 0; k < a.entries.size(); ++k)
        if (a.entries[k] != b.entries[k]) return false;
    return true;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw std::domain_error("mat_mul: shape mismatch");
    long n = std::lcm(a.ramification(), b.ramification());
    Matrix r(a.rows, b.cols, n);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

std::vector<FieldElem> mat_vec(const Matrix& a, const std::vector<FieldElem>& v) {
    if (a.cols != static_cast<int>(v.size())) throw std::domain_error("mat_vec: shape mismatch");
    std::vector<FieldElem> r(static_cast<std::size_t>(a.rows), FieldElem::zero(a.ramification()));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            if (a.at(i, j).is_zero() || v[static_cast<std::size_t>(j)].is_zero()) continue;
            r[static_cast<std::size_t>(i)] =
                r[static_cast<std::size_t>(i)] + a.at(i, j) * v[static_cast<std::size_t>(j)];
        }
    return r;
}

Matrix solve_many(const Matrix& basis, const Matrix& rhs) {
    if (basis.rows != basis.cols) throw std::domain_error("solve: basis must be square");
    if (basis.rows != rhs.rows) throw std::domain_error("solve: shape mismatch");
    int d = basis.rows;
    long ram = std::lcm(basis.ramification(), rhs.ramification());
    Matrix a = basis.lifted(ram);
    Matrix x = rhs.lifted(ram);

    // Gauss-Jordan; pivot = first nonzero entry in the column.
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    for (int colIdx = 0; colIdx < d; ++colIdx) {
        int pivot = -1;
        for (int i = colIdx; i < d; ++i)
            if (!a.at(i, colIdx).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::domain_error("solve: singular matrix");
        if (pivot != colIdx) {
            for (int j = 0; j < d; ++j) std::swap(a.at(pivot, j), a.at(colIdx, j));
            for (int j = 0; j < x.cols; ++j) std::swap(x.at(pivot, j), x.at(colIdx, j));
        }
        FieldElem inv = a.at(colIdx, colIdx).inv();
        for (int j = colIdx; j < d; ++j) a.at(colIdx, j) = a.at(colIdx, j) * inv;
        for (int j = 0; j < x.cols; ++j) x.at(colIdx, j) = x.at(colIdx, j) * inv;
        for (int i = 0; i < d; ++i) {
            if (i == colIdx || a.at(i, colIdx).is_zero()) continue;
            FieldElem f = a.at(i, colIdx);
            for (int j = colIdx; j < d; ++j) a.at(i, j) = a.at(i, j) - f * a.at(colIdx, j);
            for (int j = 0; j < x.cols; ++j) x.at(i, j) = x.at(i, j) - f * x.at(colIdx, j);
        }
    }
    return x;
}

std::vector<FieldElem> solve_in_basis(const Matrix& basis, const std::vector<FieldElem>& v) {
    Matrix rhs(basis.rows, 1, basis.ramification());
    for (int i = 0; i < basis.rows; ++i) rhs.at(i, 0) = v[static_cast<std::size_t>(i)];
    Matrix x = solve_many(basis, rhs);
    return x.column(0);
}

Matrix inverse(const Matrix& m) {
    return solve_many(m, Matrix::identity(m.rows, m.ramification()));
}

namespace {

FieldElem det_rec(const Matrix& m, int row, unsigned cols_mask,
                  std::unordered_map<unsigned, FieldElem>& memo, long ram) {
    if (cols_mask == 0) return FieldElem::one(ram);
    auto it = memo.find(cols_mask);
    if (it != memo.end()) return it->second;
    FieldElem acc = FieldElem::zero(ram);
    int sign = 1;
    for (int j = 0; j < m.cols; ++j) {
        if (!(cols_mask & (1u << j))) continue;
        if (!m.at(row, j).is_zero()) {
            FieldElem sub = det_rec(m, row + 1, cols_mask & ~(1u << j), memo, ram);
            FieldElem term = m.at(row, j) * sub;
            acc = (sign > 0) ? acc + term : acc - term;
        }
        sign = -sign;
    }
    memo.emplace(cols_mask, acc);
    return acc;
}

}  // namespace

FieldElem det_laplace(const Matrix& m) {
    if (m.rows != m.cols) throw std::domain_error("det: square matrix required");
    if (m.rows > 16) throw std::domain_error("det_laplace: dimension too large");
    long ram = m.ramification();
    Matrix a = m.lifted(ram);
    std::unordered_map<unsigned, FieldElem> memo;
    return det_rec(a, 0, (1u << m.cols) - 1u, memo, ram);
}

FieldElem det_elimination(const Matrix& m) {
    if (m.rows != m.cols) throw std::domain_error("det: square matrix required");
    int d = m.rows;
    long ram = m.ramification();
    Matrix a = m.lifted(ram);
    FieldElem result = FieldElem::one(ram);
    for (int c = 0; c < d; ++c) {
        int pivot = -1;
        for (int i = c; i < d; ++i)
            if (!a.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return FieldElem::zero(ram);
        if (pivot != c) {
            for (int j = 0; j < d; ++j) std::swap(a.at(pivot, j), a.at(c, j));
            result = -result;
        }
        result = result * a.at(c, c);
        FieldElem inv = a.at(c, c).inv();
        for (int i = c + 1; i < d; ++i) {
            if (a.at(i, c).is_zero()) continue;
            FieldElem f = a.at(i, c) * inv;
            for (int j = c; j < d; ++j) a.at(i, j) = a.at(i, j) - f * a.at(c, j);
        }
    }
    return result;
}

FieldElem det(const Matrix& m) {
    return (m.rows <= 10) ? det_laplace(m) : det_elimination(m);
}

namespace {

// Scale T into C with C_ij = u^{r_i N'} T_ij u^{c_j N'} over the common
// ramification N' clearing all shifts to integer u-powers.
Matrix clear_shifts(const Matrix& t, const std::vector<Rat>& row_shifts,
                    const std::vector<Rat>& col_shifts, long& ram_out) {
    std::vector<Rat> all = row_shifts;
    all.insert(all.end(), col_shifts.begin(), col_shifts.end());
    long den = lcm_denominators(all).get_si();
    long ram = std::lcm(t.ramification(), den);
    Matrix c = t.lifted(ram);
    for (int i = 0; i < c.rows; ++i) {
        if (row_shifts[static_cast<std::size_t>(i)] == 0) continue;
        FieldElem s = FieldElem::t_power(row_shifts[static_cast<std::size_t>(i)], ram);
        for (int j = 0; j < c.cols; ++j) c.at(i, j) = s * c.at(i, j);
    }
    for (int j = 0; j < c.cols; ++j) {
        if (col_shifts[static_cast<std::size_t>(j)] == 0) continue;
        FieldElem s = FieldElem::t_power(col_shifts[static_cast<std::size_t>(j)], ram);
        for (int i = 0; i < c.rows; ++i) c.at(i, j) = s * c.at(i, j);
    }
    ram_out = ram;
    return c;
}

}  // namespace

SmithResult smith_decompose(Matrix c, bool track_left) {
    if (c.rows != c.cols) throw std::domain_error("smith: square matrix required");
    int d = c.rows;
    long ram = c.ramification();
    c = c.lifted(ram);
    SmithResult res;
    if (track_left) {
        res.left = Matrix::identity(d, ram);
        res.has_left = true;
    }

    for (int step = 0; step < d; ++step) {
        // pivot: minimal valuation among remaining entries, lex tie-break
        int pr = -1, pc = -1;
        ValOrInf best = std::nullopt;
        for (int i = step; i < d; ++i)
            for (int j = step; j < d; ++j) {
                ValOrInf v = c.at(i, j).val();
                if (!v) continue;
                if (pr < 0 || *v < *best) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) throw std::domain_error("smith: singular matrix");
        if (pr != step) {
            for (int j = 0; j < d; ++j) std::swap(c.at(pr, j), c.at(step, j));
            if (track_left)
                for (int i = 0; i < d; ++i) std::swap(res.left.at(i, pr), res.left.at(i, step));
        }
        if (pc != step)
            for (int i = 0; i < d; ++i) std::swap(c.at(i, pc), c.at(i, step));
        res.invariants.push_back(*best);

        FieldElem inv = c.at(step, step).inv();
        for (int i = step + 1; i < d; ++i) {
            if (c.at(i, step).is_zero()) continue;
            FieldElem f = c.at(i, step) * inv;
            for (int j = step; j < d; ++j) c.at(i, j) = c.at(i, j) - f * c.at(step, j);
            if (track_left)
                for (int k = 0; k < d; ++k)
                    res.left.at(k, step) = res.left.at(k, step) + f * res.left.at(k, i);
        }
        for (int j = step + 1; j < d; ++j) {
            if (c.at(step, j).is_zero()) continue;
            FieldElem f = c.at(step, j) * inv;
            for (int i = step; i < d; ++i) c.at(i, j) = c.at(i, j) - f * c.at(i, step);
        }
    }
    // Minimal-valuation pivoting makes the sequence non-decreasing; the left
    // transform depends on this order, so treat a violation as a logic error.
    if (!std::is_sorted(res.invariants.begin(), res.invariants.end()))
        throw std::logic_error("smith: pivot valuations not monotone");
    return res;
}

std::vector<Rat> weighted_invariants_elimination(const Matrix& t,
                                                 const std::vector<Rat>& row_shifts,
                                                 const std::vector<Rat>& col_shifts) {
    long ram = 1;
    Matrix c = clear_shifts(t, row_shifts, col_shifts, ram);
    return smith_decompose(std::move(c), false).invariants;
}

std::vector<Rat> weighted_invariants_minors(const Matrix& t, const std::vector<Rat>& row_shifts,
                                            const std::vector<Rat>& col_shifts) {
    int d = t.rows;
    if (d > 8) throw std::domain_error("weighted_invariants_minors: d must be <= 8");
    long ram = t.ramification();
    Matrix a = t.lifted(ram);

    // dets of all square submatrices, keyed by (row mask, col mask)
    std::map<std::pair<unsigned, unsigned>, FieldElem> dets;
    dets[{0u, 0u}] = FieldElem::one(ram);
    auto popcount = [](unsigned m) { return __builtin_popcount(m); };
    for (int k = 1; k <= d; ++k) {
        for (unsigned rm = 0; rm < (1u << d); ++rm) {
            if (popcount(rm) != k) continue;
            int top = 0;
            while (!(rm & (1u << top))) ++top;  // lowest row of the set
            for (unsigned cm = 0; cm < (1u << d); ++cm) {
                if (popcount(cm) != k) continue;
                FieldElem acc = FieldElem::zero(ram);
                int sign = 1;
                for (int j = 0; j < d; ++j) {
                    if (!(cm & (1u << j))) continue;
                    if (!a.at(top, j).is_zero()) {
                        FieldElem sub = dets.at({rm & ~(1u << top), cm & ~(1u << j)});
                        FieldElem term = a.at(top, j) * sub;
                        acc = (sign > 0) ? acc + term : acc - term;
                    }
                    sign = -sign;
                }
                dets[{rm, cm}] = acc;
            }
        }
    }

    std::vector<Rat> shift_row_sum(1u << d, Rat(0)), shift_col_sum(1u << d, Rat(0));
    for (unsigned m = 1; m < (1u << d); ++m) {
        unsigned low = m & (m - 1);
        int bit = __builtin_ctz(m);
        shift_row_sum[m] = shift_row_sum[low] + row_shifts[static_cast<std::size_t>(bit)];
        shift_col_sum[m] = shift_col_sum[low] + col_shifts[static_cast<std::size_t>(bit)];
    }

    std::vector<Rat> partial;  // partial[k-1] = min weighted k-minor valuation
    for (int k = 1; k <= d; ++k) {
        ValOrInf best = std::nullopt;
        for (unsigned rm = 0; rm < (1u << d); ++rm) {
            if (popcount(rm) != k) continue;
            for (unsigned cm = 0; cm < (1u << d); ++cm) {
                if (popcount(cm) != k) continue;
                ValOrInf v = dets.at({rm, cm}).val();
                if (!v) continue;
                Rat w = *v + shift_row_sum[rm] + shift_col_sum[cm];
                if (!best || w < *best) best = w;
            }
        }
        if (!best) throw std::domain_error("weighted_invariants: singular matrix");
        partial.push_back(*best);
    }

    std::vector<Rat> s(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k)
        s[static_cast<std::size_t>(k)] =
            (k == 0) ? partial[0] : Rat(partial[static_cast<std::size_t>(k)] -
                                        partial[static_cast<std::size_t>(k - 1)]);
    return s;
}

std::vector<Rat> weighted_invariants(const Matrix& t, const std::vector<Rat>& row_shifts,
                                     const std::vector<Rat>& col_shifts) {
    if (t.rows != t.cols) throw std::domain_error("weighted_invariants: square matrix required");
    if (static_cast<int>(row_shifts.size()) != t.rows ||
        static_cast<int>(col_shifts.size()) != t.cols)
        throw std::domain_error("weighted_invariants: shift length mismatch");
    std::vector<Rat> byElim = weighted_invariants_elimination(t, row_shifts, col_shifts);
    if (t.rows <= 8) {
        std::vector<Rat> byMinors = weighted_invariants_minors(t, row_shifts, col_shifts);
        if (byMinors != byElim)
            throw std::logic_error("weighted_invariants: minor and elimination routes disagree");
    }
    return byElim;
}

ColumnReduction column_reduce(Matrix family) {
    long ram = family.ramification();
    family = family.lifted(ram);
    int rows = family.rows, cols = family.cols;
    ColumnReduction red;
    std::vector<bool> row_used(static_cast<std::size_t>(rows), false);
    std::vector<bool> col_done(static_cast<std::size_t>(cols), false);
    std::vector<int> kept;

    for (;;) {
        int pr = -1, pc = -1;
        ValOrInf best = std::nullopt;
        for (int i = 0; i < rows; ++i) {
            if (row_used[static_cast<std::size_t>(i)]) continue;
            for (int j = 0; j < cols; ++j) {
                if (col_done[static_cast<std::size_t>(j)]) continue;
                ValOrInf v = family.at(i, j).val();
                if (!v) continue;
                if (pr < 0 || *v < *best) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr < 0) break;  // remaining columns are zero
        FieldElem inv = family.at(pr, pc).inv();
        for (int j = 0; j < cols; ++j) {
            if (j == pc || col_done[static_cast<std::size_t>(j)]) continue;
            if (family.at(pr, j).is_zero()) continue;
            FieldElem f = family.at(pr, j) * inv;
            for (int i = 0; i < rows; ++i)
                family.at(i, j) = family.at(i, j) - f * family.at(i, pc);
        }
        row_used[static_cast<std::size_t>(pr)] = true;
        col_done[static_cast<std::size_t>(pc)] = true;
        kept.push_back(pc);
        red.pivot_rows.push_back(pr);
        red.pivot_vals.push_back(*best);
    }

    red.basis = Matrix(rows, static_cast<int>(kept.size()), ram);
    for (std::size_t c = 0; c < kept.size(); ++c)
        for (int i = 0; i < rows; ++i) red.basis.at(i, static_cast<int>(c)) = family.at(i, kept[c]);
    return red;
}

Rat min_val_on_translate_plain(std::vector<FieldElem> target, const Matrix& span_columns) {
    ColumnReduction red = column_reduce(span_columns);
    for (int l = 0; l < red.basis.cols; ++l) {
        int row = red.pivot_rows[static_cast<std::size_t>(l)];
        const FieldElem& t = target[static_cast<std::size_t>(row)];
        if (t.is_zero()) continue;
        FieldElem f = t / red.basis.at(row, l);
        for (int i = 0; i < red.basis.rows; ++i)
            target[static_cast<std::size_t>(i)] =
                target[static_cast<std::size_t>(i)] - f * red.basis.at(i, l);
    }
    ValOrInf best = std::nullopt;
    for (const FieldElem& e : target) best = val_min(best, e.val());
    if (!best) throw std::domain_error("min_val_on_translate: class is zero");
    return *best;
}

}  // namespace gnorm
