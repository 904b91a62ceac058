#include "gnorm/norms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace gnorm {

using nlohmann::json;

DiagNorm::DiagNorm(Matrix basis, std::vector<Rat> weights)
    : basis_(std::move(basis)), weights_(std::move(weights)) {
    if (basis_.rows != basis_.cols || basis_.rows < 1)
        throw std::domain_error("DiagNorm: basis must be square of positive dimension");
    if (static_cast<int>(weights_.size()) != basis_.rows)
        throw std::domain_error("DiagNorm: weight count mismatch");
    ram_ = basis_.ramification();
    basis_ = basis_.lifted(ram_);
}

DiagNorm DiagNorm::lattice(int dim, long ramification) {
    return DiagNorm(Matrix::identity(dim, ramification), std::vector<Rat>(dim, Rat(0)));
}

DiagNorm DiagNorm::monomial(std::vector<Rat> weights, long ramification) {
    int d = static_cast<int>(weights.size());
    return DiagNorm(Matrix::identity(d, ramification), std::move(weights));
}

ValOrInf DiagNorm::eval(const std::vector<FieldElem>& v) const {
    if (static_cast<int>(v.size()) != dim()) throw std::domain_error("eval: dimension mismatch");
    std::vector<FieldElem> coords = solve_in_basis(basis_, v);
    ValOrInf best = std::nullopt;
    for (int i = 0; i < dim(); ++i)
        best = val_min(best, val_add(coords[static_cast<std::size_t>(i)].val(),
                                     weights_[static_cast<std::size_t>(i)]));
    return best;
}

std::optional<std::vector<Rat>> DiagNorm::monomial_weights() const {
    std::vector<std::optional<Rat>> eff(static_cast<std::size_t>(dim()));
    for (int j = 0; j < dim(); ++j) {
        int row = -1;
        for (int i = 0; i < dim(); ++i) {
            if (basis_.at(i, j).is_zero()) continue;
            if (row >= 0) return std::nullopt;  // two nonzero entries
            row = i;
        }
        if (row < 0) return std::nullopt;
        // b_j = s * e_row with v(b_j) = w_j, so v(e_row) = w_j - v(s)
        eff[static_cast<std::size_t>(row)] =
            weights_[static_cast<std::size_t>(j)] - *basis_.at(row, j).val();
    }
    std::vector<Rat> out;
    out.reserve(eff.size());
    for (auto& w : eff) {
        if (!w) return std::nullopt;
        out.push_back(*w);
    }
    return out;
}

DiagNorm DiagNorm::with_ramification(long target) const {
    return DiagNorm(basis_.lifted(target), weights_);
}

Rat SpectralData::vol() const {
    Rat s(0);
    for (const Rat& l : lambdas) s += l;
    return s / static_cast<long>(lambdas.size());
}

Rat SpectralData::d1() const {
    Rat s(0);
    for (const Rat& l : lambdas) s += abs(l);
    return s / static_cast<long>(lambdas.size());
}

Rat SpectralData::dinf() const {
    Rat best(0);
    for (const Rat& l : lambdas) best = std::max(best, Rat(abs(l)));
    return best;
}

Rat SpectralData::dp_pow(int p) const {
    if (p < 1) throw std::domain_error("dp_pow: p must be >= 1");
    Rat s(0);
    for (const Rat& l : lambdas) {
        Rat a = abs(l), pw(1);
        for (int i = 0; i < p; ++i) pw *= a;
        s += pw;
    }
    return s / static_cast<long>(lambdas.size());
}

AtomicMeasure SpectralData::sigma() const {
    return AtomicMeasure::from_points(lambdas, make_rat(1, dim()));
}

namespace {

void require_same_space(const DiagNorm& a, const DiagNorm& b) {
    if (a.dim() != b.dim()) throw std::domain_error("norm pair: dimension mismatch");
}

std::vector<Rat> negated(const std::vector<Rat>& v) {
    std::vector<Rat> r;
    r.reserve(v.size());
    for (const Rat& x : v) r.push_back(-x);
    return r;
}

// Basis columns rescaled so every weight becomes zero (same norm, lattice
// representation); ramification grows to make the weights integral.
Matrix cleared_basis(const DiagNorm& n, long& ram_out) {
    long den = lcm_denominators(n.weights()).get_si();
    long ram = std::lcm(n.ramification(), den);
    Matrix b = n.basis().lifted(ram);
    for (int j = 0; j < b.cols; ++j) {
        const Rat& w = n.weights()[static_cast<std::size_t>(j)];
        if (w == 0) continue;
        FieldElem s = FieldElem::t_power(-w, ram);
        for (int i = 0; i < b.rows; ++i) b.at(i, j) = s * b.at(i, j);
    }
    ram_out = ram;
    return b;
}

}  // namespace

SpectralData relative_spectrum(const DiagNorm& a, const DiagNorm& b) {
    require_same_space(a, b);
    SpectralData sd;

    auto wa = a.monomial_weights();
    auto wb = b.monomial_weights();
    if (wa && wb) {
        // joint coordinate basis
        sd.lambdas.reserve(wa->size());
        for (std::size_t i = 0; i < wa->size(); ++i) sd.lambdas.push_back((*wa)[i] - (*wb)[i]);
        std::sort(sd.lambdas.begin(), sd.lambdas.end(), std::greater<Rat>());
        return sd;
    }

    long ram = std::lcm(a.ramification(), b.ramification());
    Matrix t = solve_many(a.basis().lifted(ram), b.basis().lifted(ram));
    std::vector<Rat> s = weighted_invariants(t, a.weights(), negated(b.weights()));
    sd.lambdas.assign(s.rbegin(), s.rend());
    return sd;
}

JointDiag joint_diagonalization(const DiagNorm& a, const DiagNorm& b) {
    require_same_space(a, b);
    long ram_a = 1, ram_b = 1;
    Matrix a_cleared = cleared_basis(a, ram_a);
    Matrix b_cleared = cleared_basis(b, ram_b);
    long ram = std::lcm(ram_a, ram_b);
    a_cleared = a_cleared.lifted(ram);
    b_cleared = b_cleared.lifted(ram);

    Matrix c = solve_many(a_cleared, b_cleared);
    SmithResult sr = smith_decompose(std::move(c), true);

    JointDiag jd;
    jd.basis = mat_mul(a_cleared, sr.left);
    int d = a.dim();
    jd.a_weights.assign(static_cast<std::size_t>(d), Rat(0));
    jd.b_weights = negated(sr.invariants);
    // reorder to make lambda = a_w - b_w descending
    Matrix rb(d, d, ram);
    std::vector<Rat> bw(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) rb.at(i, j) = jd.basis.at(i, d - 1 - j);
        bw[static_cast<std::size_t>(j)] = jd.b_weights[static_cast<std::size_t>(d - 1 - j)];
    }
    jd.basis = std::move(rb);
    jd.b_weights = std::move(bw);
    return jd;
}

namespace {

// v of the top wedge of the coordinate basis under the induced norm:
// v(det(B^{-1})) + sum(weights) = sum(weights) - v(det B).
Rat top_wedge_val(const DiagNorm& n) {
    Rat s(0);
    for (const Rat& w : n.weights()) s += w;
    auto mono = n.monomial_weights();
    if (mono) {
        // determinant of a monomial matrix: product of its scalars
        Rat dv(0);
        for (int j = 0; j < n.dim(); ++j)
            for (int i = 0; i < n.dim(); ++i)
                if (!n.basis().at(i, j).is_zero()) dv += *n.basis().at(i, j).val();
        return s - dv;
    }
    FieldElem d = det(n.basis());
    if (d.is_zero()) throw std::domain_error("vol: basis is singular");
    return s - *d.val();
}

}  // namespace

Rat vol(const DiagNorm& a, const DiagNorm& b) {
    SpectralData sd = relative_spectrum(a, b);
    Rat by_spectrum = sd.vol();
    Rat by_det = (top_wedge_val(a) - top_wedge_val(b)) / a.dim();
    if (by_spectrum != by_det)
        throw std::logic_error("vol: spectral and determinant routes disagree");
    return by_spectrum;
}

Rat d1(const DiagNorm& a, const DiagNorm& b) { return relative_spectrum(a, b).d1(); }
Rat dinf(const DiagNorm& a, const DiagNorm& b) { return relative_spectrum(a, b).dinf(); }
Rat dp_pow(const DiagNorm& a, const DiagNorm& b, int p) {
    return relative_spectrum(a, b).dp_pow(p);
}

DiagNorm max_norm(const DiagNorm& a, const DiagNorm& b) {
    require_same_space(a, b);
    auto wa = a.monomial_weights();
    auto wb = b.monomial_weights();
    if (wa && wb) {
        std::vector<Rat> w(wa->size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::min((*wa)[i], (*wb)[i]);
        return DiagNorm::monomial(std::move(w), std::lcm(a.ramification(), b.ramification()));
    }
    JointDiag jd = joint_diagonalization(a, b);
    std::vector<Rat> w(jd.a_weights.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::min(jd.a_weights[i], jd.b_weights[i]);
    return DiagNorm(jd.basis, std::move(w));
}

DiagNorm scale(const DiagNorm& n, const Rat& c) {
    std::vector<Rat> w = n.weights();
    for (Rat& x : w) x += c;
    return DiagNorm(n.basis(), std::move(w));
}

std::vector<std::vector<int>> exponents_of_degree(int vars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(vars), 0);
    // lexicographic enumeration
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == vars - 1) {
            cur[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            cur[static_cast<std::size_t>(pos)] = k;
            self(self, pos + 1, remaining - k);
        }
    };
    if (vars == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

namespace {

// columns of `m` interpreted as linear forms; returns the coefficient vector
// of the product of the chosen columns in the degree-k monomial coordinates.
std::vector<FieldElem> expand_product(const Matrix& m, const std::vector<int>& picks,
                                      const std::vector<std::vector<int>>& monomials, long ram) {
    std::map<std::vector<int>, FieldElem> poly;
    poly[std::vector<int>(static_cast<std::size_t>(m.rows), 0)] = FieldElem::one(ram);
    for (int col : picks) {
        std::map<std::vector<int>, FieldElem> next;
        for (const auto& [e, c] : poly) {
            for (int i = 0; i < m.rows; ++i) {
                if (m.at(i, col).is_zero()) continue;
                std::vector<int> e2 = e;
                e2[static_cast<std::size_t>(i)] += 1;
                FieldElem add = c * m.at(i, col);
                auto it = next.find(e2);
                if (it == next.end())
                    next.emplace(std::move(e2), std::move(add));
                else
                    it->second = it->second + add;
            }
        }
        poly = std::move(next);
    }
    std::vector<FieldElem> out(monomials.size(), FieldElem::zero(ram));
    for (std::size_t k = 0; k < monomials.size(); ++k) {
        auto it = poly.find(monomials[k]);
        if (it != poly.end()) out[k] = it->second;
    }
    return out;
}

void multisets_rec(int dim, int k, int start, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < dim; ++i) {
        cur.push_back(i);
        multisets_rec(dim, k, i, cur, out);
        cur.pop_back();
    }
}

}  // namespace

DiagNorm tensor_power(const DiagNorm& n, int k) {
    if (k < 1) throw std::domain_error("tensor_power: k must be >= 1");
    // Kronecker power of the basis with additive weights.
    Matrix b = n.basis();
    std::vector<Rat> w = n.weights();
    for (int step = 1; step < k; ++step) {
        int r0 = b.rows;
        Matrix nb(r0 * n.dim(), r0 * n.dim(), b.ramification());
        for (int i = 0; i < r0; ++i)
            for (int j = 0; j < r0; ++j) {
                if (b.at(i, j).is_zero()) continue;
                for (int p = 0; p < n.dim(); ++p)
                    for (int q = 0; q < n.dim(); ++q) {
                        if (n.basis().at(p, q).is_zero()) continue;
                        nb.at(i * n.dim() + p, j * n.dim() + q) = b.at(i, j) * n.basis().at(p, q);
                    }
            }
        std::vector<Rat> nw;
        nw.reserve(w.size() * n.weights().size());
        for (const Rat& wi : w)
            for (const Rat& wj : n.weights()) nw.push_back(wi + wj);
        b = std::move(nb);
        w = std::move(nw);
    }
    return DiagNorm(std::move(b), std::move(w));
}

DiagNorm sym_power(const DiagNorm& n, int k) {
    if (k < 1) throw std::domain_error("sym_power: k must be >= 1");
    int d = n.dim();
    long ram = n.ramification();
    std::vector<std::vector<int>> monomials = exponents_of_degree(d, k);
    std::vector<std::vector<int>> picks;
    {
        std::vector<int> cur;
        multisets_rec(d, k, 0, cur, picks);
    }
    if (picks.size() != monomials.size())
        throw std::logic_error("sym_power: basis size mismatch");
    Matrix b(static_cast<int>(monomials.size()), static_cast<int>(picks.size()), ram);
    std::vector<Rat> w;
    w.reserve(picks.size());
    for (std::size_t j = 0; j < picks.size(); ++j) {
        std::vector<FieldElem> colv = expand_product(n.basis(), picks[j], monomials, ram);
        for (int i = 0; i < b.rows; ++i) b.at(i, static_cast<int>(j)) = colv[static_cast<std::size_t>(i)];
        Rat wj(0);
        for (int idx : picks[j]) wj += n.weights()[static_cast<std::size_t>(idx)];
        w.push_back(wj);
    }
    return DiagNorm(std::move(b), std::move(w));
}

DiagNorm ext_power(const DiagNorm& n, int k) {
    if (k < 1 || k > n.dim()) throw std::domain_error("ext_power: k out of range");
    int d = n.dim();
    long ram = n.ramification();
    // k-subsets in lexicographic order, both for rows (coordinates) and columns
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            subsets.push_back(cur);
            return;
        }
        for (int i = start; i < d; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    int dd = static_cast<int>(subsets.size());
    Matrix b(dd, dd, ram);
    std::vector<Rat> w;
    w.reserve(subsets.size());
    for (int j = 0; j < dd; ++j) {
        for (int i = 0; i < dd; ++i) {
            Matrix sub(k, k, ram);
            for (int p = 0; p < k; ++p)
                for (int q = 0; q < k; ++q)
                    sub.at(p, q) = n.basis().at(subsets[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)],
                                                subsets[static_cast<std::size_t>(j)][static_cast<std::size_t>(q)]);
            b.at(i, j) = det_laplace(sub);
        }
        Rat wj(0);
        for (int idx : subsets[static_cast<std::size_t>(j)]) wj += n.weights()[static_cast<std::size_t>(idx)];
        w.push_back(wj);
    }
    return DiagNorm(std::move(b), std::move(w));
}

DiagNorm quotient_norm(const DiagNorm& n, const Matrix& surjection) {
    if (surjection.cols != n.dim()) throw std::domain_error("quotient_norm: shape mismatch");
    long ram = 1;
    Matrix cleared = cleared_basis(n, ram);
    long full = std::lcm(ram, surjection.ramification());
    Matrix images = mat_mul(surjection.lifted(full), cleared.lifted(full));
    ColumnReduction red = column_reduce(std::move(images));
    if (red.basis.cols != surjection.rows)
        throw std::domain_error("quotient_norm: map is not surjective");
    return DiagNorm(red.basis, std::vector<Rat>(static_cast<std::size_t>(red.basis.cols), Rat(0)));
}

DiagNorm ground_field_extension(const DiagNorm& n, long factor) {
    if (factor < 1) throw std::domain_error("ground_field_extension: factor must be positive");
    return DiagNorm(n.basis().lifted(n.ramification() * factor), n.weights());
}

DiagNorm lattice_approximation(const DiagNorm& n, const Rat& eps) {
    if (eps <= 0) throw std::domain_error("lattice_approximation: eps must be positive");
    // smallest multiple of the current ramification with 1/N' < eps
    Rat inv_eps = 1 / eps;
    Rat k = rat_floor(inv_eps / n.ramification()) + 1;
    long target = n.ramification() * k.get_num().get_si();
    Matrix b = n.basis().lifted(target);
    for (int j = 0; j < b.cols; ++j) {
        const Rat& w = n.weights()[static_cast<std::size_t>(j)];
        // nearest multiple of 1/N', half rounded up
        Rat scaled = w * target + make_rat(1, 2);
        Rat rounded = rat_floor(scaled) / target;
        FieldElem s = FieldElem::t_power(-rounded, target);
        for (int i = 0; i < b.rows; ++i) b.at(i, j) = s * b.at(i, j);
    }
    return DiagNorm(std::move(b), std::vector<Rat>(n.weights().size(), Rat(0)));
}

Rat min_val_on_translate(const std::vector<FieldElem>& target, const Matrix& span_columns,
                         const DiagNorm& norm) {
    if (static_cast<int>(target.size()) != norm.dim())
        throw std::domain_error("min_val_on_translate: dimension mismatch");
    long den = lcm_denominators(norm.weights()).get_si();
    long ram = std::lcm(norm.ramification(), den);

    std::vector<FieldElem> t = solve_in_basis(norm.basis().lifted(ram), target);
    Matrix s(norm.dim(), span_columns.cols, ram);
    if (span_columns.cols > 0) {
        if (span_columns.rows != norm.dim())
            throw std::domain_error("min_val_on_translate: span dimension mismatch");
        s = solve_many(norm.basis().lifted(ram), span_columns.lifted(ram));
    }
    // clear coordinate weights into the entries
    for (int i = 0; i < norm.dim(); ++i) {
        const Rat& w = norm.weights()[static_cast<std::size_t>(i)];
        if (w == 0) continue;
        FieldElem f = FieldElem::t_power(w, ram);
        t[static_cast<std::size_t>(i)] = f * t[static_cast<std::size_t>(i)];
        for (int j = 0; j < s.cols; ++j) s.at(i, j) = f * s.at(i, j);
    }
    return min_val_on_translate_plain(std::move(t), s);
}

std::string diag_norm_to_json(const DiagNorm& n) {
    json rec;
    rec["dim"] = n.dim();
    rec["ramification"] = n.ramification();
    json rows = json::array();
    for (int i = 0; i < n.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < n.dim(); ++j) row.push_back(n.basis().at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    rec["basis"] = std::move(rows);
    json w = json::array();
    for (const Rat& x : n.weights()) w.push_back(rat_to_string(x));
    rec["weights"] = std::move(w);
    return rec.dump();
}

DiagNorm diag_norm_from_json(const std::string& text) {
    json rec = json::parse(text);
    int d = rec.at("dim").get<int>();
    long ram = rec.at("ramification").get<long>();
    Matrix b(d, d, ram);
    const json& rows = rec.at("basis");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            b.at(i, j) = FieldElem::from_string(rows.at(static_cast<std::size_t>(i))
                                                    .at(static_cast<std::size_t>(j))
                                                    .get<std::string>(),
                                                ram);
    std::vector<Rat> w;
    for (const auto& x : rec.at("weights")) w.push_back(rat_from_string(x.get<std::string>()));
    return DiagNorm(std::move(b), std::move(w));
}

}  // namespace gnorm
